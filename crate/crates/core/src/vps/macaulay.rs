//! Macaulay's bound on the growth of Hilbert functions.

use crate::algebra::mono::binomial;
use crate::grobner::HilbFn;

/// The `d`-th Macaulay representation `h = Σ_{i=j}^{d} C(k_i, i)` with
/// `k_d > k_{d-1} > … > k_j ≥ j ≥ 1`, as `(k_i, i)` pairs.
pub fn macaulay_representation(mut h: u64, d: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut i = d;
    while h > 0 && i > 0 {
        let mut k = i;
        while binomial(k + 1, i) <= h {
            k += 1;
        }
        h -= binomial(k, i);
        out.push((k, i));
        i -= 1;
    }
    out
}

/// `h^{<d>}`: the largest possible `H(d+1)` when `H(d) = h`.
pub fn macaulay_bound(h: u64, d: u64) -> u64 {
    assert!(d >= 1, "Macaulay bound needs d ≥ 1");
    macaulay_representation(h, d).iter().map(|&(k, i)| binomial(k + 1, i + 1)).sum()
}

/// Does `H(d+1) ≤ H(d)^{<d>}` hold for every computed `d ≥ 1`?
pub fn satisfies_macaulay(h: &HilbFn) -> bool {
    let v = h.values();
    (1..v.len().saturating_sub(1)).all(|d| v[d + 1] as u64 <= macaulay_bound(v[d] as u64, d as u64))
}
