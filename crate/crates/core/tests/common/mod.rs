//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use vps_core::algebra::form::{Form, Ring};
use vps_core::algebra::scalar::{self, Scalar};
use vps_core::algebra::ExactMatrix;
use vps_core::apolarity::{apply_diff, Quadric};

/// Exponent vectors of degree `d` in `n` variables.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Largest `H(d+1)` given `H(d) = h`, by brute force: the quotient by the
/// ideal generated by a lex segment whose complement in degree `d` has
/// size `h` (Macaulay: lex segments grow slowest).
pub fn lex_segment_growth(h: usize, d: u32) -> usize {
    let mut n = 1;
    while monomials(n, d).len() < h {
        n += 1;
    }
    // one spare variable keeps the segment from being all of S_d
    let n = n + 1;
    let mut md = monomials(n, d);
    md.sort(); // ascending lex with x1 most significant
    let small: std::collections::HashSet<Vec<u32>> = md.into_iter().take(h).collect();
    monomials(n, d + 1)
        .into_iter()
        .filter(|m| {
            (0..n).filter(|&i| m[i] > 0).all(|i| {
                let mut q = m.clone();
                q[i] -= 1;
                small.contains(&q)
            })
        })
        .count()
}

pub fn identity_plus(f: &ExactMatrix, t: i64) -> Vec<Vec<Scalar>> {
    let n = f.nrows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let id = if i == j { scalar::one() } else { scalar::zero() };
                    id + scalar::int(t) * f.get(i, j)
                })
                .collect()
        })
        .collect()
}

/// The ε-coefficient of `v((Id + εF)x)`, by the central difference of
/// the exact substitutions at `ε = ±1` (the quadratic term cancels).
pub fn first_order_change(v: &Form, f: &ExactMatrix) -> Form {
    let plus = v.linear_substitute(&identity_plus(f, 1));
    let minus = v.linear_substitute(&identity_plus(f, -1));
    plus.sub(&minus).unwrap().scale(&Scalar::new(1.into(), 2.into()))
}

/// `Σ_k |(δ_k + ∂_ε v_k)∘q|` vanishes.
pub fn orthogonal_mod_eps2(base: &[Form], dir: &[Form], f: &ExactMatrix, q: &Quadric) -> bool {
    base.iter().zip(dir).all(|(v, d)| {
        let moved = d.add(&first_order_change(v, f)).unwrap();
        apply_diff(&moved, q.form()).unwrap().is_zero()
    })
}

pub fn forms(ring: Ring, n: usize, v: &[&str]) -> Vec<Form> {
    v.iter().map(|t| Form::parse(t, ring, n).unwrap()).collect()
}
