//! Arithmetic and elimination modulo a word-sized prime.

use crate::error::{Error, Result};

/// Two large primes below 2^31 used for modular rank certificates.
pub const DEFAULT_PRIMES: [u64; 2] = [2147483629, 2147483587];

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(p as i128) as u64)
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Parse a comma separated prime list such as `VPS_PRIMES`.
pub fn parse_primes(s: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let p: u64 = tok
            .parse()
            .map_err(|_| Error::domain(format!("not an integer: {tok}")))?;
        if !is_prime(p) || p >= 1 << 62 {
            return Err(Error::domain(format!("not a usable prime: {p}")));
        }
        out.push(p);
    }
    if out.is_empty() {
        return Err(Error::domain("empty prime list"));
    }
    Ok(out)
}

/// Row echelon form in place; returns pivot columns.
pub fn echelon_mod(rows: &mut Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p).expect("nonzero mod prime");
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let piv = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, y) in row.iter_mut().zip(&piv).skip(c) {
                *x = (*x + p - mul_mod(f, *y, p)) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r.max(pivots.len()));
    rows.retain(|row| row.iter().any(|&x| x != 0));
    pivots
}

pub fn rank_mod(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    echelon_mod(&mut rows, ncols, p).len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn kernel_mod(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivots = echelon_mod(&mut rows, ncols, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][f]) % p;
            }
            v
        })
        .collect()
}

pub fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(k) = (c..n).find(|&k| m[k][c] != 0) else { return 0 };
        if k != c {
            m.swap(k, c);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[c][c], p);
        let inv = inv_mod(m[c][c], p).expect("nonzero mod prime");
        for r in c + 1..n {
            if m[r][c] == 0 {
                continue;
            }
            let f = mul_mod(m[r][c], inv, p);
            for j in c..n {
                let t = mul_mod(f, m[c][j], p);
                m[r][j] = (m[r][j] + p - t) % p;
            }
        }
    }
    det
}
