//! Hilbert function of the quadrics cut on the VPS span. Degree 3 and up
//! is a large modular elimination with no runtime guarantee; degree 2
//! is the restriction rank itself.

use crate::algebra::mono::{dim_graded, mono_basis, Mono};
use crate::algebra::modular::{echelon_mod, inv_mod, mul_mod};
use crate::algebra::scalar::Scalar;
use crate::error::{Error, Result};
use crate::grobner::ideal::var_mul_table;

use super::quadrics::QuadricSpace;
use super::span::{pair_index, restricted_rows_mod};

/// Expected `H(d)` of a scheme with Krull dimension `dim + 1` and h-vector `h`.
pub fn hilbert_from_h_vector(h: &[u64], dim: u64, d: u64) -> u64 {
    h.iter()
        .enumerate()
        .filter(|(i, _)| *i as u64 <= d)
        .map(|(i, hi)| hi * crate::algebra::mono::binomial(d - i as u64 + dim, dim))
        .sum()
}

/// Row-reduce `row` against `rows` (sorted by pivot, each monic) in place.
fn reduce(rows: &[(usize, Vec<u32>)], row: &mut [u64], p: u64) {
    for (c, r) in rows {
        let f = row[*c];
        if f != 0 {
            for (x, y) in row.iter_mut().zip(r) {
                if *y != 0 {
                    *x = (*x + p - mul_mod(f, *y as u64, p)) % p;
                }
            }
        }
    }
}

/// `H(S/J)(d)` for `d ≤ d_max`, where `J` is generated by the restricted
/// Plücker quadrics; computed modulo the first prime of `space`.
pub fn restricted_hilbert(space: &QuadricSpace, span_basis: &[Vec<Scalar>], d_max: u32) -> Result<Vec<usize>> {
    let p = *space.primes.first().ok_or_else(|| Error::domain("no primes"))?;
    if p >= 1 << 32 {
        return Err(Error::domain("restricted_hilbert stores residues in 32 bits"));
    }
    let s = span_basis.len();
    let mut out = vec![1, s];
    if d_max < 2 {
        out.truncate(d_max as usize + 1);
        return Ok(out);
    }
    // J_2 in the monomial coordinates of S_2
    let mono2 = mono_basis(s, 2);
    let mut perm = vec![0usize; dim_graded(s, 2)];
    for i in 0..s {
        for j in i..s {
            let mut e = vec![0u32; s];
            e[i] += 1;
            e[j] += 1;
            perm[pair_index(s, i, j)] = mono2.index_of(&Mono::new(e)).expect("quadratic monomial");
        }
    }
    let mut j2: Vec<Vec<u64>> = restricted_rows_mod(space, span_basis, p)?
        .into_iter()
        .map(|r| {
            let mut v = vec![0u64; perm.len()];
            for (k, x) in r.into_iter().enumerate() {
                v[perm[k]] = x;
            }
            v
        })
        .collect();
    echelon_mod(&mut j2, perm.len(), p);
    out.push(perm.len() - j2.len());
    let mut piece: Vec<Vec<u64>> = j2;
    for d in 2..d_max {
        let table = var_mul_table(s, d);
        let cols = dim_graded(s, d + 1);
        let mut rows: Vec<(usize, Vec<u32>)> = Vec::new();
        for g in &piece {
            for i in 0..s {
                let mut v = vec![0u64; cols];
                for (k, x) in g.iter().enumerate() {
                    if *x != 0 {
                        v[table[k][i]] = *x;
                    }
                }
                reduce(&rows, &mut v, p);
                let Some(c) = v.iter().position(|x| *x != 0) else { continue };
                let inv = inv_mod(v[c], p).expect("nonzero");
                let monic: Vec<u32> = v.iter().map(|x| mul_mod(*x, inv, p) as u32).collect();
                // keep earlier rows reduced at the new pivot so `reduce` stays one pass
                for (_, r) in rows.iter_mut() {
                    let f = r[c] as u64;
                    if f != 0 {
                        for (x, y) in r.iter_mut().zip(&monic) {
                            if *y != 0 {
                                *x = ((*x as u64 + p - mul_mod(f, *y as u64, p)) % p) as u32;
                            }
                        }
                    }
                }
                rows.push((c, monic));
            }
        }
        out.push(cols - rows.len());
        piece = rows.into_iter().map(|(_, r)| r.into_iter().map(u64::from).collect()).collect();
    }
    Ok(out)
}
