//! Plücker coordinates of subspaces in a fixed basis.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::linalg::{ExactMatrix, SVec, Subspace};
use crate::algebra::modular::det_mod;
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Sorted `k`-subsets of `0..m`, in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// A point of `Gr(k, m)` in `P^{C(m,k)−1}`, scaled so its first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerVec {
    pub k: usize,
    pub m: usize,
    #[serde(serialize_with = "ser_scalars")]
    pub coords: Vec<Scalar>,
}

fn ser_scalars<S: serde::Serializer>(v: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(scalar::to_text))
}

impl PluckerVec {
    pub fn to_sparse(&self) -> SVec {
        crate::algebra::linalg::sparse_from_dense(&self.coords)
    }

    pub fn nonzero_count(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }
}

/// All maximal minors of a `k × m` matrix.
pub fn plucker_of_rows(rows: &[Vec<Scalar>], m: usize) -> Result<PluckerVec> {
    let k = rows.len();
    let mut coords: Vec<Scalar> = subsets(m, k)
        .iter()
        .map(|cols| {
            ExactMatrix::from_rows(rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect()).det()
        })
        .collect();
    let Some(first) = coords.iter().find(|c| !c.is_zero()).cloned() else {
        return Err(Error::domain("rank-deficient matrix has no Plücker point"));
    };
    for c in coords.iter_mut() {
        *c /= &first;
    }
    Ok(PluckerVec { k, m, coords })
}

/// Plücker vector of `v ⊆ ambient`, in the basis of `ambient` given by its
/// echelon rows.
pub fn plucker(v: &Subspace, ambient: &Subspace) -> Result<PluckerVec> {
    let rows: Vec<Vec<Scalar>> = v
        .basis()
        .iter()
        .map(|r| ambient.coordinates(r).ok_or_else(|| Error::domain("subspace is not inside the ambient piece")))
        .collect::<Result<_>>()?;
    plucker_of_rows(&rows, ambient.dim())
}

/// Maximal minors modulo `p`.
pub fn plucker_mod(rows: &[Vec<u64>], p: u64, sets: &[Vec<usize>]) -> Vec<u64> {
    sets.iter()
        .map(|cols| det_mod(rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect(), p))
        .collect()
}
