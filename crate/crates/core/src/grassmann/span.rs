//! Linear span of sampled points of `VPS(Q, H)_G ⊂ Gr(C(n,2), q^⊥_2)`, and
//! the rank of the Plücker quadrics restricted to it.

use serde::Serialize;

use crate::algebra::linalg::{ExactMatrix, Subspace};
use crate::algebra::mono::binomial;
use crate::algebra::modular::{inv_mod, mul_mod, rank_mod};
use crate::algebra::scalar::{reduce_mod, Scalar};
use crate::apolarity::quadric::apolar_piece;
use crate::apolarity::Quadric;
use crate::error::{Error, Result};
use crate::vps::points::vanishing_piece;
use crate::vps::sampler::polar_simplex_sample;

use super::curves::{ruling_curve, Ruling};
use super::plucker::{plucker, PluckerVec};
use super::quadrics::QuadricSpace;

#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub samples: usize,
    pub projective_dimension: usize,
    /// The last 20% of the samples did not raise the rank.
    pub stabilized: bool,
    pub primes: Vec<u64>,
    /// The chosen independent samples have full rank over the rationals.
    pub exact_confirmed: bool,
}

#[derive(Clone, Debug)]
pub struct SpanResult {
    pub report: SpanReport,
    /// Independent sampled Plücker vectors spanning the span.
    pub basis: Vec<Vec<Scalar>>,
}

/// Plücker point of the degree-2 piece of a sampled polar simplex.
pub fn vps_sample(q: &Quadric, seed: u64) -> Result<PluckerVec> {
    let n = q.nvars();
    let simplex = polar_simplex_sample(q, seed)?;
    let v = vanishing_piece(&simplex.points, n, 2);
    plucker(&v, &apolar_piece(q.form(), 2))
}

/// Incremental echelon form modulo `p`.
#[derive(Default)]
pub(crate) struct ModEchelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    pub(crate) fn insert(&mut self, mut v: Vec<u64>, p: u64) -> bool {
        for (c, r) in &self.rows {
            let f = v[*c];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + p - mul_mod(f, *y, p)) % p;
                }
            }
        }
        let Some(c) = v.iter().position(|&x| x != 0) else { return false };
        let inv = inv_mod(v[c], p).unwrap();
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        self.rows.push((c, v));
        true
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub(crate) fn vec_mod(v: &[Scalar], p: u64) -> Result<Vec<u64>> {
    v.iter().map(|c| reduce_mod(c, p).ok_or(Error::BadReduction { prime: p })).collect()
}

/// Span of the given Plücker vectors, with two-prime rank and exact
/// confirmation on an independent subset.
pub fn span_of(points: &[PluckerVec], primes: &[u64]) -> Result<SpanResult> {
    if points.is_empty() || primes.is_empty() {
        return Err(Error::domain("need samples and primes"));
    }
    let head = (points.len() * 4) / 5;
    let mut ranks = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut stabilized = true;
    for (pi, &p) in primes.iter().enumerate() {
        let mut e = ModEchelon::default();
        let mut at_head = 0;
        for (i, pt) in points.iter().enumerate() {
            if e.insert(vec_mod(&pt.coords, p)?, p) && pi == 0 {
                chosen.push(i);
            }
            if i + 1 == head {
                at_head = e.rank();
            }
        }
        stabilized &= at_head == e.rank();
        ranks.push(e.rank());
    }
    if ranks.iter().any(|r| *r != ranks[0]) {
        return Err(Error::Unstable(format!("primes disagree on the span rank: {ranks:?}")));
    }
    let basis: Vec<Vec<Scalar>> = chosen.iter().map(|&i| points[i].coords.clone()).collect();
    let exact_confirmed = ExactMatrix::from_rows(basis.clone()).rank() == basis.len();
    Ok(SpanResult {
        report: SpanReport {
            samples: points.len(),
            projective_dimension: ranks[0] - 1,
            stabilized,
            primes: primes.to_vec(),
            exact_confirmed,
        },
        basis,
    })
}

/// Sample `samples` polar simplices (seeds `seed..seed+samples`), plus
/// seven points on each ruling curve when `Q^{-1}` is split in the
/// standard form.
pub fn vps_span(q: &Quadric, samples: usize, seed: u64, primes: &[u64]) -> Result<SpanResult> {
    let mut points: Vec<PluckerVec> =
        (0..samples as u64).map(|i| vps_sample(q, seed.wrapping_add(i))).collect::<Result<_>>()?;
    for ruling in [Ruling::First, Ruling::Second] {
        for t in 0..7i64 {
            match ruling_curve(q, ruling, (Scalar::from_integer(1.into()), Scalar::from_integer(t.into()))) {
                Ok(p) => points.push(p),
                Err(Error::UnsupportedQuadric(_)) | Err(Error::Domain(_)) => break,
                Err(e) => return Err(e),
            }
        }
    }
    let r = span_of(&points, primes)?;
    if !r.report.stabilized {
        return Err(Error::Unstable(format!(
            "span rank still growing after {} samples",
            r.report.samples
        )));
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictReport {
    pub rank: usize,
    pub quadrics: usize,
    pub target_dim: usize,
    pub primes: Vec<u64>,
}

/// Index of `t_i t_j` (`i ≤ j`) among quadratic monomials in `s` variables,
/// in row-major upper-triangular order.
pub fn pair_index(s: usize, i: usize, j: usize) -> usize {
    i * s - i * (i + 1) / 2 + j
}

/// The Plücker quadrics of `space` restricted to the span, modulo `p`, as
/// coefficient rows indexed by [`pair_index`].
pub fn restricted_rows_mod(space: &QuadricSpace, span_basis: &[Vec<Scalar>], p: u64) -> Result<Vec<Vec<u64>>> {
    let s = span_basis.len();
    let target = (binomial(s as u64 + 1, 2)) as usize;
    let quads = space.basis_mod(p).ok_or_else(|| Error::domain("prime missing from the quadric space"))?;
    let b: Vec<Vec<u64>> = span_basis.iter().map(|v| vec_mod(v, p)).collect::<Result<_>>()?;
    Ok(quads
        .iter()
        .map(|q| {
            let mut row = vec![0u64; target];
            for ((a, c), coeff) in q {
                for i in 0..s {
                    let bia = b[i][*a];
                    let bic = b[i][*c];
                    if bia == 0 && bic == 0 {
                        continue;
                    }
                    for j in i..s {
                        let mut t = mul_mod(bia, b[j][*c], p);
                        if j != i {
                            t = (t + mul_mod(b[j][*a], bic, p)) % p;
                        }
                        if t != 0 {
                            let slot = &mut row[pair_index(s, i, j)];
                            *slot = (*slot + mul_mod(*coeff, t, p)) % p;
                        }
                    }
                }
            }
            row
        })
        .collect())
}

/// Rank of `Q ↦ Q|_span` from the Plücker quadrics to quadrics in the
/// span coordinates `t`, where the span point is `Σ t_i b_i`.
pub fn restrict_quadrics(space: &QuadricSpace, span_basis: &[Vec<Scalar>]) -> Result<RestrictReport> {
    let s = span_basis.len();
    let target = (binomial(s as u64 + 1, 2)) as usize;
    let mut ranks = Vec::new();
    for &p in &space.primes {
        let rows = restricted_rows_mod(space, span_basis, p)?;
        ranks.push(rank_mod(rows, target, p));
    }
    if ranks.iter().any(|r| *r != ranks[0]) {
        return Err(Error::Unstable(format!("primes disagree on the restriction rank: {ranks:?}")));
    }
    Ok(RestrictReport { rank: ranks[0], quadrics: space.dimension, target_dim: target, primes: space.primes.clone() })
}

/// The subspace of `P^{C(m,k)−1}` spanned by the given rows, exactly.
pub fn exact_span(rows: &[Vec<Scalar>]) -> Subspace {
    Subspace::span_dense(rows.first().map_or(0, Vec::len), rows)
}
