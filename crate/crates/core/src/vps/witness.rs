//! Quadrics annihilating `I_2`, and a search for a full-rank one.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::{right_kernel, ExactMatrix, SVec};
use crate::algebra::mono::{dim_graded, mono_basis};
use crate::algebra::scalar::{self, Scalar};
use crate::apolarity::quadric::mono_pairing;
use crate::apolarity::Quadric;
use crate::error::{Error, Result};
use crate::grobner::GradedIdeal;

/// Random combinations tried before giving up on a witness.
pub const WITNESS_TRIALS: usize = 64;
/// Largest determinant grid evaluated when certifying absence.
pub const CERTIFY_GRID_LIMIT: u64 = 20_000;

#[derive(Clone, Debug)]
pub struct ApolarQuadrics {
    /// Basis of `{q ∈ T_2 : v∘q = 0 for all v ∈ I_2}`.
    pub space: Vec<Form>,
    pub witness: Option<Quadric>,
    /// No witness and the determinant was shown to vanish on the whole
    /// space (attempted while the evaluation grid stays small).
    pub certified_absent: bool,
}

fn combination(space: &[Form], coeffs: &[Scalar]) -> Form {
    let mut acc = Form::zero(Ring::T, space[0].nvars(), 2);
    for (f, c) in space.iter().zip(coeffs) {
        acc = acc.add(&f.scale(c)).unwrap();
    }
    acc
}

fn det_of(space: &[Form], coeffs: &[Scalar]) -> Scalar {
    let f = combination(space, coeffs);
    if f.is_zero() {
        return scalar::zero();
    }
    Quadric::from_form(f).map(|q| q.matrix().det()).unwrap_or_else(|_| scalar::zero())
}

/// The determinant of `Σ t_i A_i` has degree ≤ n in each `t_i`, so it is
/// identically zero iff it vanishes on the grid `{0..=n}^k`.
fn determinant_vanishes(space: &[Form], n: usize) -> bool {
    let k = space.len();
    let side = n + 1;
    let total = side.pow(k as u32);
    (0..total).all(|mut idx| {
        let coeffs: Vec<Scalar> = (0..k)
            .map(|_| {
                let c = idx % side;
                idx /= side;
                scalar::int(c as i64)
            })
            .collect();
        det_of(space, &coeffs).is_zero()
    })
}

pub fn apolar_quadrics(ideal: &GradedIdeal, seed: u64) -> Result<ApolarQuadrics> {
    if ideal.ring() != Ring::S {
        return Err(Error::domain("expected an ideal in S"));
    }
    let n = ideal.nvars();
    let h1 = n - ideal.dim(1);
    if h1 != n {
        return Err(Error::NotLinearlyNormal { h1, n });
    }
    let basis = mono_basis(n, 2);
    let weights: Vec<Scalar> = basis.monos().iter().map(mono_pairing).collect();
    let rows: Vec<SVec> = ideal
        .piece(2)
        .basis()
        .iter()
        .map(|r| r.iter().map(|(i, c)| (*i, c * &weights[*i])).collect())
        .collect();
    let space: Vec<Form> = right_kernel(&rows, dim_graded(n, 2))
        .into_iter()
        .map(|v| Form::from_sparse(Ring::T, n, 2, &v))
        .collect();
    if space.is_empty() {
        return Ok(ApolarQuadrics { space, witness: None, certified_absent: true });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..WITNESS_TRIALS {
        let coeffs: Vec<Scalar> = (0..space.len()).map(|_| scalar::int(rng.gen_range(-5..=5))).collect();
        let f = combination(&space, &coeffs);
        if f.is_zero() {
            continue;
        }
        let q = Quadric::from_form(f)?;
        if q.is_full_rank() {
            return Ok(ApolarQuadrics { space, witness: Some(q), certified_absent: false });
        }
    }
    let grid = (n as u64 + 1).checked_pow(space.len() as u32).unwrap_or(u64::MAX);
    let certified_absent = (space.len() <= 3 || grid <= CERTIFY_GRID_LIMIT) && determinant_vanishes(&space, n);
    Ok(ApolarQuadrics { space, witness: None, certified_absent })
}

/// Rank of a generic member, read off the same seeded search.
pub fn max_rank_found(a: &ApolarQuadrics, seed: u64) -> usize {
    if let Some(w) = &a.witness {
        return w.rank();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..WITNESS_TRIALS)
        .map(|_| {
            let coeffs: Vec<Scalar> = (0..a.space.len()).map(|_| scalar::int(rng.gen_range(-5..=5))).collect();
            let f = combination(&a.space, &coeffs);
            if f.is_zero() {
                0
            } else {
                ExactMatrix::rank(Quadric::from_form(f).unwrap().matrix())
            }
        })
        .max()
        .unwrap_or(0)
}
