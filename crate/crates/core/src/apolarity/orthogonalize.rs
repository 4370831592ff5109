//! First-order orthogonalization: given a deformation of an apolar ideal
//! over the dual numbers, find `g = Id + εF` moving it back into `q^⊥`.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::ExactMatrix;
use crate::algebra::mono::mono_basis;
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};
use crate::grobner::GradedIdeal;

use super::quadric::{apply_diff, Quadric};

/// `D_F v = Σ_i (Σ_j F_ij x_j) ∂v/∂x_i`, the derivative of `v` along the
/// linear substitution `x ↦ (Id + εF)x`.
pub fn derivation(f: &ExactMatrix, v: &Form) -> Form {
    let n = v.nvars();
    let mut out = Form::zero(v.ring(), n, v.degree());
    for i in 0..n {
        let row: Vec<Scalar> = (0..n).map(|j| f.get(i, j).clone()).collect();
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        let lin = Form::linear(v.ring(), &row);
        let term = lin.mul(&v.partial(i)).unwrap();
        out = out.add(&term).unwrap();
    }
    out
}

/// A first-order deformation of `I0`: each basis vector `v_k` of `(I0)_2`
/// moves to `v_k + ε·δ_k`.
#[derive(Clone, Debug)]
pub struct FirstOrderDeformation {
    pub base: Vec<Form>,
    pub direction: Vec<Form>,
}

impl FirstOrderDeformation {
    pub fn zero(i0: &GradedIdeal) -> Self {
        let base = i0.piece_forms(2);
        let direction = base.iter().map(|v| Form::zero(v.ring(), v.nvars(), 2)).collect();
        FirstOrderDeformation { base, direction }
    }

    /// The deformation induced by the coordinate change `x ↦ (Id + εE)x`.
    pub fn from_coordinate_change(i0: &GradedIdeal, e: &ExactMatrix) -> Self {
        let base = i0.piece_forms(2);
        let direction = base.iter().map(|v| derivation(e, v)).collect();
        FirstOrderDeformation { base, direction }
    }

    /// A seeded random direction with small integer coefficients. Any such
    /// choice keeps the degree-2 quotient free over `k[ε]/ε²`.
    pub fn random<R: Rng>(i0: &GradedIdeal, rng: &mut R) -> Self {
        let base = i0.piece_forms(2);
        let n = i0.nvars();
        let monos = mono_basis(n, 2);
        let direction = base
            .iter()
            .map(|_| {
                let mut f = Form::zero(Ring::S, n, 2);
                for m in monos.monos() {
                    f.add_term(m.clone(), scalar::int(rng.gen_range(-3..=3)));
                }
                f
            })
            .collect();
        FirstOrderDeformation { base, direction }
    }
}

/// Solve `(δ_k + D_F v_k)(∂) q = 0` for all `k`, linear in the `n²`
/// entries of `F`.
pub fn orthogonalize_first_order(def: &FirstOrderDeformation, q: &Quadric) -> Result<ExactMatrix> {
    let n = q.nvars();
    if !q.is_full_rank() {
        return Err(Error::SingularQuadric { rank: q.rank(), n });
    }
    for v in &def.base {
        if !apply_diff(v, q.form())?.is_zero() {
            return Err(Error::domain(format!("{v} is not apolar to q")));
        }
    }
    // column (i, j) of the system: contribution of F_ij = x_j ∂v/∂x_i
    let mut rows = Vec::with_capacity(def.base.len());
    for (v, dv) in def.base.iter().zip(&def.direction) {
        let mut row = Vec::with_capacity(n * n + 1);
        for i in 0..n {
            let dvi = v.partial(i);
            for j in 0..n {
                let t = Form::var(Ring::S, n, j).mul(&dvi).unwrap();
                row.push(scalar_of(&apply_diff(&t, q.form())?));
            }
        }
        row.push(-scalar_of(&apply_diff(dv, q.form())?));
        rows.push(row);
    }
    let aug = ExactMatrix::from_rows(rows);
    let (r, rank, pivots) = aug.rref();
    if pivots.last() == Some(&(n * n)) {
        return Err(Error::Infeasible("no first-order coordinate change restores apolarity".into()));
    }
    let mut f = ExactMatrix::zeros(n, n);
    for (k, &p) in pivots.iter().enumerate().take(rank) {
        f.set(p / n, p % n, r.get(k, n * n).clone());
    }
    Ok(f)
}

fn scalar_of(f: &Form) -> Scalar {
    f.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
}

/// The ε-coefficients `(δ_k + D_F v_k)(∂) q`, all zero on success.
pub fn residuals(def: &FirstOrderDeformation, f: &ExactMatrix, q: &Quadric) -> Vec<Scalar> {
    def.base
        .iter()
        .zip(&def.direction)
        .map(|(v, dv)| {
            let moved = dv.add(&derivation(f, v)).unwrap();
            scalar_of(&apply_diff(&moved, q.form()).unwrap())
        })
        .collect()
}
