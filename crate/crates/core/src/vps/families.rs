//! Boundary families for `n = 5`: a length-four scheme on a line plus a
//! point (F1), and a length-five scheme on a line cut by a cubic (F2).

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::Subspace;
use crate::algebra::scalar::Scalar;
use crate::apolarity::quadric::apolar_piece;
use crate::apolarity::{LinearSubspace, Quadric};
use crate::error::{Error, Result};
use crate::grobner::{intersect_ideals, GradedIdeal};

use super::points::vanishing_piece;

#[derive(Clone, Debug)]
pub enum FamilyParams {
    /// `Γ′` on a line and a point `p` off it.
    F1 { gamma_prime: GradedIdeal, point: Vec<Scalar> },
    /// `Γ` of length five on a line, and a cubic `c ∈ T_3`.
    F2 { gamma: GradedIdeal, cubic: Form },
}

fn expect_hilbert(ideal: &GradedIdeal, want: &[usize], what: &str) -> Result<()> {
    let h = ideal.hilbert_function(ideal.determinacy_bound());
    if h.matches_eventually_constant(want) {
        Ok(())
    } else {
        Err(Error::DegenerateParameters(format!("{what} has Hilbert function {h}")))
    }
}

fn point_ideal(p: &[Scalar]) -> GradedIdeal {
    let n = p.len();
    let lin = vanishing_piece(&[p.to_vec()], n, 1);
    GradedIdeal::new(Ring::S, n, lin.basis().iter().map(|r| Form::from_sparse(Ring::S, n, 1, r)).collect()).unwrap()
}

/// `I^sat ∩ q^⊥`.
pub fn cut_by_quadric(sat: &GradedIdeal, q: &Quadric) -> GradedIdeal {
    let top = sat.max_gen_degree().max(3);
    intersect_ideals(sat, &q.apolar_ideal(), top)
}

pub fn family_builder(params: &FamilyParams, q: &Quadric) -> Result<GradedIdeal> {
    if q.nvars() != 5 || !q.is_full_rank() {
        return Err(Error::domain("families are defined for a full-rank quadric in five variables"));
    }
    let ideal = match params {
        FamilyParams::F1 { gamma_prime, point } => {
            expect_hilbert(gamma_prime, &[1, 2, 3, 4], "Γ′")?;
            if point.len() != 5 {
                return Err(Error::domain("point must have five coordinates"));
            }
            if gamma_prime.piece(1).basis().iter().all(|r| Form::from_sparse(Ring::S, 5, 1, r).eval(point) == Scalar::from_integer(0.into())) {
                return Err(Error::DegenerateParameters("the point lies on the line".into()));
            }
            let sat = intersect_ideals(gamma_prime, &point_ideal(point), gamma_prime.max_gen_degree().max(2) + 1);
            cut_by_quadric(&sat.minimalized(), q)
        }
        FamilyParams::F2 { gamma, cubic } => {
            expect_hilbert(gamma, &[1, 2, 3, 4, 5], "Γ")?;
            if cubic.ring() != Ring::T || cubic.degree() != 3 || cubic.nvars() != 5 {
                return Err(Error::domain("the cubic must lie in T_3"));
            }
            let qperp = q.apolar_ideal();
            let top = gamma.max_gen_degree().max(4);
            GradedIdeal::from_degreewise(Ring::S, 5, top, |d| {
                let mut p: Subspace = gamma.piece(d).intersect(&qperp.piece(d));
                if d <= 3 {
                    p = p.intersect(&apolar_piece(cubic, d));
                }
                p
            })
        }
    };
    expect_hilbert(&ideal, &[1, 5], "the family member")?;
    Ok(ideal)
}

/// Write `c = ℓ²·μ` when possible.
pub fn square_factor(c: &Form) -> Option<(Form, Form)> {
    let n = c.nvars();
    let ring = c.ring();
    let derivs: Vec<Form> = (0..n)
        .map(|i| crate::apolarity::apply_diff(&Form::var(ring.dual(), n, i), c).unwrap())
        .filter(|f| !f.is_zero())
        .collect();
    let span = Subspace::span(
        crate::algebra::mono::dim_graded(n, 2),
        &derivs.iter().map(Form::to_sparse).collect::<Vec<_>>(),
    );
    let basis: Vec<Form> = span.basis().iter().map(|r| Form::from_sparse(ring, n, 2, r)).collect();
    let ell = match basis.len() {
        1 => {
            let q = Quadric::from_form(basis[0].clone()).ok()?;
            if q.rank() != 1 {
                return None;
            }
            let m = q.matrix();
            let row = (0..n).map(|i| m.row(i).to_vec()).find(|r| r.iter().any(|x| !num_traits::Zero::is_zero(x)))?;
            Form::linear(ring, &row)
        }
        2 => {
            // derivatives of ℓ²μ span ℓ·span(ℓ, μ); (a2, −a1) is a syzygy
            let syz = crate::grobner::syzygy::linear_syzygies(&basis).ok()?;
            let a1 = syz.first()?[1].neg();
            basis[0].divide_exact(&a1)?
        }
        _ => return None,
    };
    let mu = c.divide_exact(&ell.mul(&ell).ok()?)?;
    Some((ell, mu))
}

/// The plane polar to `L` with respect to `Q^{-1}`.
pub fn polar_space(line: &LinearSubspace, q: &Quadric) -> Result<LinearSubspace> {
    let qi = q.inverse()?;
    // v ↦ q^{-1}(v·l) is linear in v; its kernel over all l ∈ L
    let n = q.nvars();
    let rows: Vec<Vec<Scalar>> = line
        .forms()
        .iter()
        .map(|l| {
            (0..n)
                .map(|i| {
                    let v = Form::var(Ring::T, n, i);
                    crate::apolarity::apply_diff(qi.form(), &v.mul(l).unwrap()).unwrap().coeff(&crate::algebra::mono::Mono::one(n))
                })
                .collect()
        })
        .collect();
    let kernel = crate::algebra::linalg::ExactMatrix::from_rows(rows).kernel();
    let forms: Vec<Form> = kernel.iter().map(|v| Form::linear(Ring::T, v)).collect();
    Ok(LinearSubspace::span(Ring::T, n, &forms))
}

/// For F2: the cubic has the form `ℓ²·μ` with `ℓ ∈ L` and `μ` in the
/// plane polar to `L`.
pub fn f2_cubic_is_saturable(cubic: &Form, line: &LinearSubspace, q: &Quadric) -> Result<bool> {
    let Some((ell, mu)) = square_factor(cubic) else { return Ok(false) };
    Ok(line.contains(&ell) && polar_space(line, q)?.contains(&mu))
}
