//! The differentiation pairing, apolar ideals and quadrics.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::{ExactMatrix, SVec, Subspace};
use crate::algebra::mono::{dim_graded, mono_basis, Mono};
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};
use crate::grobner::saturate::monomial_forms;
use crate::grobner::GradedIdeal;

/// Let `f` act on `g` as the constant coefficient differential operator
/// `f(∂)`, without factorial rescaling. The rings must be dual.
pub fn apply_diff(f: &Form, g: &Form) -> Result<Form> {
    if f.ring() == g.ring() || f.nvars() != g.nvars() {
        return Err(Error::domain("apply_diff needs forms from dual rings"));
    }
    if f.degree() > g.degree() {
        return Err(Error::domain(format!(
            "cannot apply a degree {} operator to a degree {} form",
            f.degree(),
            g.degree()
        )));
    }
    let n = g.nvars();
    let mut out = Form::zero(g.ring(), n, g.degree() - f.degree());
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            let Some(rest) = a.quotient_of(b) else { continue };
            // ∂^a y^b = b!/(b-a)! y^{b-a}
            let mut c = ca * cb;
            for (ai, bi) in a.exps().iter().zip(b.exps()) {
                for k in 0..*ai {
                    c *= scalar::int((bi - k) as i64);
                }
            }
            out.add_term(rest, c);
        }
    }
    Ok(out)
}

/// The pairing `S_d × T_d → k` read as a scalar.
pub fn pair(f: &Form, g: &Form) -> Result<Scalar> {
    if f.degree() != g.degree() {
        return Err(Error::domain("pairing needs equal degrees"));
    }
    let r = apply_diff(f, g)?;
    Ok(r.coeff(&Mono::one(g.nvars())))
}

/// `α!` for the exponent vector of a monomial: the value of the pairing
/// of `x^α` with `y^α`.
pub fn mono_pairing(m: &Mono) -> Scalar {
    let mut c = scalar::one();
    for &e in m.exps() {
        for k in 2..=e {
            c *= scalar::int(k as i64);
        }
    }
    c
}

/// `(g^⊥)_e`: kernel of `S_e → T_{d−e}`, `f ↦ f(∂)g`.
pub fn apolar_piece(g: &Form, e: u32) -> Subspace {
    let n = g.nvars();
    let d = g.degree();
    let ambient = dim_graded(n, e);
    if e > d {
        return Subspace::full(ambient);
    }
    let rows: Vec<SVec> = mono_basis(n, e)
        .monos()
        .iter()
        .map(|m| {
            let f = Form::monomial(g.ring().dual(), scalar::one(), m.clone());
            apply_diff(&f, g).expect("degrees checked").to_sparse()
        })
        .collect();
    let ker = crate::algebra::linalg::left_kernel(&rows, dim_graded(n, d - e));
    Subspace::span(ambient, &ker)
}

/// The apolar ideal `g^⊥`, generated in degrees `1..=min(deg g + 1, d_max)`.
pub fn apolar_ideal(g: &Form, d_max: u32) -> Result<GradedIdeal> {
    if g.is_zero() {
        return Err(Error::domain("apolar ideal of the zero form"));
    }
    let n = g.nvars();
    let ring = g.ring().dual();
    let top = (g.degree() + 1).min(d_max);
    let mut gens = Vec::new();
    for e in 1..=top {
        if e > g.degree() {
            gens.extend(monomial_forms(ring, n, e));
        } else {
            let p = apolar_piece(g, e);
            gens.extend(p.basis().iter().map(|r| Form::from_sparse(ring, n, e, r)));
        }
    }
    let ideal = GradedIdeal::new(ring, n, gens)?;
    Ok(ideal.minimalized())
}

/// A quadratic form with its symmetric matrix, `q(v) = vᵀ A v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    form: Form,
    matrix: ExactMatrix,
    rank: usize,
}

impl Quadric {
    pub fn from_form(form: Form) -> Result<Self> {
        if form.degree() != 2 {
            return Err(Error::domain("a quadric must have degree 2"));
        }
        let n = form.nvars();
        let mut a = ExactMatrix::zeros(n, n);
        let half = scalar::frac(1, 2);
        for (m, c) in form.terms() {
            let idx: Vec<usize> = m.exps().iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                a.set(i, i, c.clone());
            } else {
                a.set(i, j, c * &half);
                a.set(j, i, c * &half);
            }
        }
        let rank = a.rank();
        Ok(Quadric { form, matrix: a, rank })
    }

    pub fn parse(text: &str, ring: Ring, n: usize) -> Result<Self> {
        Quadric::from_form(Form::parse(text, ring, n)?)
    }

    pub fn from_matrix(ring: Ring, a: ExactMatrix) -> Result<Self> {
        if !a.is_symmetric() {
            return Err(Error::domain("quadric matrix must be symmetric"));
        }
        let n = a.nrows();
        let mut f = Form::zero(ring, n, 2);
        for i in 0..n {
            for j in i..n {
                let c = if i == j { a.get(i, i).clone() } else { a.get(i, j) * scalar::int(2) };
                let mut e = vec![0u32; n];
                e[i] += 1;
                e[j] += 1;
                f.add_term(Mono::new(e), c);
            }
        }
        let rank = a.rank();
        Ok(Quadric { form: f, matrix: a, rank })
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.form.nvars()
    }

    pub fn ring(&self) -> Ring {
        self.form.ring()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank == self.nvars()
    }

    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        let av = self.matrix.apply(v);
        v.iter().zip(&av).fold(Scalar::zero(), |s, (a, b)| s + a * b)
    }

    /// The quadric whose matrix is the inverse matrix, in the dual ring.
    pub fn inverse(&self) -> Result<Quadric> {
        let inv = self
            .matrix
            .inverse()
            .ok_or(Error::SingularQuadric { rank: self.rank, n: self.nvars() })?;
        Quadric::from_matrix(self.ring().dual(), inv)
    }

    /// The collineation from linear forms of the dual ring: `ℓ ↦ ℓ(∂)q`.
    pub fn collineation(&self, l: &Form) -> Form {
        apply_diff(l, &self.form).expect("linear operator on a quadric")
    }

    /// Image of a subspace of dual linear forms under the collineation.
    pub fn collineation_image(&self, space: &Subspace) -> Subspace {
        let n = self.nvars();
        let imgs: Vec<SVec> = space
            .basis()
            .iter()
            .map(|r| self.collineation(&Form::from_sparse(self.ring().dual(), n, 1, r)).to_sparse())
            .collect();
        Subspace::span(n, &imgs)
    }

    /// `q^⊥`, the apolar ideal in the dual ring.
    pub fn apolar_ideal(&self) -> GradedIdeal {
        apolar_ideal(&self.form, 3).expect("nonzero quadric")
    }

    /// `Σ y_i²` (or `Σ x_i²`).
    pub fn sum_of_squares(ring: Ring, n: usize) -> Quadric {
        Quadric::from_matrix(ring, ExactMatrix::identity(n)).unwrap()
    }

    /// A random full-rank quadric with small integer matrix entries.
    pub fn random_full_rank<R: Rng>(ring: Ring, n: usize, rng: &mut R) -> Quadric {
        loop {
            let mut a = ExactMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let v = scalar::int(rng.gen_range(-3..=3));
                    a.set(i, j, v.clone());
                    a.set(j, i, v);
                }
            }
            if !a.det().is_zero() {
                return Quadric::from_matrix(ring, a).unwrap();
            }
        }
    }
}

/// The inverse quadric.
pub fn inverse_quadric(q: &Quadric) -> Result<Quadric> {
    q.inverse()
}
