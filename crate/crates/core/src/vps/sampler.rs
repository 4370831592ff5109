//! Exact sampling of polar simplices through rational orthogonal matrices.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::ExactMatrix;
use crate::algebra::scalar::{self, Scalar};
use crate::apolarity::Quadric;
use crate::error::{Error, Result};

/// `q = Σ c_i ℓ_i²` with `ℓ_i = Σ_j points[i][j] y_j`.
#[derive(Clone, Debug)]
pub struct PolarSimplex {
    pub points: Vec<Vec<Scalar>>,
    pub weights: Vec<Scalar>,
    /// The expanded sum equals `q` exactly.
    pub certificate: bool,
}

impl PolarSimplex {
    pub fn linear_forms(&self, ring: Ring) -> Vec<Form> {
        self.points.iter().map(|p| Form::linear(ring, p)).collect()
    }

    pub fn expand(&self, ring: Ring) -> Form {
        let n = self.points[0].len();
        let mut acc = Form::zero(ring, n, 2);
        for (l, c) in self.linear_forms(ring).iter().zip(&self.weights) {
            acc = acc.add(&l.mul(l).unwrap().scale(c)).unwrap();
        }
        acc
    }
}

/// Rational diagonalization `q = Σ c_i ℓ_i²` by successive rank-one
/// reductions `A ↦ A − (Au)(Au)ᵀ / uᵀAu`.
pub fn diagonalize(q: &Quadric) -> Result<PolarSimplex> {
    let n = q.nvars();
    if !q.is_full_rank() {
        return Err(Error::SingularQuadric { rank: q.rank(), n });
    }
    let mut a = q.matrix().clone();
    let mut points = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for _ in 0..n {
        let u = isotropy_breaker(&a).expect("nonzero matrix has a non-isotropic vector");
        let au = a.apply(&u);
        let quad: Scalar = u.iter().zip(&au).map(|(x, y)| x * y).sum();
        let c = quad.recip();
        for i in 0..n {
            for j in 0..n {
                let v = a.get(i, j) - &au[i] * &au[j] * &c;
                a.set(i, j, v);
            }
        }
        points.push(au);
        weights.push(c);
    }
    let mut s = PolarSimplex { points, weights, certificate: false };
    s.certificate = s.expand(q.ring()) == *q.form();
    Ok(s)
}

fn isotropy_breaker(a: &ExactMatrix) -> Option<Vec<Scalar>> {
    let n = a.nrows();
    let unit = |i: usize| (0..n).map(|k| if k == i { scalar::one() } else { Scalar::zero() }).collect::<Vec<_>>();
    if let Some(i) = (0..n).find(|&i| !a.get(i, i).is_zero()) {
        return Some(unit(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !a.get(i, j).is_zero() {
                let mut u = unit(i);
                u[j] = scalar::one();
                return Some(u);
            }
        }
    }
    None
}

/// `g = (I − B)(I + B)^{-1}` with `B = A^{-1}K`, `K` skew; then
/// `gᵀAg = A`. `None` when `I + B` is singular.
pub fn cayley_from_skew(q: &Quadric, k: &ExactMatrix) -> Option<ExactMatrix> {
    let n = q.nvars();
    let ainv = q.matrix().inverse()?;
    let b = ainv.mul(k);
    let id = ExactMatrix::identity(n);
    let plus = id.add(&b);
    let minus = id.add(&b.scale(&-scalar::one()));
    Some(minus.mul(&plus.inverse()?))
}

/// A seeded rational `q`-orthogonal matrix.
pub fn cayley_orthogonal(q: &Quadric, seed: u64) -> Result<ExactMatrix> {
    let n = q.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let mut k = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = scalar::int(rng.gen_range(-3..=3));
                k.set(i, j, v.clone());
                k.set(j, i, -v);
            }
        }
        if let Some(g) = cayley_from_skew(q, &k) {
            return Ok(g);
        }
    }
    Err(Error::domain("I + B stayed singular for 32 skew samples"))
}

/// Seeded polar simplex: the diagonal decomposition moved by a Cayley
/// orthogonal matrix, `v_i ↦ gᵀ v_i`.
pub fn polar_simplex_sample(q: &Quadric, seed: u64) -> Result<PolarSimplex> {
    let base = diagonalize(q)?;
    let g = cayley_orthogonal(q, seed)?;
    let gt = g.transpose();
    let points = base.points.iter().map(|v| gt.apply(v)).collect();
    let mut s = PolarSimplex { points, weights: base.weights, certificate: false };
    s.certificate = s.expand(q.ring()) == *q.form();
    Ok(s)
}

/// Check `gᵀ A g = A`.
pub fn is_orthogonal_for(g: &ExactMatrix, q: &Quadric) -> bool {
    g.transpose().mul(q.matrix()).mul(g) == *q.matrix()
}
