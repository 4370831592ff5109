//! Polarity of linear subspaces with respect to a quadric and its inverse.

use rand::Rng;
use serde::Serialize;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::{SVec, Subspace};
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};

use super::quadric::{apolar_piece, apply_diff, Quadric};

/// A subspace of linear forms in one of the two rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace {
    pub ring: Ring,
    pub space: Subspace,
}

impl LinearSubspace {
    pub fn new(ring: Ring, space: Subspace) -> Self {
        LinearSubspace { ring, space }
    }

    pub fn span(ring: Ring, n: usize, forms: &[Form]) -> Self {
        let rows: Vec<SVec> = forms.iter().map(Form::to_sparse).collect();
        LinearSubspace { ring, space: Subspace::span(n, &rows) }
    }

    pub fn parse(ring: Ring, n: usize, forms: &[&str]) -> Result<Self> {
        let f = forms.iter().map(|t| Form::parse(t, ring, n)).collect::<Result<Vec<_>>>()?;
        Ok(LinearSubspace::span(ring, n, &f))
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn nvars(&self) -> usize {
        self.space.ambient()
    }

    pub fn forms(&self) -> Vec<Form> {
        let n = self.nvars();
        self.space.basis().iter().map(|r| Form::from_sparse(self.ring, n, 1, r)).collect()
    }

    /// The perpendicular in the dual ring; it does not involve any quadric.
    pub fn perp(&self) -> LinearSubspace {
        LinearSubspace { ring: self.ring.dual(), space: self.space.perp() }
    }

    pub fn contains(&self, f: &Form) -> bool {
        self.space.contains(&f.to_sparse())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarityReport {
    pub conditions: [bool; 6],
}

impl PolarityReport {
    pub fn all_agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

fn products(a: &[Form], b: &[Form]) -> Vec<Form> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y).unwrap())).collect()
}

/// The six conditions on `L, N ⊂ T_1` with `dim L + dim N = n`:
/// (1) `L^⊥·N^⊥ ⊆ q^⊥`, (2) `q(L^⊥·N^⊥) = 0`, (3) `q(L^⊥) = N`,
/// (4) `q^{-1}(N) = L^⊥`, (5) `q^{-1}(N·L) = 0`, (6) `N·L ⊆ (q^{-1})^⊥`.
/// Each one is evaluated by its own route.
pub fn polarity_conditions(l: &LinearSubspace, nsp: &LinearSubspace, q: &Quadric) -> Result<PolarityReport> {
    let n = q.nvars();
    if l.ring != Ring::T || nsp.ring != Ring::T || q.ring() != Ring::T {
        return Err(Error::domain("L, N and q must live in T"));
    }
    if l.dim() + nsp.dim() != n {
        return Err(Error::domain(format!("dim L + dim N = {} + {} ≠ {n}", l.dim(), nsp.dim())));
    }
    let qi = q.inverse()?;
    let lp = l.perp().forms();
    let np = nsp.perp().forms();

    // (1) membership of products in (q^⊥)_2
    let perp2 = apolar_piece(q.form(), 2);
    let c1 = products(&lp, &np).iter().all(|f| perp2.contains(&f.to_sparse()));

    // (2) two successive differentiations
    let c2 = lp.iter().all(|a| {
        np.iter().all(|b| {
            let once = apply_diff(b, q.form()).unwrap();
            apply_diff(a, &once).unwrap().is_zero()
        })
    });

    // (3) image of L^⊥ under q equals N
    let img = q.collineation_image(&l.perp().space);
    let c3 = img == nsp.space;

    // (4) image of N under q^{-1} equals L^⊥
    let img = qi.collineation_image(&nsp.space);
    let c4 = img == l.perp().space;

    // (5) ⟨q^{-1}(ν), λ⟩ = 0 through the inverse collineation
    let lf = l.forms();
    let c5 = nsp.forms().iter().all(|nu| {
        let image = qi.collineation(nu);
        lf.iter().all(|lam| apply_diff(&image, lam).unwrap().is_zero())
    });

    // (6) membership of products in (q^{-1})^⊥ ⊂ T_2
    let inv_perp = apolar_piece(qi.form(), 2);
    let c6 = products(&nsp.forms(), &lf).iter().all(|f| inv_perp.contains(&f.to_sparse()));

    Ok(PolarityReport { conditions: [c1, c2, c3, c4, c5, c6] })
}

fn random_subspace<R: Rng>(rng: &mut R, n: usize, k: usize) -> Subspace {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..k)
            .map(|_| (0..n).map(|_| scalar::int(rng.gen_range(-2..=2))).collect())
            .collect();
        let s = Subspace::span_dense(n, &rows);
        if s.dim() == k {
            return s;
        }
    }
}

/// A seeded trial `(L, N, q)`. About half the time `N = q(L^⊥)`, so both
/// outcomes of the lemma are exercised.
pub fn random_polarity_trial<R: Rng>(rng: &mut R, n: usize) -> (LinearSubspace, LinearSubspace, Quadric) {
    let q = Quadric::random_full_rank(Ring::T, n, rng);
    let k = rng.gen_range(1..n);
    let l = LinearSubspace::new(Ring::T, random_subspace(rng, n, k));
    let nsp = if rng.gen_bool(0.5) {
        LinearSubspace::new(Ring::T, q.collineation_image(&l.perp().space))
    } else {
        LinearSubspace::new(Ring::T, random_subspace(rng, n, n - k))
    };
    (l, nsp, q)
}

/// Does `q^{-1}` vanish on all of `Sym²(L)`? `L ⊂ T_1` is given by
/// coordinate vectors, a point `[v]` standing for `Σ v_i y_i`.
pub fn line_in_inverse_quadric(points: &Subspace, q: &Quadric) -> Result<bool> {
    if !q.is_full_rank() {
        return Err(Error::SingularQuadric { rank: q.rank(), n: q.nvars() });
    }
    let qi = q.inverse()?;
    let basis = points.to_dense_rows();
    let a = qi.matrix();
    for u in &basis {
        let au = a.apply(u);
        for v in &basis {
            let b: Scalar = au.iter().zip(v).map(|(x, y)| x * y).sum();
            if b != scalar::zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn constructed_and_mismatched() {
        let q = Quadric::parse("y1*y4 + y2*y3", Ring::T, 4).unwrap();
        let l = LinearSubspace::parse(Ring::T, 4, &["y1", "y2"]).unwrap();
        let n_good = LinearSubspace::new(Ring::T, q.collineation_image(&l.perp().space));
        let r = polarity_conditions(&l, &n_good, &q).unwrap();
        assert_eq!(r.conditions, [true; 6]);
        // q(L^⊥) = q(span(x3, x4)) = span(y2, y1), so N = L is polar
        assert_eq!(polarity_conditions(&l, &l, &q).unwrap().conditions, [true; 6]);
        let n_bad = LinearSubspace::parse(Ring::T, 4, &["y3", "y4"]).unwrap();
        assert_eq!(polarity_conditions(&l, &n_bad, &q).unwrap().conditions, [false; 6]);
        assert!(polarity_conditions(&l, &LinearSubspace::parse(Ring::T, 4, &["y1"]).unwrap(), &q).is_err());
    }

    #[test]
    fn random_trials_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (l, nsp, q) = random_polarity_trial(&mut rng, 4);
            assert!(polarity_conditions(&l, &nsp, &q).unwrap().all_agree());
        }
    }
}
