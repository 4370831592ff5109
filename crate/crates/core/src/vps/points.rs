//! Ideals of finite sets of points.

use num_traits::Zero;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::{left_kernel, ExactMatrix, SVec, Subspace};
use crate::algebra::mono::{dim_graded, mono_basis};
use crate::algebra::scalar::Scalar;
use crate::error::{Error, Result};
use crate::grobner::{is_saturated, GradedIdeal};

/// A finite subscheme, either reduced points or a saturated ideal.
#[derive(Clone, Debug)]
pub enum SchemeSpec {
    Points(Vec<Vec<Scalar>>),
    Ideal(GradedIdeal),
}

fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    ExactMatrix::from_rows(vec![a.to_vec(), b.to_vec()]).rank() < 2
}

/// `(I_Γ)_d`: kernel of evaluation at the points.
pub fn vanishing_piece(points: &[Vec<Scalar>], n: usize, d: u32) -> Subspace {
    let basis = mono_basis(n, d);
    let rows: Vec<SVec> = basis
        .monos()
        .iter()
        .map(|m| {
            let f = Form::monomial(Ring::S, crate::algebra::scalar::one(), m.clone());
            points
                .iter()
                .enumerate()
                .filter_map(|(k, p)| {
                    let v = f.eval(p);
                    (!v.is_zero()).then_some((k, v))
                })
                .collect()
        })
        .collect();
    Subspace::span(dim_graded(n, d), &left_kernel(&rows, points.len()))
}

/// The homogeneous ideal of a scheme. For reduced points, generators are
/// read off degree by degree up to `reg = r + 1`, where `r` is the first
/// degree in which the points impose independent conditions.
pub fn points_ideal(spec: &SchemeSpec, d_max: u32) -> Result<GradedIdeal> {
    match spec {
        SchemeSpec::Ideal(i) => {
            if !is_saturated(i) {
                return Err(Error::domain("scheme ideal is not saturated"));
            }
            Ok(i.clone())
        }
        SchemeSpec::Points(points) => {
            let n = points.first().map(Vec::len).ok_or_else(|| Error::domain("no points"))?;
            for (a, p) in points.iter().enumerate() {
                if p.len() != n || p.iter().all(Zero::is_zero) {
                    return Err(Error::domain(format!("point {a} is not a nonzero vector of length {n}")));
                }
                for q in &points[..a] {
                    if proportional(p, q) {
                        return Err(Error::domain("repeated point; pass schemes with multiplicity as ideals"));
                    }
                }
            }
            let mut r = 0;
            while n > 1 && dim_graded(n, r) - vanishing_piece(points, n, r).dim() < points.len() {
                r += 1;
            }
            let top = d_max.max(r + 1);
            Ok(GradedIdeal::from_degreewise(Ring::S, n, top, |d| vanishing_piece(points, n, d)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Scalar>> {
        v.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn coordinate_simplex() {
        let p = pts(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let i = points_ideal(&SchemeSpec::Points(p), 3).unwrap();
        assert_eq!(i.generators().len(), 6);
        assert!(i.generators().iter().all(|g| g.len() == 1 && g.degree() == 2));
        assert!(i.hilbert_function(5).is_one_n_n(4));
    }

    #[test]
    fn collinear_points() {
        let p = pts(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 0, 0], &[1, 2, 0, 0]]);
        let i = points_ideal(&SchemeSpec::Points(p), 5).unwrap();
        assert!(i.hilbert_function(6).matches_eventually_constant(&[1, 2, 3, 4]));
    }

    #[test]
    fn repeated_points_rejected() {
        let p = pts(&[&[1, 0, 0], &[2, 0, 0]]);
        assert!(matches!(points_ideal(&SchemeSpec::Points(p), 2), Err(Error::Domain(_))));
    }
}
