//! The two rational curves of `VPS(Q, H)_G` traced by the rulings of
//! `Q^{-1}` (n = 4), and degree fitting for parameterized curves.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::form::Form;
use crate::algebra::linalg::{left_kernel, right_kernel, sparse_from_dense, SVec};
use crate::algebra::scalar::{self, Scalar};
use crate::apolarity::quadric::apolar_piece;
use crate::apolarity::Quadric;
use crate::error::{Error, Result};
use crate::grobner::ideal::times_linear;
use crate::vps::points::vanishing_piece;

use super::plucker::{plucker, PluckerVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ruling {
    First,
    Second,
}

impl Ruling {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Ruling::First),
            "2" => Ok(Ruling::Second),
            _ => Err(Error::domain(format!("ruling must be 1 or 2, got {s:?}"))),
        }
    }
}

/// Is `q` a multiple of `y1y4 + y2y3`?
fn is_standard_split(q: &Quadric) -> bool {
    if q.nvars() != 4 {
        return false;
    }
    let std = Form::parse("y1*y4 + y2*y3", q.ring(), 4).unwrap();
    let c = q.form().coeff(&crate::algebra::mono::Mono::new(vec![1, 0, 0, 1]));
    !c.is_zero() && std.scale(&c) == *q.form()
}

/// Two points spanning the ruling line with parameter `[a:b]`.
pub fn ruling_line(ruling: Ruling, (a, b): (Scalar, Scalar)) -> [Vec<Scalar>; 2] {
    let z = scalar::zero();
    match ruling {
        Ruling::First => [vec![a.clone(), z.clone(), b.clone(), z.clone()], vec![z.clone(), -a, z, b]],
        Ruling::Second => [vec![a.clone(), -b.clone(), z.clone(), z.clone()], vec![z.clone(), z, a, b]],
    }
}

/// `(I_L ∩ q^⊥)_2` for the ruling line `L_{[a:b]}` of `Q^{-1}`.
pub fn ruling_curve(q: &Quadric, ruling: Ruling, param: (Scalar, Scalar)) -> Result<PluckerVec> {
    if !is_standard_split(q) {
        return Err(Error::UnsupportedQuadric(
            "ruling curves are implemented for multiples of y1*y4 + y2*y3".into(),
        ));
    }
    if param.0.is_zero() && param.1.is_zero() {
        return Err(Error::domain("parameter [0:0]"));
    }
    let pts = ruling_line(ruling, param);
    let l1 = vanishing_piece(&pts, 4, 1);
    let l2 = times_linear(&l1, 4, 1);
    let ambient = apolar_piece(q.form(), 2);
    let v = l2.intersect(&ambient);
    if v.dim() != 6 {
        return Err(Error::domain(format!("(I_L ∩ q^⊥)_2 has dimension {}", v.dim())));
    }
    plucker(&v, &ambient)
}

fn powers(a: &Scalar, b: &Scalar, d: usize) -> Vec<Scalar> {
    (0..=d)
        .map(|k| num_traits::pow(a.clone(), d - k) * num_traits::pow(b.clone(), k))
        .collect()
}

/// Least `d` such that `[a:b] ↦ P` is given by binary forms of degree `d`,
/// with at least two samples beyond the `d + 1` needed to interpolate.
pub fn fit_rnc_degree(samples: &[((Scalar, Scalar), PluckerVec)]) -> Result<usize> {
    let n = samples.len();
    if n < 3 {
        return Err(Error::domain("need at least three samples"));
    }
    let len = samples[0].1.coords.len();
    // a random linear form in the coordinates, nonzero at every sample
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let ell = (0..32)
        .map(|_| (0..len).map(|_| scalar::int(rng.gen_range(-9..=9))).collect::<Vec<_>>())
        .find(|r| {
            samples.iter().all(|(_, p)| !p.coords.iter().zip(r).fold(scalar::zero(), |acc, (x, y)| acc + x * y).is_zero())
        })
        .ok_or_else(|| Error::domain("no denominator is nonzero at every sample"))?;
    let ratios: Vec<Vec<Scalar>> = samples
        .iter()
        .map(|(_, p)| {
            let den: Scalar = p.coords.iter().zip(&ell).fold(scalar::zero(), |acc, (x, y)| acc + x * y);
            p.coords.iter().map(|c| c / &den).collect()
        })
        .collect();
    let max_d = 12.min(n - 3);
    for d in 0..=max_d {
        let e: Vec<Vec<Scalar>> = samples.iter().map(|((a, b), _)| powers(a, b, d)).collect();
        let e_rows: Vec<SVec> = (0..n).map(|i| sparse_from_dense(&e[i])).collect();
        let ys = left_kernel(&e_rows, d + 1);
        let mut cons: Vec<SVec> = Vec::new();
        for j in 0..len {
            for y in &ys {
                let mut row = vec![scalar::zero(); d + 1];
                for (i, yi) in y {
                    let f = yi * &ratios[*i][j];
                    if f.is_zero() {
                        continue;
                    }
                    for (k, x) in row.iter_mut().enumerate() {
                        *x += &f * &e[*i][k];
                    }
                }
                let r = sparse_from_dense(&row);
                if !r.is_empty() {
                    cons.push(r);
                }
            }
        }
        let ker = right_kernel(&cons, d + 1);
        if ker.is_empty() {
            continue;
        }
        // a denominator form nonvanishing at the samples
        for _ in 0..16 {
            let c: Vec<Scalar> = (0..=d).map(|_| scalar::zero()).collect();
            let mut c = c;
            for v in &ker {
                let t = scalar::int(rng.gen_range(-5..=5));
                for (k, x) in v {
                    c[*k] += &t * x;
                }
            }
            let ok = e.iter().all(|row| !row.iter().zip(&c).fold(scalar::zero(), |acc, (x, y)| acc + x * y).is_zero());
            if ok {
                return Ok(d);
            }
        }
    }
    Err(Error::NotPolynomialMap { max_degree: max_d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use crate::grassmann::plucker::plucker_of_rows;
    use crate::algebra::form::Ring;

    fn q() -> Quadric {
        Quadric::parse("y1*y4 + y2*y3", Ring::T, 4).unwrap()
    }

    #[test]
    fn ruling_lines_lie_on_the_inverse_quadric() {
        let qi = q().inverse().unwrap();
        for r in [Ruling::First, Ruling::Second] {
            for t in -2..3 {
                let [u, v] = ruling_line(r, (int(1), int(t)));
                let space = crate::algebra::linalg::Subspace::span_dense(4, &[u, v]);
                assert!(crate::apolarity::line_in_inverse_quadric(&space, &q()).unwrap());
                let _ = &qi;
            }
        }
    }

    #[test]
    fn coordinate_ruling_line_gives_the_special_point() {
        let p = ruling_curve(&q(), Ruling::First, (int(1), int(0))).unwrap();
        let i = crate::grobner::GradedIdeal::parse(
            Ring::S,
            4,
            &["x1*x3", "x2*x3 - x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"],
        )
        .unwrap();
        assert_eq!(p, plucker(&i.piece(2), &apolar_piece(q().form(), 2)).unwrap());
    }

    #[test]
    fn non_split_is_unsupported() {
        let s = Quadric::sum_of_squares(Ring::T, 4);
        assert!(matches!(ruling_curve(&s, Ruling::First, (int(1), int(0))), Err(Error::UnsupportedQuadric(_))));
    }

    #[test]
    fn lines_and_constants() {
        // pencil span(e0 + t e2, e1) in k^4: linear in t
        let line: Vec<_> = (0..6)
            .map(|t| {
                let rows = vec![vec![int(1), int(0), int(t), int(0)], vec![int(0), int(1), int(0), int(0)]];
                ((int(1), int(t)), plucker_of_rows(&rows, 4).unwrap())
            })
            .collect();
        assert_eq!(fit_rnc_degree(&line).unwrap(), 1);
        let constant: Vec<_> = (0..6).map(|t| ((int(1), int(t)), line[0].1.clone())).collect();
        assert_eq!(fit_rnc_degree(&constant).unwrap(), 0);
    }
}
