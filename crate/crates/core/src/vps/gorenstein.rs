//! Local Gorenstein test for finite schemes.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::linalg::{left_kernel, Echelon, SVec, Subspace};
use crate::algebra::mono::Mono;
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};
use crate::grobner::{saturate, GradedIdeal};

/// Polynomials in `m` affine variables truncated above total degree `top`.
type Trunc = BTreeMap<Mono, Scalar>;

struct TruncRing {
    m: usize,
    top: u32,
    monos: Vec<Mono>,
    index: BTreeMap<Mono, usize>,
}

impl TruncRing {
    fn new(m: usize, top: u32) -> Self {
        let mut monos = Vec::new();
        for d in 0..=top {
            monos.extend(crate::algebra::mono::mono_basis(m, d).monos().iter().cloned());
        }
        let index = monos.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        TruncRing { m, top, monos, index }
    }

    fn dim(&self) -> usize {
        self.monos.len()
    }

    fn vec(&self, p: &Trunc) -> SVec {
        let mut v: SVec = p
            .iter()
            .filter(|(m, c)| m.degree() <= self.top && !c.is_zero())
            .map(|(m, c)| (self.index[m], c.clone()))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    fn mul(&self, a: &Trunc, b: &Trunc) -> Trunc {
        let mut out = Trunc::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let m = ma.mul(mb);
                if m.degree() > self.top {
                    continue;
                }
                let e = out.entry(m).or_insert_with(Scalar::zero);
                *e += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn times_var(&self, v: &SVec, i: usize) -> SVec {
        let mut out: SVec = v
            .iter()
            .filter_map(|(k, c)| {
                let m = self.monos[*k].mul(&Mono::var(self.m, i));
                (m.degree() <= self.top).then(|| (self.index[&m], c.clone()))
            })
            .collect();
        out.sort_by_key(|e| e.0);
        out
    }
}

/// Socle dimension of the local algebra of `V(ideal)` at `point`.
pub fn local_socle_dimension(ideal: &GradedIdeal, point: &[Scalar]) -> Result<usize> {
    let n = ideal.nvars();
    let sat = saturate(ideal);
    for g in sat.generators() {
        if !g.eval(point).is_zero() {
            return Err(Error::domain("point is not in the support of the scheme"));
        }
    }
    let bound = sat.determinacy_bound() + 2;
    let h = sat.hilbert_function(bound);
    let (length, _) = h
        .eventual()
        .ok_or_else(|| Error::domain("scheme is not zero-dimensional within the determinacy bound"))?;
    let j = point.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::domain("zero point"))?;
    let others: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let m = n - 1;
    // R = k[u]/m^length, polynomials of degree < length
    let ring = TruncRing::new(m, length.saturating_sub(1) as u32);
    // x_j ↦ 1, x_i ↦ u_i + p_i/p_j
    let images: Vec<Trunc> = (0..n)
        .map(|i| {
            let mut t = Trunc::new();
            if i == j {
                t.insert(Mono::one(m), scalar::one());
            } else {
                let k = others.iter().position(|&o| o == i).unwrap();
                t.insert(Mono::var(m, k), scalar::one());
                let c = &point[i] / &point[j];
                if !c.is_zero() {
                    t.insert(Mono::one(m), c);
                }
            }
            t
        })
        .collect();
    let mut e = Echelon::new();
    let mut frontier: Vec<SVec> = Vec::new();
    for g in sat.generators() {
        let mut acc = Trunc::new();
        for (mono, c) in g.terms() {
            let mut t = Trunc::new();
            t.insert(Mono::one(m), c.clone());
            for (i, &ex) in mono.exps().iter().enumerate() {
                for _ in 0..ex {
                    t = ring.mul(&t, &images[i]);
                }
            }
            for (k, v) in t {
                let entry = acc.entry(k).or_insert_with(Scalar::zero);
                *entry += v;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        let v = ring.vec(&acc);
        if e.insert(v.clone()) {
            frontier.push(v);
        }
    }
    // close the span under multiplication by the u_i
    while let Some(v) = frontier.pop() {
        for i in 0..m {
            let w = ring.times_var(&v, i);
            if !w.is_empty() && e.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    let w = Subspace::span(ring.dim(), &e.to_rref());
    // socle: {a : u_i a ∈ W for all i}, modulo W
    let rows: Vec<SVec> = (0..ring.dim())
        .map(|k| {
            let unit = vec![(k, scalar::one())];
            let mut row = SVec::new();
            for i in 0..m {
                let img = w.reduce(&ring.times_var(&unit, i));
                row.extend(img.into_iter().map(|(c, v)| (i * ring.dim() + c, v)));
            }
            row
        })
        .collect();
    let ker = left_kernel(&rows, m * ring.dim());
    Ok(ker.len() - w.dim())
}

/// Is the scheme Gorenstein at `point`? (One-dimensional socle.)
pub fn is_locally_gorenstein(ideal: &GradedIdeal, point: &[Scalar]) -> Result<bool> {
    Ok(local_socle_dimension(ideal, point)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::form::Ring;
    use crate::algebra::scalar::int;

    fn p(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn curvilinear_is_gorenstein() {
        // k[ε]/ε^4 at [1:0:0:0] on the line x3 = x4 = 0
        let i = GradedIdeal::parse(Ring::S, 4, &["x3", "x4", "x2^4"]).unwrap();
        assert_eq!(local_socle_dimension(&i, &p(&[1, 0, 0, 0])).unwrap(), 1);
        assert!(local_socle_dimension(&i, &p(&[0, 1, 0, 0])).is_err());
    }

    #[test]
    fn fat_point_is_not() {
        // k[ε1, ε2]/(ε1^4, ε1ε2, ε2^2) in the plane x3 = x4 = 0 of P^4
        let i = GradedIdeal::parse(Ring::S, 5, &["x3", "x4", "x1*x5", "x5^2", "x1^4"]).unwrap();
        assert_eq!(local_socle_dimension(&i, &p(&[0, 1, 0, 0, 0])).unwrap(), 2);
    }

    #[test]
    fn reduced_points() {
        let i = GradedIdeal::parse(Ring::S, 3, &["x1*x2", "x1*x3", "x2*x3"]).unwrap();
        for k in 0..3 {
            let mut v = p(&[0, 0, 0]);
            v[k] = int(1);
            assert!(is_locally_gorenstein(&i, &v).unwrap());
        }
    }
}
