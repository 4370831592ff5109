//! Sparse polynomials (not necessarily homogeneous) kept sorted by a
//! monomial order, used internally by Buchberger's algorithm.

use num_traits::{One, Zero};

use crate::algebra::form::{Form, Ring};
use crate::algebra::mono::{Mono, MonoOrder};
use crate::algebra::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    /// Terms in strictly decreasing order.
    pub terms: Vec<(Mono, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn from_terms(mut terms: Vec<(Mono, Scalar)>, order: &MonoOrder) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Mono, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Poly { terms: merged }
    }

    pub fn from_form(f: &Form, order: &MonoOrder) -> Self {
        Poly::from_terms(f.terms().map(|(m, c)| (m.clone(), c.clone())).collect(), order)
    }

    /// Prepend `k` extra variables (with exponent zero) to every monomial.
    pub fn lift(f: &Form, k: usize, order: &MonoOrder) -> Self {
        let terms = f
            .terms()
            .map(|(m, c)| {
                let mut e = vec![0; k];
                e.extend_from_slice(m.exps());
                (Mono::new(e), c.clone())
            })
            .collect();
        Poly::from_terms(terms, order)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Scalar {
        &self.terms[0].1
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.lc().is_one() {
            return self.clone();
        }
        let inv = self.lc().recip();
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * &inv)).collect() }
    }

    /// `self - c · m · other`, all sorted by `order`.
    pub fn sub_mul(&self, c: &Scalar, m: &Mono, other: &Poly, order: &MonoOrder) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let shifted = other.terms.iter().map(|(a, b)| (a.mul(m), -(b * c)));
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().unwrap(),
                (None, Some(_)) => b.next().unwrap(),
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    std::cmp::Ordering::Greater => a.next().unwrap(),
                    std::cmp::Ordering::Less => b.next().unwrap(),
                    std::cmp::Ordering::Equal => {
                        let (m, c1) = a.next().unwrap();
                        let (_, c2) = b.next().unwrap();
                        (m, c1 + c2)
                    }
                },
            };
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        Poly { terms: out }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Convert back to a form, dropping the first `skip` variables (which
    /// must have exponent zero).
    pub fn to_form(&self, ring: Ring, n: usize, skip: usize) -> Option<Form> {
        let degree = self.terms.first().map_or(0, |(m, _)| m.exps()[skip..].iter().sum());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.exps()[..skip].iter().any(|&e| e != 0) {
                return None;
            }
            terms.push((c.clone(), Mono::new(m.exps()[skip..].to_vec())));
        }
        Form::from_terms(ring, n, degree, terms).ok()
    }
}
