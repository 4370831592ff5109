//! Buchberger's algorithm with the sugar strategy and both of
//! Buchberger's criteria, producing reduced Gröbner bases.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::form::{Form, Ring};
use crate::algebra::mono::{Mono, MonoOrder};

use super::poly::Poly;

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub order: MonoOrder,
    pub polys: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: u32,
    lcm_deg: u32,
    i: usize,
    j: usize,
}

/// Full reduction of `f` by `basis`.
pub fn reduce(f: &Poly, basis: &[Poly], order: &MonoOrder) -> Poly {
    let mut rem: Vec<(Mono, crate::algebra::Scalar)> = Vec::new();
    let mut p = f.clone();
    'outer: while !p.is_zero() {
        let (lm, lc) = (p.lm().clone(), p.lc().clone());
        for g in basis {
            if let Some(q) = g.lm().quotient_of(&lm) {
                let c = &lc / g.lc();
                p = p.sub_mul(&c, &q, g, order);
                continue 'outer;
            }
        }
        rem.push(p.terms.remove(0));
    }
    Poly { terms: rem }
}

fn spoly(f: &Poly, g: &Poly, order: &MonoOrder) -> Poly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).unwrap();
    let mg = g.lm().quotient_of(&l).unwrap();
    let a = Poly { terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c / f.lc())).collect() };
    let one = crate::algebra::scalar::one();
    a.sub_mul(&(one / g.lc()), &mg, g, order)
}

pub fn groebner(input: &[Poly], order: &MonoOrder) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: Poly, s: u32, basis: &mut Vec<Poly>, sugar: &mut Vec<u32>, queue: &mut BTreeSet<Pair>, pending: &mut HashSet<(usize, usize)>| {
        let h = h.monic();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = g.lm().lcm(h.lm());
            let s_ij = (sugar[i] + l.degree() - g.lm().degree()).max(s + l.degree() - h.lm().degree());
            queue.insert(Pair { sugar: s_ij, lcm_deg: l.degree(), i, j: k });
            pending.insert((i, k));
        }
        basis.push(h);
        sugar.push(s);
    };

    let mut seeds: Vec<Poly> = input.iter().filter(|p| !p.is_zero()).cloned().collect();
    seeds.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(a.lm(), b.lm())));
    for f in seeds {
        let r = reduce(&f, &basis, order);
        if !r.is_zero() {
            let s = f.degree();
            add(r, s, &mut basis, &mut sugar, &mut queue, &mut pending);
        }
    }

    while let Some(pair) = queue.pop_first() {
        pending.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        if fi.lm().is_coprime(fj.lm()) {
            continue;
        }
        let l = fi.lm().lcm(fj.lm());
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm().divides(&l)
                && !pending.contains(&key(pair.i, k))
                && !pending.contains(&key(pair.j, k))
        });
        if chain {
            continue;
        }
        let s = spoly(fi, fj, order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            add(r, pair.sugar, &mut basis, &mut sugar, &mut queue, &mut pending);
        }
    }

    // minimalize and interreduce
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, h)| k != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
        reduced.push(reduce(&minimal[i], &others, order).monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    GroebnerBasis { order: order.clone(), polys: reduced }
}

impl GroebnerBasis {
    /// Gröbner basis of homogeneous forms under `order`.
    pub fn of_forms(gens: &[Form], order: &MonoOrder) -> Self {
        let polys: Vec<Poly> = gens.iter().map(|f| Poly::from_form(f, order)).collect();
        groebner(&polys, order)
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        reduce(f, &self.polys, &self.order)
    }

    pub fn normal_form(&self, f: &Form) -> Form {
        let r = self.reduce(&Poly::from_form(f, &self.order));
        let mut out = Form::zero(f.ring(), f.nvars(), f.degree());
        for (m, c) in r.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn contains(&self, f: &Form) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.polys.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn to_forms(&self, ring: Ring, n: usize) -> Vec<Form> {
        self.polys.iter().filter_map(|p| p.to_form(ring, n, 0)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::form::Ring;

    fn forms(v: &[&str], n: usize) -> Vec<Form> {
        v.iter().map(|t| Form::parse(t, Ring::S, n).unwrap()).collect()
    }

    #[test]
    fn single_variable() {
        let gb = GroebnerBasis::of_forms(&forms(&["x1"], 4), &MonoOrder::Grevlex);
        assert_eq!(gb.to_forms(Ring::S, 4), forms(&["x1"], 4));
    }

    #[test]
    fn membership_via_normal_form() {
        let gens = forms(&["x1*x3", "x2*x3 - x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"], 4);
        let gb = GroebnerBasis::of_forms(&gens, &MonoOrder::Grevlex);
        assert!(gb.contains(&Form::parse("x1^2*x4", Ring::S, 4).unwrap()));
        assert!(!gb.contains(&Form::parse("x2^4", Ring::S, 4).unwrap()));
        let nf = gb.normal_form(&Form::parse("x2*x3", Ring::S, 4).unwrap());
        assert_eq!(nf.to_string(), "x1*x4");
    }

    #[test]
    fn twisted_cubic() {
        let gens = forms(&["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"], 4);
        for order in [MonoOrder::Grevlex, MonoOrder::Lex] {
            let gb = GroebnerBasis::of_forms(&gens, &order);
            for f in &gens {
                assert!(gb.contains(f));
            }
            for (a, b) in gb.polys.iter().zip(gb.polys.iter().skip(1)) {
                assert!(reduce(&spoly(a, b, &order), &gb.polys, &order).is_zero());
            }
        }
    }
}
