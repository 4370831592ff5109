//! Colon ideals, intersections and saturation.

use crate::algebra::form::Form;
use crate::algebra::linalg::{left_kernel, SVec, Subspace};
use crate::algebra::mono::{dim_graded, mono_basis, Mono, MonoOrder};
use crate::algebra::scalar;

use super::buchberger::groebner;
use super::ideal::{mul_var, GradedIdeal};
use super::poly::Poly;

/// Generators of `I : x_i^∞`. A grevlex basis with `x_i` last has the
/// property that dividing each element by its largest power of `x_i`
/// yields a basis of the colon ideal.
pub fn colon_var_inf(ideal: &GradedIdeal, i: usize) -> GradedIdeal {
    let gb = ideal.groebner_with(&MonoOrder::GrevlexLast(i));
    let gens = gb
        .to_forms(ideal.ring(), ideal.nvars())
        .into_iter()
        .map(|f| {
            let k = f.terms().map(|(m, _)| m.exps()[i]).min().unwrap_or(0);
            if k == 0 {
                return f;
            }
            let mut out = Form::zero(f.ring(), f.nvars(), f.degree() - k);
            for (m, c) in f.terms() {
                let mut e = m.exps().to_vec();
                e[i] -= k;
                out.add_term(Mono::new(e), c.clone());
            }
            out
        })
        .collect();
    GradedIdeal::new(ideal.ring(), ideal.nvars(), gens).unwrap()
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect_elim(a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
    let n = a.nvars();
    let order = MonoOrder::Block(1);
    let t = |k: u32| {
        let mut e = vec![k];
        e.extend(std::iter::repeat_n(0, n));
        Mono::new(e)
    };
    let mut polys = Vec::new();
    for f in a.generators() {
        let p = Poly::lift(f, 1, &order);
        polys.push(Poly::zero().sub_mul(&-scalar::one(), &t(1), &p, &order));
    }
    for g in b.generators() {
        let p = Poly::lift(g, 1, &order);
        let tp = Poly::zero().sub_mul(&-scalar::one(), &t(1), &p, &order);
        polys.push(p.sub_mul(&scalar::one(), &t(0), &tp, &order));
    }
    let gb = groebner(&polys, &order);
    let gens = gb
        .polys
        .iter()
        .filter_map(|p| p.to_form(a.ring(), n, 1))
        .collect();
    GradedIdeal::new(a.ring(), n, gens).unwrap()
}

/// `I ∩ J` degree by degree through `d_max`; generators are extracted as
/// the new elements in each degree.
pub fn intersect_ideals(a: &GradedIdeal, b: &GradedIdeal, d_max: u32) -> GradedIdeal {
    GradedIdeal::from_degreewise(a.ring(), a.nvars(), d_max, |d| a.piece(d).intersect(&b.piece(d)))
}

/// `I^sat = ∩_i (I : x_i^∞)`, presented by minimal generators.
pub fn saturate(ideal: &GradedIdeal) -> GradedIdeal {
    let n = ideal.nvars();
    if ideal.generators().is_empty() {
        return ideal.clone();
    }
    let mut acc = colon_var_inf(ideal, 0);
    for i in 1..n {
        let next = colon_var_inf(ideal, i);
        acc = intersect_elim(&acc, &next);
    }
    acc.minimalized()
}

/// `(I_{d+e} : S_e)`, the degree-`d` part of `I : m^e`, by linear algebra
/// alone. For `e` at least the saturation degree this is `(I^sat)_d`.
pub fn saturate_degreewise(ideal: &GradedIdeal, d: u32, e: u32) -> Subspace {
    let n = ideal.nvars();
    // C_k(j) = {f ∈ S_j : f·S_k ⊆ I_{j+k}}, computed by C_k(j) = {f : x_i f ∈ C_{k-1}(j+1)}
    let mut current = (*ideal.piece(d + e)).clone();
    for k in (0..e).rev() {
        let j = d + k;
        let src = dim_graded(n, j);
        let rows: Vec<SVec> = (0..src)
            .map(|m| {
                let unit = vec![(m, scalar::one())];
                let mut row = Vec::new();
                let block = dim_graded(n, j + 1);
                for i in 0..n {
                    let img = current.reduce(&mul_var(&unit, n, j, i));
                    row.extend(img.into_iter().map(|(c, v)| (i * block + c, v)));
                }
                row
            })
            .collect();
        let ker = left_kernel(&rows, n * dim_graded(n, j + 1));
        current = Subspace::span(src, &ker);
    }
    current
}

/// Is `I` saturated? Compares graded pieces with those of `I^sat` through
/// the determinacy bound.
pub fn is_saturated(ideal: &GradedIdeal) -> bool {
    let sat = saturate(ideal);
    let bound = ideal.determinacy_bound().max(sat.determinacy_bound());
    (0..=bound).all(|d| ideal.dim(d) == sat.dim(d))
}

/// Monomials of degree `d` as forms, in grevlex-descending order.
pub fn monomial_forms(ring: crate::algebra::Ring, n: usize, d: u32) -> Vec<Form> {
    mono_basis(n, d)
        .monos()
        .iter()
        .map(|m| Form::monomial(ring, scalar::one(), m.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn saturation_of_x1_times_maximal_ideal() {
        let i = GradedIdeal::parse(Ring::S, 4, &["x1^2", "x1*x2", "x1*x3", "x1*x4"]).unwrap();
        let s = saturate(&i);
        assert_eq!(s.generators().len(), 1);
        assert_eq!(s.generators()[0].to_string(), "x1");
        assert!(!is_saturated(&i));
        assert!(is_saturated(&s));
    }

    #[test]
    fn degreewise_oracle_agrees() {
        let i = GradedIdeal::parse(Ring::S, 4, &["x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^3"]).unwrap();
        let s = saturate(&i);
        for d in 0..4 {
            assert_eq!(saturate_degreewise(&i, d, 4), *s.piece(d), "degree {d}");
        }
    }

    #[test]
    fn intersections_agree() {
        let a = GradedIdeal::parse(Ring::S, 3, &["x1", "x2^2"]).unwrap();
        let b = GradedIdeal::parse(Ring::S, 3, &["x2", "x3^3"]).unwrap();
        let e = intersect_elim(&a, &b);
        let g = intersect_ideals(&a, &b, 6);
        for d in 0..7 {
            assert_eq!(*e.piece(d), *g.piece(d));
            assert_eq!(*e.piece(d), a.piece(d).intersect(&b.piece(d)));
        }
    }
}
