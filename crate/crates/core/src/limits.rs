//! One-parameter torus actions `x_i ↦ λ^{w_i} x_i` and flat limits at
//! `λ → 0`, taken degree by degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::{left_kernel, SVec, Subspace};
use crate::algebra::mono::{dim_graded, mono_basis, Mono};
use crate::algebra::scalar::{self, Scalar};
use crate::apolarity::quadric::apolar_piece;
use crate::apolarity::Quadric;
use crate::error::{Error, Result};
use crate::grobner::ideal::times_linear;
use crate::grobner::GradedIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn new(w: Vec<i64>) -> Self {
        WeightVec(w)
    }

    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    /// Ideal weights for the action `t∘[y] = [t^{a_1} y_1 : …]` on points.
    /// Substituting `x ↦ λ^w x` moves `V(I)` by `λ^{-w}`, hence the sign.
    pub fn from_point_action(a: &[i64]) -> Self {
        WeightVec(a.iter().map(|x| -x).collect())
    }

    pub fn negated(&self) -> Self {
        WeightVec(self.0.iter().map(|x| -x).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn of(&self, m: &Mono) -> i64 {
        m.weight(&self.0)
    }

    /// The common weight of all terms of `f`, if there is one.
    pub fn semi_invariant_weight(&self, f: &Form) -> Option<i64> {
        let mut ws = f.terms().map(|(m, _)| self.of(m));
        let first = ws.next()?;
        ws.all(|x| x == first).then_some(first)
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::domain(format!("bad weight {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(WeightVec)
    }
}

/// Polynomial in `λ` (exponent → coefficient); negative exponents never
/// occur after normalization.
type LPoly = BTreeMap<i64, Scalar>;
/// Column index → entry.
type LVec = BTreeMap<usize, LPoly>;

/// A form whose term `c·x^m` carries the factor `λ^{e}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentForm {
    pub n: usize,
    pub degree: u32,
    pub terms: BTreeMap<Mono, (Scalar, i64)>,
}

impl LaurentForm {
    fn act(f: &Form, w: &WeightVec) -> Self {
        let terms = f.terms().map(|(m, c)| (m.clone(), (c.clone(), w.of(m)))).collect();
        LaurentForm { n: f.nvars(), degree: f.degree(), terms }
    }

    pub fn min_power(&self) -> i64 {
        self.terms.values().map(|(_, e)| *e).min().unwrap_or(0)
    }

    fn shifted(&self, s: i64) -> Self {
        let terms = self.terms.iter().map(|(m, (c, e))| (m.clone(), (c.clone(), e - s))).collect();
        LaurentForm { terms, ..self.clone() }
    }

    pub fn eval(&self, lambda: &Scalar) -> Form {
        let mut f = Form::zero(Ring::S, self.n, self.degree);
        for (m, (c, e)) in &self.terms {
            let p = if *e >= 0 { pow(lambda, *e as u32) } else { scalar::one() / pow(lambda, (-e) as u32) };
            f = f.add(&Form::monomial(Ring::S, c * p, m.clone())).unwrap();
        }
        f
    }
}

fn pow(x: &Scalar, e: u32) -> Scalar {
    num_traits::pow(x.clone(), e as usize)
}

impl fmt::Display for LaurentForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // group terms by λ-power, lowest first
        let mut groups: BTreeMap<i64, Vec<(Scalar, Mono)>> = BTreeMap::new();
        for (m, (c, e)) in &self.terms {
            groups.entry(*e).or_default().push((c.clone(), m.clone()));
        }
        let parts: Vec<String> = groups
            .into_iter()
            .map(|(e, ts)| {
                let form = Form::from_terms(Ring::S, self.n, self.degree, ts).unwrap();
                match e {
                    0 => format!("{form}"),
                    1 => format!("λ*({form})"),
                    _ => format!("λ^{e}*({form})"),
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `I(λ)`: the ideal transported by the torus, generators normalized by
/// their lowest `λ`-power.
#[derive(Clone, Debug)]
pub struct LaurentFamily {
    pub base: GradedIdeal,
    pub weights: WeightVec,
    /// Generators before normalization.
    pub raw: Vec<LaurentForm>,
    pub generators: Vec<LaurentForm>,
}

impl LaurentFamily {
    /// The fiber at `λ ≠ 0`.
    pub fn fiber(&self, lambda: &Scalar) -> Result<GradedIdeal> {
        if lambda.is_zero() {
            return Err(Error::domain("the fiber at λ = 0 is the limit, use weight_limit"));
        }
        GradedIdeal::new(Ring::S, self.base.nvars(), self.generators.iter().map(|g| g.eval(lambda)).collect())
    }
}

pub fn act_torus(ideal: &GradedIdeal, w: &WeightVec) -> Result<LaurentFamily> {
    if w.len() != ideal.nvars() || ideal.ring() != Ring::S {
        return Err(Error::domain("weight vector length must match the number of variables of S"));
    }
    let raw: Vec<LaurentForm> = ideal.generators().iter().map(|g| LaurentForm::act(g, w)).collect();
    let generators = raw.iter().map(|g| g.shifted(g.min_power())).collect();
    Ok(LaurentFamily { base: ideal.clone(), weights: w.clone(), raw, generators })
}

fn lvec_from(row: &SVec, weights: &[i64]) -> LVec {
    row.iter().map(|(j, c)| (*j, LPoly::from([(weights[*j], c.clone())]))).collect()
}

fn order(v: &LVec) -> Option<i64> {
    v.values().filter_map(|p| p.keys().next().copied()).min()
}

fn shift(v: &LVec, s: i64) -> LVec {
    v.iter().map(|(j, p)| (*j, p.iter().map(|(e, c)| (e - s, c.clone())).collect())).collect()
}

fn at_zero(v: &LVec) -> SVec {
    v.iter().filter_map(|(j, p)| p.get(&0).map(|c| (*j, c.clone()))).collect()
}

fn combine(vs: &[LVec], coeffs: &SVec) -> LVec {
    let mut out = LVec::new();
    for (k, a) in coeffs {
        for (j, p) in &vs[*k] {
            let e = out.entry(*j).or_default();
            for (pw, c) in p {
                let slot = e.entry(*pw).or_insert_with(scalar::zero);
                *slot += a * c;
                if slot.is_zero() {
                    e.remove(pw);
                }
            }
        }
    }
    out.retain(|_, p| !p.is_empty());
    out
}

/// The limit at `λ → 0` of the subspace `λ^w·V` of `S_d`: repeatedly set
/// `λ = 0`, and whenever the rank drops replace a vector by the
/// dependent combination divided by its `λ`-order.
pub fn limit_piece(space: &Subspace, w: &WeightVec, d: u32) -> Subspace {
    let n = w.len();
    let basis = mono_basis(n, d);
    let weights: Vec<i64> = basis.monos().iter().map(|m| w.of(m)).collect();
    let mut vs: Vec<LVec> = space
        .basis()
        .iter()
        .map(|r| {
            let v = lvec_from(r, &weights);
            let o = order(&v).unwrap_or(0);
            shift(&v, o)
        })
        .collect();
    let ncols = dim_graded(n, d);
    loop {
        let evals: Vec<SVec> = vs.iter().map(at_zero).collect();
        let ker = left_kernel(&evals, ncols);
        let Some(a) = ker.first() else {
            return Subspace::span(ncols, &evals);
        };
        let j = a.last().map(|(k, _)| *k).unwrap();
        let u = combine(&vs, a);
        let o = order(&u).expect("independent over k(λ)");
        debug_assert!(o > 0);
        vs[j] = shift(&u, o);
    }
}

/// Degreewise limit of `I(λ)` at `λ → 0`, for `d ≤ d_max` (default: the
/// determinacy bound).
pub fn weight_limit(ideal: &GradedIdeal, w: &WeightVec, d_max: Option<u32>) -> Result<GradedIdeal> {
    if w.len() != ideal.nvars() {
        return Err(Error::domain("weight vector length must match the number of variables"));
    }
    let n = ideal.nvars();
    let d_max = d_max.unwrap_or_else(|| ideal.determinacy_bound());
    let pieces: Vec<Subspace> = (0..=d_max).map(|d| limit_piece(&ideal.piece(d), w, d)).collect();
    for d in 1..=d_max as usize {
        let up = times_linear(&pieces[d - 1], n, d as u32 - 1);
        assert!(pieces[d].contains_space(&up), "limit pieces are not closed under S_1 in degree {d}");
    }
    Ok(GradedIdeal::from_degreewise(Ring::S, n, d_max, |d| pieces[d as usize].clone()).minimalized())
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    /// Weight by which `q` scales.
    pub q_weight: i64,
    pub apolar_before: bool,
    pub apolar_after: bool,
}

fn apolar_upto(ideal: &GradedIdeal, q: &Quadric) -> bool {
    (1..=2).all(|d| apolar_piece(q.form(), d).contains_space(&ideal.piece(d)))
}

/// Degenerate an ideal along a torus under which `q` is semi-invariant.
pub fn degenerate_on_quadric(
    ideal: &GradedIdeal,
    q: &Quadric,
    w: &WeightVec,
    d_max: Option<u32>,
) -> Result<(GradedIdeal, InvarianceReport)> {
    let q_weight = w
        .semi_invariant_weight(q.form())
        .ok_or_else(|| Error::domain("the quadric is not semi-invariant for these weights"))?;
    let lim = weight_limit(ideal, w, d_max)?;
    let report = InvarianceReport { q_weight, apolar_before: apolar_upto(ideal, q), apolar_after: apolar_upto(&lim, q) };
    Ok((lim, report))
}

/// Limit of a point `p` under the point action `t^{a}` at `t → 0`.
pub fn point_limit(p: &[Scalar], point_action: &[i64]) -> Vec<Scalar> {
    let lo = p
        .iter()
        .zip(point_action)
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, a)| *a)
        .min()
        .unwrap_or(0);
    p.iter()
        .zip(point_action)
        .map(|(c, a)| if *a == lo { c.clone() } else { scalar::zero() })
        .collect()
}

/// The lowest-weight part of a form.
pub fn initial_form(f: &Form, w: &WeightVec) -> Form {
    let Some(lo) = f.terms().map(|(m, _)| w.of(m)).min() else { return f.clone() };
    let terms: Vec<(Scalar, Mono)> =
        f.terms().filter(|(m, _)| w.of(m) == lo).map(|(m, c)| (c.clone(), m.clone())).collect();
    Form::from_terms(f.ring(), f.nvars(), f.degree(), terms).unwrap()
}
