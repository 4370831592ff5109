//! Degree-zero tangent spaces: `Hom_S(I, S/I)_0` for the Hilbert scheme
//! and `Hom_S((V) + S_{≥4}, A/((V) + S_{≥4}))_0` for the syzygetic locus.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::{left_kernel, Echelon, SVec, Subspace};
use crate::algebra::mono::{binomial, dim_graded, mono_basis};
use crate::apolarity::quadric::apolar_piece;
use crate::apolarity::Quadric;
use crate::error::{Error, Result};
use crate::grobner::ideal::times_linear;
use crate::grobner::syzygy::{linear_syzygies, syzygies_in_degree};
use crate::grobner::GradedIdeal;
use crate::limits::WeightVec;

#[derive(Clone, Debug, Serialize)]
pub struct TangentReport {
    pub dimension: usize,
    /// Each tangent vector as the images of the generators, rendered.
    pub basis: Vec<Vec<String>>,
    pub weights: Option<Vec<i64>>,
    pub truncation_degree: u32,
}

/// Where the degree-2 images live.
#[derive(Clone, Debug)]
pub enum SyzTarget {
    /// `S_2 / V`.
    Full,
    /// `q^⊥_2 / V`.
    Apolar(Quadric),
}

/// Preset weights: the standard torus of the `SL_2` acting on
/// `k[x1..x4]` by `x1, x2 ↦ t·x1, t·x2` and `x3, x4 ↦ t^{-1}·x3, t^{-1}·x4`.
pub fn sl2_n4_torus() -> WeightVec {
    WeightVec::new(vec![1, 1, -1, -1])
}

/// Split a subspace of `S_d` into weight spaces; `None` if it is not
/// spanned by weight vectors.
pub fn weight_decomposition(space: &Subspace, d: u32, w: &WeightVec) -> Option<BTreeMap<i64, Subspace>> {
    let n = w.len();
    let basis = mono_basis(n, d);
    let mut by_weight: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (j, m) in basis.monos().iter().enumerate() {
        by_weight.entry(w.of(m)).or_default().push(j);
    }
    let ambient = dim_graded(n, d);
    let mut out = BTreeMap::new();
    let mut total = 0;
    for (k, cols) in by_weight {
        let coord = Subspace::span(ambient, &cols.iter().map(|&j| vec![(j, crate::algebra::scalar::one())]).collect::<Vec<_>>());
        let part = space.intersect(&coord);
        total += part.dim();
        if part.dim() > 0 {
            out.insert(k, part);
        }
    }
    (total == space.dim()).then_some(out)
}

/// Weight multiset of a subspace of `S_d`, e.g. of `I_2`.
pub fn torus_weights(space: &Subspace, d: u32, w: &WeightVec) -> Result<Vec<i64>> {
    let parts = weight_decomposition(space, d, w).ok_or_else(|| Error::domain("the subspace is not torus-fixed"))?;
    Ok(parts.iter().flat_map(|(k, p)| std::iter::repeat_n(*k, p.dim())).collect())
}

/// Basis vectors of `space`, each a weight vector when `w` is given.
fn homogeneous_basis(space: &Subspace, d: u32, w: Option<&WeightVec>) -> Result<Vec<(SVec, i64)>> {
    match w {
        None => Ok(space.basis().iter().map(|r| (r.clone(), 0)).collect()),
        Some(w) => {
            let parts =
                weight_decomposition(space, d, w).ok_or_else(|| Error::domain("the point is not fixed by the torus"))?;
            Ok(parts.into_iter().flat_map(|(k, p)| p.basis().iter().map(move |r| (r.clone(), k)).collect::<Vec<_>>()).collect())
        }
    }
}

/// Monomials (by index) completing `sub` to `ambient_space`, both weight
/// graded; returned with their weights.
fn complement(ambient_space: &Subspace, sub: &Subspace, d: u32, w: Option<&WeightVec>) -> Result<Vec<(SVec, i64)>> {
    // work weight by weight so the complement is spanned by weight vectors
    let amb = homogeneous_basis(ambient_space, d, w)?;
    let mut e = Echelon::from_rows(sub.basis().iter());
    let mut out = Vec::new();
    for (v, k) in amb {
        if e.insert(v.clone()) {
            out.push((v, k));
        }
    }
    Ok(out)
}

/// The kernel of the constraint system, split by weight when every
/// unknown carries one.
fn solve(images: &[Vec<SVec>], weights: &[i64], ncols: usize, weighted: bool) -> (Vec<SVec>, Option<Vec<i64>>) {
    // images[u] = concatenated constraint values of unknown u
    let rows: Vec<SVec> = images.iter().map(|parts| concat(parts, ncols)).collect();
    let total = parts_len(images) * ncols;
    if !weighted {
        return (left_kernel(&rows, total), None);
    }
    let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (u, k) in weights.iter().enumerate() {
        classes.entry(*k).or_default().push(u);
    }
    let mut kernel = Vec::new();
    let mut ws = Vec::new();
    for (k, us) in classes {
        let sub: Vec<SVec> = us.iter().map(|&u| rows[u].clone()).collect();
        for v in left_kernel(&sub, total) {
            kernel.push(v.into_iter().map(|(i, c)| (us[i], c)).collect());
            ws.push(k);
        }
    }
    (kernel, Some(ws))
}

fn parts_len(images: &[Vec<SVec>]) -> usize {
    images.first().map_or(0, Vec::len)
}

fn concat(parts: &[SVec], ncols: usize) -> SVec {
    parts.iter().enumerate().flat_map(|(s, p)| p.iter().map(move |(j, c)| (s * ncols + j, c.clone()))).collect()
}

fn render(kernel: &[SVec], unknowns: &[(usize, SVec)], ngens: usize, n: usize, degs: &[u32]) -> Vec<Vec<String>> {
    kernel
        .iter()
        .map(|v| {
            let mut imgs: Vec<Form> = (0..ngens).map(|i| Form::zero(Ring::S, n, degs[i])).collect();
            for (u, c) in v {
                let (i, t) = &unknowns[*u];
                imgs[*i] = imgs[*i].add(&Form::from_sparse(Ring::S, n, degs[*i], t).scale(c)).unwrap();
            }
            imgs.iter().map(|f| f.to_string()).collect()
        })
        .collect()
}

/// Tangent space to the syzygetic locus at `[V]`, `V ⊂ S_2`.
pub fn syz_tangent(v: &Subspace, n: usize, target: &SyzTarget, torus: Option<&WeightVec>) -> Result<TangentReport> {
    if v.ambient() != dim_graded(n, 2) {
        return Err(Error::domain("V must be a subspace of S_2"));
    }
    let v3 = times_linear(v, n, 2);
    let h3 = dim_graded(n, 3) - v3.dim();
    if h3 != n {
        return Err(Error::domain(format!("H_{{S/(V)}}(3) = {h3}, expected {n}")));
    }
    let a2 = match target {
        SyzTarget::Full => Subspace::full(dim_graded(n, 2)),
        SyzTarget::Apolar(q) => {
            let p = apolar_piece(q.form(), 2);
            if !p.contains_space(v) {
                return Err(Error::domain("V is not contained in q^⊥"));
            }
            p
        }
    };
    let gens = homogeneous_basis(v, 2, torus)?;
    let targets = complement(&a2, v, 2, torus)?;
    let gen_forms: Vec<Form> = gens.iter().map(|(r, _)| Form::from_sparse(Ring::S, n, 2, r)).collect();
    let syz = if gen_forms.is_empty() { Vec::new() } else { linear_syzygies(&gen_forms)? };
    let red = Echelon::from_rows(v3.basis().iter());
    let ncols = dim_graded(n, 3);
    let mut unknowns = Vec::new();
    let mut images = Vec::new();
    let mut weights = Vec::new();
    for (i, (_, wi)) in gens.iter().enumerate() {
        for (t, wt) in &targets {
            let tf = Form::from_sparse(Ring::S, n, 2, t);
            let parts: Vec<SVec> =
                syz.iter().map(|s| red.reduce_full(s[i].mul(&tf).unwrap().to_sparse())).collect();
            images.push(parts);
            unknowns.push((i, t.clone()));
            weights.push(wt - wi);
        }
    }
    let (kernel, ws) = if syz.is_empty() {
        let k: Vec<SVec> = (0..unknowns.len()).map(|u| vec![(u, crate::algebra::scalar::one())]).collect();
        (k, torus.map(|_| weights.clone()))
    } else {
        solve(&images, &weights, ncols, torus.is_some())
    };
    let degs = vec![2; gens.len()];
    Ok(TangentReport {
        dimension: kernel.len(),
        basis: render(&kernel, &unknowns, gens.len(), n, &degs),
        weights: ws,
        truncation_degree: 3,
    })
}

/// Constraint images of every unknown for all syzygies of total degree `e`.
fn hilb_constraints(
    gens: &[Form],
    unknowns: &[(usize, SVec)],
    ideal: &GradedIdeal,
    e: u32,
) -> Vec<SVec> {
    let n = ideal.nvars();
    let syz = syzygies_in_degree(gens, e);
    let red = Echelon::from_rows(ideal.piece(e).basis().iter());
    let ncols = dim_graded(n, e);
    // constraint rows live in the (small) space of unknowns
    let mut acc = Echelon::new();
    for s in &syz {
        let imgs: Vec<SVec> = unknowns
            .iter()
            .map(|(i, t)| {
                if s[*i].is_zero() {
                    return Vec::new();
                }
                let tf = Form::from_sparse(Ring::S, n, gens[*i].degree(), t);
                red.reduce_full(s[*i].mul(&tf).unwrap().to_sparse())
            })
            .collect();
        // transpose: one functional per coordinate of S_e/I_e
        let mut by_coord: BTreeMap<usize, SVec> = BTreeMap::new();
        for (u, img) in imgs.iter().enumerate() {
            for (j, c) in img {
                by_coord.entry(*j).or_default().push((u, c.clone()));
            }
        }
        for (_, row) in by_coord {
            acc.insert(row);
        }
        let _ = ncols;
    }
    acc.to_rref()
}

/// `Hom_S(I, S/I)_0`, truncated at the first degree `D` where the
/// syzygy constraints up to `D` and `D + 1` cut out the same space.
pub fn hilb_tangent(ideal: &GradedIdeal, torus: Option<&WeightVec>) -> Result<TangentReport> {
    let n = ideal.nvars();
    let top = ideal.max_gen_degree();
    let h = ideal.hilbert_function(ideal.determinacy_bound());
    if !h.is_one_n_n(n) {
        return Err(Error::domain(format!("Hilbert function {h} is not (1,{n},{n},…)")));
    }
    let gens: Vec<Form> = ideal.minimal_generators(ideal.determinacy_bound());
    if let Some(w) = torus {
        if gens.iter().any(|g| w.semi_invariant_weight(g).is_none()) {
            return Err(Error::domain("the ideal is not fixed by the torus"));
        }
    }
    let mut unknowns: Vec<(usize, SVec)> = Vec::new();
    let mut weights = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let d = g.degree();
        let gw = torus.map_or(0, |w| w.semi_invariant_weight(g).unwrap());
        let std = complement(&Subspace::full(dim_graded(n, d)), &ideal.piece(d), d, torus)?;
        for (t, wt) in std {
            unknowns.push((i, t));
            weights.push(wt - gw);
        }
    }
    let nu = unknowns.len();
    let cap = 2 * top + 4;
    let mut constraints = Echelon::new();
    let mut prev: Option<usize> = None;
    let min_deg = gens.iter().map(Form::degree).min().unwrap_or(1);
    for e in (min_deg + 1)..=cap {
        for r in hilb_constraints(&gens, &unknowns, ideal, e) {
            constraints.insert(r);
        }
        let dim = nu - constraints.rank();
        if e > top && prev == Some(dim) {
            let rows = constraints.to_rref();
            let (kernel, ws) = kernel_by_weight(&rows, nu, torus.map(|_| weights.as_slice()));
            let degs: Vec<u32> = gens.iter().map(Form::degree).collect();
            return Ok(TangentReport {
                dimension: kernel.len(),
                basis: render(&kernel, &unknowns, gens.len(), n, &degs),
                weights: ws,
                truncation_degree: e - 1,
            });
        }
        prev = Some(dim);
    }
    Err(Error::Unstable(format!("tangent dimension did not stabilize by degree {cap}")))
}

/// Right kernel of the constraint rows (functionals on unknowns).
fn kernel_by_weight(rows: &[SVec], nu: usize, weights: Option<&[i64]>) -> (Vec<SVec>, Option<Vec<i64>>) {
    let all = crate::algebra::linalg::right_kernel(rows, nu);
    let Some(ws) = weights else { return (all, None) };
    let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (u, k) in ws.iter().enumerate() {
        classes.entry(*k).or_default().push(u);
    }
    let mut kernel = Vec::new();
    let mut out = Vec::new();
    for (k, us) in classes {
        let pos: BTreeMap<usize, usize> = us.iter().enumerate().map(|(a, &u)| (u, a)).collect();
        // restrict functionals to this weight class
        let sub: Vec<SVec> = rows
            .iter()
            .map(|r| r.iter().filter_map(|(u, c)| pos.get(u).map(|a| (*a, c.clone()))).collect::<SVec>())
            .filter(|r| !r.is_empty())
            .collect();
        for v in crate::algebra::linalg::right_kernel(&sub, us.len()) {
            kernel.push(v.into_iter().map(|(a, c)| (us[a], c)).collect());
            out.push(k);
        }
    }
    (kernel, Some(out))
}

/// Check that the given generator images satisfy every syzygy
/// constraint up to degree `d_max`.
pub fn is_tangent_vector(ideal: &GradedIdeal, images: &[Form], d_max: u32) -> bool {
    let gens = ideal.generators();
    if images.len() != gens.len() {
        return false;
    }
    for e in 1..=d_max {
        let piece = ideal.piece(e);
        for s in syzygies_in_degree(gens, e) {
            let mut acc = Form::zero(Ring::S, ideal.nvars(), e);
            for (a, img) in s.iter().zip(images) {
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(img).unwrap()).unwrap();
            }
            if !piece.contains(&acc.to_sparse()) {
                return false;
            }
        }
    }
    true
}

/// `(n−1)n − (2n−4) + C(n,2) + 1`.
pub fn unsaturated_tangent_bound(n: u64) -> u64 {
    (n - 1) * n - (2 * n - 4) + binomial(n, 2) + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcessArithmetic {
    pub per_curve: i64,
    pub base: i64,
    pub total: i64,
}

/// `6(H·C) − c1(N_C)` per curve, and `310 + 2·that`.
pub fn excess_degree_arithmetic(hc: i64, c1n: i64) -> ExcessArithmetic {
    let per_curve = 6 * hc - c1n;
    ExcessArithmetic { per_curve, base: 310, total: 310 + 2 * per_curve }
}

/// `c1` of a split bundle `⊕ O(a_i)` on `P^1`.
pub fn c1_split(degrees: &[i64]) -> i64 {
    degrees.iter().sum()
}

/// Fano index `a` from adjunction on a rational curve:
/// `−2 = deg K_C = −a·(H·C) + c1(N_C)`.
pub fn fano_index_from_adjunction(hc: i64, c1n: i64) -> Option<i64> {
    ((c1n + 2) % hc == 0).then_some((c1n + 2) / hc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        assert_eq!(excess_degree_arithmetic(6, 10), ExcessArithmetic { per_curve: 26, base: 310, total: 362 });
        assert_eq!(c1_split(&[2; 5]), 10);
        assert_eq!(fano_index_from_adjunction(6, 10), Some(2));
        assert_eq!(unsaturated_tangent_bound(4), 15);
    }

    #[test]
    fn degree_two_weights() {
        let i = GradedIdeal::parse(Ring::S, 4, &["x1*x3", "x2*x3 - x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"]).unwrap();
        let mut w = torus_weights(&i.piece(2), 2, &sl2_n4_torus()).unwrap();
        w.sort();
        assert_eq!(w, vec![-2, -2, -2, 0, 0, 0]);
        assert!(torus_weights(&i.piece(2), 2, &WeightVec::new(vec![1, 0, 0, 0])).is_err());
    }
}
