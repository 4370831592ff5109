//! Homogeneous ideals with lazily computed graded pieces.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::{Echelon, SVec, Subspace};
use crate::algebra::mono::{dim_graded, mono_basis, MonoOrder};
use crate::error::{Error, Result};

use super::buchberger::GroebnerBasis;
use super::hilbert::HilbFn;

/// `table[k][i]` is the index in `S_{d+1}` of `x_i` times the `k`-th
/// monomial of `S_d`.
pub fn var_mul_table(n: usize, d: u32) -> Arc<Vec<Vec<usize>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<Vec<Vec<usize>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(n, d)) {
        return t.clone();
    }
    let src = mono_basis(n, d);
    let dst = mono_basis(n, d + 1);
    let table: Vec<Vec<usize>> = src
        .monos()
        .iter()
        .map(|m| {
            (0..n)
                .map(|i| {
                    let mut e = m.exps().to_vec();
                    e[i] += 1;
                    dst.index_of(&crate::algebra::Mono::new(e)).unwrap()
                })
                .collect()
        })
        .collect();
    let t = Arc::new(table);
    cache.lock().unwrap().insert((n, d), t.clone());
    t
}

/// Multiply a coordinate vector of `S_d` by `x_i`.
pub fn mul_var(v: &SVec, n: usize, d: u32, i: usize) -> SVec {
    let table = var_mul_table(n, d);
    // x_i preserves the grevlex order of monomials, so indices stay sorted
    v.iter().map(|(k, c)| (table[*k][i], c.clone())).collect()
}

/// Multiply a coordinate vector of `S_d` by a form.
pub fn mul_form(v: &SVec, n: usize, d: u32, f: &Form) -> SVec {
    let g = Form::from_sparse(f.ring(), n, d, v);
    g.mul(f).expect("same ring").to_sparse()
}

/// `S_1 · U` for a subspace `U ⊆ S_d`.
pub fn times_linear(u: &Subspace, n: usize, d: u32) -> Subspace {
    let mut rows = Vec::with_capacity(u.dim() * n);
    for r in u.basis() {
        for i in 0..n {
            rows.push(mul_var(r, n, d, i));
        }
    }
    Subspace::span(dim_graded(n, d + 1), &rows)
}

pub struct GradedIdeal {
    ring: Ring,
    n: usize,
    gens: Vec<Form>,
    pieces: Mutex<HashMap<u32, Arc<Subspace>>>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        GradedIdeal {
            ring: self.ring,
            n: self.n,
            gens: self.gens.clone(),
            pieces: Mutex::new(self.pieces.lock().unwrap().clone()),
            gb: self.gb.clone(),
        }
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl GradedIdeal {
    pub fn new(ring: Ring, n: usize, gens: Vec<Form>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ring || g.nvars() != n {
                return Err(Error::domain(format!("generator {g} is not in the ambient ring")));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedIdeal { ring, n, gens, pieces: Mutex::new(HashMap::new()), gb: OnceLock::new() })
    }

    pub fn zero(ring: Ring, n: usize) -> Self {
        GradedIdeal::new(ring, n, Vec::new()).unwrap()
    }

    /// The ideal generated by the given graded pieces.
    pub fn from_pieces(ring: Ring, n: usize, pieces: &[(u32, Subspace)]) -> Self {
        let gens = pieces
            .iter()
            .flat_map(|(d, p)| p.basis().iter().map(move |r| Form::from_sparse(ring, n, *d, r)))
            .collect();
        GradedIdeal::new(ring, n, gens).unwrap()
    }

    /// The ideal whose degree-`d` piece is `piece(d)` for `d ≤ d_max`;
    /// generators are the new elements in each degree. The pieces must be
    /// closed under multiplication by `S_1`.
    pub fn from_degreewise(ring: Ring, n: usize, d_max: u32, mut piece: impl FnMut(u32) -> Subspace) -> Self {
        let mut gens = Vec::new();
        let mut prev: Option<Subspace> = None;
        for d in 0..=d_max {
            let cur = piece(d);
            let lower = match &prev {
                Some(p) => times_linear(p, n, d - 1),
                None => Subspace::zero(dim_graded(n, d)),
            };
            let fresh: Vec<SVec> = cur.basis().iter().map(|r| lower.reduce(r)).filter(|r| !r.is_empty()).collect();
            for r in Echelon::from_rows(fresh.iter()).to_rref() {
                gens.push(Form::from_sparse(ring, n, d, &r));
            }
            prev = Some(cur);
        }
        GradedIdeal::new(ring, n, gens).unwrap()
    }

    /// Parse generators in the polynomial grammar.
    pub fn parse(ring: Ring, n: usize, gens: &[&str]) -> Result<Self> {
        let forms = gens
            .iter()
            .enumerate()
            .map(|(k, t)| crate::algebra::form::parse_form(t, ring, n, k + 1))
            .collect::<Result<Vec<_>>>()?;
        GradedIdeal::new(ring, n, forms)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Form] {
        &self.gens
    }

    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(Form::degree).max().unwrap_or(0)
    }

    pub fn min_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(Form::degree).min()
    }

    /// Degree cutoff used for equality and saturation tests: the Gotzmann
    /// number of a constant Hilbert polynomial `n` plus the largest
    /// generator degree.
    pub fn determinacy_bound(&self) -> u32 {
        self.n as u32 + self.max_gen_degree()
    }

    /// Row-reduced basis of `I_d` in the grevlex monomial coordinates.
    pub fn piece(&self, d: u32) -> Arc<Subspace> {
        if let Some(p) = self.pieces.lock().unwrap().get(&d) {
            return p.clone();
        }
        let ambient = dim_graded(self.n, d);
        let own: Vec<SVec> = self.gens.iter().filter(|g| g.degree() == d).map(Form::to_sparse).collect();
        let below = match self.min_gen_degree() {
            Some(m) if m < d => Some(self.piece(d - 1)),
            _ => None,
        };
        let mut e = Echelon::new();
        for r in &own {
            e.insert(r.clone());
        }
        if let Some(b) = below {
            for r in b.basis() {
                for i in 0..self.n {
                    if e.rank() == ambient {
                        break;
                    }
                    e.insert(mul_var(r, self.n, d - 1, i));
                }
            }
        }
        let rows = e.to_rref();
        let p = Arc::new(Subspace::span(ambient, &rows));
        self.pieces.lock().unwrap().insert(d, p.clone());
        p
    }

    pub fn dim(&self, d: u32) -> usize {
        self.piece(d).dim()
    }

    pub fn piece_forms(&self, d: u32) -> Vec<Form> {
        self.piece(d).basis().iter().map(|r| Form::from_sparse(self.ring, self.n, d, r)).collect()
    }

    /// `H_{S/I}(d)`.
    pub fn hilbert(&self, d: u32) -> usize {
        dim_graded(self.n, d) - self.dim(d)
    }

    pub fn hilbert_function(&self, d_max: u32) -> HilbFn {
        HilbFn::from_values((0..=d_max).map(|d| self.hilbert(d)).collect())
    }

    pub fn contains(&self, f: &Form) -> bool {
        f.is_zero() || self.piece(f.degree()).contains(&f.to_sparse())
    }

    /// `other ⊆ self` checked degreewise up to `d_max`.
    pub fn contains_ideal_upto(&self, other: &GradedIdeal, d_max: u32) -> bool {
        (0..=d_max).all(|d| self.piece(d).contains_space(&other.piece(d)))
    }

    pub fn equal_upto(&self, other: &GradedIdeal, d_max: u32) -> bool {
        (0..=d_max).all(|d| *self.piece(d) == *other.piece(d))
    }

    /// Minimal generators through degree `d_max`: in each degree, the
    /// normal forms of `I_d` modulo `S_1·I_{d-1}`.
    pub fn minimal_generators(&self, d_max: u32) -> Vec<Form> {
        let mut out = Vec::new();
        let Some(start) = self.min_gen_degree() else { return out };
        for d in start..=d_max {
            let piece = self.piece(d);
            let lower = if d == 0 { Subspace::zero(1) } else { times_linear(&self.piece(d - 1), self.n, d - 1) };
            if lower.dim() == piece.dim() {
                continue;
            }
            let reduced: Vec<SVec> = piece.basis().iter().map(|r| lower.reduce(r)).filter(|r| !r.is_empty()).collect();
            let comp = Echelon::from_rows(reduced.iter()).to_rref();
            out.extend(comp.iter().map(|r| Form::from_sparse(self.ring, self.n, d, r)));
        }
        out
    }

    /// The same ideal re-presented by its minimal generators.
    pub fn minimalized(&self) -> GradedIdeal {
        let bound = self.max_gen_degree();
        GradedIdeal::new(self.ring, self.n, self.minimal_generators(bound)).unwrap()
    }

    /// Reduced Gröbner basis for grevlex, cached.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::of_forms(&self.gens, &MonoOrder::Grevlex))
    }

    pub fn groebner_with(&self, order: &MonoOrder) -> GroebnerBasis {
        GroebnerBasis::of_forms(&self.gens, order)
    }

    pub fn normal_form(&self, f: &Form) -> Form {
        self.groebner().normal_form(f)
    }

    /// Degreewise truncation `I_{≥d}` generated by `I_d`.
    pub fn truncation(&self, d: u32) -> GradedIdeal {
        GradedIdeal::new(self.ring, self.n, self.piece_forms(d)).unwrap()
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &GradedIdeal) -> GradedIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        GradedIdeal::new(self.ring, self.n, gens).unwrap()
    }

    /// Ideal generated by all products of generators.
    pub fn product(&self, other: &GradedIdeal) -> GradedIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b).unwrap());
            }
        }
        GradedIdeal::new(self.ring, self.n, gens).unwrap()
    }

    /// Render generators one per line, as in the ideal file format body.
    pub fn render_generators(&self) -> String {
        self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_piece() {
        let i = GradedIdeal::parse(Ring::S, 4, &["x3", "x4"]).unwrap();
        assert_eq!(i.dim(1), 2);
        assert_eq!(i.dim(2), 7);
        assert_eq!(i.dim(0), 0);
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let i = GradedIdeal::parse(Ring::S, 3, &["x1", "x1*x2", "x2^2"]).unwrap();
        let g = i.minimal_generators(3);
        assert_eq!(g.len(), 2);
        assert_eq!(g[1].to_string(), "x2^2");
    }

    #[test]
    fn gb_and_pieces_agree() {
        let i = GradedIdeal::parse(Ring::S, 4, &["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"]).unwrap();
        let lt: Vec<Form> = i
            .groebner()
            .leading_monomials()
            .into_iter()
            .map(|m| Form::monomial(Ring::S, crate::algebra::scalar::one(), m))
            .collect();
        let init = GradedIdeal::new(Ring::S, 4, lt).unwrap();
        for d in 0..6 {
            assert_eq!(i.dim(d), init.dim(d));
        }
        assert_eq!(i.hilbert_function(5).values(), &[1, 4, 7, 10, 13, 16]);
    }
}
