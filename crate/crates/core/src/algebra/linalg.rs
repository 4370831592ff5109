//! Exact linear algebra: sparse incremental echelon forms, subspaces and
//! dense matrices, plus modular rank certificates.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::modular;
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs with strictly increasing indices
/// and no stored zeros.
pub type SVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `a + c·b`.
pub fn axpy(a: &SVec, c: &Scalar, b: &SVec) -> SVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &SVec, c: &Scalar) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn dot(a: &SVec, b: &SVec) -> Scalar {
    let mut s = Scalar::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

fn get(v: &SVec, idx: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|k| &v[k].1)
}

/// Incremental semi-echelon form. Rows are stored monic, keyed by their
/// leading (smallest) index.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows<'a>(rows: impl IntoIterator<Item = &'a SVec>) -> Self {
        let mut e = Echelon::new();
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    /// Reduce until the leading index is not a pivot.
    pub fn reduce_lead(&self, mut v: SVec) -> SVec {
        while let Some((lead, c)) = v.first() {
            match self.rows.get(lead) {
                Some(row) => {
                    let c = -c.clone();
                    v = axpy(&v, &c, row);
                }
                None => break,
            }
        }
        v
    }

    /// Reduce every pivot position to zero.
    pub fn reduce_full(&self, mut v: SVec) -> SVec {
        let mut from = 0usize;
        loop {
            let next = v
                .iter()
                .filter(|(i, _)| *i >= from && self.rows.contains_key(i))
                .map(|(i, c)| (*i, c.clone()))
                .next();
            let Some((idx, c)) = next else { break };
            v = axpy(&v, &-c, &self.rows[&idx]);
            from = idx + 1;
        }
        v
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce_lead(v.clone()).is_empty()
    }

    /// Insert a vector; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: SVec) -> bool {
        let r = self.reduce_lead(v);
        match r.first() {
            None => false,
            Some((lead, c)) => {
                let inv = c.recip();
                let lead = *lead;
                self.rows.insert(lead, scale(&r, &inv));
                true
            }
        }
    }

    /// Rows in reduced row echelon form, ordered by pivot.
    pub fn to_rref(&self) -> Vec<SVec> {
        let mut done: BTreeMap<usize, SVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            // eliminate later pivots, which are already fully reduced
            let hits: Vec<(usize, Scalar)> = r
                .iter()
                .filter(|(i, _)| *i != p && done.contains_key(i))
                .cloned()
                .collect();
            for (i, _) in hits {
                if let Some(cur) = get(&r, i).cloned() {
                    r = axpy(&r, &-cur, &done[&i]);
                }
            }
            done.insert(p, r);
        }
        done.into_values().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SVec> {
        self.rows.values()
    }
}

/// Left kernel: all `c` with `Σ c_i rows[i] = 0`, as sparse vectors in
/// `k^{rows.len()}`, in reduced echelon form.
pub fn left_kernel(rows: &[SVec], ncols: usize) -> Vec<SVec> {
    let mut e = Echelon::new();
    for (k, r) in rows.iter().enumerate() {
        let mut aug = r.clone();
        aug.push((ncols + k, scalar::one()));
        e.insert(aug);
    }
    let tails: Vec<SVec> = e
        .rows
        .range(ncols..)
        .map(|(_, r)| r.iter().map(|(i, c)| (i - ncols, c.clone())).collect())
        .collect();
    Echelon::from_rows(tails.iter()).to_rref()
}

/// Right kernel of the matrix with the given sparse rows.
pub fn right_kernel(rows: &[SVec], ncols: usize) -> Vec<SVec> {
    let rref = Echelon::from_rows(rows.iter()).to_rref();
    kernel_of_rref(&rref, ncols)
}

fn kernel_of_rref(rref: &[SVec], ncols: usize) -> Vec<SVec> {
    let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&j| !is_pivot[j]) {
        let mut v: SVec = Vec::new();
        for (row, &p) in rref.iter().zip(&pivots) {
            if let Some(c) = get(row, free) {
                v.push((p, -c.clone()));
            }
        }
        v.push((free, scalar::one()));
        v.sort_by_key(|e| e.0);
        out.push(v);
    }
    out
}

/// A linear subspace of `k^dim`, stored as reduced echelon rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SVec>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.rows.len(), self.ambient)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(|i| vec![(i, scalar::one())]).collect() }
    }

    pub fn span(ambient: usize, vectors: &[SVec]) -> Self {
        Subspace { ambient, rows: Echelon::from_rows(vectors.iter()).to_rref() }
    }

    pub fn span_dense(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let sv: Vec<SVec> = vectors.iter().map(|v| sparse_from_dense(v)).collect();
        Subspace::span(ambient, &sv)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.rows.insert(r[0].0, r.clone());
        }
        e
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        let e = self.echelon();
        other.rows.iter().all(|r| e.contains(r))
    }

    /// Normal form of `v` modulo the subspace (pivot coordinates cleared).
    pub fn reduce(&self, v: &SVec) -> SVec {
        self.echelon().reduce_full(v.clone())
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &SVec) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self
            .rows
            .iter()
            .map(|r| get(v, r[0].0).cloned().unwrap_or_else(Scalar::zero))
            .collect();
        let mut acc: SVec = Vec::new();
        for (c, r) in coords.iter().zip(&self.rows) {
            acc = axpy(&acc, c, r);
        }
        (acc == *v).then_some(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Orthogonal complement for the standard bilinear form.
    pub fn perp(&self) -> Subspace {
        Subspace::span(self.ambient, &kernel_of_rref(&self.rows, self.ambient))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.perp().sum(&other.perp()).perp()
    }

    /// Image under a linear map given by the images of the standard basis.
    pub fn image(&self, map: impl Fn(&SVec) -> SVec, target_dim: usize) -> Subspace {
        let imgs: Vec<SVec> = self.rows.iter().map(map).collect();
        Subspace::span(target_dim, &imgs)
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| dense_from_sparse(r, self.ambient)).collect()
    }
}

/// Dense matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![vec![Scalar::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = scalar::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Scalar>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        ExactMatrix { rows, cols, data }
    }

    pub fn from_ints(data: &[&[i64]]) -> Self {
        Self::from_rows(data.iter().map(|r| r.iter().map(|&x| scalar::int(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.data[k][j].is_zero() {
                        out.data[i][j] += a * &other.data[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i][j] += &other.data[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        let mut out = self.clone();
        for row in &mut out.data {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.data
            .iter()
            .map(|r| r.iter().zip(v).fold(Scalar::zero(), |s, (a, b)| s + a * b))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.data[i][j] == self.data[j][i]))
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (ExactMatrix, usize, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(k) = (r..self.rows).find(|&k| !m[k][c].is_zero()) else {
                continue;
            };
            m.swap(r, k);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let piv = m[r].clone();
            for (k, row) in m.iter_mut().enumerate() {
                if k == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&piv).skip(c) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        (ExactMatrix { rows: self.rows, cols: self.cols, data: m }, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, rank, _) = self.rref();
        let rows: Vec<SVec> = r.data[..rank].iter().map(|v| sparse_from_dense(v)).collect();
        kernel_of_rref(&rows, self.cols)
            .iter()
            .map(|v| dense_from_sparse(v, self.cols))
            .collect()
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.data.clone();
        let n = self.rows;
        let mut det = scalar::one();
        for c in 0..n {
            let Some(k) = (c..n).find(|&k| !m[k][c].is_zero()) else {
                return Scalar::zero();
            };
            if k != c {
                m.swap(c, k);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].recip();
            for k in c + 1..n {
                if m[k][c].is_zero() {
                    continue;
                }
                let f = &m[k][c] * &inv;
                for j in c..n {
                    let y = m[c][j].clone();
                    m[k][j] -= &f * y;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.data[i].clone();
                r.extend((0..n).map(|j| if i == j { scalar::one() } else { Scalar::zero() }));
                r
            })
            .collect();
        let (r, _, pivots) = ExactMatrix::from_rows(aug).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(ExactMatrix::from_rows(r.data.iter().map(|row| row[n..].to_vec()).collect()))
    }

    /// Entries reduced modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Vec<Vec<u64>>> {
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| scalar::reduce_mod(c, p).ok_or(Error::BadReduction { prime: p }))
                    .collect()
            })
            .collect()
    }

    pub fn modular_rank(&self, p: u64) -> Result<usize> {
        Ok(modular::rank_mod(self.reduce_mod(p)?, self.cols, p))
    }
}

/// Rank modulo the first prime of `primes` at which every denominator is
/// invertible.
pub fn modular_rank_retry(m: &ExactMatrix, primes: &[u64]) -> Result<(usize, u64)> {
    let mut last = Error::domain("no primes supplied");
    for &p in primes {
        match m.modular_rank(p) {
            Ok(r) => return Ok((r, p)),
            Err(e @ Error::BadReduction { .. }) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(scalar::to_text).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.data[i][j] == if i == j { Scalar::one() } else { Scalar::zero() }))
    }
}
