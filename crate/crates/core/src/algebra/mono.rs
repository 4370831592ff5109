//! Monomials, monomial orders and graded monomial bases.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

/// A monomial given by its exponent vector. The derived `Ord` is the
/// lexicographic order with `x1 > x2 > ...`; orders used for Gröbner
/// computations go through [`MonoOrder`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mono {
    exps: Vec<u32>,
}

impl Mono {
    pub fn new(exps: Vec<u32>) -> Self {
        Mono { exps }
    }

    pub fn one(n: usize) -> Self {
        Mono { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Mono { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Option<Mono> {
        if !self.divides(other) {
            return None;
        }
        Some(Mono {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn weight(&self, w: &[i64]) -> i64 {
        self.exps.iter().zip(w).map(|(e, wi)| *e as i64 * wi).sum()
    }

    /// Render with the given variable letter, e.g. `x1^2*x3`. The unit
    /// monomial renders as the empty string.
    pub fn render(&self, letter: char) -> String {
        let mut parts = Vec::new();
        for (i, e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{letter}{}", i + 1)),
                _ => parts.push(format!("{letter}{}^{e}", i + 1)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render('x');
        if s.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{s}")
        }
    }
}

/// Monomial orders. `Greater` means "larger", so leading terms are maxima.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[derive(Default)]
pub enum MonoOrder {
    Lex,
    #[default]
    Grevlex,
    /// Degree reverse lexicographic order in which variable `last` plays
    /// the role of the smallest variable.
    GrevlexLast(usize),
    /// Product order: grevlex on the first `block` variables, ties broken
    /// by grevlex on the rest. Eliminates the first block.
    Block(usize),
    /// Larger weight first, ties broken by the base order.
    Weight(Vec<i64>, Box<MonoOrder>),
}


fn grevlex_by<I>(a: &[u32], b: &[u32], rev_indices: I) -> Ordering
where
    I: Iterator<Item = usize>,
{
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in rev_indices {
        if a[i] != b[i] {
            // smaller exponent in the last differing variable is larger
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonoOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.cmp_exps(a.exps(), b.exps())
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        let n = a.len();
        match self {
            MonoOrder::Lex => a.cmp(b),
            MonoOrder::Grevlex => grevlex_by(a, b, (0..n).rev()),
            MonoOrder::GrevlexLast(last) => {
                let last = *last;
                let order = std::iter::once(last).chain((0..n).rev().filter(move |&i| i != last));
                grevlex_by(a, b, order)
            }
            MonoOrder::Block(k) => {
                let k = *k;
                grevlex_by(&a[..k], &b[..k], (0..k).rev())
                    .then_with(|| grevlex_by(&a[k..], &b[k..], (0..n - k).rev()))
            }
            MonoOrder::Weight(w, base) => {
                let wa: i64 = a.iter().zip(w).map(|(e, x)| *e as i64 * x).sum();
                let wb: i64 = b.iter().zip(w).map(|(e, x)| *e as i64 * x).sum();
                wa.cmp(&wb).then_with(|| base.cmp_exps(a, b))
            }
        }
    }
}

/// All monomials of degree `d` in `n` variables, listed in grevlex
/// descending order, with a reverse index.
#[derive(Debug)]
pub struct MonoBasis {
    pub n: usize,
    pub degree: u32,
    monos: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl MonoBasis {
    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monos(&self) -> &[Mono] {
        &self.monos
    }

    pub fn get(&self, i: usize) -> &Mono {
        &self.monos[i]
    }

    pub fn index_of(&self, m: &Mono) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn enumerate(n: usize, d: u32) -> Vec<Mono> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if i + 1 == n {
            cur.push(left);
            out.push(Mono::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(i + 1, n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Mono::new(vec![]));
        }
        return out;
    }
    rec(0, n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Cached graded monomial basis of `k[x1..xn]_d`.
pub fn mono_basis(n: usize, d: u32) -> Arc<MonoBasis> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<MonoBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&(n, d)) {
        return b.clone();
    }
    let mut monos = enumerate(n, d);
    let order = MonoOrder::Grevlex;
    monos.sort_by(|a, b| order.cmp(b, a));
    let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let basis = Arc::new(MonoBasis { n, degree: d, monos, index });
    cache.lock().unwrap().insert((n, d), basis.clone());
    basis
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `dim k[x1..xn]_d`.
pub fn dim_graded(n: usize, d: u32) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n as u64 + d as u64 - 1, n as u64 - 1) as usize
}
