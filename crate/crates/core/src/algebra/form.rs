//! Homogeneous forms over the rationals, tagged with their ring.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::mono::{mono_basis, Mono, MonoOrder};
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// `S = k[x1..xn]` acts by differentiation on `T = k[y1..yn]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    S,
    T,
}

impl Ring {
    pub fn letter(self) -> char {
        match self {
            Ring::S => 'x',
            Ring::T => 'y',
        }
    }

    pub fn dual(self) -> Ring {
        match self {
            Ring::S => Ring::T,
            Ring::T => Ring::S,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    ring: Ring,
    n: usize,
    degree: u32,
    terms: BTreeMap<Mono, Scalar>,
}

impl Form {
    pub fn zero(ring: Ring, n: usize, degree: u32) -> Self {
        Form { ring, n, degree, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, n: usize, c: Scalar) -> Self {
        Form::monomial(ring, c, Mono::one(n))
    }

    pub fn monomial(ring: Ring, c: Scalar, m: Mono) -> Self {
        let n = m.nvars();
        let degree = m.degree();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Form { ring, n, degree, terms }
    }

    pub fn var(ring: Ring, n: usize, i: usize) -> Self {
        Form::monomial(ring, scalar::one(), Mono::var(n, i))
    }

    /// Linear form `Σ c_i v_i`.
    pub fn linear(ring: Ring, coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut f = Form::zero(ring, n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            f.add_term(Mono::var(n, i), c.clone());
        }
        f
    }

    /// Build from `(coefficient, monomial)` pairs, all of the given degree.
    pub fn from_terms(ring: Ring, n: usize, degree: u32, terms: impl IntoIterator<Item = (Scalar, Mono)>) -> Result<Self> {
        let mut f = Form::zero(ring, n, degree);
        for (c, m) in terms {
            if m.nvars() != n || m.degree() != degree {
                return Err(Error::domain(format!("monomial {m} does not lie in degree {degree} of {n} variables")));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_space(&self, other: &Form) -> Result<()> {
        if self.ring != other.ring || self.n != other.n || self.degree != other.degree {
            return Err(Error::domain(format!(
                "forms live in different spaces: {:?}{}_{} vs {:?}{}_{}",
                self.ring, self.n, self.degree, other.ring, other.n, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        self.scale(&-scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        let mut out = Form::zero(self.ring, self.n, self.degree);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        out
    }

    pub fn mul(&self, other: &Form) -> Result<Form> {
        if self.ring != other.ring || self.n != other.n {
            return Err(Error::domain("product of forms from different rings"));
        }
        let mut out = Form::zero(self.ring, self.n, self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn mul_mono(&self, m: &Mono) -> Form {
        let mut out = Form::zero(self.ring, self.n, self.degree + m.degree());
        out.terms = self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect();
        out
    }

    /// Leading monomial under `order`.
    pub fn leading(&self, order: &MonoOrder) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Divide by the leading coefficient under grevlex.
    pub fn monic(&self) -> Form {
        match self.leading(&MonoOrder::Grevlex) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn partial(&self, i: usize) -> Form {
        let mut out = Form::zero(self.ring, self.n, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Mono::new(exps), c * scalar::int(e as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, v) in m.exps().iter().zip(point) {
                for _ in 0..*e {
                    t *= v;
                }
            }
            total += t;
        }
        total
    }

    /// Substitute `v_i ↦ Σ_j sub[i][j] v_j`.
    pub fn linear_substitute(&self, sub: &[Vec<Scalar>]) -> Form {
        let images: Vec<Form> = sub.iter().map(|row| Form::linear(self.ring, row)).collect();
        let mut out = Form::zero(self.ring, self.n, self.degree);
        for (m, c) in &self.terms {
            let mut t = Form::constant(self.ring, self.n, c.clone());
            for (i, e) in m.exps().iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&images[i]).expect("same ring");
                }
            }
            out = out.add(&t).expect("same space");
        }
        out
    }

    /// Coordinates in the grevlex-descending monomial basis of the piece.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let basis = mono_basis(self.n, self.degree);
        let mut v = vec![Scalar::zero(); basis.len()];
        for (m, c) in &self.terms {
            v[basis.index_of(m).expect("monomial in basis")] = c.clone();
        }
        v
    }

    pub fn to_sparse(&self) -> Vec<(usize, Scalar)> {
        let basis = mono_basis(self.n, self.degree);
        let mut v: Vec<(usize, Scalar)> = self
            .terms
            .iter()
            .map(|(m, c)| (basis.index_of(m).expect("monomial in basis"), c.clone()))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn from_sparse(ring: Ring, n: usize, degree: u32, v: &[(usize, Scalar)]) -> Form {
        let basis = mono_basis(n, degree);
        let mut f = Form::zero(ring, n, degree);
        for (i, c) in v {
            f.add_term(basis.get(*i).clone(), c.clone());
        }
        f
    }

    pub fn from_dense(ring: Ring, n: usize, degree: u32, v: &[Scalar]) -> Form {
        let basis = mono_basis(n, degree);
        let mut f = Form::zero(ring, n, degree);
        for (i, c) in v.iter().enumerate() {
            f.add_term(basis.get(i).clone(), c.clone());
        }
        f
    }

    /// Same coefficients read in the dual ring.
    pub fn transpose_ring(&self) -> Form {
        Form { ring: self.ring.dual(), ..self.clone() }
    }

    /// `self / divisor` when the division is exact.
    pub fn divide_exact(&self, divisor: &Form) -> Option<Form> {
        if divisor.is_zero() || divisor.degree() > self.degree {
            return None;
        }
        let e = self.degree - divisor.degree;
        let basis = mono_basis(self.n, e);
        let mut rows: Vec<super::linalg::SVec> = basis.monos().iter().map(|m| divisor.mul_mono(m).to_sparse()).collect();
        rows.push(self.neg().to_sparse());
        let ncols = super::mono::dim_graded(self.n, self.degree);
        let ker = super::linalg::left_kernel(&rows, ncols);
        let last = basis.len();
        let v = ker.iter().find(|v| v.iter().any(|(i, _)| *i == last))?;
        let lc = v.iter().find(|(i, _)| *i == last).map(|(_, c)| c.clone())?;
        let coeffs: Vec<(usize, Scalar)> = v.iter().filter(|(i, _)| *i != last).map(|(i, c)| (*i, c / &lc)).collect();
        Some(Form::from_sparse(self.ring, self.n, e, &coeffs))
    }

    pub fn parse(text: &str, ring: Ring, n: usize) -> Result<Form> {
        parse_form(text, ring, n, 1)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = MonoOrder::Grevlex;
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let body = m.render(self.ring.letter());
            if body.is_empty() {
                write!(f, "{}", scalar::to_text(&abs))?;
            } else if abs.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{}*{body}", scalar::to_text(&abs))?;
            }
        }
        Ok(())
    }
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Lexer {
    fn err(&self, message: impl Into<String>) -> Error {
        self.err_at(self.pos, message)
    }

    fn err_at(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }
}

/// Parse one form; `line` is used in error positions.
pub fn parse_form(text: &str, ring: Ring, n: usize, line: usize) -> Result<Form> {
    let mut lx = Lexer { chars: text.chars().collect(), pos: 0, line };
    let mut terms: Vec<(Scalar, Mono)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = 1i64;
        match lx.peek() {
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some('+') if !first => lx.pos += 1,
            Some('-') => {
                sign = -1;
                lx.pos += 1;
            }
            Some(c) if !first => return Err(lx.err(format!("expected '+' or '-', found '{c}'"))),
            _ => {}
        }
        first = false;
        terms.push(parse_term(&mut lx, ring, n, sign)?);
    }
    let degree = terms[0].1.degree();
    if let Some((_, m)) = terms.iter().find(|(_, m)| m.degree() != degree) {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("not homogeneous: {m} has degree {} but expected {degree}", m.degree()),
        });
    }
    let mut f = Form::zero(ring, n, degree);
    for (c, m) in terms {
        f.add_term(m, c);
    }
    Ok(f)
}

fn parse_term(lx: &mut Lexer, ring: Ring, n: usize, sign: i64) -> Result<(Scalar, Mono)> {
    let mut coeff = scalar::int(sign);
    let mut exps = vec![0u32; n];
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = lx.number().unwrap();
                let mut value: Scalar = Scalar::from_integer(num.parse().unwrap());
                if lx.peek() == Some('/') {
                    lx.pos += 1;
                    let den = lx.number().ok_or_else(|| lx.err("expected denominator"))?;
                    let den: num_bigint::BigInt = den.parse().unwrap();
                    if den.is_zero() {
                        return Err(lx.err("zero denominator"));
                    }
                    value /= Scalar::from_integer(den);
                }
                coeff *= value;
            }
            Some(c) if c == ring.letter() => {
                let start = lx.pos;
                lx.pos += 1;
                let idx = lx.number().ok_or_else(|| lx.err("expected variable index"))?;
                let i: usize = idx.parse().map_err(|_| lx.err_at(start, "bad variable index"))?;
                if i == 0 || i > n {
                    return Err(lx.err_at(start, format!("variable {}{i} outside 1..{n}", ring.letter())));
                }
                let mut e = 1u32;
                if lx.peek() == Some('^') {
                    lx.pos += 1;
                    let ex = lx.number().ok_or_else(|| lx.err("expected exponent"))?;
                    e = ex.parse().map_err(|_| lx.err("bad exponent"))?;
                }
                exps[i - 1] += e;
            }
            Some(c) if c.is_ascii_alphabetic() => {
                return Err(lx.err(format!("unexpected variable letter '{c}' in ring {:?}", ring)));
            }
            Some(c) => return Err(lx.err(format!("unexpected character '{c}'"))),
            None => return Err(lx.err("unexpected end of input")),
        }
        match lx.peek() {
            Some('*') => lx.pos += 1,
            _ => break,
        }
    }
    Ok((coeff, Mono::new(exps)))
}
