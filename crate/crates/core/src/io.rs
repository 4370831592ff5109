//! Text formats: ideal files, quadric files and matrix dumps.
//!
//! Ideal file:
//! ```text
//! # comments run to the end of the line
//! ring S n=4
//! x1*x3
//! x2*x3 - x1*x4
//! ```
//! Quadric file: the same layout over ring T with exactly one generator.
//! A bare polynomial without header is also accepted when `n` is known.
//!
//! Matrix dump: a line `matrix <rows> <cols>` followed by one row per line,
//! entries separated by single spaces, each an integer or `p/q`.

use crate::algebra::form::{parse_form, Form, Ring};
use crate::algebra::scalar::Scalar;
use crate::apolarity::Quadric;
use crate::error::{Error, Result};
use crate::grobner::GradedIdeal;

/// Lines with comments stripped, paired with their 1-based line number.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_header(line: usize, s: &str) -> Result<(Ring, usize)> {
    let err = |column: usize, message: &str| Error::Parse { line, column, message: message.into() };
    let mut it = s.split_whitespace();
    if it.next() != Some("ring") {
        return Err(err(1, "expected header `ring S n=<n>`"));
    }
    let ring = match it.next() {
        Some("S") => Ring::S,
        Some("T") => Ring::T,
        _ => return Err(err(6, "ring must be S or T")),
    };
    let n = it
        .next()
        .and_then(|t| t.strip_prefix("n="))
        .and_then(|t| t.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| err(8, "expected n=<positive integer>"))?;
    if it.next().is_some() {
        return Err(err(s.len(), "trailing text after header"));
    }
    Ok((ring, n))
}

/// Header plus generators, as written.
#[derive(Clone, Debug, PartialEq)]
pub struct FormFile {
    pub ring: Ring,
    pub n: usize,
    pub forms: Vec<Form>,
}

pub fn parse_form_file(text: &str) -> Result<FormFile> {
    let mut lines = content_lines(text);
    let Some((hl, h)) = lines.next() else {
        return Err(Error::Parse { line: 1, column: 1, message: "empty file".into() });
    };
    let (ring, n) = parse_header(hl, h)?;
    let forms = lines.map(|(l, s)| parse_form(s, ring, n, l)).collect::<Result<Vec<_>>>()?;
    Ok(FormFile { ring, n, forms })
}

pub fn write_form_file(ring: Ring, n: usize, forms: &[Form]) -> String {
    let mut out = format!("ring {} n={n}\n", ring_name(ring));
    for f in forms {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

fn ring_name(r: Ring) -> &'static str {
    match r {
        Ring::S => "S",
        Ring::T => "T",
    }
}

pub fn read_ideal(text: &str) -> Result<GradedIdeal> {
    let f = parse_form_file(text)?;
    GradedIdeal::new(f.ring, f.n, f.forms)
}

pub fn write_ideal(i: &GradedIdeal) -> String {
    write_form_file(i.ring(), i.nvars(), i.generators())
}

/// A quadric in ring T, either as a form file or as a bare polynomial.
pub fn read_quadric(text: &str, n: Option<usize>) -> Result<Quadric> {
    let first = content_lines(text).next();
    if first.is_some_and(|(_, l)| l.starts_with("ring")) {
        let f = parse_form_file(text)?;
        if f.ring != Ring::T {
            return Err(Error::domain("quadrics live in ring T"));
        }
        if let Some(m) = n.filter(|&m| m != f.n) {
            return Err(Error::domain(format!("quadric file has n={} but n={m} was requested", f.n)));
        }
        let [q] = <[Form; 1]>::try_from(f.forms).map_err(|_| Error::domain("quadric file must hold one form"))?;
        return Quadric::from_form(q);
    }
    let (line, s) = first.ok_or(Error::Parse { line: 1, column: 1, message: "empty file".into() })?;
    let n = n.unwrap_or_else(|| infer_nvars(s));
    Quadric::from_form(parse_form(s, Ring::T, n, line)?)
}

/// Largest variable index mentioned in a bare polynomial.
fn infer_nvars(s: &str) -> usize {
    let mut best = 1;
    let b = s.as_bytes();
    for (i, _) in s.match_indices(['x', 'y']) {
        let digits: String = b[i + 1..].iter().take_while(|c| c.is_ascii_digit()).map(|&c| c as char).collect();
        if let Ok(k) = digits.parse::<usize>() {
            best = best.max(k);
        }
    }
    best
}

pub fn write_matrix(rows: &[Vec<Scalar>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let mut out = format!("matrix {} {cols}\n", rows.len());
    for r in rows {
        let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_matrix(text: &str) -> Result<Vec<Vec<Scalar>>> {
    let mut lines = content_lines(text);
    let perr = |line, message: &str| Error::Parse { line, column: 1, message: message.into() };
    let (hl, h) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let dims: Vec<usize> = h
        .strip_prefix("matrix")
        .map(|r| r.split_whitespace().filter_map(|t| t.parse().ok()).collect())
        .unwrap_or_default();
    let [nr, nc] = dims[..] else { return Err(perr(hl, "expected `matrix <rows> <cols>`")) };
    let mut rows = Vec::with_capacity(nr);
    for (l, s) in lines {
        let row = s
            .split_whitespace()
            .map(|t| t.parse::<Scalar>().map_err(|_| perr(l, &format!("not a rational: {t}"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != nc {
            return Err(perr(l, &format!("expected {nc} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != nr {
        return Err(perr(hl, &format!("expected {nr} rows, found {}", rows.len())));
    }
    Ok(rows)
}
