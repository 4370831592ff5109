//! Hilbert functions of graded quotients.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbFn {
    values: Vec<usize>,
    /// `(value, onset)` once the tail of the computed range is constant.
    eventual: Option<(usize, u32)>,
}

impl HilbFn {
    pub fn from_values(values: Vec<usize>) -> Self {
        let eventual = match values.as_slice() {
            [.., a, b, c] if a == b && b == c => {
                let v = *c;
                let onset = values.iter().rposition(|&x| x != v).map_or(0, |k| k + 1);
                Some((v, onset as u32))
            }
            _ => None,
        };
        HilbFn { values, eventual }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn at(&self, d: u32) -> usize {
        self.values[d as usize]
    }

    pub fn max_degree(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn eventual(&self) -> Option<(usize, u32)> {
        self.eventual
    }

    /// Does the function start with `prefix` and stay at its last value?
    pub fn matches_eventually_constant(&self, prefix: &[usize]) -> bool {
        let last = *prefix.last().expect("nonempty prefix");
        self.values
            .iter()
            .enumerate()
            .all(|(d, &v)| v == prefix.get(d).copied().unwrap_or(last))
    }

    /// `(1, n, n, ...)` through the computed range.
    pub fn is_one_n_n(&self, n: usize) -> bool {
        self.matches_eventually_constant(&[1, n])
    }
}

impl fmt::Display for HilbFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "({}", v.join(","))?;
        if self.eventual.is_some() {
            write!(f, ",…")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eventual_detection() {
        let h = HilbFn::from_values(vec![1, 2, 3, 4, 4, 4, 4]);
        assert_eq!(h.eventual(), Some((4, 3)));
        assert!(h.matches_eventually_constant(&[1, 2, 3, 4]));
        assert!(!h.is_one_n_n(4));
        assert_eq!(HilbFn::from_values(vec![1, 4, 10]).eventual(), None);
        assert_eq!(h.to_string(), "(1,2,3,4,4,4,4,…)");
    }
}
