use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An integer vector in the root lattice, written in the simple-root basis.
///
/// Ordering is the canonical root order: height first, then lexicographic on
/// the coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    /// The simple root with 0-based index `i`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Coefficient `{μ : α_i}` at the 0-based simple index `i`.
    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients non-negative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// 0-based indices of the simple roots with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Index of the unique nonzero coefficient, if this is a simple root.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Coefficientwise `self ≼ other`.
    pub fn le_coeffwise(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, k: i32) -> Root {
        Root(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn zip_with(&self, other: &Root, f: impl Fn(i32, i32) -> i32) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect())
    }

    /// Positional notation, e.g. `1221` for α₁+2α₂+2α₃+α₄.
    ///
    /// Only unambiguous when every coefficient is a single non-negative digit.
    pub fn positional(&self) -> String {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        self.scale(-1)
    }
}

impl From<Vec<i32>> for Root {
    fn from(v: Vec<i32>) -> Self {
        Root(v)
    }
}

impl<const N: usize> From<[i32; N]> for Root {
    fn from(v: [i32; N]) -> Self {
        Root(v.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_height_then_lex() {
        let mut v: Vec<Root> = vec![[1, 1, 0].into(), [0, 0, 1].into(), [0, 1, 1].into(), [1, 0, 0].into()];
        v.sort();
        assert_eq!(v, vec![[0, 0, 1].into(), [1, 0, 0].into(), [0, 1, 1].into(), [1, 1, 0].into()]);
    }

    #[test]
    fn simple_index_detection() {
        assert_eq!(Root::from([0, 1, 0]).simple_index(), Some(1));
        assert_eq!(Root::from([0, 2, 0]).simple_index(), None);
        assert_eq!(Root::from([1, 1, 0]).simple_index(), None);
        assert_eq!(Root::from([0, 0, 0]).simple_index(), None);
    }

    #[test]
    fn display_forms() {
        let r = Root::from([1, 2, 2, 1]);
        assert_eq!(r.to_string(), "(1,2,2,1)");
        assert_eq!(r.positional(), "1221");
    }
}
