use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::SparseMatrix;
use crate::graded::DegRange;
use crate::{Error, Result};

/// A finite window of a homologically graded chain complex.
///
/// `diffs[n]` is `d_n: C_n -> C_{n-1}` with `dims[n-1]` rows and `dims[n]` columns.
/// `complete` records the degrees where the stored chain groups coincide with
/// those of the untruncated complex.
#[derive(Clone, Debug)]
pub struct ComplexSlice {
    pub dims: BTreeMap<i32, usize>,
    pub diffs: BTreeMap<i32, SparseMatrix>,
    pub window: DegRange,
    pub complete: DegRange,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reliability {
    Exact,
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub degree: i32,
    pub dim: usize,
    pub reliability: Reliability,
}

/// Homology dimensions keyed by homological degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<i32, BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, n: i32) -> Option<usize> {
        self.entries.get(&n).map(|e| e.dim)
    }

    /// Dimension in degree `n` if certified equal to the untruncated answer.
    pub fn exact(&self, n: i32) -> Option<usize> {
        self.entries.get(&n).filter(|e| e.reliability == Reliability::Exact).map(|e| e.dim)
    }

    pub fn is_exact(&self, n: i32) -> bool {
        self.exact(n).is_some()
    }

    /// Nonzero exact dimensions.
    pub fn nonzero_exact(&self) -> BTreeMap<i32, usize> {
        self.entries
            .values()
            .filter(|e| e.reliability == Reliability::Exact && e.dim > 0)
            .map(|e| (e.degree, e.dim))
            .collect()
    }

    pub fn total_exact(&self) -> usize {
        self.nonzero_exact().values().sum()
    }

    pub fn insert(&mut self, degree: i32, dim: usize, reliability: Reliability) {
        self.entries.insert(degree, BettiEntry { degree, dim, reliability });
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.entries.values() {
            let mark = match e.reliability {
                Reliability::Exact => "",
                Reliability::Boundary => "  (boundary)",
            };
            writeln!(f, "H_{:<4} {}{}", e.degree, e.dim, mark)?;
        }
        Ok(())
    }
}

impl ComplexSlice {
    pub fn new(window: DegRange, complete: DegRange) -> ComplexSlice {
        ComplexSlice { dims: BTreeMap::new(), diffs: BTreeMap::new(), window, complete }
    }

    pub fn dim(&self, n: i32) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn set_dim(&mut self, n: i32, dim: usize) {
        self.dims.insert(n, dim);
    }

    pub fn set_diff(&mut self, n: i32, d: SparseMatrix) {
        assert_eq!(d.cols(), self.dim(n), "d_{n} has wrong source dimension");
        assert_eq!(d.rows(), self.dim(n - 1), "d_{n} has wrong target dimension");
        self.diffs.insert(n, d);
    }

    fn rank_of(&self, n: i32) -> usize {
        self.diffs.get(&n).map_or(0, |d| d.rank())
    }

    fn certified(&self, n: i32) -> bool {
        (n - 1..=n + 1).all(|k| self.window.contains(k) && self.complete.contains(k))
    }
}

/// Verify `d∘d = 0` and return homology dimensions for every degree in the slice.
pub fn homology_dims(c: &ComplexSlice) -> Result<BettiTable> {
    for (&n, d) in &c.diffs {
        if let Some(prev) = c.diffs.get(&(n - 1)) {
            if !prev.mul(d).is_zero() {
                return Err(Error::NotAComplex { degree: n });
            }
        }
    }
    let mut table = BettiTable::default();
    for (&n, &dim) in &c.dims {
        if !c.window.contains(n) {
            continue;
        }
        let b = dim - c.rank_of(n) - c.rank_of(n + 1);
        let rel = if c.certified(n) { Reliability::Exact } else { Reliability::Boundary };
        table.insert(n, b, rel);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn circle_cellular() {
        let mut c = ComplexSlice::new(DegRange::new(-1, 2), DegRange::ALL);
        c.set_dim(0, 1);
        c.set_dim(1, 1);
        c.set_diff(1, SparseMatrix::zeros(1, 1));
        let t = homology_dims(&c).unwrap();
        assert_eq!(t.exact(0), Some(1));
        assert_eq!(t.exact(1), Some(1));
    }

    #[test]
    fn not_a_complex() {
        let mut c = ComplexSlice::new(DegRange::ALL, DegRange::ALL);
        c.set_dim(0, 1);
        c.set_dim(1, 1);
        c.set_dim(2, 1);
        let one = SparseMatrix::from_dense(&[vec![rat(1)]]);
        c.set_diff(1, one.clone());
        c.set_diff(2, one);
        assert!(matches!(homology_dims(&c), Err(Error::NotAComplex { degree: 2 })));
    }

    #[test]
    fn boundary_degrees_flagged() {
        let mut c = ComplexSlice::new(DegRange::new(0, 3), DegRange::ALL);
        for n in 0..=3 {
            c.set_dim(n, 1);
        }
        let t = homology_dims(&c).unwrap();
        assert!(!t.is_exact(0));
        assert!(t.is_exact(1));
        assert!(t.is_exact(2));
        assert!(!t.is_exact(3));
    }
}
