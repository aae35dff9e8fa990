use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Homological degree. Cohomological input degree `n` is stored as `-n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Deg(pub i32);

impl Deg {
    pub const ZERO: Deg = Deg(0);

    pub fn from_cohomological(n: i32) -> Deg {
        Deg(-n)
    }

    pub fn cohomological(self) -> i32 {
        -self.0
    }

    pub fn is_odd(self) -> bool {
        self.0.rem_euclid(2) == 1
    }

    /// `ΣV_i = V_{i-1}`: suspension raises homological degree by one.
    pub fn suspend(self) -> Deg {
        Deg(self.0 + 1)
    }

    pub fn desuspend(self) -> Deg {
        Deg(self.0 - 1)
    }

    /// Degree of the dual generator `Σ⁻¹v*` in the representing algebra.
    pub fn dual_generator(self) -> Deg {
        Deg(-self.0 - 1)
    }
}

impl Add for Deg {
    type Output = Deg;
    fn add(self, rhs: Deg) -> Deg {
        Deg(self.0 + rhs.0)
    }
}

impl Sub for Deg {
    type Output = Deg;
    fn sub(self, rhs: Deg) -> Deg {
        Deg(self.0 - rhs.0)
    }
}

impl Neg for Deg {
    type Output = Deg;
    fn neg(self) -> Deg {
        Deg(-self.0)
    }
}

impl fmt::Display for Deg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `(-1)^(a*b)` for homogeneous degrees.
pub fn sign_of(a: Deg, b: Deg) -> i32 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// A possibly unbounded closed interval of homological degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegRange {
    pub lo: Option<i32>,
    pub hi: Option<i32>,
}

impl DegRange {
    pub const ALL: DegRange = DegRange { lo: None, hi: None };
    /// The empty range.
    pub const NONE: DegRange = DegRange { lo: Some(1), hi: Some(0) };

    pub fn new(lo: i32, hi: i32) -> DegRange {
        DegRange { lo: Some(lo), hi: Some(hi) }
    }

    pub fn at_most(hi: i32) -> DegRange {
        DegRange { lo: None, hi: Some(hi) }
    }

    pub fn at_least(lo: i32) -> DegRange {
        DegRange { lo: Some(lo), hi: None }
    }

    pub fn contains(&self, d: i32) -> bool {
        self.lo.is_none_or(|lo| d >= lo) && self.hi.is_none_or(|hi| d <= hi)
    }

    pub fn is_empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(lo), Some(hi)) if lo > hi)
    }

    pub fn intersect(&self, other: &DegRange) -> DegRange {
        let lo = match (self.lo, other.lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        DegRange { lo, hi }
    }

    /// Shift both ends by `by`.
    pub fn shift(&self, by: i32) -> DegRange {
        if self.is_empty() {
            return DegRange::NONE;
        }
        DegRange { lo: self.lo.map(|l| l + by), hi: self.hi.map(|h| h + by) }
    }
}

/// The (weight, degree) window inside which computations are certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncProfile {
    pub weight_max: usize,
    pub deg_min: Deg,
    pub deg_max: Deg,
}

impl TruncProfile {
    pub fn new(weight_max: usize, deg_min: i32, deg_max: i32) -> crate::Result<TruncProfile> {
        if weight_max == 0 {
            return Err(crate::Error::InvalidTruncation("weight_max must be at least 1".into()));
        }
        if deg_min > deg_max {
            return Err(crate::Error::InvalidTruncation(format!(
                "deg_min {deg_min} exceeds deg_max {deg_max}"
            )));
        }
        Ok(TruncProfile { weight_max, deg_min: Deg(deg_min), deg_max: Deg(deg_max) })
    }

    pub fn window(&self) -> DegRange {
        DegRange::new(self.deg_min.0, self.deg_max.0)
    }

    pub fn in_window(&self, d: Deg) -> bool {
        d >= self.deg_min && d <= self.deg_max
    }
}

impl Default for TruncProfile {
    fn default() -> Self {
        TruncProfile { weight_max: 4, deg_min: Deg(-6), deg_max: Deg(6) }
    }
}

/// Degrees containing no word of weight above `weight` in letters of the given
/// degrees, assuming every longer word is nonzero.
pub fn tail_free_range(degs: &[Deg], weight: usize) -> DegRange {
    if degs.is_empty() {
        return DegRange::ALL;
    }
    let w = weight as i32 + 1;
    if degs.iter().all(|d| d.0 < 0) {
        let cmax = degs.iter().map(|d| d.0).max().expect("nonempty");
        DegRange::at_least(w * cmax + 1)
    } else if degs.iter().all(|d| d.0 > 0) {
        let cmin = degs.iter().map(|d| d.0).min().expect("nonempty");
        DegRange::at_most(w * cmin - 1)
    } else {
        DegRange::NONE
    }
}
