//! Exact linear algebra over Q and homology of finite slices of chain complexes.

mod complex;
mod sparse;

pub use complex::{homology_dims, BettiTable, ComplexSlice, Reliability};
pub use sparse::{row_reduce, SparseMatrix, SparseVec, VectorSolver};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"3"`, `"-1/2"`, `"+2/4"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return None;
    }
    let r: Rat = s.parse().ok()?;
    if r.denom() == &BigInt::from(0) {
        return None;
    }
    Some(r)
}

/// `1/n!` as an exact rational.
pub fn inv_factorial(n: usize) -> Rat {
    let mut f = BigInt::from(1);
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    Rat::new(BigInt::from(1), f)
}
