use crate::graded::{DegRange, TruncProfile};
use crate::linalg::{homology_dims, BettiTable, ComplexSlice};
use crate::mc::{shift_complete, ALinfty, Scalars};
use crate::structures::LinftyAlg;
use crate::Result;

/// A twisted structure together with the chain complex of its linear part.
#[derive(Clone, Debug)]
pub struct TwistedComplex {
    pub twisted: ALinfty,
    pub algebra: LinftyAlg,
    pub scalars: Scalars,
    pub window: DegRange,
    pub slice: ComplexSlice,
}

impl TwistedComplex {
    /// Restrict `twisted` and slice its linear part over the profile window.
    /// `coeff_complete` is the range where the coefficient algebra is exact.
    pub(crate) fn build(
        twisted: ALinfty,
        scalars: Scalars,
        coeff_complete: DegRange,
        trunc: &TruncProfile,
    ) -> Result<TwistedComplex> {
        let algebra = twisted.restrict(scalars)?;
        let u_degs: Vec<i32> = twisted.alg.space().degs().iter().map(|d| d.0).collect();
        let complete = algebra
            .complete()
            .intersect(&shift_complete(coeff_complete, u_degs.into_iter()));
        let algebra = algebra.with_complete(complete);
        let window = trunc.window();
        let (lo, hi) = (window.lo.expect("bounded"), window.hi.expect("bounded"));
        let slice = algebra.complex(DegRange::new(lo - 1, hi + 1));
        Ok(TwistedComplex { twisted, algebra, scalars, window, slice })
    }
}

/// Homology of the complex; degrees are homological.
pub fn cohomology_table(c: &TwistedComplex) -> Result<BettiTable> {
    let mut t = homology_dims(&c.slice)?;
    t.entries.retain(|n, _| c.window.contains(*n));
    Ok(t)
}
