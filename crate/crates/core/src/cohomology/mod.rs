//! Chevalley-Eilenberg and Harrison complexes as twisted structures, with
//! literal cochain-level oracles.

mod ce;
mod classical;
mod complex;
mod harrison;

pub use ce::{ce_coefficients, ce_complex, ce_mc_of_map, ce_of};
pub use classical::{ce_classical, harrison_classical, LieTable, ModuleTable};
pub use complex::{cohomology_table, TwistedComplex};
pub use harrison::{harrison_complex, harrison_lie_of, harrison_mc, HarrisonLie};

/// Twisted Chevalley-Eilenberg complex.
pub type CEComplex = TwistedComplex;
/// Twisted Harrison complex.
pub type HarrComplex = TwistedComplex;
