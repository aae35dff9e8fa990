//! Maurer-Cartan elements with finite cdga coefficients, homotopies over the
//! interval, the gauge action, and twisting.

mod elem;
mod gauge;
mod interval;
mod tensor;
mod twist;

pub use elem::{canonical_mc, mc_check, mc_from_map, mc_to_map, mc_verify, MCElem};
pub use gauge::{gauge_act, GaugeParam, TensorDgla, TensorVec};
pub use interval::{homotopy_verify, interval_algebra, IntervalElem, IntervalTerm};
pub use tensor::{TElem, TKey, TensorRing};
pub use twist::{
    push_forward, shift_complete, twist, twist_direct, twist_morphism, twist_morphism_linear, ALinfty, ALinftyMap, Scalars,
};
