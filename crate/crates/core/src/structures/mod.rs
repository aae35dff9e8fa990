//! L∞ algebras, dglas, formal cdgas, morphisms, covers and minimal models.

mod cdga;
mod cover;
mod linfty;
mod minimal;
mod morphism;

pub use cdga::{format_vector, CdgaMap, FiniteCdga, FiniteMap, FreeCdga, Vector};
pub use cover::{connected_cover, restrict_subspace, square_zero_extension};
pub use linfty::{check_linfty, DglaTable, LinftyAlg};
pub use minimal::minimal_model;
pub use morphism::{check_linfty_map, LinftyMap};
