//! Exact Maurer-Cartan twisting for L∞ algebras and formal cdgas, with
//! rational models and homotopy groups of function spaces at finite truncation.
//!
//! All internal degrees are homological. L∞ structures are stored as a
//! degree −1 derivation of the completed symmetric algebra on the
//! desuspended dual, given on generators.

pub mod cohomology;
pub mod graded;
pub mod linalg;
pub mod mc;
pub mod models;
pub mod structures;

mod error;

pub use error::{Error, Result};
