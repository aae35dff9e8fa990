//! Declarative model files, function space models and reports.

pub mod commands;
mod fnspace;
mod report;
mod spec;
mod terms;

pub use fnspace::{
    agreement, cross_check, cross_check_routes, function_space_model, harrison_route, pi0_verify, pi_groups,
    sphere_lie, sullivan_model, twisted_route,
};
pub use report::{Agreement, BettiRow, BettiSection, CompareRow, PiRow, Report, Verdict};
pub use spec::{construct_object, Grading, MapKind, MapObject, MapSpec, McSpec, Model, ModelSpec, Object, ObjectKind, ObjectSpec, TruncSpec};
pub use terms::{parse_generator, parse_linear, parse_poly, parse_terms, Term};
