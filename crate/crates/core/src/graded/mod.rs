//! Graded spaces, Koszul signs, symmetric words and free graded Lie algebras.

mod deg;
mod lie;
mod lin;
mod sign;
mod space;
mod sym;

pub use deg::{sign_of, tail_free_range, Deg, DegRange, TruncProfile};
pub use lie::{lie_bracket, lyndon_basis, lyndon_words, witt_dims, FreeLie, LieWord};
pub use lin::Lin;
pub use sign::{koszul_sign, parity_sign};
pub use space::{GradedSpace, Generator};
pub use sym::{
    format_poly, poly_deg, poly_derive, poly_mul, poly_pow, poly_substitute, sym_normalize, sym_normalize_names,
    Poly, SymWord,
};
