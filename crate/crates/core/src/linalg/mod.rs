//! Exact linear algebra over GF(3).
//!
//! Everything here is integer arithmetic on the representatives 0, 1, 2. Row operations are
//! applied in a fixed order, so pivot columns and kernel bases are reproducible.

mod field;
mod matrix;

pub use field::Gf3;
pub use matrix::{Gf3Matrix, ParametricSolution, RrefResult};
