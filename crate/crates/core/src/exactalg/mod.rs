//! Exact linear algebra over the rationals and `GF(p)`, and reduced simplicial homology.

pub(crate) mod elimination;
mod field;
mod homology;
mod matrix;

pub use field::FieldSpec;
pub use homology::{reduced_euler_characteristic, reduced_homology_dims, HomologyCache};
pub use matrix::{fraction_string, parse_fraction, rational, rational_int, ExactMatrix, Rational};
