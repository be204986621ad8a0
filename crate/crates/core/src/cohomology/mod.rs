//! Degree complexes and Takayama's formula for the local cohomology of
//! `R / I_Δ^(n)`, giving a-invariants and the regularity of symbolic powers.
//!
//! A graded piece `H^i_m(R/I)_α` has dimension `dim H̃_{i-|G_α|-1}(Δ_α)`, where
//! `G_α = {j : α_j < 0}`. The maximization over `α ∈ Z^r` reduces to a finite box:
//!
//! * `Δ_α` depends on `α` only through `G_α` and the nonnegative coordinates,
//!   so negative coordinates are taken to be `-1`, which maximizes `|α|`;
//! * if `α_j ≥ n` for some `j ∉ G_α`, every qualifying facet contains `j`,
//!   so `Δ_α` is a cone or void and contributes nothing; hence `α_j ≤ n - 1`;
//! * `G_α ∉ Δ` makes the link, hence `Δ_α`, void.

mod degree;
mod takayama;

pub use degree::{degree_complex, degree_complex_direct, local_coh_dim, DegreeVector};
pub use takayama::{
    a_invariants, a_invariants_with, nonvanishing_degrees, nonvanishing_degrees_with, reg_links, reg_links_with,
    reg_symbolic, reg_symbolic_with, reg_symbolic_with_witness, AInvariantProfile, RegWitness,
};
