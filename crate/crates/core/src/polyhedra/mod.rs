//! Exact rational polyhedra: vertex enumeration, the symbolic polyhedron and `δ`,
//! and the chamber polyhedra `C_m`, `P_m`.

mod polyhedron;
mod symbolic;

pub use polyhedron::{Constraint, RationalPolyhedron, Relation};
pub use symbolic::{
    chamber_polytope, delta_invariant, delta_of, p_polyhedron, symbolic_polyhedron, witness_chamber,
    DeltaResult, WitnessChamber,
};
