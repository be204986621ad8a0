pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactalg;
pub mod extended;
pub mod cohomology;
pub mod ideals;
pub mod invariants;
pub mod io;
pub mod polyhedra;
pub mod verify;

pub use error::{Error, Result};
pub use extended::ExtInt;
