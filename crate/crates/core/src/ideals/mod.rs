//! Monomial ideals, the Stanley-Reisner correspondence, symbolic powers,
//! contraction, and multigraded Betti numbers.

mod betti;
mod monomial;
mod symbolic;

pub use betti::{
    betti_table, betti_table_with, pd_quotient_via_betti, reg_via_betti, upper_koszul_facets,
    BettiTable,
};
pub use monomial::{contraction, stanley_reisner, Contraction, MonomialIdeal};
pub use symbolic::{symbolic_contains, symbolic_power};
pub(crate) use symbolic::advance;
