use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set [1..{r}]")]
    VertexOutOfRange { vertex: usize, r: usize },

    #[error("set {set:?} lists vertex {vertex} more than once")]
    RepeatedVertex { set: Vec<usize>, vertex: usize },

    #[error("not an antichain: {smaller:?} is contained in {larger:?}")]
    NotAntichain {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },

    #[error("edge {0:?} does not have exactly two distinct endpoints")]
    BadGraphEdge(Vec<usize>),

    #[error("hypergraph edges must be nonempty")]
    EmptyHyperedge,

    #[error("ground set size {r} exceeds the supported maximum {max}")]
    GroundSetTooLarge { r: usize, max: usize },

    #[error("the void complex is not allowed here")]
    VoidComplex,

    #[error("the full simplex is not allowed here (its Stanley-Reisner ideal is zero)")]
    FullSimplex,

    #[error("hypergraph has no edges")]
    Edgeless,

    #[error("the zero ideal and the unit ideal are not allowed here")]
    TrivialIdeal,

    #[error("exponent vector of length {got} does not match r = {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("contraction by the full variable set is undefined")]
    FullContraction,

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("{kind} instances are limited to r <= {limit} (got {r})")]
    GuardRail {
        kind: &'static str,
        limit: usize,
        r: usize,
    },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("{0}")]
    Invalid(String),
}
