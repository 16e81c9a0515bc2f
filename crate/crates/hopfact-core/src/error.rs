//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("Hopf algebra axioms failed: {0}")]
    AxiomsFailed(String),

    #[error("input is not semisimple: counit vanishes on the integral space")]
    NotSemisimple,

    #[error("left integral space has dimension {0}, expected 1")]
    NoIntegral(usize),

    #[error("subspace is not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(String),

    #[error("Hopf subalgebra is not normal")]
    NotNormal,

    #[error("matched pair validation failed: {0}")]
    InvalidMatchedPair(String),

    #[error("(A, L) is not a factorization: {0}")]
    NotAFactorization(String),

    #[error("intersection A ∩ L is not trivial (dimension {0})")]
    IntersectionNotTrivial(usize),

    #[error("factorization has kind {found}, operation requires {required}")]
    WrongKind { required: String, found: String },

    #[error("projection pair invalid: {0}")]
    InvalidProjections(String),

    #[error("decompositions must be of the same algebra")]
    SameAlgebraRequired,

    #[error("no Hopf algebra isomorphism found between the given factors")]
    NoIsomorphismFound,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("structural invariant violated (bug or invalid input): {0}")]
    Structure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
