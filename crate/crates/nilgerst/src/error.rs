//! Crate-wide error type.

use crate::exterior::Multivector;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different algebra models")]
    ModelMismatch,

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(String, String, String),

    #[error("J^2 != -Identity on basis vector {0}")]
    NotComplexStructure(String),

    #[error("complex structure is not abelian: [J{0}, J{1}] != [{0}, {1}]")]
    NotAbelian(String, String),

    #[error(
        "Lie algebra is not nilpotent: lower central series stabilizes at \
         dimension {dim} after {steps} steps (e.g. {witness} stays in the series)"
    )]
    NotNilpotent {
        dim: usize,
        steps: usize,
        witness: String,
    },

    #[error("invalid algebra specification: {0}")]
    BadSpec(String),

    #[error("bidegree ({p},{q}) is out of range for this model")]
    BidegreeOutOfRange { p: usize, q: usize },

    #[error("bidegree ({p},{q}) is not covered by this Hodge split")]
    UncoveredBidegree { p: usize, q: usize },

    #[error("element is not dbar-exact; its harmonic component is {harmonic}")]
    NotExact { harmonic: Box<Multivector> },

    #[error("gamma = 1 is a pole of the closed-form solution; choose a seed with gamma != 1")]
    SingularParameter,

    #[error("seed is not harmonic (its harmonic projection differs from the seed)")]
    SeedNotHarmonic,

    #[error("seed must be homogeneous of total degree 2")]
    SeedWrongDegree,

    #[error(
        "bracket residual at order {0} is not dbar-closed; \
         the bracket or differential tables are inconsistent"
    )]
    ResidualNotClosed(usize),

    #[error("operation requires a Kodaira-type model")]
    NotKodaira,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid run configuration: {0}")]
    BadConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
