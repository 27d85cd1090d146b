use thiserror::Error;

/// Errors raised across the crate. Domain failures (degenerate parameters,
/// boundary violations, ...) are distinguished from input failures (expression
/// or document syntax) so the command line can map them to exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("the order m of q must be at least 3 (got {0})")]
    OrderTooSmall(usize),

    #[error("omega must be a fourth root of unity")]
    InvalidOmega,

    #[error("weight parameter lambda must be nonzero")]
    ZeroWeight,

    #[error("interior coefficient c_{p} vanishes; the family is degenerate at this size")]
    DegenerateInterior { p: usize },

    #[error("degenerate parameter: interior coefficient c_{p} vanishes")]
    DegenerateParameter { p: usize },

    #[error("boundary condition (N)_q (mu+1-N)_q = 0 fails; the ladder relations do not close")]
    BoundaryViolation,

    #[error("m must be even for the half-m family")]
    MOdd,

    #[error("K is not diagonal; weight analysis is only available in a weight basis")]
    NonDiagonalK,

    #[error("K is singular; not a representation of the algebra")]
    SingularK,

    #[error("K eigenvalues do not lie in a single q-power orbit")]
    NotSingleOrbit,

    #[error("zero vector cannot generate a subspace")]
    ZeroVector,

    #[error("subspace is not invariant under the generator action")]
    NotInvariant,

    #[error("representation is zero-dimensional")]
    EmptyRepresentation,

    #[error("operation requires certified irreducible representations")]
    NotIrreducible,

    #[error("isomorphism criterion applies to non-highest-weight parameters only (a*b != 0)")]
    HighestWeightParams,

    #[error("numeric check exceeded tolerance: max deviation {deviation:e}")]
    ToleranceExceeded { deviation: f64 },

    #[error("family does not admit a square-root normal form")]
    UnsupportedFamily,

    #[error("schema error: {0}")]
    Schema(String),

    #[error("conductor mismatch: m = {m} requires conductor {expected}, document has {found}")]
    ConductorMismatch {
        m: usize,
        expected: usize,
        found: usize,
    },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("classification disagrees with the predicted dimension set: {0}")]
    TheoremMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
