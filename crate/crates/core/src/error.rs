use thiserror::Error;

/// Degenerate geometric contact that the drawing model rules out.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DegeneracyError {
    #[error("polylines overlap along a positive-length arc near {witness}")]
    Overlap { witness: String },
    #[error("polyline passes through the other polyline's endpoint at {witness}")]
    EndpointPassThrough { witness: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Degeneracy(#[from] DegeneracyError),

    /// The grower found fewer than two crossing-free candidate edges at a
    /// degree-one vertex, which cannot happen for a valid simple complete
    /// drawing.
    #[error("guarantee violation at vertex {vertex}: candidate set has {found} < 2 edges")]
    GuaranteeViolation { vertex: usize, found: usize },

    /// The per-path crossing counts of an edge between two cylinder
    /// columns do not form the one-side-all-once / other-side-never
    /// dichotomy.
    #[error("claim violation for edge between columns {i} and {j}: {detail}")]
    ClaimViolation { i: usize, j: usize, detail: String },

    /// A transformation that must preserve the crossing-pair set did not.
    #[error("crossing-equivalence violation: {0}")]
    EquivalenceViolation(String),

    #[error("instance generation failed after {attempts} attempts: {detail}")]
    GenerationFailure { attempts: usize, detail: String },

    #[error("search node limit of {limit} exceeded")]
    LimitExceeded { limit: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("drawing failed simplicity validation: {0}")]
    NotSimple(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
