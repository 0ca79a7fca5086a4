use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} is incident to edge {edge} more than once")]
    DuplicateIncidence { vertex: usize, edge: usize },

    #[error("incidence sign must be +1 or -1, got {0}")]
    BadSign(i64),

    #[error("{kind} index {index} out of range (count {count})")]
    IndexOutOfRange {
        kind: &'static str,
        index: usize,
        count: usize,
    },

    #[error("duplicate {kind} label {label:?}")]
    DuplicateLabel { kind: &'static str, label: String },

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("spectrum is empty")]
    EmptySpectrum,

    #[error("spectra have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("matrix identity violated: {0}")]
    InternalIdentityViolation(String),

    #[error("hypergraph has no vertices")]
    EmptyVertexSet,

    #[error("moment order k must be at least 1, got {0}")]
    BadK(u32),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("cannot weakly delete the last vertex")]
    LastVertex,

    #[error("hypergraph has no edges")]
    NoEdges,

    #[error("hypergraph is not linear")]
    NotLinear,

    #[error("edge {0} has fewer than 2 vertices")]
    SmallEdgePresent(usize),

    #[error("oriented hypergraphs have different underlying hypergraphs")]
    DifferentUnderlying,

    #[error("exhaustive switching search limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid generator configuration: {0}")]
    BadConfig(String),

    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error: {0}")]
    Schema(String),
}
