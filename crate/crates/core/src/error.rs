use thiserror::Error;

/// Errors raised by the library for malformed input or violated preconditions.
///
/// Mathematical failures that are expected outcomes of a check (a fan that is
/// not smooth, a cone pair that intersects badly) are reported through
/// validation reports instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("the zero vector has no primitive representative")]
    ZeroVector,

    #[error("sublattice is not saturated (SNF diagonal contains {0})")]
    NotSaturated(String),

    #[error("invalid torsion coefficient {0}; coefficients must be positive")]
    InvalidTorsion(String),

    #[error("index {index} out of range (must be < {bound}) in {context}")]
    IndexOutOfRange {
        index: usize,
        bound: usize,
        context: String,
    },

    #[error("too many rays ({0}); at most 32 are supported")]
    TooManyRays(usize),

    #[error("image of e_{0} is not contained in the support of the fan")]
    ImageOutsideSupport(usize),

    #[error("ray {0} of the fan contains no image vector")]
    RayWithoutImage(usize),

    #[error("hypotheses not satisfied: {0}")]
    Hypotheses(String),

    #[error("cokernel of the lattice map is infinite; reduce with split_infinite first")]
    InfiniteCokernel,

    #[error("variable list mismatch: {0} vs {1} variables")]
    VariableMismatch(usize, usize),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(usize),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("limit exceeded: {0}")]
    Limit(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
