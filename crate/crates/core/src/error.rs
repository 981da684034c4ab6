use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("component {component} = {value} is outside [0, 1]")]
    OutOfRange { component: &'static str, value: f64 },

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown t-norm family {0:?} (expected godel, product, lukasiewicz or frank:<s>)")]
    UnknownFamily(String),

    #[error(
        "unknown definedness profile {0:?} (expected rational, sine, quadratic, piecewise or sqrt)"
    )]
    UnknownProfile(String),

    #[error("unknown scheme {0:?} (expected tetra, penta-sat or penta-def)")]
    UnknownScheme(String),

    #[error("unknown operator {0:?} (expected union, intersection or negation)")]
    UnknownOperator(String),

    #[error("line {line}: {reason}")]
    Parse { line: u64, reason: String },

    #[error("line {line}: duplicate id {id:?}")]
    DuplicateId { line: u64, id: String },

    #[error("line {line}: {source}")]
    Record {
        line: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("binary operator requires a right-hand operand")]
    MissingOperand,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 2 for I/O failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 2,
            _ => 1,
        }
    }
}
