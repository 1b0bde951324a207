use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("cannot parse braid token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("index {index} out of range (expected {lo}..={hi})")]
    OutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("cannot include a {from}-strand braid at offset {offset} into {target} strands")]
    TargetTooSmall {
        from: usize,
        target: usize,
        offset: usize,
    },

    #[error("substitution point must be nonzero")]
    ZeroSubstitution,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not invertible over the Laurent ring (determinant {0})")]
    NotInvertible(String),

    #[error("no invariant form found (best residual {residual:.3e})")]
    NoInvariantForm { residual: f64 },

    #[error("form is not positive definite (min eigenvalue {min_eig:.3e})")]
    Indefinite { min_eig: f64 },

    #[error("parameters must have unit modulus (|q| = {q_abs}, |t| = {t_abs})")]
    NotUnitModulus { q_abs: f64, t_abs: f64 },

    #[error("multiset difference not contained: {0}")]
    NotContained(String),

    #[error("unsupported diagram: {0}")]
    UnsupportedDiagram(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("weyl product is not integral: {0}")]
    NonIntegral(String),

    #[error("invalid subgroup family: {0}")]
    InvalidFamily(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
