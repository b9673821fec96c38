use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A shape or size does not match what an operation requires.
    #[error("size mismatch in {context}: expected {expected}, got {actual}")]
    SizeMismatch {
        context: String,
        expected: usize,
        actual: usize,
    },

    /// Inconsistent configuration detected before any compute.
    #[error("configuration error: {0}")]
    Config(String),

    /// A matrix that must be positive definite failed its Cholesky
    /// factorization.
    #[error("definiteness error: {0}")]
    Definiteness(String),

    /// An implicit step matrix became singular.
    #[error("singular step matrix at dt = {dt}; try a smaller step size")]
    SingularStep { dt: f64 },

    /// A gradient or Jacobian entry became NaN or infinite.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Scaling statistics are degenerate (max == min) for a component.
    #[error("degenerate scaling for component {component} of {field}: max == min")]
    DegenerateScaling { field: String, component: usize },

    /// Numerical failure during training or evaluation.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialization(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serialization(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(context: &str, expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::SizeMismatch {
            context: context.to_string(),
            expected,
            actual,
        });
    }
    Ok(())
}
