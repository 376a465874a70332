use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("molecule `{name}`: {field} must be positive, got {value}")]
    InvalidField {
        name: String,
        field: &'static str,
        value: f64,
    },

    #[error("duplicate molecule name `{0}`")]
    DuplicateMolecule(String),

    #[error("unknown molecule `{0}`")]
    UnknownMolecule(String),

    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("integrand is not finite at x = {x}")]
    NonFinite { x: f64 },

    #[error("quadrature did not converge after {subdivisions} subdivisions (value {value}, error estimate {estimate})")]
    NoConvergence {
        value: f64,
        estimate: f64,
        subdivisions: usize,
    },

    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),

    #[error("unsupported method: {0}")]
    Unsupported(String),

    #[error("q = {0} is too close to 1; use the Shannon entropy instead")]
    DegenerateQ(f64),

    #[error("invalid request: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
