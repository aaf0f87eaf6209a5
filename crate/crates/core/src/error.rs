use thiserror::Error;

/// Errors surfaced by the library. Validation errors name the violated
/// constraint so the CLI can report them verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("operation requires a singular variety (p < q); got p = q = {0}")]
    SmoothCase(i64),

    #[error("operation requires the toric case: (q - p) must divide m")]
    NonToric,

    #[error("empty weight space at (n, d) = ({n}, {d}); scan cap c <= {cap} reached")]
    EmptyWeight { n: i64, d: i64, cap: i64 },

    #[error("degree bound {given} is below the maximal generator degree {needed}")]
    DegreeBound { given: u32, needed: u32 },

    #[error("generator is not weight-homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("syzygy constraints change between degree bounds {d} and {next}; result is bound-sensitive")]
    UnstableSyzygies { d: u32, next: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} must be nonzero")]
    ZeroArgument(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
