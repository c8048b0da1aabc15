use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A pair of partitions that does not describe a skew shape.
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// Malformed shape, ribbon or monomial text. `token` names the offending input.
    #[error("cannot parse {what} {input:?}: unexpected {token:?}")]
    Parse {
        what: &'static str,
        input: String,
        token: String,
    },

    /// An enumeration or truncation bound that cannot be honoured.
    #[error("invalid bound: {0}")]
    InvalidBound(String),

    /// An argument outside the domain of an operation.
    #[error("invalid argument: {0}")]
    InvalidArg(String),

    /// Raw coefficient data that is not constant on permutation orbits.
    #[error("not symmetric: {0}")]
    NotSymmetric(String),

    /// Two truncated polynomials that cannot be combined term by term.
    #[error("incomparable truncations: {0}")]
    IncomparableTruncation(String),

    /// Too few variables for an exact change of basis.
    #[error("insufficient variables: {0}")]
    InsufficientVariables(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
