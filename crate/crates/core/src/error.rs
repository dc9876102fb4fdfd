use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the geometric layers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero {0}")]
    DivisionByZero(&'static str),

    #[error("mixed coefficient fields: {0}")]
    MixedFields(String),

    #[error("reducible modulus {0}: it has rational roots")]
    ReducibleModulus(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("indeterminate value 0/0: {0}")]
    Indeterminate(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("point requires an algebraic extension of degree greater than 2: {0}")]
    ExtensionTooLarge(String),

    #[error("{0} is not defined on this chart")]
    OutsideChart(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("blowup center {0} was already blown up")]
    RepeatedCenter(String),

    #[error("parameter in degeneracy set: {0}")]
    InDegeneracySet(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
