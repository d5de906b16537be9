use alloc::string::String;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    /// A configured size or precision bound would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    /// Even root of a negative quantity.
    #[error("branch error: {0}")]
    Branch(String),
    /// A root of a multi-term radicand appears below the top level.
    #[error("not flattenable: {0}")]
    NotFlattenable(String),
    #[error("invalid state: {0}")]
    State(String),
}

pub type Result<T> = core::result::Result<T, Error>;
