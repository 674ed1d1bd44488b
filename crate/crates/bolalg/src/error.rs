use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
///
/// Checker verdicts are never errors: a failing axiom is a normal report
/// entry. Errors are reserved for malformed input, shape mismatches and
/// violated construction preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid rational literal `{text}`: {reason}")]
    Rational { text: String, reason: String },

    #[error("line {line}: {msg}")]
    FileFormat { line: usize, msg: String },

    #[error("syntax error at position {pos}: {msg}")]
    IdentitySyntax { pos: usize, msg: String },

    #[error("undeclared symbol `{name}` at position {pos}")]
    UndeclaredSymbol { name: String, pos: usize },

    #[error("unbound symbol `{0}`")]
    UnboundSymbol(String),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ill-defined quotient in slot {slot}: witness {witness}")]
    IllDefinedQuotient { slot: String, witness: String },

    #[error("not a morphism: {0}")]
    NotAMorphism(String),

    #[error("precondition `{condition}` failed: {witness}")]
    Precondition { condition: String, witness: String },

    #[error("empty algebra list")]
    EmptyList,

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
