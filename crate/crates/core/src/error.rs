use thiserror::Error;

/// Errors raised by the library. Failed identity checks are not errors; they
/// come back as reports carrying witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text or an unknown variable name.
    #[error("format error: {0}")]
    Format(String),
    /// A basis symbol or index that does not belong to the algebra.
    #[error("basis error: {0}")]
    Basis(String),
    /// Sizes or ranks that do not fit together.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// Division by zero, inversion of a non-unit.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// Values living over different field extensions.
    #[error("context error: {0}")]
    Context(String),
    /// An operation was called on input that does not meet its requirements.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An element lies outside a declared subalgebra.
    #[error("membership error: {0}")]
    Membership(String),
    /// An action does not annihilate the relations of a torsion summand.
    #[error("action not well defined: {element} on generator {generator}: residual {residual}")]
    WellDefinedness {
        element: String,
        generator: String,
        residual: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
