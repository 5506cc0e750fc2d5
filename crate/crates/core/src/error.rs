use thiserror::Error;

/// Errors raised by the exact arithmetic kernel and the operators built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("pole at specialization point: denominator {0} vanishes")]
    Pole(String),
    #[error("degenerate parameters: s^2 + 4t = 0")]
    Degenerate,
    #[error("series has no invertible constant term")]
    NonUnitConstant,
    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("unsupported operand: {0}")]
    Unsupported(String),
    #[error("vanishing Pochhammer denominator at index {0}")]
    VanishingDenominator(usize),
    #[error("unknown specialization `{0}`")]
    UnknownSpecialization(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
