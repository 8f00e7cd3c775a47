use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("monomial has {got} exponents, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("variable index {index} out of range for {m} variables")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("degree {degree} exceeds the variable count {m}")]
    DegreeExceedsVariables { degree: u32, m: usize },

    #[error("{m} variables is outside the stable range (needs at least {required})")]
    OutsideStableRange { required: usize, m: usize },

    #[error("n must be at least 3, got {0}")]
    InvalidN(usize),

    #[error("expected {expected} exponents, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("exponent at index {index} is negative: {value}")]
    NegativeExponent { index: usize, value: i64 },

    #[error("value {0} is not a non-negative integer")]
    NotANaturalNumber(String),

    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error("fixture line {line}: {message}")]
    Fixture { line: usize, message: String },
}
