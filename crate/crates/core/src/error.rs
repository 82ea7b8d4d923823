use crate::field::FieldSpec;

/// Errors raised by the arithmetic layers and the decoders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live in different fields ({0} vs {1})")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("value {value} is not an element of {field}")]
    NotInField { value: u64, field: FieldSpec },

    #[error("duplicate evaluation point {0}")]
    DuplicatePoint(u32),

    #[error("invalid code parameters: {0}")]
    InvalidCode(String),

    #[error("message has degree {degree}, must be below k = {k}")]
    MessageTooLong { degree: usize, k: usize },

    #[error("word has length {got}, block length is {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("error weight {weight} out of range for block length {n}")]
    WeightOutOfRange { weight: usize, n: usize },

    #[error("exhaustive search over {size} messages exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("the zero vector has no leading term")]
    ZeroVector,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("no codeword found within the radius cap{}", cap_suffix(.max_radius))]
    RadiusCapExceeded { max_radius: Option<usize> },

    #[error("interpolation parameters infeasible: {0}")]
    Infeasible(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

fn cap_suffix(r: &Option<usize>) -> String {
    match r {
        Some(t) => format!(" (searched up to radius {t})"),
        None => " (no admissible level)".into(),
    }
}
