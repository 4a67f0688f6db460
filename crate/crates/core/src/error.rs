use thiserror::Error;

use crate::asm::AsmError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {value} is not representable on the exponent grid of scale {scale}")]
    GridViolation { value: String, scale: u32 },
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{what}: n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { what: &'static str, n: usize, bound: usize },
    #[error("root of unity of order {root} does not lie in Q(zeta_{field})")]
    NotInField { root: u32, field: u32 },
    #[error("invalid alternating sign matrix: {0}")]
    InvalidAsm(#[from] AsmError),
    #[error("singular entry: {0}")]
    Singular(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("result is not rational: {0}")]
    NotRational(String),
    #[error("parse error: {0}")]
    Parse(String),
}
