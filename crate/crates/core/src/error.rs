use thiserror::Error;

use crate::algebra::Mode;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mode mismatch: {left:?} vs {right:?}")]
    ModeMismatch { left: Mode, right: Mode },
    #[error("no numeric value assigned to symbol {0}")]
    MissingAssignment(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("Laurent polynomial has a negative power (valuation {0})")]
    NegativeValuation(i64),
    #[error("degree {degree} exceeds declared degree {declared}")]
    DegreeExceeded { degree: i64, declared: i64 },
    #[error("Verblunsky coefficient alpha_{index} has modulus {modulus} >= 1")]
    OutsideDisk { index: usize, modulus: f64 },
    #[error("Verblunsky index {0} is out of range")]
    IndexOutOfRange(i64),
    #[error("Verblunsky coefficient alpha_{0} is zero")]
    ZeroVerblunsky(usize),
    #[error("path enumeration exceeded the cap of {0} paths")]
    CapExceeded(usize),
    #[error("invalid lattice path: {0}")]
    InvalidPath(String),
    #[error("negative beta coefficient in {0}")]
    PositivityViolation(String),
    #[error("unsupported family request: {0}")]
    UnsupportedFamily(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("cannot parse {0:?} as a complex literal")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
