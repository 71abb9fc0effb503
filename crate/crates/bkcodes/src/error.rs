//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus {0} is not irreducible")]
    NotIrreducible(String),
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("field size p^r = {q} exceeds the supported bound 2^16")]
    UnsupportedFieldSize { q: u64 },
    #[error("k = {k} is out of range (0 <= k <= 16)")]
    KOutOfRange { k: usize },
    #[error("operands belong to different field or ring specs")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("element is not a unit")]
    NotAUnit,
    #[error("empty generator list")]
    EmptyGeneratorList,
    #[error("generator images are not a bijection: target v{target} is repeated")]
    NotBijective { target: usize },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("polynomials live in different skew rings")]
    RingMismatch,
    #[error("divisor has a non-unit leading coefficient")]
    NonUnitLeadingCoefficient,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("generator degree {degree} is not below n = {n}")]
    DegreeTooLarge { degree: usize, n: usize },
    #[error("component {component}: shifted component leaves its target component")]
    CompatibilityViolation { component: usize },
    #[error("code has {size} codewords, over the enumeration budget {budget}; use the information-set algorithm instead")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
