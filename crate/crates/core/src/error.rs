use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} out of range for degree {n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: Partition,
        left_size: usize,
        right: Partition,
        right_size: usize,
    },

    #[error("degree {n} exceeds the guardrail maximum {max} (set PERMSPECTRA_MAX_N and acknowledge to override)")]
    GuardrailExceeded { n: usize, max: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid coset spec: {0}")]
    InvalidCosetSpec(String),

    #[error("invalid weighted Cayley spec: {0}")]
    InvalidSpec(String),

    #[error("t = {t} out of range for n = {n}")]
    TOutOfRange { n: usize, t: usize },

    #[error("degree {n} too small; need at least {min}")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("bound is vacuous: {0}")]
    VacuousBound(String),

    #[error("|lambda_M| equals |lambda_N|; the stability bound has a zero denominator")]
    DegenerateDenominator,

    #[error("tau violates the side conditions: {0}")]
    TauConditions(String),

    #[error("support contains the odd class {0}")]
    OddClassInSupport(Partition),

    #[error("family is empty")]
    EmptyFamily,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("serialization failed: {0}")]
    Serialization(String),

    #[error("integer overflow in {0}")]
    Overflow(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
