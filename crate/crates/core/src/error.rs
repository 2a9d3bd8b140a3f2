use thiserror::Error;

use crate::rootsys::SimpleType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {kind}{rank}: {reason}")]
    InvalidType {
        kind: SimpleType,
        rank: usize,
        reason: &'static str,
    },
    #[error("cannot parse type string {0:?} (expected e.g. A2, G2 or A1xB3)")]
    TypeSyntax(String),
    #[error("a root system needs at least one simple factor")]
    EmptySystem,
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("root index {0} out of range")]
    RootOutOfRange(usize),
    #[error("simple root index {0} out of range")]
    NotSimple(usize),
    #[error("factor index {index} out of range ({count} factors)")]
    FactorOutOfRange { index: usize, count: usize },
    #[error("the point set must be nonempty")]
    EmptySet,
    #[error("alcove reduction exceeded its iteration cap of {0} steps")]
    IterationCap(usize),
    #[error("not a standard parahoric: some filtration exponent is negative")]
    NotStandard,
    #[error("descriptors belong to different root systems")]
    MismatchedSystems,
    #[error("upper descriptor does not contain the lower one")]
    NotContained,
    #[error("order d must be positive")]
    ZeroOrder,
    #[error("parabolic weight {0} outside [0, 1]")]
    WeightOutOfRange(String),
    #[error("invalid exponent {a}/{n}: need n >= 1 and |a| < n")]
    InvalidExponent { a: i64, n: i64 },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
