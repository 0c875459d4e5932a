use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radius {0} is outside [0, 1)")]
    RadiusOutOfRange(f64),

    #[error("inner series has nonzero constant term {0:e}")]
    NonzeroInnerConstant(f64),

    #[error("coefficient {index} is not finite")]
    NonFiniteCoefficient { index: usize },

    #[error("invalid tail bound (C = {c}, rho = {rho})")]
    InvalidTail { c: f64, rho: f64 },

    #[error("tail bound is not certified at radius {0}")]
    UncertifiedTail(f64),

    #[error("parameter {0} must lie in the open unit disk")]
    ParameterOutOfDisk(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("constant term {0} is not normalized to 1")]
    NotNormalized(String),

    #[error("value {value} lies outside the codomain {codomain}")]
    OutsideCodomain { codomain: &'static str, value: String },

    #[error("the exterior-disk inequality is spherical; use the spherical margin")]
    SphericalCodomain,

    #[error("margin is already negative at r = 0 ({0})")]
    NoBracket(f64),

    #[error("no violation found on the supplied grid")]
    NoViolationFound,

    #[error("zero vector")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector norm {0} exceeds the closed unit ball")]
    OutsideBall(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
