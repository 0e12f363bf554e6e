use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("non-proper cone: generator {index} pairs to {pairing} with the functional")]
    NonProperCone { index: usize, pairing: i64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-generic coweight: weight {0} pairs to zero")]
    NonGenericCoweight(String),

    #[error("table invariant violated: {0}")]
    InvariantViolation(String),

    #[error("d-cutoff violated: lambda={lambda}, d={d} gave {value}")]
    CutoffViolated { lambda: u32, d: u32, value: i64 },

    #[error("negative multiplicity {value} at lambda={lambda}")]
    NegativeMultiplicity { lambda: u32, value: i64 },

    #[error("point ({c},{d}) is not in C({a},{b})")]
    NotInC { c: u64, d: u64, a: u64, b: u64 },

    #[error("method {method} does not apply to orbit {orbit}")]
    MethodNotApplicable { method: &'static str, orbit: &'static str },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
