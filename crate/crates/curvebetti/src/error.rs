use thiserror::Error;

/// Errors surfaced by the library. `ScanTruncated` and `WindowBreach` map to
/// CLI exit code 3; everything else is invalid input (exit code 2).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generators are not coprime (gcd = {gcd})")]
    NotCoprime { gcd: u64 },

    #[error("{value} is not representable: {reason}")]
    NotRepresentable { value: u64, reason: String },

    #[error("vertex {0} out of range (complexes support vertices 0..=15)")]
    InvalidVertex(usize),

    #[error("betti table is empty")]
    EmptyTable,

    #[error("scan truncated at degree {reached}; raise the degree cap to at least {needed}")]
    ScanTruncated { reached: u32, needed: u32 },

    #[error("window breach at (l = {l}, r = {r}): {detail}")]
    WindowBreach { l: u32, r: u64, detail: String },

    #[error("generator weight mismatch in family {family}[{param}]: {lhs} != {rhs}")]
    WeightMismatch {
        family: String,
        param: u64,
        lhs: u64,
        rhs: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
