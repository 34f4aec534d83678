use alloc::string::String;
use core::fmt;

/// Errors raised while building or querying the algebraic structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Cartan matrix or type/rank combination is not a supported finite type.
    InvalidCartan(String),
    /// A root vector that is not in the root system was supplied.
    NotARoot(String),
    /// Weyl group enumeration would exceed the configured cutoff.
    CutoffExceeded { order: u64, cutoff: u64 },
    /// Structure-constant construction failed an internal consistency check.
    Inconsistent(String),
    /// Operation is not defined for this family (e.g. defining rep of G2).
    Unsupported(String),
    /// Partition fails the validity constraints of the requested type.
    InvalidPartition(String),
    /// A matrix expected to be nilpotent was not.
    NotNilpotent { power: usize, rank: usize },
    /// Totals of two partitions differ where equality is required.
    TotalMismatch { left: u64, right: u64 },
    /// Input word or permutation is malformed.
    BadInput(String),
    /// Robinson-Schensted convention calibration found no consistent choice.
    CalibrationFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidCartan(msg) => write!(f, "invalid Cartan data: {msg}"),
            Error::NotARoot(msg) => write!(f, "not a root: {msg}"),
            Error::CutoffExceeded { order, cutoff } => {
                write!(f, "Weyl group of order {order} exceeds cutoff {cutoff}")
            }
            Error::Inconsistent(msg) => write!(f, "consistency check failed: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::NotNilpotent { power, rank } => {
                write!(f, "matrix is not nilpotent: power {power} still has rank {rank}")
            }
            Error::TotalMismatch { left, right } => {
                write!(f, "partition totals differ: {left} vs {right}")
            }
            Error::BadInput(msg) => write!(f, "bad input: {msg}"),
            Error::CalibrationFailed(msg) => write!(f, "calibration failed: {msg}"),
        }
    }
}
