//! Exact enumeration of bounded-height parking functions and interlaced
//! pairs of parking functions.
//!
//! The crate computes area-graded characters of these objects two ways and
//! checks them against each other:
//!
//! * a transfer-matrix route: the generating series of bounded-height Dyck
//!   paths, weighted by `q^area` and products of complete homogeneous
//!   symmetric functions on one or two alphabets, is the quotient of two
//!   consecutive Chebyshev-like determinant polynomials;
//! * a brute-force oracle: direct summation over enumerated paths.
//!
//! All arithmetic is exact (arbitrary-precision integer coefficients), all
//! values are immutable, and every container is ordered so that identical
//! inputs serialize byte-identically.

pub mod algebra;
pub mod oracle;
pub mod paths;
pub mod transfer;

pub use algebra::bisym::BiSymH;
pub use algebra::esym::{EPoly, ESym};
pub use algebra::partition::Partition;
pub use algebra::qpoly::QPoly;
pub use algebra::series::ZSeries;
pub use oracle::{Check, VerifyConfig, VerifyReport};
pub use paths::{DyckPath, HookList, ParkingFunction};
pub use transfer::TransferMatrix;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Series inversion/division requires the denominator to have constant
    /// term exactly 1.
    #[error("series denominator has non-unit constant term")]
    NonUnitConstantTerm,

    /// A hook list does not reconstruct into a staircase-contained path.
    #[error("invalid hook list: {0}")]
    InvalidHookList(String),

    /// An enumeration was requested past its configured size cap.
    #[error("{what} limited to n <= {limit}, requested n = {requested}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    /// Matrix entry index outside `0..=eta`.
    #[error("transfer matrix index ({i},{j}) out of range for eta = {eta}")]
    IndexOutOfRange { eta: usize, i: usize, j: usize },

    /// A graded operation was applied to a term of the wrong degree.
    #[error("grading violation: expected degree {expected}, found {found}")]
    GradingViolation { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
