//! Error type shared across the crate.

use crate::geometry::DiskId;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Instance-level validation failure (bad radius, duplicate ids, ...).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// An operation was handed a disk id the instance does not contain.
    #[error("unknown disk id {0}")]
    UnknownId(DiskId),

    /// A disk listed for a stabbed-line subproblem does not intersect the line.
    #[error("disk {id} (center y = {cy}) does not stab the line y = {y_line}")]
    NotStabbed { id: DiskId, cy: f64, y_line: f64 },

    /// Brute-force refusal: the instance is larger than the configured cap.
    #[error("instance size {n} exceeds the brute-force cap {cap}; raise UDISK_BRUTE_CAP to override")]
    CapExceeded { n: usize, cap: usize },

    /// Invalid argument to a toolkit operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Instance generation gave up (min-separation unsatisfiable at the
    /// requested density).
    #[error("generation failed: {0}")]
    Generation(String),

    /// File-format violation, with a position where one is known.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An invariant the library promises to maintain was observed broken.
    #[error("internal invariant violation: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
