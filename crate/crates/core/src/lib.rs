//! Maximum independent set on unit disk graphs.
//!
//! The crate is organized around one pipeline: split a disk set into
//! horizontal strips one diameter apart ([`strip`]), solve each strip's
//! stabbed-line subproblem exactly ([`line_solvers`]), and combine the
//! odd/even strip solutions into a factor-2 approximation ([`approx`]).
//! The [`toolkit`] module adds instance generation, differential testing
//! against a brute-force oracle, benchmarking, file I/O, and SVG output.
//!
//! Two stabbed-line solvers are provided. `pair-dp` is the exact reference:
//! its state is the pair of rightmost chosen disks above and below the line.
//! `paper-dp` is the O(n²) recurrence with rightmost-independent jump
//! pointers; its reported value is an upper bound on the optimum and can
//! strictly exceed it (see [`fixtures::overcount_instance`]), which is
//! exactly what the differential harness measures.
//!
//! All operations are pure functions over value-semantic data; nothing in
//! this crate holds shared mutable state, so any of it may be called from
//! multiple threads.

pub mod approx;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod line_solvers;
pub mod result;
pub mod strip;
pub mod toolkit;

pub use error::Error;
pub use geometry::{
    adjacent, dist_sq, scale, stabs_line, verify_independent, x_order_key, Convention, Disk,
    DiskId, Instance,
};
pub use result::{SolveResult, SolverKind};
