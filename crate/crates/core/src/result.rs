//! Solver output: the selected set plus timing and counters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Duration;

use crate::geometry::DiskId;

/// Which algorithm produced a [`SolveResult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverKind {
    /// RI-jump dynamic program over (above, below) prefix pairs.
    PaperDp,
    /// Exact reference dynamic program keyed by the rightmost chosen disk
    /// on each side of the line.
    PairDp,
    /// Branch-and-bound oracle.
    Brute,
    /// Strip decomposition + per-strip exact solve + odd/even parity union.
    Approx2,
}

impl SolverKind {
    pub fn tag(&self) -> &'static str {
        match self {
            SolverKind::PaperDp => "paper-dp",
            SolverKind::PairDp => "pair-dp",
            SolverKind::Brute => "brute",
            SolverKind::Approx2 => "approx2",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A solved (sub)instance: the selected disk ids plus bookkeeping.
///
/// `size == selected.len()` always holds. Whether `selected` is actually
/// independent depends on the solver: `paper-dp` reconstructions may be
/// infeasible by design, which is why callers verify before trusting a set.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub selected: BTreeSet<DiskId>,
    pub size: usize,
    pub solver: SolverKind,
    pub elapsed: Duration,
    pub stats: BTreeMap<String, u64>,
}

impl SolveResult {
    pub fn new(selected: BTreeSet<DiskId>, solver: SolverKind, elapsed: Duration) -> Self {
        let size = selected.len();
        SolveResult {
            selected,
            size,
            solver,
            elapsed,
            stats: BTreeMap::new(),
        }
    }

    pub fn with_stat(mut self, key: &str, value: u64) -> Self {
        self.stats.insert(key.to_string(), value);
        self
    }
}
