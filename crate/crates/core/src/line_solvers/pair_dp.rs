//! Exact pair-state dynamic program for one strip.
//!
//! State (a, b): a is the 1-based index of the rightmost chosen above disk
//! (0 = none), b the same below. Disks are processed in ascending global
//! x-order; a disk may extend a state iff it does not intersect either
//! frontier member, and then replaces its own side's frontier.
//!
//! The local check suffices because, for x-sorted disks that all stab the
//! line, non-intersection with the nearest chosen disk on each side implies
//! non-intersection with every earlier chosen disk on that side — the
//! geometric fact the property suites sample by the million. Each returned
//! set is re-verified before the solver hands it out; a failure would be an
//! internal invariant violation, not a caller error.
//!
//! O(n²) states, O(n³) time worst case. This is the default per-strip
//! solver for the factor-2 pipeline, which needs genuine per-strip optima.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::error::Error;
use crate::geometry::{adjacent, verify_independent, Convention};
use crate::line_solvers::{SideIndex, StabbedInstance};
use crate::result::{SolveResult, SolverKind};

const UNREACHED: i64 = -1;

pub fn pair_state_dp_solve(si: &StabbedInstance, conv: Convention) -> Result<SolveResult, Error> {
    let start = Instant::now();
    let r = si.instance.radius;
    let (n1, n2) = (si.n1(), si.n2());
    let width = n2 + 1;
    let cells = (n1 + 1) * width;

    // val[a * width + b]: best cardinality with frontier exactly (a, b).
    let mut val = vec![UNREACHED; cells];
    let mut parent = vec![0u32; cells];
    val[0] = 0;

    let mut transitions = 0u64;
    let mut above_seen = 0usize;
    let mut below_seen = 0usize;

    for side_index in si.merged_order() {
        match side_index {
            SideIndex::Above(k) => {
                above_seen = k;
                let d = si.above_disk(k);
                for a in 0..k {
                    if a > 0 && adjacent(si.above_disk(a), d, r, conv) {
                        continue;
                    }
                    for b in 0..=below_seen {
                        let cur = val[a * width + b];
                        if cur < 0 {
                            continue;
                        }
                        transitions += 1;
                        if b > 0 && adjacent(si.below_disk(b), d, r, conv) {
                            continue;
                        }
                        let cand = cur + 1;
                        let target = k * width + b;
                        if cand > val[target] {
                            val[target] = cand;
                            parent[target] = (a * width + b) as u32;
                        }
                    }
                }
            }
            SideIndex::Below(l) => {
                below_seen = l;
                let d = si.below_disk(l);
                for b in 0..l {
                    if b > 0 && adjacent(si.below_disk(b), d, r, conv) {
                        continue;
                    }
                    for a in 0..=above_seen {
                        let cur = val[a * width + b];
                        if cur < 0 {
                            continue;
                        }
                        transitions += 1;
                        if a > 0 && adjacent(si.above_disk(a), d, r, conv) {
                            continue;
                        }
                        let cand = cur + 1;
                        let target = a * width + l;
                        if cand > val[target] {
                            val[target] = cand;
                            parent[target] = (a * width + b) as u32;
                        }
                    }
                }
            }
        }
    }

    // Best state; ties resolve to the smallest (a, b) in row-major order.
    let mut best_idx = 0usize;
    for (i, &v) in val.iter().enumerate() {
        if v > val[best_idx] {
            best_idx = i;
        }
    }

    let mut selected = BTreeSet::new();
    let mut idx = best_idx;
    while idx != 0 {
        let prev = parent[idx] as usize;
        let (a, b) = (idx / width, idx % width);
        let (pa, pb) = (prev / width, prev % width);
        // Exactly one coordinate changed; it names the disk taken.
        if a != pa {
            selected.insert(si.above_disk(a).id);
        } else {
            debug_assert_ne!(b, pb);
            selected.insert(si.below_disk(b).id);
        }
        idx = prev;
    }

    if selected.len() as i64 != val[best_idx] {
        return Err(Error::Internal(format!(
            "pair-state reconstruction yielded {} disks for value {}",
            selected.len(),
            val[best_idx]
        )));
    }
    if !verify_independent(si.instance, &selected, conv)? {
        return Err(Error::Internal(
            "pair-state solver produced a dependent set".to_string(),
        ));
    }

    Ok(
        SolveResult::new(selected, SolverKind::PairDp, start.elapsed())
            .with_stat("states", cells as u64)
            .with_stat("transitions", transitions),
    )
}
