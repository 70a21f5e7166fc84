//! Rightmost-independent pointers.
//!
//! For each strip disk `d`, `ri_above[d]` is the largest 1-based index τ
//! such that the τ-th above disk precedes `d` in x-order and does not
//! intersect it; 0 when no such disk exists. `ri_below` is the mirror for
//! the below sequence. Index 0 plays the role of the "no disk chosen yet"
//! sentinel, so no artificial far-left disks need to be materialized.

use std::collections::HashMap;

use crate::geometry::{adjacent, x_order_key, Convention, Disk, DiskId};
use crate::line_solvers::StabbedInstance;

#[derive(Clone, Debug, Default)]
pub struct RiTable {
    pub ri_above: HashMap<DiskId, usize>,
    pub ri_below: HashMap<DiskId, usize>,
}

impl RiTable {
    pub fn above_of(&self, id: DiskId) -> usize {
        self.ri_above[&id]
    }

    pub fn below_of(&self, id: DiskId) -> usize {
        self.ri_below[&id]
    }
}

/// Leftward scan per disk: the first non-intersecting predecessor found from
/// the right is the rightmost one. O(n²) total.
pub fn build_ri_tables(si: &StabbedInstance, conv: Convention) -> RiTable {
    let r = si.instance.radius;
    let mut table = RiTable::default();
    for d in si.above.iter().chain(si.below.iter()) {
        table
            .ri_above
            .insert(d.id, rightmost_independent(&si.above, d, r, conv));
        table
            .ri_below
            .insert(d.id, rightmost_independent(&si.below, d, r, conv));
    }
    table
}

fn rightmost_independent(side: &[Disk], d: &Disk, radius: f64, conv: Convention) -> usize {
    let key = x_order_key(d);
    // Number of side disks strictly preceding d in x-order.
    let before = side.partition_point(|s| x_order_key(s) < key);
    for i in (0..before).rev() {
        if !adjacent(&side[i], d, radius, conv) {
            return i + 1;
        }
    }
    0
}
