//! Exact solvers for one strip: all disks intersect a common horizontal
//! line.
//!
//! Three solvers share the [`StabbedInstance`] view:
//!
//! * [`paper_dp_solve`] — the O(n²) RI-jump dynamic program. Its value is an
//!   upper bound on the optimum; on some inputs it strictly overcounts and
//!   its reconstruction is infeasible, so callers must verify the set.
//! * [`pair_state_dp_solve`] — exact reference solver, O(n³) worst case.
//! * [`brute_force_solve`] — branch-and-bound oracle for any disk set (not
//!   just stabbed ones), capped.

mod brute;
mod paper_dp;
mod pair_dp;
mod ri;

pub use brute::{brute_force_solve, DEFAULT_BRUTE_CAP};
pub use paper_dp::{paper_dp_solve, paper_dp_table, reconstruct_solution, DpChoice, DpTable};
pub use pair_dp::pair_state_dp_solve;
pub use ri::{build_ri_tables, RiTable};

use crate::error::Error;
use crate::geometry::{stabs_line, x_order_key, Disk, DiskId, Instance};

/// One strip's disks split into the x-sorted sequences above and below the
/// stabbing line. Centers lying exactly on the line count as above.
#[derive(Clone, Debug)]
pub struct StabbedInstance<'a> {
    pub instance: &'a Instance,
    pub y_line: f64,
    /// Disks with `cy >= y_line`, sorted by [`x_order_key`].
    pub above: Vec<Disk>,
    /// Disks with `cy < y_line`, sorted by [`x_order_key`].
    pub below: Vec<Disk>,
}

impl<'a> StabbedInstance<'a> {
    pub fn n1(&self) -> usize {
        self.above.len()
    }

    pub fn n2(&self) -> usize {
        self.below.len()
    }

    pub fn len(&self) -> usize {
        self.above.len() + self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty() && self.below.is_empty()
    }

    pub fn above_ids(&self) -> Vec<DiskId> {
        self.above.iter().map(|d| d.id).collect()
    }

    pub fn below_ids(&self) -> Vec<DiskId> {
        self.below.iter().map(|d| d.id).collect()
    }

    /// Above disk by 1-based index (the 0 slot is the "no disk" sentinel).
    fn above_disk(&self, k: usize) -> &Disk {
        &self.above[k - 1]
    }

    fn below_disk(&self, l: usize) -> &Disk {
        &self.below[l - 1]
    }

    /// All strip disks merged into ascending x-order, tagged with their
    /// 1-based index on their own side. Equal x resolves by (cy, id), so a
    /// below disk precedes an above disk at the same abscissa.
    fn merged_order(&self) -> Vec<SideIndex> {
        let mut out = Vec::with_capacity(self.len());
        let (mut i, mut j) = (0, 0);
        while i < self.above.len() || j < self.below.len() {
            let take_above = match (self.above.get(i), self.below.get(j)) {
                (Some(a), Some(b)) => x_order_key(a) < x_order_key(b),
                (Some(_), None) => true,
                (None, _) => false,
            };
            if take_above {
                i += 1;
                out.push(SideIndex::Above(i));
            } else {
                j += 1;
                out.push(SideIndex::Below(j));
            }
        }
        out
    }
}

/// A strip disk addressed by side and 1-based position on that side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SideIndex {
    Above(usize),
    Below(usize),
}

/// Builds the above/below view for the given strip members.
///
/// Every listed disk must stab the line; ids must exist in the instance and
/// be distinct.
pub fn split_stabbed<'a>(
    inst: &'a Instance,
    strip_ids: &[DiskId],
    y_line: f64,
) -> Result<StabbedInstance<'a>, Error> {
    let by_id: std::collections::HashMap<DiskId, &Disk> =
        inst.disks.iter().map(|d| (d.id, d)).collect();
    let mut above = Vec::new();
    let mut below = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for &id in strip_ids {
        let d = **by_id.get(&id).ok_or(Error::UnknownId(id))?;
        if !seen.insert(id) {
            return Err(Error::InvalidArgument(format!("duplicate disk id {id} in strip")));
        }
        if !stabs_line(&d, y_line, inst.radius) {
            return Err(Error::NotStabbed {
                id,
                cy: d.cy,
                y_line,
            });
        }
        if d.cy >= y_line {
            above.push(d);
        } else {
            below.push(d);
        }
    }
    above.sort_by_key(x_order_key);
    below.sort_by_key(x_order_key);
    Ok(StabbedInstance {
        instance: inst,
        y_line,
        above,
        below,
    })
}

/// Convenience: the whole instance viewed as one stabbed-line subproblem.
pub fn split_whole<'a>(inst: &'a Instance, y_line: f64) -> Result<StabbedInstance<'a>, Error> {
    let ids: Vec<DiskId> = inst.ids().collect();
    split_stabbed(inst, &ids, y_line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Instance;

    fn d(id: DiskId, cx: f64, cy: f64) -> Disk {
        Disk::new(id, cx, cy)
    }

    #[test]
    fn splits_by_side_of_line() {
        let inst = Instance::new(vec![d(0, 0.0, 0.2), d(1, 1.0, -0.2)], 0.5).unwrap();
        let si = split_whole(&inst, 0.0).unwrap();
        assert_eq!(si.above_ids(), vec![0]);
        assert_eq!(si.below_ids(), vec![1]);
        assert_eq!((si.n1(), si.n2()), (1, 1));
    }

    #[test]
    fn center_on_the_line_goes_above() {
        let inst = Instance::new(vec![d(0, 5.0, 0.0)], 0.5).unwrap();
        let si = split_whole(&inst, 0.0).unwrap();
        assert_eq!(si.above_ids(), vec![0]);
        assert!(si.below.is_empty());
    }

    #[test]
    fn empty_strip_gives_empty_lists() {
        let inst = Instance::new(vec![], 0.5).unwrap();
        let si = split_whole(&inst, 0.0).unwrap();
        assert!(si.is_empty());
    }

    #[test]
    fn non_stabbing_disk_is_an_input_error() {
        let inst = Instance::new(vec![d(0, 0.0, 0.9)], 0.5).unwrap();
        let err = split_whole(&inst, 0.0).unwrap_err();
        assert!(matches!(err, Error::NotStabbed { id: 0, .. }));
    }

    #[test]
    fn sides_are_x_sorted() {
        let inst = Instance::new(
            vec![d(0, 3.0, 0.1), d(1, 1.0, 0.2), d(2, 2.0, -0.1), d(3, 0.5, -0.3)],
            0.5,
        )
        .unwrap();
        let si = split_whole(&inst, 0.0).unwrap();
        assert_eq!(si.above_ids(), vec![1, 0]);
        assert_eq!(si.below_ids(), vec![3, 2]);
    }

    #[test]
    fn merged_order_interleaves_by_x() {
        let inst = Instance::new(
            vec![d(0, 3.0, 0.1), d(1, 1.0, 0.2), d(2, 2.0, -0.1)],
            0.5,
        )
        .unwrap();
        let si = split_whole(&inst, 0.0).unwrap();
        assert_eq!(
            si.merged_order(),
            vec![SideIndex::Above(1), SideIndex::Below(1), SideIndex::Above(2)]
        );
    }
}
