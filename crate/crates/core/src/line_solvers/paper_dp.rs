//! The RI-jump dynamic program.
//!
//! State (k, ℓ) covers the k leftmost above disks and ℓ leftmost below
//! disks; index 0 is the sentinel "none", with V(0,0) = 0. At each state the
//! globally rightmost frontier disk d is either taken — jumping to
//! (ri_above[d], ri_below[d]) and adding 1 — or skipped, dropping to the
//! previous index on its own side.
//!
//! The value V(n1, n2) is an upper bound on the optimum: any independent set
//! decomposes along the recurrence. It is not always equal to it — the jump
//! target's subsolution may contain a disk adjacent to d — and the
//! reconstructed set is therefore not guaranteed independent. Callers that
//! need a trusted set verify it or use the pair-state solver.
//!
//! Fill strategy: every cell is the max of its frontier disk's take value
//! and the predecessor cell, so a cell equals the larger of two prefix
//! maxima — one over above take values, one over below. A first pass in
//! ascending x-order computes per-disk take values and those prefix maxima;
//! a second pass materializes all (n1+1)(n2+1) cells row-major. Within a
//! row the below prefix maximum is non-decreasing, so values and the
//! above-owned back-pointers split into constant runs (filled with
//! memset/copy after a binary search for the run boundary) and the
//! below-owned back-pointers reduce to one branch-free comparison per
//! cell. An event-order reference fill in the tests confirms cell-for-cell
//! equality with the direct application of the per-state rule; this layout
//! just avoids the strided column writes and per-cell branching that
//! thrash caches on large strips.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::geometry::{Convention, DiskId};
use crate::line_solvers::{build_ri_tables, RiTable, SideIndex, StabbedInstance};
use crate::result::{SolveResult, SolverKind};

/// Back-pointer stored per cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum DpChoice {
    /// The (0,0) sentinel state.
    Base = 0,
    /// Took the k-th above disk; continue at its RI pair.
    TookAbove = 1,
    /// Skipped the k-th above disk; continue at (k-1, ℓ).
    SkippedAbove = 2,
    /// Took the ℓ-th below disk; continue at its RI pair.
    TookBelow = 3,
    /// Skipped the ℓ-th below disk; continue at (k, ℓ-1).
    SkippedBelow = 4,
}

const CH_BASE: u8 = DpChoice::Base as u8;
const CH_TOOK_A: u8 = DpChoice::TookAbove as u8;
const CH_SKIP_A: u8 = DpChoice::SkippedAbove as u8;
const CH_TOOK_B: u8 = DpChoice::TookBelow as u8;
const CH_SKIP_B: u8 = DpChoice::SkippedBelow as u8;

fn decode_choice(code: u8) -> DpChoice {
    match code {
        CH_BASE => DpChoice::Base,
        CH_TOOK_A => DpChoice::TookAbove,
        CH_SKIP_A => DpChoice::SkippedAbove,
        CH_TOOK_B => DpChoice::TookBelow,
        _ => DpChoice::SkippedBelow,
    }
}

/// The filled (n1+1) × (n2+1) value table with back-pointers and the RI
/// pointers needed to replay jumps.
/// Rows are stored as separate allocations: a strip of 8000 disks already
/// means a 64 MB value plane, and monolithic blocks that size bypass the
/// allocator's reuse caches, charging every solve ~20k page faults and
/// wrecking timing comparisons across sizes.
#[derive(Clone, Debug)]
pub struct DpTable {
    n1: usize,
    n2: usize,
    values: Vec<Vec<u32>>,
    choices: Vec<Vec<u8>>,
    ri: RiTable,
}

impl DpTable {
    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn value(&self, k: usize, l: usize) -> u32 {
        self.values[k][l]
    }

    pub fn choice(&self, k: usize, l: usize) -> DpChoice {
        decode_choice(self.choices[k][l])
    }

    /// V(n1, n2), the reported solution value.
    pub fn root_value(&self) -> u32 {
        self.value(self.n1, self.n2)
    }

    pub fn ri(&self) -> &RiTable {
        &self.ri
    }

    pub fn cells(&self) -> usize {
        (self.n1 + 1) * (self.n2 + 1)
    }
}

/// Per-disk take values, their prefix maxima, and each disk's position in
/// the global x-order. Index 0 is the sentinel on both sides.
struct TakeProfile {
    a_take: Vec<u32>,
    b_take: Vec<u32>,
    pa: Vec<u32>,
    pb: Vec<u32>,
    a_rank: Vec<usize>,
    b_rank: Vec<usize>,
}

fn take_profile(si: &StabbedInstance, ri: &RiTable) -> TakeProfile {
    let (n1, n2) = (si.n1(), si.n2());
    let mut p = TakeProfile {
        a_take: vec![0; n1 + 1],
        b_take: vec![0; n2 + 1],
        pa: vec![0; n1 + 1],
        pb: vec![0; n2 + 1],
        a_rank: vec![0; n1 + 1],
        b_rank: vec![0; n2 + 1],
    };
    for (pos, side_index) in si.merged_order().into_iter().enumerate() {
        match side_index {
            SideIndex::Above(k) => {
                let d = si.above_disk(k);
                let (tau, nu) = (ri.above_of(d.id), ri.below_of(d.id));
                // Both RI targets are strictly left of d, so their prefix
                // maxima are already final.
                let take = p.pa[tau].max(p.pb[nu]) + 1;
                p.a_take[k] = take;
                p.pa[k] = p.pa[k - 1].max(take);
                p.a_rank[k] = pos + 1;
            }
            SideIndex::Below(l) => {
                let d = si.below_disk(l);
                let (tau, nu) = (ri.above_of(d.id), ri.below_of(d.id));
                let take = p.pa[tau].max(p.pb[nu]) + 1;
                p.b_take[l] = take;
                p.pb[l] = p.pb[l - 1].max(take);
                p.b_rank[l] = pos + 1;
            }
        }
    }
    p
}

/// Fills the whole table for the given strip.
pub fn paper_dp_table(si: &StabbedInstance, conv: Convention) -> DpTable {
    let ri = build_ri_tables(si, conv);
    let (n1, n2) = (si.n1(), si.n2());
    let p = take_profile(si, &ri);
    let width = n2 + 1;

    let mut values = Vec::with_capacity(n1 + 1);
    let mut choices = Vec::with_capacity(n1 + 1);

    // A below-owned cell takes iff b_take[l] >= max(pa[k], pb[l-1]); the
    // second operand is row-independent, so precompute that half.
    let mut b_took_vs_prev = vec![0u8; width];
    for (l, took) in b_took_vs_prev.iter_mut().enumerate().skip(1) {
        *took = u8::from(p.b_take[l] >= p.pb[l - 1]);
    }

    // Row 0 is owned by the below side throughout (cell (0,0) is Base).
    values.push(p.pb.clone());
    let mut crow0 = Vec::with_capacity(width);
    crow0.push(CH_BASE);
    crow0.extend(b_took_vs_prev[1..].iter().map(|&took| CH_SKIP_B - took));
    choices.push(crow0);

    for k in 1..=n1 {
        let (pa_k, pa_km1) = (p.pa[k], p.pa[k - 1]);
        let (a_take_k, a_rank_k) = (p.a_take[k], p.a_rank[k]);

        // Values: pb is non-decreasing, so the row is a constant run of
        // pa_k followed by a copy of pb's tail.
        let split = p.pb.partition_point(|&v| v < pa_k);
        let mut vrow = Vec::with_capacity(width);
        vrow.resize(split, pa_k);
        vrow.extend_from_slice(&p.pb[split..]);
        values.push(vrow);

        // Cells 0..=own are owned by the k-th above disk (b_rank is
        // strictly increasing), the rest by their below disk.
        let own = p.b_rank[1..].partition_point(|&r| r < a_rank_k);
        let mut crow = Vec::with_capacity(width);
        if a_take_k < pa_km1 {
            crow.resize(own + 1, CH_SKIP_A);
        } else {
            // Takes while pb[l] stays within the take value.
            let t = p.pb[..=own].partition_point(|&v| v <= a_take_k);
            crow.resize(t, CH_TOOK_A);
            crow.resize(own + 1, CH_SKIP_A);
        }
        crow.extend(
            b_took_vs_prev[own + 1..]
                .iter()
                .zip(&p.b_take[own + 1..])
                .map(|(&took_prev, &b_take)| {
                    CH_SKIP_B - (took_prev & u8::from(b_take >= pa_k))
                }),
        );
        choices.push(crow);
    }

    DpTable {
        n1,
        n2,
        values,
        choices,
        ri,
    }
}

/// Walks back-pointers from (n1, n2), emitting every taken disk. The 0
/// sentinel indices are never emitted.
pub fn reconstruct_solution(table: &DpTable, si: &StabbedInstance) -> BTreeSet<DiskId> {
    let mut out = BTreeSet::new();
    let (mut k, mut l) = (table.n1, table.n2);
    loop {
        match table.choice(k, l) {
            DpChoice::Base => break,
            DpChoice::TookAbove => {
                let d = si.above_disk(k);
                out.insert(d.id);
                let (tau, nu) = (table.ri.above_of(d.id), table.ri.below_of(d.id));
                k = tau;
                l = nu;
            }
            DpChoice::SkippedAbove => k -= 1,
            DpChoice::TookBelow => {
                let d = si.below_disk(l);
                out.insert(d.id);
                let (tau, nu) = (table.ri.above_of(d.id), table.ri.below_of(d.id));
                k = tau;
                l = nu;
            }
            DpChoice::SkippedBelow => l -= 1,
        }
    }
    out
}

/// Runs the RI-jump solver on one strip.
///
/// The reported size equals V(n1, n2) and is ≥ the true optimum; the
/// selected set has exactly that many disks but is not guaranteed
/// independent.
pub fn paper_dp_solve(si: &StabbedInstance, conv: Convention) -> SolveResult {
    let start = Instant::now();
    let table = paper_dp_table(si, conv);
    let selected = reconstruct_solution(&table, si);
    let value = table.root_value();
    debug_assert_eq!(selected.len() as u32, value);
    SolveResult::new(selected, SolverKind::PaperDp, start.elapsed())
        .with_stat("table_cells", table.cells() as u64)
        .with_stat("n1", si.n1() as u64)
        .with_stat("n2", si.n2() as u64)
}
