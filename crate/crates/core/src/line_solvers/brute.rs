//! Branch-and-bound exact solver, the oracle of the differential harness.
//!
//! Works on any disk subset, stabbed or not. Branches on the
//! highest-degree remaining vertex (ties to the smaller id): include it and
//! delete its closed neighborhood, or exclude it. Prunes when the current
//! count plus everything remaining cannot beat the incumbent. The cap
//! refuses instances where even well-pruned search may be unreasonable.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::error::Error;
use crate::geometry::{adjacent, Convention, DiskId, Instance};
use crate::result::{SolveResult, SolverKind};

/// Default refusal threshold; `UDISK_BRUTE_CAP` overrides it in the CLI.
pub const DEFAULT_BRUTE_CAP: usize = 40;

/// Exact maximum independent set over the listed disks.
pub fn brute_force_solve(
    inst: &Instance,
    ids: &[DiskId],
    conv: Convention,
    cap: usize,
) -> Result<SolveResult, Error> {
    let start = Instant::now();
    let unique: BTreeSet<DiskId> = ids.iter().copied().collect();
    if unique.len() > cap {
        return Err(Error::CapExceeded {
            n: unique.len(),
            cap,
        });
    }
    let mut disks = Vec::with_capacity(unique.len());
    for &id in &unique {
        disks.push(*inst.disk(id).ok_or(Error::UnknownId(id))?);
    }

    let n = disks.len();
    let mut adj: Vec<Bits> = vec![Bits::empty(n); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if adjacent(&disks[i], &disks[j], inst.radius, conv) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }

    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        nodes: 0,
    };
    let mut current = Vec::new();
    search.run(Bits::full(n), &mut current);

    let selected: BTreeSet<DiskId> = search.best.iter().map(|&i| disks[i].id).collect();
    Ok(
        SolveResult::new(selected, SolverKind::Brute, start.elapsed())
            .with_stat("nodes", search.nodes),
    )
}

struct Search<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, remaining: Bits, current: &mut Vec<usize>) {
        self.nodes += 1;
        if current.len() + remaining.count() <= self.best.len() {
            return;
        }
        // Branch vertex: max degree within the remaining subgraph, then
        // smallest index (indices are sorted by id).
        let mut pick = None;
        let mut pick_deg = 0usize;
        for v in remaining.iter() {
            let deg = self.adj[v].intersection_count(&remaining);
            if pick.is_none() || deg > pick_deg {
                pick = Some(v);
                pick_deg = deg;
            }
        }
        let Some(v) = pick else {
            // Remaining is empty; the bound above already guaranteed strict
            // improvement.
            self.best = current.clone();
            return;
        };

        // Include v.
        let mut without_nbhd = remaining.clone();
        without_nbhd.clear(v);
        without_nbhd.subtract(&self.adj[v]);
        current.push(v);
        self.run(without_nbhd, current);
        current.pop();

        // Exclude v.
        let mut without_v = remaining;
        without_v.clear(v);
        self.run(without_v, current);
    }
}

/// Minimal growable bitset; enough for the solver's needs.
#[derive(Clone, Debug)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn empty(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    fn subtract(&mut self, other: &Bits) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn intersection_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + tz)
                }
            })
        })
    }
}
