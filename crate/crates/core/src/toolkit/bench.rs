//! Wall-clock scaling measurements on stabbed-line instances.
//!
//! Instances grow at constant density (x-extent proportional to n), each
//! size is solved several times, and the median runtimes get a log-log
//! least-squares exponent. For the quadratic solvers the expected exponent
//! is 2, i.e. successive doubling ratios near 4.

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::geometry::{Convention, DiskId};
use crate::line_solvers::{brute_force_solve, paper_dp_solve, pair_state_dp_solve, split_whole};
use crate::result::SolverKind;
use crate::toolkit::gen::{generate, GenMode, GenParams};

const BENCH_SEED: u64 = 0xBE0C;

#[derive(Clone, Copy, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub median: Duration,
    pub reps: usize,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub solver: SolverKind,
    pub rows: Vec<BenchRow>,
    /// Log-log fitted growth exponent; undefined for a single size.
    pub exponent: Option<f64>,
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("algo,n,median_ms,reps\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                self.solver.tag(),
                row.n,
                row.median.as_secs_f64() * 1e3,
                row.reps
            ));
        }
        out
    }

    pub fn table(&self) -> String {
        let mut out = format!("{:>10} {:>14} {:>6}\n", "n", "median_ms", "reps");
        for row in &self.rows {
            out.push_str(&format!(
                "{:>10} {:>14.3} {:>6}\n",
                row.n,
                row.median.as_secs_f64() * 1e3,
                row.reps
            ));
        }
        match self.exponent {
            Some(e) => out.push_str(&format!("fitted growth exponent: {e:.3}\n")),
            None => out.push_str("fitted growth exponent: undefined (need >= 2 sizes)\n"),
        }
        out
    }
}

/// Times the chosen solver at each size. Sizes must be strictly ascending;
/// at least 3 repetitions are required for a meaningful median.
pub fn bench_scaling(
    solver: SolverKind,
    sizes: &[usize],
    reps: usize,
    conv: Convention,
    cap: usize,
) -> Result<BenchReport, Error> {
    if sizes.is_empty() {
        return Err(Error::InvalidArgument("no sizes given".into()));
    }
    if !sizes.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(
            "sizes must be strictly ascending".into(),
        ));
    }
    if reps < 3 {
        return Err(Error::InvalidArgument("need at least 3 repetitions".into()));
    }
    if solver == SolverKind::Brute {
        if let Some(&n) = sizes.iter().find(|&&n| n > cap) {
            return Err(Error::CapExceeded { n, cap });
        }
    }

    let radius = 0.5;
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let params = GenParams::new(
            GenMode::StabbedLine {
                x_extent: (n.max(1) as f64) * radius,
            },
            n,
            radius,
            BENCH_SEED.wrapping_add(n as u64),
        );
        let inst = generate(&params)?;
        let ids: Vec<DiskId> = inst.ids().collect();

        let mut times = Vec::with_capacity(reps);
        for _ in 0..reps {
            let start = Instant::now();
            match solver {
                SolverKind::PaperDp => {
                    let si = split_whole(&inst, 0.0)?;
                    std::hint::black_box(paper_dp_solve(&si, conv));
                }
                SolverKind::PairDp => {
                    let si = split_whole(&inst, 0.0)?;
                    std::hint::black_box(pair_state_dp_solve(&si, conv)?);
                }
                SolverKind::Brute => {
                    std::hint::black_box(brute_force_solve(&inst, &ids, conv, cap)?);
                }
                SolverKind::Approx2 => {
                    std::hint::black_box(crate::approx::approx2_solve(
                        &inst,
                        crate::approx::LineSolver::PairDp,
                        conv,
                    )?);
                }
            }
            times.push(start.elapsed());
        }
        times.sort();
        rows.push(BenchRow {
            n,
            median: times[times.len() / 2],
            reps,
        });
    }

    let exponent = fit_exponent(&rows);
    Ok(BenchReport {
        solver,
        rows,
        exponent,
    })
}

/// Least-squares slope of ln(median) against ln(n).
fn fit_exponent(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| {
            let secs = r.median.as_secs_f64().max(1e-9);
            ((r.n as f64).ln(), secs.ln())
        })
        .collect();
    let m = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = m * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return None;
    }
    Some((m * sxy - sx * sy) / denom)
}
