//! Seeded instance generators.
//!
//! All modes are deterministic for a fixed seed (ChaCha8 stream, identical
//! across platforms). A minimum pairwise center separation keeps random
//! instances away from exact adjacency thresholds, so the open/closed
//! tangency convention never matters on generated data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::geometry::{Disk, DiskId, Instance};

/// Placement mode and its region.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GenMode {
    /// Centers i.i.d. uniform in a width × height box.
    Uniform { width: f64, height: f64 },
    /// Cluster anchors uniform in the box, centers Gaussian around them.
    Clustered { width: f64, height: f64 },
    /// Centers with |cy| ≤ r about y = 0, so every disk stabs that line.
    StabbedLine { x_extent: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub mode: GenMode,
    pub n: usize,
    pub radius: f64,
    pub seed: u64,
    /// Minimum pairwise center distance, enforced by resampling.
    pub min_sep: f64,
}

impl GenParams {
    /// Default minimum separation: one millionth of the radius.
    pub fn default_min_sep(radius: f64) -> f64 {
        1e-6 * radius
    }

    pub fn new(mode: GenMode, n: usize, radius: f64, seed: u64) -> Self {
        GenParams {
            mode,
            n,
            radius,
            seed,
            min_sep: Self::default_min_sep(radius),
        }
    }
}

const TRIES_PER_DISK: usize = 1000;

/// Draws an instance. Fails only when the minimum separation cannot be
/// satisfied at the requested density within bounded retries.
pub fn generate(p: &GenParams) -> Result<Instance, Error> {
    if !p.radius.is_finite() || p.radius <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "radius must be positive, got {}",
            p.radius
        )));
    }
    let extents_ok = match p.mode {
        GenMode::Uniform { width, height } | GenMode::Clustered { width, height } => {
            width > 0.0 && height > 0.0
        }
        GenMode::StabbedLine { x_extent } => x_extent > 0.0,
    };
    if !extents_ok {
        return Err(Error::InvalidArgument("region extents must be positive".into()));
    }
    if p.min_sep < 0.0 {
        return Err(Error::InvalidArgument("min_sep must be non-negative".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let r = p.radius;

    // Clustered mode draws its anchors up front so the disk stream is
    // independent of per-disk retry counts.
    let anchors: Vec<(f64, f64)> = match p.mode {
        GenMode::Clustered { width, height } => {
            let m = (p.n / 10).max(1);
            (0..m)
                .map(|_| (rng.gen_range(0.0..width), rng.gen_range(0.0..height)))
                .collect()
        }
        _ => Vec::new(),
    };

    let min_sep_sq = p.min_sep * p.min_sep;
    let mut disks: Vec<Disk> = Vec::with_capacity(p.n);
    for i in 0..p.n {
        let mut placed = false;
        for _ in 0..TRIES_PER_DISK {
            let (cx, cy) = match p.mode {
                GenMode::Uniform { width, height } => {
                    (rng.gen_range(0.0..width), rng.gen_range(0.0..height))
                }
                GenMode::Clustered { .. } => {
                    let a = anchors[rng.gen_range(0..anchors.len())];
                    (a.0 + gaussian(&mut rng) * 2.0 * r, a.1 + gaussian(&mut rng) * 2.0 * r)
                }
                GenMode::StabbedLine { x_extent } => {
                    (rng.gen_range(0.0..x_extent), rng.gen_range(-r..r))
                }
            };
            let candidate = Disk::new(i as DiskId, cx, cy);
            let far_enough = disks.iter().all(|d| {
                let dx = d.cx - cx;
                let dy = d.cy - cy;
                dx * dx + dy * dy >= min_sep_sq
            });
            if far_enough {
                disks.push(candidate);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::Generation(format!(
                "could not place disk {i} with min_sep {} after {TRIES_PER_DISK} tries",
                p.min_sep
            )));
        }
    }

    Instance::new(disks, r)
}

/// Standard normal via Box–Muller; consumes two uniforms per call.
fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::stabs_line;

    #[test]
    fn zero_disks_gives_empty_instance() {
        let p = GenParams::new(GenMode::Uniform { width: 5.0, height: 5.0 }, 0, 0.5, 1);
        let inst = generate(&p).unwrap();
        assert!(inst.is_empty());
        assert_eq!(inst.radius, 0.5);
    }

    #[test]
    fn same_seed_same_instance() {
        for mode in [
            GenMode::Uniform { width: 8.0, height: 6.0 },
            GenMode::Clustered { width: 8.0, height: 6.0 },
            GenMode::StabbedLine { x_extent: 9.0 },
        ] {
            let p = GenParams::new(mode, 60, 0.5, 0xFEED);
            assert_eq!(generate(&p).unwrap(), generate(&p).unwrap());
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = GenParams::new(GenMode::Uniform { width: 8.0, height: 6.0 }, 30, 0.5, 1);
        let b = GenParams { seed: 2, ..a };
        assert_ne!(generate(&a).unwrap(), generate(&b).unwrap());
    }

    #[test]
    fn stabbed_mode_stabs_the_origin_line() {
        let p = GenParams::new(GenMode::StabbedLine { x_extent: 30.0 }, 200, 0.5, 7);
        let inst = generate(&p).unwrap();
        for d in &inst.disks {
            assert!(stabs_line(d, 0.0, inst.radius));
        }
    }

    #[test]
    fn min_sep_is_enforced() {
        let mut p = GenParams::new(GenMode::Uniform { width: 4.0, height: 4.0 }, 50, 0.5, 3);
        p.min_sep = 0.3;
        let inst = generate(&p).unwrap();
        for (i, a) in inst.disks.iter().enumerate() {
            for b in &inst.disks[i + 1..] {
                assert!(crate::geometry::dist_sq(a, b) >= 0.3 * 0.3 - 1e-12);
            }
        }
    }

    #[test]
    fn infeasible_min_sep_errors_out() {
        let mut p = GenParams::new(GenMode::Uniform { width: 1.0, height: 1.0 }, 100, 0.5, 3);
        p.min_sep = 0.5; // 100 points at pairwise distance 0.5 cannot fit in a unit box
        assert!(matches!(generate(&p), Err(Error::Generation(_))));
    }

    #[test]
    fn invalid_params_rejected() {
        let p = GenParams::new(GenMode::Uniform { width: 0.0, height: 1.0 }, 5, 0.5, 1);
        assert!(generate(&p).is_err());
        let p = GenParams::new(GenMode::Uniform { width: 1.0, height: 1.0 }, 5, -1.0, 1);
        assert!(generate(&p).is_err());
    }
}
