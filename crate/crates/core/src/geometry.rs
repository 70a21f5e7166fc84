//! Disks, adjacency, line stabbing, ordering, and feasibility checking.
//!
//! Conventions are exact and tolerance-free: adjacency compares raw squared
//! distances against the squared diameter, and the only configurable knob is
//! whether tangency (center distance exactly one diameter) counts as an edge.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::Error;

/// Stable identifier of a disk within an [`Instance`].
pub type DiskId = u32;

/// An equal-radius disk given by its center. The radius lives on the
/// [`Instance`] since it is common to all disks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub id: DiskId,
    pub cx: f64,
    pub cy: f64,
}

impl Disk {
    pub fn new(id: DiskId, cx: f64, cy: f64) -> Self {
        Disk { id, cx, cy }
    }
}

/// Tangency convention for adjacency tests.
///
/// `Open` (the default) treats center distance exactly one diameter as
/// independent, so strips two apart can never conflict even at exact
/// tangency. `Closed` counts tangent disks as intersecting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Convention {
    #[default]
    Open,
    Closed,
}

/// A set of equal-radius disks; the unit disk graph's implicit vertex set.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub disks: Vec<Disk>,
    pub radius: f64,
}

impl Instance {
    /// Validates that the radius is positive and finite, coordinates are
    /// finite, and ids are distinct.
    pub fn new(disks: Vec<Disk>, radius: f64) -> Result<Self, Error> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidInstance(format!(
                "radius must be a positive finite number, got {radius}"
            )));
        }
        let mut seen = BTreeSet::new();
        for d in &disks {
            if !d.cx.is_finite() || !d.cy.is_finite() {
                return Err(Error::InvalidInstance(format!(
                    "disk {} has non-finite center ({}, {})",
                    d.id, d.cx, d.cy
                )));
            }
            if !seen.insert(d.id) {
                return Err(Error::InvalidInstance(format!("duplicate disk id {}", d.id)));
            }
        }
        Ok(Instance { disks, radius })
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    /// Looks a disk up by id. Linear scan; callers on hot paths build their
    /// own index.
    pub fn disk(&self, id: DiskId) -> Option<&Disk> {
        self.disks.iter().find(|d| d.id == id)
    }

    pub fn ids(&self) -> impl Iterator<Item = DiskId> + '_ {
        self.disks.iter().map(|d| d.id)
    }
}

/// Squared center distance, evaluated in plain floating point.
pub fn dist_sq(a: &Disk, b: &Disk) -> f64 {
    let dx = a.cx - b.cx;
    let dy = a.cy - b.cy;
    dx * dx + dy * dy
}

/// Whether two distinct disks of radius `radius` intersect.
///
/// Panics if both arguments are the same disk (by id); self-adjacency is
/// always a caller bug.
pub fn adjacent(a: &Disk, b: &Disk, radius: f64, conv: Convention) -> bool {
    assert!(a.id != b.id, "adjacency of disk {} with itself", a.id);
    let diameter = 2.0 * radius;
    let threshold = diameter * diameter;
    match conv {
        Convention::Open => dist_sq(a, b) < threshold,
        Convention::Closed => dist_sq(a, b) <= threshold,
    }
}

/// Whether the disk intersects the horizontal line `y = y_line`. Tangency to
/// the line counts as stabbed.
pub fn stabs_line(d: &Disk, y_line: f64, radius: f64) -> bool {
    (d.cy - y_line).abs() <= radius
}

/// True iff no two of the listed disks are adjacent. Unknown ids are an
/// input error.
pub fn verify_independent(
    inst: &Instance,
    ids: &BTreeSet<DiskId>,
    conv: Convention,
) -> Result<bool, Error> {
    let mut picked = Vec::with_capacity(ids.len());
    for &id in ids {
        picked.push(inst.disk(id).ok_or(Error::UnknownId(id))?);
    }
    for (i, a) in picked.iter().enumerate() {
        for b in &picked[i + 1..] {
            if adjacent(a, b, inst.radius, conv) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ordering key inducing a strict total order by (cx, cy, id).
///
/// The coordinate comparisons use `f64::total_cmp`; instances only ever hold
/// finite coordinates, where that coincides with the usual order.
#[derive(Clone, Copy, Debug)]
pub struct XOrderKey {
    cx: f64,
    cy: f64,
    id: DiskId,
}

impl PartialEq for XOrderKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for XOrderKey {}

impl PartialOrd for XOrderKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XOrderKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cx
            .total_cmp(&other.cx)
            .then_with(|| self.cy.total_cmp(&other.cy))
            .then_with(|| self.id.cmp(&other.id))
    }
}

/// Deterministic x-order key for sorting disks left to right.
pub fn x_order_key(d: &Disk) -> XOrderKey {
    XOrderKey {
        cx: d.cx,
        cy: d.cy,
        id: d.id,
    }
}

/// Uniform rescaling of all coordinates and the radius; ids are preserved.
pub fn scale(inst: &Instance, c: f64) -> Result<Instance, Error> {
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "scale factor must be positive and finite, got {c}"
        )));
    }
    let disks = inst
        .disks
        .iter()
        .map(|d| Disk::new(d.id, d.cx * c, d.cy * c))
        .collect();
    Instance::new(disks, inst.radius * c)
}
