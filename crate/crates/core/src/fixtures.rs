//! Hand-built instances with known structure, used by tests, the
//! differential harness, and documentation.

use crate::geometry::{Disk, Instance};

/// Four disks of radius 1/2 stabbing the line y = 0, all centers above it.
///
/// The adjacency pairs are exactly {A,C}, {B,C}, {B,D} (ids 0..3 in that
/// order), so the optimum is 2 ({A,B} or {C,D} or {A,D}). The RI-jump
/// solver reports 3 on this input: after building value 2 from {A,B} it
/// jumps from D to its rightmost independent predecessor C and adds 1, even
/// though the value-2 subsolution contains B, which conflicts with D. Its
/// reconstruction {A,B,D} is not independent.
pub fn overcount_instance() -> Instance {
    Instance::new(
        vec![
            Disk::new(0, -1.88, 0.50), // A
            Disk::new(1, -0.95, 0.01), // B
            Disk::new(2, -0.90, 0.50), // C
            Disk::new(3, 0.00, 0.01),  // D
        ],
        0.5,
    )
    .expect("fixture is well-formed")
}

/// The line stabbed by every disk of [`overcount_instance`].
pub const OVERCOUNT_INSTANCE_LINE: f64 = 0.0;
