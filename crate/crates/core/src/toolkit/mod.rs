//! Instance generation, differential testing, benchmarking, rendering, and
//! file I/O — everything around the solvers.

pub mod bench;
pub mod diff;
pub mod gen;
pub mod io;
pub mod render;

pub use bench::{bench_scaling, BenchReport, BenchRow};
pub use diff::{diff_single, differential_test, reports_to_csv, DiffReport, DiffSummary};
pub use gen::{generate, GenMode, GenParams};
pub use io::{read_instance, write_instance, write_result};
pub use render::render_svg;
