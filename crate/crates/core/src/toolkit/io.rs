//! Instance and result files.
//!
//! Two instance formats:
//!
//! * JSON: `{"radius": <real>, "disks": [{"id": <int>, "x": <real>, "y": <real>}, ...]}`.
//!   Ids are optional on input; a disk without one gets its 0-based file
//!   position. Duplicates are rejected.
//! * CSV: one `x,y` pair per line; the radius comes from outside (CLI flag)
//!   and ids are assigned by line order.
//!
//! Writing uses shortest-roundtrip float formatting, so write∘read is the
//! identity on the data model (for CSV, up to the externally-held radius
//! and ids being 0..n-1 in order, which generated instances satisfy).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geometry::{Disk, DiskId, Instance};
use crate::result::SolveResult;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    radius: f64,
    disks: Vec<DiskRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiskRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    id: Option<DiskId>,
    x: f64,
    y: f64,
}

pub fn instance_from_json(text: &str) -> Result<Instance, Error> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let disks = file
        .disks
        .into_iter()
        .enumerate()
        .map(|(i, rec)| Disk::new(rec.id.unwrap_or(i as DiskId), rec.x, rec.y))
        .collect();
    Instance::new(disks, file.radius)
}

pub fn instance_to_json(inst: &Instance) -> String {
    let file = InstanceFile {
        radius: inst.radius,
        disks: inst
            .disks
            .iter()
            .map(|d| DiskRecord {
                id: Some(d.id),
                x: d.cx,
                y: d.cy,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("instance serializes");
    text.push('\n');
    text
}

pub fn instance_from_csv(text: &str, radius: f64) -> Result<Instance, Error> {
    let mut disks = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split(',');
        let (Some(xs), Some(ys), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected exactly \"x,y\", got {raw:?}"),
            });
        };
        let parse = |s: &str, what: &str| -> Result<f64, Error> {
            let v: f64 = s.trim().parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("bad {what} coordinate {s:?}"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("non-finite {what} coordinate {s:?}"),
                });
            }
            Ok(v)
        };
        let x = parse(xs, "x")?;
        let y = parse(ys, "y")?;
        disks.push(Disk::new(disks.len() as DiskId, x, y));
    }
    Instance::new(disks, radius)
}

pub fn instance_to_csv(inst: &Instance) -> String {
    let mut out = String::new();
    for d in &inst.disks {
        out.push_str(&format!("{},{}\n", d.cx, d.cy));
    }
    out
}

/// Reads an instance, dispatching on the file extension (`.json` or
/// `.csv`). CSV input requires the radius; it is ignored for JSON.
pub fn read_instance(path: &Path, csv_radius: Option<f64>) -> Result<Instance, Error> {
    match extension_of(path)? {
        Format::Json => instance_from_json(&fs::read_to_string(path)?),
        Format::Csv => {
            let radius = csv_radius.ok_or_else(|| {
                Error::InvalidArgument(
                    "CSV input carries no radius; pass --radius R".to_string(),
                )
            })?;
            instance_from_csv(&fs::read_to_string(path)?, radius)
        }
    }
}

/// Writes an instance, dispatching on the file extension.
pub fn write_instance(inst: &Instance, path: &Path) -> Result<(), Error> {
    let text = match extension_of(path)? {
        Format::Json => instance_to_json(inst),
        Format::Csv => instance_to_csv(inst),
    };
    fs::write(path, text)?;
    Ok(())
}

enum Format {
    Json,
    Csv,
}

fn extension_of(path: &Path) -> Result<Format, Error> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => Ok(Format::Json),
        Some("csv") => Ok(Format::Csv),
        other => Err(Error::InvalidArgument(format!(
            "unsupported instance extension {other:?}; use .json or .csv"
        ))),
    }
}

#[derive(Serialize, Deserialize)]
pub struct ResultFile {
    pub algo: String,
    pub size: usize,
    pub selected: Vec<DiskId>,
    pub elapsed_ms: f64,
    pub verified_independent: bool,
}

/// Serializes a solve result. `algo` is the caller-facing algorithm label
/// (it may be more specific than the solver tag, e.g. `approx2-paperdp`).
pub fn result_to_json(result: &SolveResult, algo: &str, verified_independent: bool) -> String {
    let file = ResultFile {
        algo: algo.to_string(),
        size: result.size,
        selected: result.selected.iter().copied().collect(),
        elapsed_ms: result.elapsed.as_secs_f64() * 1e3,
        verified_independent,
    };
    let mut text = serde_json::to_string_pretty(&file).expect("result serializes");
    text.push('\n');
    text
}

pub fn result_from_json(text: &str) -> Result<ResultFile, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })
}

pub fn write_result(
    result: &SolveResult,
    algo: &str,
    verified_independent: bool,
    path: &Path,
) -> Result<(), Error> {
    fs::write(path, result_to_json(result, algo, verified_independent))?;
    Ok(())
}
