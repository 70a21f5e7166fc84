//! Static SVG output: one circle per disk at true scale, solution disks
//! filled, stabbing lines dashed. Deterministic text for fixed input.

use crate::error::Error;
use crate::geometry::Instance;
use crate::result::SolveResult;
use crate::strip::StripAssignment;

/// Renders the instance, optionally highlighting a solution and drawing the
/// strip lines. SVG's y axis points down, so coordinates are emitted with
/// negated y to keep the picture in the usual orientation.
pub fn render_svg(
    inst: &Instance,
    result: Option<&SolveResult>,
    sa: Option<&StripAssignment>,
) -> Result<String, Error> {
    if let Some(res) = result {
        for &id in &res.selected {
            if inst.disk(id).is_none() {
                return Err(Error::UnknownId(id));
            }
        }
    }
    if let Some(strips) = sa {
        for &id in strips.assignment.keys() {
            if inst.disk(id).is_none() {
                return Err(Error::UnknownId(id));
            }
        }
    }

    let r = inst.radius;
    let (min_x, max_x, min_y, max_y) = if inst.is_empty() {
        (0.0, 1.0, 0.0, 1.0)
    } else {
        let mut bounds = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for d in &inst.disks {
            bounds.0 = bounds.0.min(d.cx - r);
            bounds.1 = bounds.1.max(d.cx + r);
            bounds.2 = bounds.2.min(d.cy - r);
            bounds.3 = bounds.3.max(d.cy + r);
        }
        if let Some(strips) = sa {
            for &y in &strips.line_ys {
                bounds.2 = bounds.2.min(y);
                bounds.3 = bounds.3.max(y);
            }
        }
        bounds
    };

    let pad = 0.5 * r.max(0.1);
    let vb_x = min_x - pad;
    let vb_y = -(max_y + pad);
    let vb_w = (max_x - min_x) + 2.0 * pad;
    let vb_h = (max_y - min_y) + 2.0 * pad;
    let stroke = (r / 20.0).max(vb_w.max(vb_h) / 1000.0);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vb_x} {vb_y} {vb_w} {vb_h}\">\n"
    ));

    if let Some(strips) = sa {
        for &y in &strips.line_ys {
            svg.push_str(&format!(
                "  <line x1=\"{vb_x}\" y1=\"{ly}\" x2=\"{x2}\" y2=\"{ly}\" stroke=\"#999\" stroke-width=\"{stroke}\" stroke-dasharray=\"{dash}\"/>\n",
                ly = -y,
                x2 = vb_x + vb_w,
                dash = 4.0 * stroke,
            ));
        }
    }

    for d in &inst.disks {
        let selected = result.map(|res| res.selected.contains(&d.id)).unwrap_or(false);
        let (fill, fill_opacity) = if selected {
            ("#2b8cbe", "0.55")
        } else {
            ("none", "1")
        };
        svg.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\" fill-opacity=\"{fill_opacity}\" stroke=\"#333\" stroke-width=\"{stroke}\"/>\n",
            d.cx, -d.cy,
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::overcount_instance;
    use crate::geometry::{Convention, Disk, DiskId};
    use crate::line_solvers::{brute_force_solve, DEFAULT_BRUTE_CAP};
    use crate::result::{SolveResult, SolverKind};
    use std::collections::BTreeSet;
    use std::time::Duration;

    #[test]
    fn empty_instance_still_valid_svg() {
        let inst = Instance::new(vec![], 0.5).unwrap();
        let svg = render_svg(&inst, None, None).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn single_selected_disk_is_filled() {
        let inst = Instance::new(vec![Disk::new(0, 1.0, 1.0)], 0.5).unwrap();
        let res = SolveResult::new(
            BTreeSet::from([0]),
            SolverKind::Brute,
            Duration::ZERO,
        );
        let svg = render_svg(&inst, Some(&res), None).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains("fill=\"#2b8cbe\""));
    }

    #[test]
    fn overcount_instance_fills_exactly_the_solution() {
        let inst = overcount_instance();
        let ids: Vec<DiskId> = inst.ids().collect();
        let res = brute_force_solve(&inst, &ids, Convention::Open, DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!(res.size, 2);
        let svg = render_svg(&inst, Some(&res), None).unwrap();
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("fill=\"#2b8cbe\"").count(), 2);
        assert_eq!(svg.matches("fill=\"none\"").count(), 2);
    }

    #[test]
    fn strip_lines_are_dashed() {
        let inst = Instance::new(
            vec![Disk::new(0, 0.0, 0.0), Disk::new(1, 0.0, -2.0)],
            0.5,
        )
        .unwrap();
        let sa = crate::strip::decompose(&inst);
        let svg = render_svg(&inst, None, Some(&sa)).unwrap();
        assert_eq!(svg.matches("<line").count(), sa.line_ys.len());
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn unknown_result_id_rejected() {
        let inst = Instance::new(vec![Disk::new(0, 0.0, 0.0)], 0.5).unwrap();
        let res = SolveResult::new(BTreeSet::from([5]), SolverKind::Brute, Duration::ZERO);
        assert!(matches!(
            render_svg(&inst, Some(&res), None),
            Err(Error::UnknownId(5))
        ));
    }

    #[test]
    fn output_is_deterministic() {
        let inst = overcount_instance();
        let sa = crate::strip::decompose(&inst);
        let a = render_svg(&inst, None, Some(&sa)).unwrap();
        let b = render_svg(&inst, None, Some(&sa)).unwrap();
        assert_eq!(a, b);
    }
}
