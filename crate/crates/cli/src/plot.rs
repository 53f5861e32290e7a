//! Geometry export: region boundary, covering circle at the radius, and the
//! image of `|z| = R` under the extremal `z f'(z)/f(z)`.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use starlike_core::{disk_at, eval_extremal_w, region, Complex64, RadiusResult, Result};

use crate::output::sig12;

const VIEW_BOX: &str = "-0.5 -1.5 3.5 3";

pub(crate) struct Curve {
    pub name: &'static str,
    pub points: Vec<Complex64>,
}

pub(crate) fn curves(row: &RadiusResult, m: usize) -> Result<Vec<Curve>> {
    let reg = region(row.region)?;
    let disk = disk_at(row.class, row.numeric)?;
    let step = TAU / m as f64;
    let boundary = (0..m)
        .map(|k| reg.boundary_point(k as f64 * step))
        .collect();
    let circle = (0..m)
        .map(|k| disk.boundary_point(k as f64 * step))
        .collect();
    let image = (0..m)
        .map(|k| {
            eval_extremal_w(
                row.class,
                Complex64::from_polar(row.numeric, k as f64 * step),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(vec![
        Curve {
            name: "boundary",
            points: boundary,
        },
        Curve {
            name: "disk",
            points: circle,
        },
        Curve {
            name: "image",
            points: image,
        },
    ])
}

fn path_data(points: &[Complex64]) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        // SVG's y axis points down.
        let _ = write!(d, "{cmd}{:.6},{:.6} ", p.re, -p.im);
    }
    d.push('Z');
    d
}

pub(crate) fn svg(row: &RadiusResult, curves: &[Curve]) -> String {
    let styles = [
        ("boundary", "#1f4e9c", "0.012"),
        ("disk", "#c0392b", "0.008"),
        ("image", "#2e8b57", "0.008"),
    ];
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"700\" height=\"600\" viewBox=\"{VIEW_BOX}\">"
    );
    let _ = writeln!(
        s,
        "  <title>{} {} R={}</title>",
        row.class,
        row.region,
        sig12(row.numeric)
    );
    s.push_str("  <line x1=\"-0.5\" y1=\"0\" x2=\"3\" y2=\"0\" stroke=\"#999999\" stroke-width=\"0.004\"/>\n");
    for curve in curves {
        let (_, color, width) = styles
            .iter()
            .find(|(name, _, _)| *name == curve.name)
            .copied()
            .unwrap_or(("", "#000000", "0.008"));
        let _ = writeln!(
            s,
            "  <path id=\"{}\" d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"/>",
            curve.name,
            path_data(&curve.points)
        );
    }
    s.push_str("</svg>\n");
    s
}

pub(crate) fn csv(curves: &[Curve]) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    w.write_record(["curve", "index", "re", "im"])
        .expect("in-memory write");
    for curve in curves {
        for (i, p) in curve.points.iter().enumerate() {
            w.write_record([
                curve.name.to_string(),
                i.to_string(),
                sig12(p.re).to_string(),
                sig12(p.im).to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
