//! Table, JSON and CSV renderings of radius rows and verification reports.
//!
//! Numbers are rounded to 12 significant digits before serialization so that
//! output is byte-stable and round-trips exactly.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};
use starlike_core::{RadiusResult, RegionId, VerificationReport};

use crate::Format;

/// `x` rounded to 12 significant digits.
pub(crate) fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn params_map(region: RegionId) -> Map<String, Value> {
    region
        .params()
        .into_iter()
        .map(|(k, v)| (k.to_string(), Value::from(sig12(v))))
        .collect()
}

fn params_text(region: RegionId) -> String {
    region
        .params()
        .into_iter()
        .map(|(k, v)| format!("{k}={}", sig12(v)))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Serialize)]
struct FlagRecord<'a> {
    code: &'a str,
    note: &'a str,
}

#[derive(Serialize)]
struct RowRecord<'a> {
    class: &'a str,
    region: &'a str,
    params: Map<String, Value>,
    numeric: f64,
    closed_form: Option<f64>,
    residual: f64,
    status: &'a str,
    flags: Vec<FlagRecord<'a>>,
}

fn row_record(row: &RadiusResult) -> RowRecord<'_> {
    RowRecord {
        class: row.class.as_str(),
        region: row.region.name(),
        params: params_map(row.region),
        numeric: sig12(row.numeric),
        closed_form: row.closed_form.map(sig12),
        residual: sig12(row.residual),
        status: row.status.as_str(),
        flags: row
            .flags
            .iter()
            .map(|f| FlagRecord {
                code: f.code,
                note: &f.note,
            })
            .collect(),
    }
}

pub(crate) fn render_rows(rows: &[RadiusResult], format: Format) -> String {
    match format {
        Format::Json => {
            let records: Vec<_> = rows.iter().map(row_record).collect();
            let mut s = serde_json::to_string_pretty(&records).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "class",
                "region",
                "params",
                "numeric",
                "closed_form",
                "residual",
                "status",
                "flags",
            ])
            .expect("in-memory write");
            for row in rows {
                let flags: Vec<&str> = row.flags.iter().map(|f| f.code).collect();
                w.write_record([
                    row.class.as_str().to_string(),
                    row.region.name().to_string(),
                    params_text(row.region),
                    sig12(row.numeric).to_string(),
                    row.closed_form
                        .map(|c| sig12(c).to_string())
                        .unwrap_or_default(),
                    sig12(row.residual).to_string(),
                    row.status.as_str().to_string(),
                    flags.join(";"),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:5} {:36} {:>16} {:>16} {:>10} {:12} flags",
                "class", "region", "numeric", "closed form", "residual", "status"
            );
            for row in rows {
                let closed = row
                    .closed_form
                    .map_or("-".to_string(), |c| format!("{c:.12}"));
                let codes: Vec<&str> = row.flags.iter().map(|f| f.code).collect();
                let _ = writeln!(
                    s,
                    "{:5} {:36} {:>16.12} {:>16} {:>10.2e} {:12} {}",
                    row.class.as_str(),
                    row.region.to_string(),
                    row.numeric,
                    closed,
                    row.residual,
                    row.status.as_str(),
                    codes.join(",")
                );
            }
            let notes: Vec<_> = rows
                .iter()
                .flat_map(|r| r.flags.iter().map(move |f| (r, f)))
                .collect();
            if !notes.is_empty() {
                s.push('\n');
                for (row, flag) in notes {
                    let _ = writeln!(s, "{} {}: {flag}", row.class, row.region);
                }
            }
            s
        }
    }
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    kind: &'a str,
    class: &'a str,
    region: &'a str,
    params: Map<String, Value>,
    r: f64,
    pass: bool,
    known_discrepancy: Option<&'a str>,
    worst_margin: f64,
    witness: Option<[f64; 2]>,
    residual: f64,
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    reports: Vec<ReportRecord<'a>>,
    flags: Vec<RowRecord<'a>>,
    unexpected_failures: usize,
}

fn report_record(rep: &VerificationReport) -> ReportRecord<'_> {
    ReportRecord {
        kind: rep.kind.as_str(),
        class: rep.class.as_str(),
        region: rep.region.name(),
        params: params_map(rep.region),
        r: sig12(rep.r),
        pass: rep.pass,
        known_discrepancy: rep.known_discrepancy(),
        worst_margin: sig12(rep.worst_margin),
        witness: rep.witness.map(|w| [sig12(w.re), sig12(w.im)]),
        residual: sig12(rep.residual),
        note: rep.note.as_deref(),
    }
}

pub(crate) fn render_reports(
    reports: &[VerificationReport],
    rows: &[RadiusResult],
    format: Format,
) -> String {
    let unexpected = reports.iter().filter(|r| r.is_unexpected_failure()).count();
    let known = reports
        .iter()
        .filter(|r| r.known_discrepancy().is_some())
        .count();
    let flagged: Vec<&RadiusResult> = rows.iter().filter(|r| r.is_flagged()).collect();
    match format {
        Format::Json => {
            let doc = VerifyDocument {
                reports: reports.iter().map(report_record).collect(),
                flags: flagged.iter().map(|r| row_record(r)).collect(),
                unexpected_failures: unexpected,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "kind",
                "class",
                "region",
                "params",
                "r",
                "pass",
                "known",
                "worst_margin",
                "witness_re",
                "witness_im",
                "residual",
            ])
            .expect("in-memory write");
            for rep in reports {
                let (re, im) = rep.witness.map_or((String::new(), String::new()), |w| {
                    (sig12(w.re).to_string(), sig12(w.im).to_string())
                });
                w.write_record([
                    rep.kind.as_str().to_string(),
                    rep.class.as_str().to_string(),
                    rep.region.name().to_string(),
                    params_text(rep.region),
                    sig12(rep.r).to_string(),
                    rep.pass.to_string(),
                    rep.known_discrepancy().is_some().to_string(),
                    sig12(rep.worst_margin).to_string(),
                    re,
                    im,
                    sig12(rep.residual).to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        _ => {
            let mut s = String::new();
            for rep in reports {
                let _ = writeln!(s, "{rep}");
                if let Some(why) = rep.known_discrepancy() {
                    let _ = writeln!(s, "      known discrepancy: {why}");
                }
            }
            if !flagged.is_empty() {
                s.push('\n');
                for row in &flagged {
                    for flag in &row.flags {
                        let _ = writeln!(s, "flag  {} {}: {flag}", row.class, row.region);
                    }
                }
            }
            let _ = writeln!(
                s,
                "\n{} checks, {} unexpected failures, {} known discrepancies, {} flagged rows",
                reports.len(),
                unexpected,
                known,
                flagged.len()
            );
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.101020514433644), 0.101020514434);
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(-2.5e-17), -2.5e-17);
    }
}
