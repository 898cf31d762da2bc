//! Aggregated, diff-stable output across genus ranges.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{census, CensusReport};
use crate::error::{Error, Result};
use crate::orbits::{GenusVerdict, Oracle, TupleVerdict};

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    Verified,
    FormulaOnly,
    Failed,
}

impl Verification {
    pub fn as_str(self) -> &'static str {
        match self {
            Verification::Verified => "verified",
            Verification::FormulaOnly => "formula-only",
            Verification::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub genus: u32,
    pub total_classes: u64,
    pub tuple_count: usize,
    pub verified: Verification,
}

/// One record per genus in `g_min..=g_max`, running the oracle on genera up
/// to `verify_up_to`. A failing or erroring genus is marked `failed` and
/// the sweep continues.
pub fn build_sequence_file(
    g_min: i64,
    g_max: i64,
    verify_up_to: i64,
    oracle: Oracle,
) -> Result<Vec<SequenceRecord>> {
    build_sequence_file_with(g_min, g_max, verify_up_to, |g| oracle.verify_genus(g))
}

/// As [`build_sequence_file`], with the per-genus verifier supplied by the
/// caller.
pub fn build_sequence_file_with<F>(
    g_min: i64,
    g_max: i64,
    verify_up_to: i64,
    verifier: F,
) -> Result<Vec<SequenceRecord>>
where
    F: Fn(i64) -> Result<GenusVerdict> + Sync,
{
    if g_min <= 0 || g_min > g_max || verify_up_to > g_max {
        return Err(Error::InvalidRange {
            from: g_min,
            to: g_max,
        });
    }
    (g_min..=g_max)
        .into_par_iter()
        .map(|g| {
            let report = census(g)?;
            let verified = if g <= verify_up_to {
                match verifier(g) {
                    Ok(v) if v.passed() && v.orbit_total == report.total => Verification::Verified,
                    _ => Verification::Failed,
                }
            } else {
                Verification::FormulaOnly
            };
            Ok(SequenceRecord {
                genus: report.genus,
                total_classes: report.total,
                tuple_count: report.entries.len(),
                verified,
            })
        })
        .collect()
}

/// Right-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        out.push_str(&parts.join("  "));
        out.push('\n');
    };
    line(&mut headers.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn render(records: &[SequenceRecord], format: Format) -> String {
    match format {
        Format::Json => json_line(&records),
        Format::Csv => {
            let mut out = String::from("genus,total_classes,tuple_count,verified\n");
            for r in records {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    r.genus,
                    r.total_classes,
                    r.tuple_count,
                    r.verified.as_str()
                );
            }
            out
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.genus.to_string(),
                        r.total_classes.to_string(),
                        r.tuple_count.to_string(),
                        r.verified.as_str().to_string(),
                    ]
                })
                .collect();
            table(
                &["genus", "total_classes", "tuple_count", "verified"],
                &rows,
            )
        }
    }
}

/// Renders a census. With `nonzero_only` the zero-count tuples are hidden;
/// the total is unaffected.
pub fn render_census(report: &CensusReport, format: Format, nonzero_only: bool) -> String {
    let shown = if nonzero_only {
        CensusReport {
            entries: report.nonzero_entries().cloned().collect(),
            ..report.clone()
        }
    } else {
        report.clone()
    };
    match format {
        Format::Json => json_line(&shown),
        Format::Csv => {
            let mut out = String::from("genus,r,s,t,m,n,class_count,total\n");
            for e in &shown.entries {
                let [r, s, t, m, n] = e.tuple.as_array();
                let _ = writeln!(
                    out,
                    "{},{r},{s},{t},{m},{n},{},{}",
                    shown.genus, e.class_count, shown.total
                );
            }
            out
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = shown
                .entries
                .iter()
                .map(|e| {
                    let mut row: Vec<String> =
                        e.tuple.as_array().iter().map(u32::to_string).collect();
                    row.push(e.class_count.to_string());
                    row.push(e.euler_char_string());
                    row
                })
                .collect();
            let mut out = format!("genus {}\n", shown.genus);
            out.push_str(&table(
                &["r", "s", "t", "m", "n", "classes", "euler_char"],
                &rows,
            ));
            let _ = writeln!(out, "total {}", shown.total);
            out
        }
    }
}

/// Verification log: JSON-lines for `json`, one summary line per tuple for
/// `table`.
pub fn render_verdicts(verdicts: &[TupleVerdict], format: Format) -> String {
    let mut out = String::new();
    for v in verdicts {
        match format {
            Format::Json => out.push_str(&json_line(v)),
            _ => {
                let ks: Vec<String> = v.representatives.iter().map(|r| r.k.to_string()).collect();
                let status = if v.passed() { "pass" } else { "fail" };
                let _ = writeln!(
                    out,
                    "{} labelings={} orbits={} expected={} k=[{}] {status}",
                    v.tuple,
                    v.labelings,
                    v.orbits,
                    v.expected,
                    ks.join(",")
                );
            }
        }
    }
    out
}
