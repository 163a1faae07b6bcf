//! Rendering of count tables and verification reports.
//!
//! Markdown mirrors the layout of the reference tables: one column per
//! cardinality, zero cells left blank. CSV and JSON print every zero
//! explicitly. Wall time only appears in JSON, under `metadata`.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use crate::verify::{TableRow, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new())
}

fn csv_finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("in-memory writer");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn width(rows: &[TableRow]) -> usize {
    rows.iter().map(|r| r.counts.len()).max().unwrap_or(0)
}

/// Count table rows, `counts[k]` being the count at cardinality `k + 1`.
pub fn render_table(rows: &[TableRow], format: Format) -> String {
    let w = width(rows);
    match format {
        Format::Json => json(rows),
        Format::Csv => {
            let mut out = csv_writer();
            let header = std::iter::once("j".to_string()).chain((1..=w).map(|j| j.to_string()));
            out.write_record(header).expect("in-memory writer");
            for row in rows {
                let cells = (0..w).map(|k| row.counts.get(k).copied().unwrap_or(0).to_string());
                out.write_record(std::iter::once(row.label.clone()).chain(cells))
                    .expect("in-memory writer");
            }
            csv_finish(out)
        }
        Format::Md => {
            let mut s = String::from("| j |");
            for j in 1..=w {
                let _ = write!(s, " {j} |");
            }
            s.push_str("\n|---|");
            s.push_str(&"---|".repeat(w));
            s.push('\n');
            for row in rows {
                let _ = write!(s, "| {} |", row.label);
                for k in 0..w {
                    match row.counts.get(k) {
                        Some(&c) if c > 0 => {
                            let _ = write!(s, " {c} |");
                        }
                        _ => s.push_str("  |"),
                    }
                }
                s.push('\n');
            }
            s
        }
    }
}

const CSV_HEADER: [&str; 8] = [
    "suite", "subject", "cell", "source", "claimed", "oracle", "pass", "note",
];

/// One or more suite reports. JSON gives an array when more than one.
pub fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json if reports.len() == 1 => json(&reports[0]),
        Format::Json => json(reports),
        Format::Csv => {
            let mut out = csv_writer();
            out.write_record(CSV_HEADER).expect("in-memory writer");
            for report in reports {
                for r in &report.records {
                    out.write_record([
                        report.suite.as_str(),
                        &r.subject,
                        &r.cell,
                        &r.source,
                        &r.claimed.to_string(),
                        &r.oracle.to_string(),
                        if r.pass { "true" } else { "false" },
                        r.note.as_deref().unwrap_or(""),
                    ])
                    .expect("in-memory writer");
                }
            }
            csv_finish(out)
        }
        Format::Md => reports.iter().map(markdown).collect::<Vec<_>>().join("\n"),
    }
}

fn markdown(report: &VerificationReport) -> String {
    let s = &report.summary;
    let mut out = format!(
        "## {}\n\n{} checks: {} passed, {} failed, {} skipped. {}\n",
        report.suite,
        s.total,
        s.passed,
        s.failed,
        s.skipped,
        if report.passed() { "PASS" } else { "FAIL" }
    );
    if !report.table.is_empty() {
        out.push('\n');
        out.push_str(&render_table(&report.table, Format::Md));
    }
    if !report.passed() {
        out.push_str(
            "\n| subject | cell | source | claimed | oracle | note |\n|---|---|---|---|---|---|\n",
        );
        for r in report.failures() {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                r.subject,
                r.cell,
                r.source,
                r.claimed,
                r.oracle,
                r.note.as_deref().unwrap_or("")
            );
        }
    }
    if !report.findings.is_empty() {
        out.push('\n');
        for f in &report.findings {
            let kind = serde_json::to_value(f.kind).expect("kind serializes");
            let _ = writeln!(
                out,
                "- {} [{}]: {}",
                f.subject,
                kind.as_str().unwrap_or(""),
                f.detail
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<TableRow> {
        vec![
            TableRow {
                label: "d_w(P_1, j)".into(),
                counts: vec![1],
            },
            TableRow {
                label: "d_w(P_4, j)".into(),
                counts: vec![0, 3, 4, 1],
            },
        ]
    }

    #[test]
    fn markdown_blanks_zero_cells() {
        let md = render_table(&rows(), Format::Md);
        assert_eq!(
            md,
            "| j | 1 | 2 | 3 | 4 |\n|---|---|---|---|---|\n| d_w(P_1, j) | 1 |  |  |  |\n| d_w(P_4, j) |  | 3 | 4 | 1 |\n"
        );
    }

    #[test]
    fn csv_writes_explicit_zeros() {
        let csv = render_table(&rows(), Format::Csv);
        assert_eq!(
            csv,
            "j,1,2,3,4\n\"d_w(P_1, j)\",1,0,0,0\n\"d_w(P_4, j)\",0,3,4,1\n"
        );
    }

    #[test]
    fn json_rows() {
        let v: serde_json::Value =
            serde_json::from_str(&render_table(&rows(), Format::Json)).unwrap();
        assert_eq!(v[1]["counts"], serde_json::json!([0, 3, 4, 1]));
    }
}
