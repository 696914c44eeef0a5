//! The search report CSV: one line per bound row.

use std::io::Write;

use thiserror::Error;

use super::{BoundStatus, SearchReport};
use crate::pattern::Pattern;

pub const REPORT_HEADER: [&str; 7] =
    ["n", "pattern", "max_edges", "witness_plg_path", "bound_name", "bound_value", "satisfied"];

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub n: usize,
    pub pattern: Pattern,
    pub max_edges: usize,
    pub witness_plg_path: String,
    pub bound_name: String,
    pub bound_value: f64,
    pub status: BoundStatus,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error("header must be {expected}", expected = REPORT_HEADER.join(","))]
    BadHeader,
    #[error("line {line}, column {column}: {message}")]
    BadField { line: u64, column: &'static str, message: String },
    #[error("line {line}: status `{status}` contradicts {max_edges} edges against bound {value:.6}")]
    Inconsistent { line: u64, status: BoundStatus, max_edges: usize, value: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ReportError {
    fn csv(e: csv::Error) -> ReportError {
        let line = e.position().map_or(0, |p| p.line());
        match e.into_kind() {
            csv::ErrorKind::Io(io) => ReportError::Io(io),
            other => ReportError::Csv { line, message: format!("{other:?}") },
        }
    }
}

pub fn report_rows(report: &SearchReport, witness_plg_path: &str) -> Vec<ReportRow> {
    report
        .rows
        .iter()
        .map(|r| ReportRow {
            n: report.n,
            pattern: report.pattern,
            max_edges: report.max_edges,
            witness_plg_path: witness_plg_path.to_string(),
            bound_name: r.name.clone(),
            bound_value: r.value,
            status: r.status,
        })
        .collect()
}

/// Writes the header and `rows`. Bound values carry six decimals.
pub fn write_report_csv<W: Write>(rows: &[ReportRow], out: W) -> Result<(), ReportError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_HEADER).map_err(ReportError::csv)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.pattern.to_string(),
            r.max_edges.to_string(),
            r.witness_plg_path.clone(),
            r.bound_name.clone(),
            format!("{:.6}", r.bound_value),
            r.status.to_string(),
        ])
        .map_err(ReportError::csv)?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a report written by [`write_report_csv`] and checks each status
/// against its edge count and bound value.
pub fn read_report_csv(data: &[u8]) -> Result<Vec<ReportRow>, ReportError> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(data);
    let header = r.headers().map_err(ReportError::csv)?;
    if !header.iter().eq(REPORT_HEADER) {
        return Err(ReportError::BadHeader);
    }
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(ReportError::csv)?;
        let line = rec.position().map_or(0, |p| p.line());
        let field = |i: usize| rec.get(i).unwrap_or_default();
        let bad = |column: &'static str, message: String| ReportError::BadField { line, column, message };
        let int = |i: usize, column: &'static str| {
            let s = field(i);
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(column, format!("expected a non-negative integer, found `{s}`")));
            }
            s.parse::<usize>().map_err(|e| bad(column, e.to_string()))
        };
        let n = int(0, "n")?;
        let pattern = field(1).parse::<Pattern>().map_err(|e| bad("pattern", e.to_string()))?;
        let max_edges = int(2, "max_edges")?;
        let bound_value = field(5)
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| bad("bound_value", format!("expected a finite number, found `{}`", field(5))))?;
        let status = field(6).parse::<BoundStatus>().map_err(|e| bad("satisfied", e))?;
        if status != BoundStatus::NotApplicable && BoundStatus::judge(max_edges, bound_value, true) != status {
            return Err(ReportError::Inconsistent { line, status, max_edges, value: bound_value });
        }
        rows.push(ReportRow {
            n,
            pattern,
            max_edges,
            witness_plg_path: field(3).to_string(),
            bound_name: field(4).to_string(),
            bound_value,
            status,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(status: BoundStatus) -> ReportRow {
        ReportRow {
            n: 6,
            pattern: Pattern::ExactCycle(3),
            max_edges: 8,
            witness_plg_path: "w, \"odd\".plg".into(),
            bound_name: "c3-euler".into(),
            bound_value: 8.0,
            status,
        }
    }

    #[test]
    fn round_trip() {
        let rows = vec![row(BoundStatus::Satisfied), row(BoundStatus::NotApplicable)];
        let mut buf = Vec::new();
        write_report_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("n,pattern,max_edges,witness_plg_path,bound_name,bound_value,satisfied\n"));
        assert!(text.contains(",8.000000,true\n"));
        assert_eq!(read_report_csv(&buf).unwrap(), rows);
    }

    #[test]
    fn rejects_bad_input() {
        let head = REPORT_HEADER.join(",");
        let cases = [
            "n,pattern\n1,c3\n".to_string(),
            format!("{head}\nx,c3,8,w,b,8.0,true\n"),
            format!("{head}\n6,c2,8,w,b,8.0,true\n"),
            format!("{head}\n6,c3,8,w,b,NaN,true\n"),
            format!("{head}\n6,c3,8,w,b,8.0,maybe\n"),
            format!("{head}\n6,c3,9,w,b,8.0,true\n"),
            format!("{head}\n6,c3,8,w\n"),
        ];
        for c in cases {
            assert!(read_report_csv(c.as_bytes()).is_err(), "{c}");
        }
    }
}
