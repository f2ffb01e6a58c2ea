//! Line-oriented records printed by the `rho` binary. Rationals are written
//! as `p/q` in lowest terms, or as a bare integer when `q = 1`.

use serde::Serialize;

use crate::exact::Rational;
use crate::verify::{CheckReport, Residual};

pub const CSV_HEADER: &str = "n,k,value";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// One `(n, k, value)` entry of a table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: i64,
    pub k: usize,
    #[serde(serialize_with = "as_string")]
    pub value: Rational,
}

fn as_string<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl TableRow {
    pub fn to_csv(&self) -> String {
        format!("{},{},{}", self.n, self.k, self.value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table rows always serialize")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

#[derive(Debug, Serialize)]
struct CheckRecord<'a> {
    suite: &'a str,
    check: &'a str,
    passed: bool,
    cases: usize,
    max_residual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    tolerance: Option<f64>,
}

/// `PASS sumrules/abel-alternating cases=11 max_residual=0`, or the same
/// fields as a JSON object.
pub fn check_line(r: &CheckReport, format: Format) -> String {
    match format {
        Format::Csv => {
            let status = if r.passed { "PASS" } else { "FAIL" };
            let mut line = format!("{status} {}/{} cases={} max_residual={}", r.suite, r.name, r.cases, r.max_residual);
            if let Some(tol) = r.tolerance {
                line.push_str(&format!(" tol={tol:e}"));
            }
            line
        }
        Format::Json => serde_json::to_string(&CheckRecord {
            suite: r.suite.id(),
            check: r.name,
            passed: r.passed,
            cases: r.cases,
            max_residual: match &r.max_residual {
                Residual::Exact(q) => q.to_string(),
                Residual::Float(x) => format!("{x:e}"),
            },
            tolerance: r.tolerance,
        })
        .expect("check records always serialize"),
    }
}

pub fn summary_line(reports: &[CheckReport]) -> String {
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        format!("all {} checks passed", reports.len())
    } else {
        format!("{failed} of {} checks failed", reports.len())
    }
}
