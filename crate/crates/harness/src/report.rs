//! Experiment reports: JSON for machines, aligned tables for people.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A report row that can also be shown as a table line.
pub trait Row: Serialize {
    fn headers() -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
    fn pass(&self) -> bool;
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport<R> {
    pub experiment: String,
    pub tool_version: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, Value>,
    pub rows: Vec<R>,
    pub aggregate: BTreeMap<String, Value>,
    /// Every row passes and every aggregate check holds.
    pub pass: bool,
}

impl<R: Row> ExperimentReport<R> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "experiment {} (seed {}, version {})", self.experiment, self.seed, self.tool_version);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let headers = R::headers();
        let cells: Vec<Vec<String>> = self.rows.iter().map(Row::cells).collect();
        let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
        for line in &cells {
            for (w, c) in widths.iter_mut().zip(line) {
                *w = (*w).max(c.len());
            }
        }
        let mut line = |items: &[String]| {
            let padded: Vec<String> = items.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
        for c in &cells {
            line(c);
        }
        for (k, v) in &self.aggregate {
            let _ = writeln!(out, "{k}: {v}");
        }
        let _ = writeln!(out, "result: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

pub(crate) fn params<const N: usize>(items: [(&str, Value); N]) -> BTreeMap<String, Value> {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub(crate) fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}
