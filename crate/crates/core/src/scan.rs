//! Bulk theorem checking over a stream of graph6 records.

use std::io::BufRead;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::equivalence::{check_theorem, CheckOptions, Theorem};
use crate::format::parse_graph6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub theorems: Vec<Theorem>,
    /// Worker threads; `0` lets the pool pick.
    pub jobs: usize,
    pub check: CheckOptions,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            theorems: Theorem::ALL.to_vec(),
            jobs: 1,
            check: CheckOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inconsistency {
    pub graph6: String,
    pub theorem: Theorem,
    pub item: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    /// 1-based input line number.
    pub line: usize,
    pub input: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub graphs_processed: usize,
    pub inconsistencies: Vec<Inconsistency>,
    pub skipped: Vec<SkippedLine>,
    pub elapsed_ms: u64,
}

impl ScanSummary {
    pub fn is_consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }
}

enum LineOutcome {
    Blank,
    Checked(Vec<Inconsistency>),
    Skipped(SkippedLine),
}

fn check_line(line_no: usize, raw: &str, opts: &ScanOptions) -> LineOutcome {
    let record = raw.trim();
    if record.is_empty() {
        return LineOutcome::Blank;
    }
    let skip = |reason: String| {
        LineOutcome::Skipped(SkippedLine {
            line: line_no,
            input: record.to_owned(),
            reason,
        })
    };
    let g = match parse_graph6(record) {
        Ok(g) => g,
        Err(e) => return skip(e.to_string()),
    };
    let mut found = Vec::new();
    for &theorem in &opts.theorems {
        match check_theorem(&g, theorem, &opts.check) {
            Ok(report) => {
                found.extend(
                    report
                        .inconsistent_items()
                        .into_iter()
                        .map(|item| Inconsistency {
                            graph6: record.to_owned(),
                            theorem,
                            item,
                        }),
                )
            }
            Err(e) => return skip(e.to_string()),
        }
    }
    LineOutcome::Checked(found)
}

/// Checks every line; results are merged in input order whatever `jobs` is.
pub fn scan_lines(lines: &[String], opts: &ScanOptions) -> ScanSummary {
    let started = Instant::now();
    let run = || -> Vec<LineOutcome> {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, l)| check_line(i + 1, l, opts))
            .collect()
    };
    let outcomes = match rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut summary = ScanSummary {
        graphs_processed: 0,
        inconsistencies: Vec::new(),
        skipped: Vec::new(),
        elapsed_ms: 0,
    };
    for outcome in outcomes {
        match outcome {
            LineOutcome::Blank => {}
            LineOutcome::Checked(found) => {
                summary.graphs_processed += 1;
                summary.inconsistencies.extend(found);
            }
            LineOutcome::Skipped(s) => summary.skipped.push(s),
        }
    }
    summary.elapsed_ms = started.elapsed().as_millis() as u64;
    summary
}

/// Reads all of `reader` and scans it. Lines that are not valid UTF-8 are
/// skipped and reported rather than aborting the scan.
pub fn scan_reader<R: BufRead>(mut reader: R, opts: &ScanOptions) -> std::io::Result<ScanSummary> {
    let mut lines = Vec::new();
    let mut bad = Vec::new();
    let mut buf = Vec::new();
    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        match String::from_utf8(buf.clone()) {
            Ok(s) => lines.push(s),
            Err(_) => {
                bad.push(SkippedLine {
                    line: lines.len() + 1,
                    input: String::from_utf8_lossy(&buf).trim().to_owned(),
                    reason: "line is not valid UTF-8".into(),
                });
                lines.push(String::new());
            }
        }
    }
    let mut summary = scan_lines(&lines, opts);
    summary.skipped.extend(bad);
    summary.skipped.sort_by_key(|s| s.line);
    Ok(summary)
}
