use std::collections::BTreeMap;
use std::io;
use std::path::Path;

use gsearch_core::equivalence::{check_theorem, compare, EquivalenceError, Theorem};
use gsearch_core::patterns::find_forbidden;
use gsearch_core::{
    enumerate_orderings, is_search_ordering, recognize_structure, run_search, scan_reader,
    CheckOptions, ClassLabel, EquivalenceReport, Graph, GraphClass, PatternHit, Relation,
    ScanOptions, SearchError, SearchKind, TieBreak, ValidationError, VertexOrdering, Violation,
};
use serde::{Deserialize, Serialize};

use crate::input::{load_labels, parse_ordering};
use crate::{Failure, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TieBreakArg {
    Min,
    Max,
}

impl TieBreakArg {
    pub fn with_seed(self, seed: Option<u64>) -> TieBreak {
        match (seed, self) {
            (Some(s), _) => TieBreak::SeededRandom(s),
            (None, TieBreakArg::Min) => TieBreak::MinIndex,
            (None, TieBreakArg::Max) => TieBreak::MaxIndex,
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Disconnected => Failure::Disconnected,
            other => Failure::Parse(other.to_string()),
        }
    }
}

impl From<EquivalenceError> for Failure {
    fn from(e: EquivalenceError) -> Self {
        match e {
            EquivalenceError::Disconnected
            | EquivalenceError::Search(SearchError::Disconnected)
            | EquivalenceError::Validation(ValidationError::Disconnected) => Failure::Disconnected,
            other => Failure::Parse(other.to_string()),
        }
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

pub fn parse_theorems(text: &str) -> Result<Vec<Theorem>, Failure> {
    if text.eq_ignore_ascii_case("all") {
        return Ok(Theorem::ALL.to_vec());
    }
    text.split(',')
        .map(|t| t.trim().parse().map_err(Failure::Parse))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub label: ClassLabel,
    /// Forbidden pattern found for each class the graph is not in.
    pub hits: BTreeMap<String, PatternHit>,
}

pub fn classify(g: &Graph, json: bool) -> Result<Outcome, Failure> {
    if !g.is_connected() {
        return Err(Failure::Disconnected);
    }
    let label = recognize_structure(g);
    let hits: BTreeMap<String, PatternHit> = [
        ("A", GraphClass::A),
        ("B", GraphClass::B),
        ("C", GraphClass::C),
    ]
    .into_iter()
    .filter_map(|(name, class)| find_forbidden(g, class).map(|h| (name.to_owned(), h)))
    .collect();
    let report = ClassifyReport { label, hits };
    if json {
        print_json(&report);
        return Ok(Outcome::Ok);
    }
    let flag = |v: Option<bool>| v.map_or("n/a".to_owned(), |b| b.to_string());
    let l = &report.label;
    let rows = [
        ("connected", l.connected.to_string()),
        ("forest", l.forest.to_string()),
        ("tree", flag(l.tree)),
        ("star", flag(l.star)),
        ("clique", l.clique.to_string()),
        ("cycle (n >= 4)", flag(l.cycle)),
        ("complete bipartite", flag(l.complete_bipartite)),
        ("complete multipartite", flag(l.complete_multipartite)),
        ("triangle-free", l.triangle_free.to_string()),
        ("trivially perfect", l.trivially_perfect.to_string()),
    ];
    for (name, value) in rows {
        println!("{name:<22} {value}");
    }
    for (name, value) in [("A", l.class_a), ("B", l.class_b), ("C", l.class_c)] {
        match report.hits.get(name) {
            Some(hit) => println!(
                "{:<22} {}  ({:?} on {})",
                format!("class {name}"),
                flag(value),
                hit.pattern,
                join(&hit.vertices)
            ),
            None => println!("{:<22} {}", format!("class {name}"), flag(value)),
        }
    }
    Ok(Outcome::Ok)
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub kind: SearchKind,
    pub ordering: VertexOrdering,
    pub valid: bool,
    pub violation: Option<Violation>,
}

pub fn validate(
    g: &Graph,
    kind: SearchKind,
    ordering: &str,
    labels: Option<&Path>,
    json: bool,
) -> Result<Outcome, Failure> {
    let labels = labels.map(load_labels).transpose()?;
    let sigma = parse_ordering(ordering, labels.as_ref(), g.vertex_count())?;
    let verdict = is_search_ordering(g, &sigma, kind).map_err(|e| match e {
        ValidationError::Disconnected => Failure::Disconnected,
        other => Failure::Parse(other.to_string()),
    })?;
    let report = ValidateReport {
        kind,
        ordering: sigma,
        valid: verdict.is_valid(),
        violation: verdict.into_violation(),
    };
    if json {
        print_json(&report);
    } else {
        match &report.violation {
            None => println!("valid {kind} ordering: {}", report.ordering),
            Some(v) => println!("not a {kind} ordering: {v}"),
        }
    }
    Ok(if report.valid {
        Outcome::Ok
    } else {
        Outcome::Negative
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub kind: SearchKind,
    pub ordering: VertexOrdering,
}

pub fn run(
    g: &Graph,
    kind: SearchKind,
    tiebreak: TieBreak,
    start: Option<usize>,
    json: bool,
) -> Result<Outcome, Failure> {
    let ordering = run_search(g, kind, tiebreak, start)?;
    if json {
        print_json(&RunReport { kind, ordering });
    } else {
        println!("{ordering}");
    }
    Ok(Outcome::Ok)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub kind: SearchKind,
    pub count: usize,
    pub truncated: bool,
    pub orderings: Vec<VertexOrdering>,
}

pub fn enumerate(g: &Graph, kind: SearchKind, cap: usize, json: bool) -> Result<Outcome, Failure> {
    let e = enumerate_orderings(g, kind, cap)?;
    let report = EnumerateReport {
        kind,
        count: e.orderings.len(),
        truncated: e.truncated,
        orderings: e.orderings,
    };
    if json {
        print_json(&report);
    } else {
        for o in &report.orderings {
            println!("{o}");
        }
        if report.truncated {
            println!("count: {} TRUNCATED", report.count);
        } else {
            println!("count: {}", report.count);
        }
    }
    Ok(if report.truncated {
        Outcome::Truncated
    } else {
        Outcome::Ok
    })
}

fn relation_symbol(r: Relation) -> &'static str {
    match r {
        Relation::Subset => "⊆",
        Relation::Equal => "=",
    }
}

fn describe(report: &EquivalenceReport) -> String {
    let mut s = format!(
        "{} {} {}: {}",
        report.kind_x,
        relation_symbol(report.relation),
        report.kind_y,
        report.verdict
    );
    if report.truncated {
        s.push_str(" (TRUNCATED)");
    }
    if let Some(w) = &report.witness {
        s.push_str(&format!(
            "\n  witness {} is {} but not {}: {}",
            w.ordering, w.valid_for, w.invalid_for, w.violation
        ));
    }
    s
}

fn report_outcome(report: &EquivalenceReport) -> Outcome {
    if report.witness.is_some() || !report.verdict {
        Outcome::Negative
    } else if report.truncated {
        Outcome::Truncated
    } else {
        Outcome::Ok
    }
}

pub fn equiv(
    g: &Graph,
    kind_x: SearchKind,
    kind_y: SearchKind,
    relation: Relation,
    opts: &CheckOptions,
    json: bool,
) -> Result<Outcome, Failure> {
    let report = compare(g, kind_x, kind_y, relation, opts)?;
    if json {
        print_json(&report);
    } else {
        println!("{}", describe(&report));
    }
    Ok(report_outcome(&report))
}

pub fn theorem(
    g: &Graph,
    theorems: &[Theorem],
    opts: &CheckOptions,
    json: bool,
) -> Result<Outcome, Failure> {
    let reports = theorems
        .iter()
        .map(|&t| check_theorem(g, t, opts))
        .collect::<Result<Vec<_>, _>>()?;
    if json {
        print_json(&reports);
    } else {
        for r in &reports {
            println!(
                "theorem {}: structural {}, detector {}, {}",
                r.theorem,
                r.structural_prediction,
                r.detector_prediction,
                if r.consistent {
                    "consistent"
                } else {
                    "INCONSISTENT"
                }
            );
            for item in &r.items {
                println!(
                    "  {} {}",
                    item.item,
                    describe(&item.report).replace('\n', "\n  ")
                );
            }
        }
    }
    let problems: Vec<String> = reports
        .iter()
        .flat_map(|r| r.inconsistent_items())
        .collect();
    Ok(if problems.is_empty() {
        Outcome::Ok
    } else if problems.iter().all(|p| p.ends_with("(truncated)")) {
        Outcome::Truncated
    } else {
        Outcome::Negative
    })
}

pub fn scan(
    theorems: Vec<Theorem>,
    jobs: usize,
    check: &CheckOptions,
    json: bool,
) -> Result<Outcome, Failure> {
    let opts = ScanOptions {
        theorems,
        jobs,
        check: *check,
    };
    let summary = scan_reader(io::stdin().lock(), &opts)
        .map_err(|e| Failure::Parse(format!("cannot read standard input: {e}")))?;
    if json {
        print_json(&summary);
    } else {
        for i in &summary.inconsistencies {
            println!("{}\t{}\t{}", i.graph6, i.theorem, i.item);
        }
    }
    for s in &summary.skipped {
        eprintln!("skipped line {} ({}): {}", s.line, s.input, s.reason);
    }
    eprintln!(
        "{} graphs processed, {} inconsistencies, {} lines skipped, {} ms",
        summary.graphs_processed,
        summary.inconsistencies.len(),
        summary.skipped.len(),
        summary.elapsed_ms
    );
    let only_truncation = summary
        .inconsistencies
        .iter()
        .all(|i| i.item.ends_with("(truncated)"));
    Ok(if summary.inconsistencies.is_empty() {
        Outcome::Ok
    } else if only_truncation {
        Outcome::Truncated
    } else {
        Outcome::Negative
    })
}
