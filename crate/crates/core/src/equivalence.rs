//! Per-graph comparison of the ordering sets of two search paradigms, and the
//! theorem checks built on top of it.
//!
//! An inclusion `X ⊆ Y` is decided by walking every `X` ordering in
//! lexicographic order and validating it as a `Y` ordering; the first failure
//! is kept as the witness.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::ordering::VertexOrdering;
use crate::patterns::{find_forbidden, recognize_structure, GraphClass};
use crate::search::{for_each_ordering, SearchError, SearchKind, DEFAULT_ENUMERATION_CAP};
use crate::validate::{is_search_ordering, ValidationError, Verdict, Violation};

/// Largest graph accepted without an explicit override.
pub const DEFAULT_SIZE_GUARD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("graph has {n} vertices, the limit is {limit} (override the size guard to proceed)")]
    SizeGuard { n: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// `None` disables the size guard.
    pub max_vertices: Option<usize>,
    /// Maximum number of `X` orderings examined per inclusion.
    pub cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_vertices: Some(DEFAULT_SIZE_GUARD),
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Subset,
    Equal,
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "subset" | "sub" => Ok(Relation::Subset),
            "equal" | "eq" => Ok(Relation::Equal),
            _ => Err(format!("unknown relation '{s}' (expected subset or equal)")),
        }
    }
}

/// An ordering valid for `valid_for` and rejected by `invalid_for`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub ordering: VertexOrdering,
    pub valid_for: SearchKind,
    pub invalid_for: SearchKind,
    pub violation: Violation,
}

/// `verdict` reflects every ordering examined; when `truncated` is set the cap
/// was reached before the walk finished and a `true` verdict is unproven.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub kind_x: SearchKind,
    pub kind_y: SearchKind,
    pub relation: Relation,
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub truncated: bool,
}

fn guard(g: &Graph, opts: &CheckOptions) -> Result<(), EquivalenceError> {
    if let Some(limit) = opts.max_vertices {
        if g.vertex_count() > limit {
            return Err(EquivalenceError::SizeGuard {
                n: g.vertex_count(),
                limit,
            });
        }
    }
    if !g.is_connected() {
        return Err(EquivalenceError::Disconnected);
    }
    Ok(())
}

/// First `x`-ordering rejected by `rejects`, plus whether the cap cut the walk short.
fn first_counterexample<F>(
    g: &Graph,
    x: SearchKind,
    cap: usize,
    mut rejects: F,
) -> Result<(Option<(VertexOrdering, Violation)>, bool), EquivalenceError>
where
    F: FnMut(&VertexOrdering) -> Result<Option<Violation>, ValidationError>,
{
    let mut seen = 0usize;
    let mut truncated = false;
    let mut found = None;
    let mut failure = None;
    let _ = for_each_ordering(g, x, |order| {
        if seen == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        seen += 1;
        let sigma = VertexOrdering::new(order.to_vec()).expect("walk yields permutations");
        match rejects(&sigma) {
            Ok(None) => ControlFlow::Continue(()),
            Ok(Some(v)) => {
                found = Some((sigma, v));
                ControlFlow::Break(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok((found, truncated))
}

fn inclusion(
    g: &Graph,
    x: SearchKind,
    y: SearchKind,
    cap: usize,
) -> Result<(Option<Witness>, bool), EquivalenceError> {
    let (found, truncated) = first_counterexample(g, x, cap, |sigma| {
        is_search_ordering(g, sigma, y).map(Verdict::into_violation)
    })?;
    let witness = found.map(|(ordering, violation)| Witness {
        ordering,
        valid_for: x,
        invalid_for: y,
        violation,
    });
    Ok((witness, truncated))
}

/// Is every `kind_x` ordering of `g` also a `kind_y` ordering?
pub fn orderings_subset(
    g: &Graph,
    kind_x: SearchKind,
    kind_y: SearchKind,
    opts: &CheckOptions,
) -> Result<EquivalenceReport, EquivalenceError> {
    guard(g, opts)?;
    let (witness, truncated) = inclusion(g, kind_x, kind_y, opts.cap)?;
    Ok(EquivalenceReport {
        kind_x,
        kind_y,
        relation: Relation::Subset,
        verdict: witness.is_none(),
        witness,
        truncated,
    })
}

/// Do `kind_x` and `kind_y` produce the same orderings of `g`?
pub fn orderings_equal(
    g: &Graph,
    kind_x: SearchKind,
    kind_y: SearchKind,
    opts: &CheckOptions,
) -> Result<EquivalenceReport, EquivalenceError> {
    guard(g, opts)?;
    let (mut witness, mut truncated) = inclusion(g, kind_x, kind_y, opts.cap)?;
    if witness.is_none() {
        let (back, back_truncated) = inclusion(g, kind_y, kind_x, opts.cap)?;
        witness = back;
        truncated |= back_truncated;
    }
    Ok(EquivalenceReport {
        kind_x,
        kind_y,
        relation: Relation::Equal,
        verdict: witness.is_none(),
        witness,
        truncated,
    })
}

pub fn compare(
    g: &Graph,
    kind_x: SearchKind,
    kind_y: SearchKind,
    relation: Relation,
    opts: &CheckOptions,
) -> Result<EquivalenceReport, EquivalenceError> {
    match relation {
        Relation::Subset => orderings_subset(g, kind_x, kind_y, opts),
        Relation::Equal => orderings_equal(g, kind_x, kind_y, opts),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    A,
    B,
    C,
    CorollaryA5A6,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::A, Theorem::B, Theorem::C, Theorem::CorollaryA5A6];

    pub fn class(self) -> GraphClass {
        match self {
            Theorem::A | Theorem::CorollaryA5A6 => GraphClass::A,
            Theorem::B => GraphClass::B,
            Theorem::C => GraphClass::C,
        }
    }

    /// Label of the structural item (A1, B1, C1).
    pub fn structural_item(self) -> &'static str {
        match self {
            Theorem::A | Theorem::CorollaryA5A6 => "A1",
            Theorem::B => "B1",
            Theorem::C => "C1",
        }
    }

    /// The behavioral items: label, `X`, `Y`, relation.
    pub fn items(self) -> &'static [(&'static str, SearchKind, SearchKind, Relation)] {
        use Relation::*;
        use SearchKind::*;
        match self {
            Theorem::A => &[
                ("A2", Generic, Dfs, Subset),
                ("A3", Generic, Bfs, Subset),
                ("A4", Bfs, Dfs, Equal),
            ],
            Theorem::B => &[
                ("B2", Dfs, LexDfs, Subset),
                ("B3", Bfs, LexBfs, Subset),
                ("B4", Generic, Mns, Subset),
            ],
            Theorem::C => &[("C2", Mns, LexDfs, Subset), ("C3", Mns, LexBfs, Subset)],
            Theorem::CorollaryA5A6 => &[
                ("A5", Generic, LexDfs, Subset),
                ("A6", Generic, LexBfs, Subset),
            ],
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::A => "A",
            Theorem::B => "B",
            Theorem::C => "C",
            Theorem::CorollaryA5A6 => "corollary",
        })
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Theorem::A),
            "b" => Ok(Theorem::B),
            "c" => Ok(Theorem::C),
            "corollary" | "cor" | "a5a6" => Ok(Theorem::CorollaryA5A6),
            _ => Err(format!(
                "unknown theorem '{s}' (expected A, B, C or corollary)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemResult {
    pub item: String,
    pub report: EquivalenceReport,
}

/// Structural prediction against observed search behavior for one graph.
///
/// `detector_prediction` is the same class decided by brute-force forbidden
/// subgraph search instead of the structural recognizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub structural_prediction: bool,
    pub detector_prediction: bool,
    pub items: Vec<ItemResult>,
    pub consistent: bool,
}

impl TheoremReport {
    pub fn behavioral_results(&self) -> Vec<bool> {
        self.items.iter().map(|i| i.report.verdict).collect()
    }

    /// Items that disagree with the structural prediction (the structural item
    /// itself when the detector path disagrees).
    pub fn inconsistent_items(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.detector_prediction != self.structural_prediction {
            out.push(format!("{} (detector)", self.theorem.structural_item()));
        }
        for i in &self.items {
            if i.report.truncated {
                out.push(format!("{} (truncated)", i.item));
            } else if i.report.verdict != self.structural_prediction {
                out.push(i.item.clone());
            }
        }
        out
    }
}

pub fn check_theorem(
    g: &Graph,
    theorem: Theorem,
    opts: &CheckOptions,
) -> Result<TheoremReport, EquivalenceError> {
    guard(g, opts)?;
    let class = theorem.class();
    let structural_prediction = recognize_structure(g)
        .class(class)
        .ok_or(EquivalenceError::Disconnected)?;
    let detector_prediction = find_forbidden(g, class).is_none();
    let items = theorem
        .items()
        .iter()
        .map(|&(label, x, y, relation)| {
            compare(g, x, y, relation, opts).map(|report| ItemResult {
                item: label.to_owned(),
                report,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = TheoremReport {
        theorem,
        structural_prediction,
        detector_prediction,
        items,
        consistent: false,
    };
    report.consistent = report.inconsistent_items().is_empty();
    Ok(report)
}

/// Lexicographically first ordering that MNS can produce but MCS cannot.
pub fn find_mns_not_mcs(
    g: &Graph,
    opts: &CheckOptions,
) -> Result<Option<Witness>, EquivalenceError> {
    guard(g, opts)?;
    let (witness, _) = inclusion(g, SearchKind::Mns, SearchKind::Mcs, opts.cap)?;
    Ok(witness)
}
