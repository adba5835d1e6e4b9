//! Membership tests for search orderings.
//!
//! BFS, DFS, LexBFS, LexDFS and MNS are decided by their three-point
//! conditions: for every `a <σ b <σ c` with `ac ∈ E` and `ab ∉ E` a fourth
//! vertex `d` must exist, the kinds differing only in where `d` may sit and
//! whether `dc ∉ E` is required. Generic search is the connected-prefix
//! condition and MCS is checked by replaying the selection rule.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::ordering::VertexOrdering;
use crate::search::SearchKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("ordering has {got} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0} has no point condition; use is_search_ordering")]
    UnsupportedKind(SearchKind),
    #[error("graph is disconnected")]
    Disconnected,
}

/// A triple `a <σ b <σ c` with `ac ∈ E`, `ab ∉ E` for which no admissible `d` exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub kind: SearchKind,
    pub reason: String,
}

/// Why an ordering fails a paradigm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Violation {
    /// `vertex` (at `position > 0`) has no earlier neighbor.
    DisconnectedPrefix {
        vertex: usize,
        position: usize,
    },
    Point(PointViolation),
    /// `vertex` was chosen with `count` visited neighbors while some unvisited
    /// vertex had `max_count`.
    NotMaximumCardinality {
        vertex: usize,
        position: usize,
        count: usize,
        max_count: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DisconnectedPrefix { vertex, position } => write!(
                f,
                "vertex {vertex} at position {position} has no earlier neighbor"
            ),
            Violation::Point(p) => write!(
                f,
                "{} violated by (a, b, c) = ({}, {}, {}): {}",
                p.kind, p.a, p.b, p.c, p.reason
            ),
            Violation::NotMaximumCardinality {
                vertex,
                position,
                count,
                max_count,
            } => write!(
                f,
                "vertex {vertex} at position {position} has {count} visited neighbors, maximum is {max_count}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }

    pub fn into_violation(self) -> Option<Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }
}

fn check_len(g: &Graph, sigma: &VertexOrdering) -> Result<(), ValidationError> {
    if g.vertex_count() != sigma.len() {
        return Err(ValidationError::LengthMismatch {
            expected: g.vertex_count(),
            got: sigma.len(),
        });
    }
    Ok(())
}

/// Every non-first vertex has a σ-earlier neighbor.
pub fn is_generic_order(g: &Graph, sigma: &VertexOrdering) -> Result<Verdict, ValidationError> {
    check_len(g, sigma)?;
    let mut seen = VertexSet::EMPTY;
    for (i, &v) in sigma.as_slice().iter().enumerate() {
        if i > 0 && g.neighbors(v).intersection(seen).is_empty() {
            return Ok(Verdict::Invalid(Violation::DisconnectedPrefix {
                vertex: v,
                position: i,
            }));
        }
        seen.insert(v);
    }
    Ok(Verdict::Valid)
}

/// Checks the three-point condition of `kind` alone (no prefix condition).
///
/// The first violating triple in lexicographic `(pos a, pos b, pos c)` order is reported.
pub fn check_point_condition(
    g: &Graph,
    sigma: &VertexOrdering,
    kind: SearchKind,
) -> Result<Verdict, ValidationError> {
    check_len(g, sigma)?;
    if matches!(kind, SearchKind::Generic | SearchKind::Mcs) {
        return Err(ValidationError::UnsupportedKind(kind));
    }
    let n = sigma.len();
    let order = sigma.as_slice();
    // before[i] = {σ(0), ..., σ(i-1)}
    let mut before = Vec::with_capacity(n + 1);
    let mut acc = VertexSet::EMPTY;
    before.push(acc);
    for &v in order {
        acc.insert(v);
        before.push(acc);
    }
    let between = |i: usize, j: usize| before[j].difference(before[i + 1]);

    for i in 0..n {
        let a = order[i];
        for j in i + 1..n {
            let b = order[j];
            if g.has_edge(a, b) {
                continue;
            }
            let nb = g.neighbors(b);
            for &c in &order[j + 1..] {
                if !g.has_edge(a, c) {
                    continue;
                }
                let private = nb.difference(g.neighbors(c));
                let (ok, reason) = match kind {
                    SearchKind::Bfs => (
                        !nb.intersection(before[i]).is_empty(),
                        "no d <σ a with db ∈ E",
                    ),
                    SearchKind::Dfs => (
                        !nb.intersection(between(i, j)).is_empty(),
                        "no d with a <σ d <σ b and db ∈ E",
                    ),
                    SearchKind::LexBfs => (
                        !private.intersection(before[i]).is_empty(),
                        "no d <σ a with db ∈ E and dc ∉ E",
                    ),
                    SearchKind::LexDfs => (
                        !private.intersection(between(i, j)).is_empty(),
                        "no d with a <σ d <σ b, db ∈ E and dc ∉ E",
                    ),
                    SearchKind::Mns => (
                        !private.intersection(before[j]).is_empty(),
                        "no d <σ b with db ∈ E and dc ∉ E",
                    ),
                    SearchKind::Generic | SearchKind::Mcs => unreachable!("rejected above"),
                };
                if !ok {
                    return Ok(Verdict::Invalid(Violation::Point(PointViolation {
                        a,
                        b,
                        c,
                        kind,
                        reason: reason.to_owned(),
                    })));
                }
            }
        }
    }
    Ok(Verdict::Valid)
}

/// Replays maximum cardinality search along σ.
fn check_mcs(g: &Graph, sigma: &VertexOrdering) -> Verdict {
    let mut visited = VertexSet::EMPTY;
    let mut unvisited = g.vertices();
    for (i, &v) in sigma.as_slice().iter().enumerate() {
        let count = g.neighbors(v).intersection(visited).len();
        let max_count = unvisited
            .iter()
            .map(|u| g.neighbors(u).intersection(visited).len())
            .max()
            .unwrap_or(0);
        if count < max_count {
            return Verdict::Invalid(Violation::NotMaximumCardinality {
                vertex: v,
                position: i,
                count,
                max_count,
            });
        }
        visited.insert(v);
        unvisited.remove(v);
    }
    Verdict::Valid
}

/// Decides whether σ is an ordering `kind` can produce on the connected graph `g`.
pub fn is_search_ordering(
    g: &Graph,
    sigma: &VertexOrdering,
    kind: SearchKind,
) -> Result<Verdict, ValidationError> {
    check_len(g, sigma)?;
    if !g.is_connected() {
        return Err(ValidationError::Disconnected);
    }
    match kind {
        SearchKind::Mcs => Ok(check_mcs(g, sigma)),
        SearchKind::Generic => is_generic_order(g, sigma),
        _ => match is_generic_order(g, sigma)? {
            Verdict::Valid => check_point_condition(g, sigma, kind),
            invalid => Ok(invalid),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;

    fn sigma(v: &[usize]) -> VertexOrdering {
        VertexOrdering::new(v.to_vec()).unwrap()
    }

    fn valid(g: &Graph, s: &[usize], kind: SearchKind) -> bool {
        is_search_ordering(g, &sigma(s), kind).unwrap().is_valid()
    }

    fn paw() -> Graph {
        Graph::from_edges(4, [(C, A), (A, B), (B, C), (C, D)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, [(A, B), (B, C), (C, D), (D, A), (A, C)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, [(A, B), (B, C), (C, D), (D, A)]).unwrap()
    }

    #[test]
    fn generic_orders() {
        let p4 = Graph::path(4).unwrap();
        assert!(is_generic_order(&p4, &sigma(&[B, C, D, A]))
            .unwrap()
            .is_valid());
        assert_eq!(
            is_generic_order(&Graph::path(3).unwrap(), &sigma(&[0, 2, 1])).unwrap(),
            Verdict::Invalid(Violation::DisconnectedPrefix {
                vertex: 2,
                position: 1
            })
        );
        let k4 = Graph::complete(4).unwrap();
        assert!(is_generic_order(&k4, &sigma(&[3, 1, 0, 2]))
            .unwrap()
            .is_valid());
    }

    #[test]
    fn length_mismatch() {
        let g = Graph::path(3).unwrap();
        assert_eq!(
            is_generic_order(&g, &sigma(&[0, 1])),
            Err(ValidationError::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn paw_bfs_not_lexbfs() {
        let g = paw();
        let s = sigma(&[C, A, D, B]);
        assert!(check_point_condition(&g, &s, SearchKind::Bfs)
            .unwrap()
            .is_valid());
        let v = check_point_condition(&g, &s, SearchKind::LexBfs).unwrap();
        // d=C is the only vertex before a=A; it sees both b=B and c=D
        assert_eq!(
            v.violation(),
            Some(&Violation::Point(PointViolation {
                a: A,
                b: D,
                c: B,
                kind: SearchKind::LexBfs,
                reason: "no d <σ a with db ∈ E and dc ∉ E".into()
            }))
        );
    }

    #[test]
    fn diamond_dfs_not_lexdfs() {
        let g = diamond();
        let s = sigma(&[B, C, D, A]);
        assert!(check_point_condition(&g, &s, SearchKind::Dfs)
            .unwrap()
            .is_valid());
        assert!(!check_point_condition(&g, &s, SearchKind::LexDfs)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn c4_mns_orderings() {
        let g = c4();
        let s1 = sigma(&[B, C, D, A]);
        assert!(check_point_condition(&g, &s1, SearchKind::Mns)
            .unwrap()
            .is_valid());
        assert!(!check_point_condition(&g, &s1, SearchKind::LexBfs)
            .unwrap()
            .is_valid());
        let s2 = sigma(&[B, C, A, D]);
        assert!(!check_point_condition(&g, &s2, SearchKind::LexDfs)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn unsupported_kinds() {
        let g = c4();
        for kind in [SearchKind::Generic, SearchKind::Mcs] {
            assert_eq!(
                check_point_condition(&g, &sigma(&[0, 1, 2, 3]), kind),
                Err(ValidationError::UnsupportedKind(kind))
            );
        }
    }

    #[test]
    fn mns_not_mcs_on_first_fig5_graph() {
        // a=0 b=1 c=2 d=3 e=4; edges ab bc cd de ea ec
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 2)]).unwrap();
        let s = [1, 2, 3, 0, 4];
        assert!(valid(&g, &s, SearchKind::Mns));
        assert!(!valid(&g, &s, SearchKind::Mcs));
    }

    #[test]
    fn complete_graph_accepts_everything() {
        let g = Graph::complete(5).unwrap();
        for kind in SearchKind::ALL {
            assert!(valid(&g, &[4, 2, 0, 3, 1], kind));
        }
    }

    #[test]
    fn c5_bfs_and_its_restriction() {
        let g = Graph::cycle(5).unwrap();
        let s = sigma(&[0, 1, 4, 2, 3]);
        assert!(is_search_ordering(&g, &s, SearchKind::Bfs)
            .unwrap()
            .is_valid());
        // Dropping v5 leaves the path v1-v2-v3-v4 visited end to end, which is
        // still BFS; dropping v2 instead breaks even the prefix condition.
        let (h, mapping) = g.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        let restricted = s.restrict(&mapping).unwrap();
        assert_eq!(restricted.as_slice(), &[0, 1, 2, 3]);
        assert!(is_search_ordering(&h, &restricted, SearchKind::Bfs)
            .unwrap()
            .is_valid());
        let (h, mapping) = g.induced_subgraph(&[0, 2, 3, 4]).unwrap();
        let restricted = s.restrict(&mapping).unwrap();
        assert_eq!(restricted.as_slice(), &[0, 3, 1, 2]);
        assert!(!is_search_ordering(&h, &restricted, SearchKind::Bfs)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            is_search_ordering(&g, &sigma(&[0, 1, 2, 3]), SearchKind::Bfs),
            Err(ValidationError::Disconnected)
        );
    }

    #[test]
    fn violations_satisfy_premise() {
        let g =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]).unwrap();
        let mut perm: Vec<usize> = (0..6).collect();
        let mut count = 0;
        loop {
            let s = sigma(&perm);
            for kind in [
                SearchKind::Bfs,
                SearchKind::Dfs,
                SearchKind::LexBfs,
                SearchKind::LexDfs,
                SearchKind::Mns,
            ] {
                if let Verdict::Invalid(Violation::Point(p)) =
                    check_point_condition(&g, &s, kind).unwrap()
                {
                    assert!(s.precedes(p.a, p.b) && s.precedes(p.b, p.c));
                    assert!(g.has_edge(p.a, p.c) && !g.has_edge(p.a, p.b));
                    count += 1;
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert!(count > 0);
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }
}
