//! Executable graph searches and exhaustive enumeration of their orderings.
//!
//! Every paradigm is expressed as a candidate rule: given the vertices
//! visited so far, [`candidates`] returns exactly the set of vertices the
//! paradigm allows next. Running a search resolves ties with a [`TieBreak`];
//! enumeration branches over every candidate instead.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::ordering::VertexOrdering;

/// Default cap for [`enumerate_orderings`].
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("start vertex {start} out of range for {n} vertices")]
    StartOutOfRange { start: usize, n: usize },
    #[error("inconsistent search state: {0}")]
    InconsistentState(String),
    #[error("enumeration cap must be positive")]
    ZeroCap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SearchKind {
    Generic,
    #[serde(rename = "BFS")]
    Bfs,
    #[serde(rename = "DFS")]
    Dfs,
    #[serde(rename = "LexBFS")]
    LexBfs,
    #[serde(rename = "LexDFS")]
    LexDfs,
    #[serde(rename = "MNS")]
    Mns,
    #[serde(rename = "MCS")]
    Mcs,
}

impl SearchKind {
    pub const ALL: [SearchKind; 7] = [
        SearchKind::Generic,
        SearchKind::Bfs,
        SearchKind::Dfs,
        SearchKind::LexBfs,
        SearchKind::LexDfs,
        SearchKind::Mns,
        SearchKind::Mcs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Generic => "Generic",
            SearchKind::Bfs => "BFS",
            SearchKind::Dfs => "DFS",
            SearchKind::LexBfs => "LexBFS",
            SearchKind::LexDfs => "LexDFS",
            SearchKind::Mns => "MNS",
            SearchKind::Mcs => "MCS",
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown search kind '{0}' (expected generic, bfs, dfs, lexbfs, lexdfs, mns or mcs)")]
pub struct UnknownSearchKind(pub String);

impl FromStr for SearchKind {
    type Err = UnknownSearchKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "generic" | "gen" => Ok(SearchKind::Generic),
            "bfs" => Ok(SearchKind::Bfs),
            "dfs" => Ok(SearchKind::Dfs),
            "lexbfs" | "lbfs" => Ok(SearchKind::LexBfs),
            "lexdfs" | "ldfs" => Ok(SearchKind::LexDfs),
            "mns" => Ok(SearchKind::Mns),
            "mcs" => Ok(SearchKind::Mcs),
            _ => Err(UnknownSearchKind(s.to_owned())),
        }
    }
}

/// How [`run_search`] picks among several candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TieBreak {
    MinIndex,
    MaxIndex,
    SeededRandom(u64),
}

/// The visited prefix of a search.
///
/// Labels are not stored; they are read off the prefix on demand, so an
/// unvisited vertex's label can only ever mention visited vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    order: Vec<usize>,
    position: Vec<Option<usize>>,
    visited: VertexSet,
}

impl SearchState {
    pub fn new(n: usize) -> Self {
        SearchState {
            order: Vec::with_capacity(n),
            position: vec![None; n],
            visited: VertexSet::EMPTY,
        }
    }

    pub fn from_prefix(n: usize, prefix: &[usize]) -> Result<Self, SearchError> {
        let mut state = SearchState::new(n);
        for &v in prefix {
            state.visit(v)?;
        }
        Ok(state)
    }

    pub fn vertex_count(&self) -> usize {
        self.position.len()
    }

    pub fn visit(&mut self, v: usize) -> Result<(), SearchError> {
        match self.position.get(v) {
            None => Err(SearchError::InconsistentState(format!(
                "vertex {v} out of range for {} vertices",
                self.position.len()
            ))),
            Some(Some(step)) => Err(SearchError::InconsistentState(format!(
                "vertex {v} already visited at step {step}"
            ))),
            Some(None) => {
                self.position[v] = Some(self.order.len());
                self.order.push(v);
                self.visited.insert(v);
                Ok(())
            }
        }
    }

    fn unvisit_last(&mut self) {
        if let Some(v) = self.order.pop() {
            self.position[v] = None;
            self.visited.remove(v);
        }
    }

    pub fn visited(&self) -> &[usize] {
        &self.order
    }

    pub fn visited_set(&self) -> VertexSet {
        self.visited
    }

    pub fn unvisited(&self) -> VertexSet {
        VertexSet::full(self.position.len()).difference(self.visited)
    }

    pub fn is_complete(&self) -> bool {
        self.order.len() == self.position.len()
    }

    /// MNS label: `N(v) ∩ visited`.
    pub fn neighbor_label(&self, g: &Graph, v: usize) -> VertexSet {
        g.neighbors(v).intersection(self.visited)
    }

    /// Visit steps of `v`'s visited neighbors, earliest first (LexBFS significance).
    pub fn lex_bfs_label(&self, g: &Graph, v: usize) -> Vec<usize> {
        let mut steps = self.neighbor_steps(g, v);
        steps.sort_unstable();
        steps
    }

    /// Visit steps of `v`'s visited neighbors, most recent first (LexDFS significance).
    pub fn lex_dfs_label(&self, g: &Graph, v: usize) -> Vec<usize> {
        let mut steps = self.neighbor_steps(g, v);
        steps.sort_unstable_by(|a, b| b.cmp(a));
        steps
    }

    fn neighbor_steps(&self, g: &Graph, v: usize) -> Vec<usize> {
        self.neighbor_label(g, v)
            .iter()
            .map(|u| self.position[u].expect("visited vertex has a position"))
            .collect()
    }

    // Bit (63 - step) per visited neighbor: integer order is the lexicographic
    // order of the earliest-first step sequence, a proper prefix losing.
    fn lex_bfs_key(&self, g: &Graph, v: usize) -> u64 {
        self.neighbor_label(g, v)
            .iter()
            .map(|u| 1u64 << (63 - self.position[u].expect("visited")))
            .sum()
    }

    // Bit step per visited neighbor: most recent step is most significant.
    fn lex_dfs_key(&self, g: &Graph, v: usize) -> u64 {
        self.neighbor_label(g, v)
            .iter()
            .map(|u| 1u64 << self.position[u].expect("visited"))
            .sum()
    }
}

/// Unvisited vertices maximizing `key`.
fn argmax_set<K: Ord>(pool: VertexSet, key: impl Fn(usize) -> K) -> VertexSet {
    let mut best: Option<K> = None;
    let mut out = VertexSet::EMPTY;
    for v in pool {
        let k = key(v);
        match best.as_ref().map(|b| k.cmp(b)) {
            Some(std::cmp::Ordering::Less) => {}
            Some(std::cmp::Ordering::Equal) => out.insert(v),
            _ => {
                best = Some(k);
                out = VertexSet::singleton(v);
            }
        }
    }
    out
}

/// The exact set of vertices `kind` permits as the next visited vertex.
pub fn candidates(
    g: &Graph,
    kind: SearchKind,
    state: &SearchState,
) -> Result<VertexSet, SearchError> {
    if state.vertex_count() != g.vertex_count() {
        return Err(SearchError::InconsistentState(format!(
            "state covers {} vertices, graph has {}",
            state.vertex_count(),
            g.vertex_count()
        )));
    }
    let unvisited = state.unvisited();
    if state.visited().is_empty() {
        return Ok(unvisited);
    }
    let frontier = g.neighborhood(state.visited_set()).intersection(unvisited);
    let set = match kind {
        SearchKind::Generic => frontier,
        SearchKind::Bfs => state
            .visited()
            .iter()
            .map(|&u| g.neighbors(u).intersection(unvisited))
            .find(|s| !s.is_empty())
            .unwrap_or_default(),
        SearchKind::Dfs => state
            .visited()
            .iter()
            .rev()
            .map(|&u| g.neighbors(u).intersection(unvisited))
            .find(|s| !s.is_empty())
            .unwrap_or_default(),
        SearchKind::LexBfs => argmax_set(frontier, |v| state.lex_bfs_key(g, v)),
        SearchKind::LexDfs => argmax_set(frontier, |v| state.lex_dfs_key(g, v)),
        SearchKind::Mns => {
            let labels: Vec<(usize, VertexSet)> = frontier
                .iter()
                .map(|v| (v, state.neighbor_label(g, v)))
                .collect();
            labels
                .iter()
                .filter(|(_, l)| !labels.iter().any(|(_, m)| l.is_proper_subset(*m)))
                .map(|&(v, _)| v)
                .collect()
        }
        SearchKind::Mcs => argmax_set(frontier, |v| state.neighbor_label(g, v).len()),
    };
    Ok(set)
}

fn check_searchable(g: &Graph) -> Result<(), SearchError> {
    if g.vertex_count() == 0 {
        return Err(SearchError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SearchError::Disconnected);
    }
    Ok(())
}

/// Runs one search of `kind`, resolving ties with `tiebreak`.
pub fn run_search(
    g: &Graph,
    kind: SearchKind,
    tiebreak: TieBreak,
    start: Option<usize>,
) -> Result<VertexOrdering, SearchError> {
    check_searchable(g)?;
    let n = g.vertex_count();
    if let Some(s) = start {
        if s >= n {
            return Err(SearchError::StartOutOfRange { start: s, n });
        }
    }
    let mut rng = match tiebreak {
        TieBreak::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut state = SearchState::new(n);
    if let Some(s) = start {
        state.visit(s)?;
    }
    while !state.is_complete() {
        let pool = candidates(g, kind, &state)?;
        let next = match (tiebreak, rng.as_mut()) {
            (TieBreak::MaxIndex, _) => pool.last(),
            (TieBreak::SeededRandom(_), Some(rng)) if !pool.is_empty() => {
                pool.iter().nth(rng.gen_range(0..pool.len()))
            }
            _ => pool.first(),
        };
        let next = next.ok_or_else(|| {
            SearchError::InconsistentState(format!(
                "no {kind} candidate after {:?}",
                state.visited()
            ))
        })?;
        state.visit(next)?;
    }
    VertexOrdering::new(state.order).map_err(|e| SearchError::InconsistentState(e.to_string()))
}

/// Calls `visit` on every ordering `kind` can produce, in lexicographic order.
///
/// Returns `Break` if `visit` stopped the walk early.
pub fn for_each_ordering<F>(
    g: &Graph,
    kind: SearchKind,
    mut visit: F,
) -> Result<ControlFlow<()>, SearchError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    check_searchable(g)?;
    let mut state = SearchState::new(g.vertex_count());
    walk(g, kind, &mut state, &mut visit)
}

fn walk<F>(
    g: &Graph,
    kind: SearchKind,
    state: &mut SearchState,
    visit: &mut F,
) -> Result<ControlFlow<()>, SearchError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if state.is_complete() {
        return Ok(visit(state.visited()));
    }
    for v in candidates(g, kind, state)? {
        state.visit(v)?;
        let flow = walk(g, kind, state, visit)?;
        state.unvisit_last();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Result of [`enumerate_orderings`]; `truncated` is set when more orderings
/// exist than the cap allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub orderings: Vec<VertexOrdering>,
    pub truncated: bool,
}

/// All orderings `kind` can produce on `g`, sorted lexicographically.
///
/// Each branch of the walk fixes a distinct sequence, so no deduplication is needed.
pub fn enumerate_orderings(
    g: &Graph,
    kind: SearchKind,
    cap: usize,
) -> Result<Enumeration, SearchError> {
    if cap == 0 {
        return Err(SearchError::ZeroCap);
    }
    let mut orderings = Vec::new();
    let mut truncated = false;
    let _ = for_each_ordering(g, kind, |order| {
        if orderings.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        orderings.push(VertexOrdering::new(order.to_vec()).expect("walk yields permutations"));
        ControlFlow::Continue(())
    })?;
    Ok(Enumeration {
        orderings,
        truncated,
    })
}
