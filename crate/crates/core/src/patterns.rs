//! Forbidden induced subgraphs and the structural classes they characterize.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("paw-free graph is neither triangle-free nor complete multipartite")]
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    P4,
    C4,
    Paw,
    Diamond,
    /// A `k`-cycle with one pendant vertex, `k >= 3`.
    KPan(usize),
}

impl Pattern {
    pub const SMALL: [Pattern; 4] = [Pattern::P4, Pattern::C4, Pattern::Paw, Pattern::Diamond];

    pub fn vertex_count(self) -> usize {
        match self {
            Pattern::KPan(k) => k + 1,
            _ => 4,
        }
    }

    /// Edges between positions of the canonical vertex list.
    ///
    /// P4 is the path `0-1-2-3`, C4 the cycle `0-1-2-3-0`, the paw is the
    /// triangle `012` with `3` pendant on `2`, the diamond is C4 plus the chord
    /// `02`, and a k-pan is the cycle `0..k` with pendant `k` on `0`.
    pub fn template_edges(self) -> Vec<(usize, usize)> {
        match self {
            Pattern::P4 => vec![(0, 1), (1, 2), (2, 3)],
            Pattern::C4 => vec![(0, 1), (1, 2), (2, 3), (0, 3)],
            Pattern::Paw => vec![(0, 1), (1, 2), (0, 2), (2, 3)],
            Pattern::Diamond => vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
            Pattern::KPan(k) => {
                let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
                e.push((0, k));
                e
            }
        }
    }

    pub fn template(self) -> Graph {
        Graph::from_edges(self.vertex_count(), self.template_edges())
            .expect("pattern templates are simple graphs")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::KPan(k) => write!(f, "{k}-pan"),
            Pattern::P4 => f.write_str("P4"),
            Pattern::C4 => f.write_str("C4"),
            Pattern::Paw => f.write_str("paw"),
            Pattern::Diamond => f.write_str("diamond"),
        }
    }
}

/// An induced copy of `pattern`; `vertices[i]` plays template vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternHit {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl PatternHit {
    /// Checks that `vertices` induce exactly the template in `g` under the listed correspondence.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.pattern.vertex_count();
        if self.vertices.len() != k {
            return false;
        }
        let Ok((sub, mapping)) = g.induced_subgraph(&self.vertices) else {
            return false;
        };
        if sub.vertex_count() != k {
            return false;
        }
        let template = self.pattern.template();
        let image: Vec<usize> = self
            .vertices
            .iter()
            .map(|&v| mapping[v].expect("hit vertex kept"))
            .collect();
        (0..k).all(|i| (0..k).all(|j| template.has_edge(i, j) == sub.has_edge(image[i], image[j])))
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographically first induced copy of a 4-vertex pattern.
pub fn find_induced_small(g: &Graph, pattern: Pattern) -> Option<PatternHit> {
    assert!(
        !matches!(pattern, Pattern::KPan(_)),
        "use find_induced_pan for pans"
    );
    let template = pattern.template();
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let mut p = [a, b, c, d];
                    loop {
                        let matches = (0..4).all(|i| {
                            (i + 1..4).all(|j| template.has_edge(i, j) == g.has_edge(p[i], p[j]))
                        });
                        if matches {
                            return Some(PatternHit {
                                pattern,
                                vertices: p.to_vec(),
                            });
                        }
                        if !next_permutation(&mut p) {
                            break;
                        }
                    }
                }
            }
        }
    }
    None
}

/// Calls `f` on every induced cycle (length >= 3) once, as a vertex list in
/// cyclic order starting at its smallest vertex. Stops when `f` returns `Some`.
pub fn find_induced_cycle<T>(g: &Graph, mut f: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    fn extend<T>(
        g: &Graph,
        path: &mut Vec<usize>,
        interior: VertexSet,
        f: &mut impl FnMut(&[usize]) -> Option<T>,
    ) -> Option<T> {
        let start = path[0];
        let last = *path.last().expect("non-empty path");
        for v in g.neighbors(last) {
            if v <= start || path.contains(&v) {
                continue;
            }
            // interior = path minus its endpoints start and last
            if !g.neighbors(v).intersection(interior).is_empty() {
                continue;
            }
            path.push(v);
            if path.len() >= 3 && g.has_edge(v, start) {
                // closes an induced cycle; count each once by orientation
                if path[1] < v {
                    if let Some(t) = f(path) {
                        return Some(t);
                    }
                }
            } else {
                let mut next_interior = interior;
                if path.len() > 2 {
                    next_interior.insert(last);
                }
                if let Some(t) = extend(g, path, next_interior, f) {
                    return Some(t);
                }
            }
            path.pop();
        }
        None
    }

    for s in 0..g.vertex_count() {
        let mut path = vec![s];
        if let Some(t) = extend(g, &mut path, VertexSet::EMPTY, &mut f) {
            return Some(t);
        }
    }
    None
}

/// Some induced k-pan (any `k >= 3`), or `None` if `g` is pan-free.
pub fn find_induced_pan(g: &Graph) -> Option<PatternHit> {
    find_induced_cycle(g, |cycle| {
        let on_cycle: VertexSet = cycle.iter().copied().collect();
        g.vertices().difference(on_cycle).iter().find_map(|x| {
            let touch = g.neighbors(x).intersection(on_cycle);
            (touch.len() == 1).then(|| {
                let anchor = touch.first().expect("one neighbor");
                let at = cycle.iter().position(|&v| v == anchor).expect("on cycle");
                let mut vertices: Vec<usize> =
                    cycle[at..].iter().chain(&cycle[..at]).copied().collect();
                vertices.push(x);
                PatternHit {
                    pattern: Pattern::KPan(cycle.len()),
                    vertices,
                }
            })
        })
    })
}

/// The three forbidden-subgraph classes behind the equivalence theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    /// {P4, C4, paw, diamond}-free.
    A,
    /// {pan, diamond}-free.
    B,
    /// {P4, C4}-free.
    C,
}

/// First forbidden induced subgraph for `class`, checked by brute force.
pub fn find_forbidden(g: &Graph, class: GraphClass) -> Option<PatternHit> {
    match class {
        GraphClass::A => Pattern::SMALL
            .iter()
            .find_map(|&p| find_induced_small(g, p)),
        GraphClass::B => find_induced_pan(g).or_else(|| find_induced_small(g, Pattern::Diamond)),
        GraphClass::C => {
            find_induced_small(g, Pattern::P4).or_else(|| find_induced_small(g, Pattern::C4))
        }
    }
}

/// Structural flags. Fields that are only meaningful for connected graphs are
/// `None` on disconnected input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLabel {
    pub connected: bool,
    pub forest: bool,
    pub triangle_free: bool,
    pub clique: bool,
    pub trivially_perfect: bool,
    pub star: Option<bool>,
    pub tree: Option<bool>,
    pub cycle: Option<bool>,
    pub complete_bipartite: Option<bool>,
    pub complete_multipartite: Option<bool>,
    /// star or clique
    pub class_a: Option<bool>,
    /// tree, cycle on at least 4 vertices, clique or complete bipartite
    pub class_b: Option<bool>,
    /// trivially perfect
    pub class_c: Option<bool>,
}

impl ClassLabel {
    pub fn class(&self, class: GraphClass) -> Option<bool> {
        match class {
            GraphClass::A => self.class_a,
            GraphClass::B => self.class_b,
            GraphClass::C => self.class_c,
        }
    }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .all(|(u, v)| g.neighbors(u).intersection(g.neighbors(v)).is_empty())
}

pub fn is_clique(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.vertex_count()
}

/// Complement is a disjoint union of cliques.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let co = g.complement();
    co.components().into_iter().all(|comp| {
        comp.iter()
            .all(|v| co.neighbors(v).union(VertexSet::singleton(v)) == comp)
    })
}

/// Connected bipartite graph containing every edge between its two sides.
fn is_complete_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return false;
    }
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        let s = side[u].expect("colored");
        for v in g.neighbors(u) {
            match side[v] {
                None => {
                    side[v] = Some(!s);
                    stack.push(v);
                }
                Some(t) if t == s => return false,
                Some(_) => {}
            }
        }
    }
    let left = side.iter().filter(|s| **s == Some(false)).count();
    g.edge_count() == left * (n - left)
}

/// Trivially perfect by peeling: every connected piece with two or more
/// vertices must have a universal vertex whose removal leaves a trivially
/// perfect graph.
pub fn is_trivially_perfect(g: &Graph) -> bool {
    fn peel(g: &Graph, within: VertexSet) -> bool {
        g.components_within(within).into_iter().all(|comp| {
            if comp.len() <= 1 {
                return true;
            }
            let universal = comp.iter().find(|&v| {
                g.neighbors(v)
                    .intersection(comp)
                    .union(VertexSet::singleton(v))
                    == comp
            });
            match universal {
                Some(u) => {
                    let mut rest = comp;
                    rest.remove(u);
                    peel(g, rest)
                }
                None => false,
            }
        })
    }
    peel(g, g.vertices())
}

pub fn recognize_structure(g: &Graph) -> ClassLabel {
    let n = g.vertex_count();
    let m = g.edge_count();
    let connected = g.is_connected();
    let clique = is_clique(g);
    let trivially_perfect = is_trivially_perfect(g);
    let when_connected = |value: bool| connected.then_some(value);

    let tree = n >= 1 && m + 1 == n;
    let star = tree && (0..n).any(|v| g.degree(v) + 1 == n);
    let cycle = n >= 4 && (0..n).all(|v| g.degree(v) == 2);
    let complete_bipartite = is_complete_bipartite(g);

    ClassLabel {
        connected,
        forest: is_forest(g),
        triangle_free: is_triangle_free(g),
        clique,
        trivially_perfect,
        star: when_connected(star),
        tree: when_connected(tree),
        cycle: when_connected(cycle),
        complete_bipartite: when_connected(complete_bipartite),
        complete_multipartite: when_connected(is_complete_multipartite(g)),
        class_a: when_connected(star || clique),
        class_b: when_connected(tree || cycle || clique || complete_bipartite),
        class_c: when_connected(trivially_perfect),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PawVerdict {
    TriangleFree,
    CompleteMultipartite,
    ContainsPaw { hit: PatternHit },
}

/// Sorts a connected graph into triangle-free, complete multipartite, or
/// containing a paw (checked in that order, so exactly one verdict results).
pub fn paw_free_decomposition(g: &Graph) -> Result<PawVerdict, PatternError> {
    if !g.is_connected() {
        return Err(PatternError::Disconnected);
    }
    if is_triangle_free(g) {
        return Ok(PawVerdict::TriangleFree);
    }
    if is_complete_multipartite(g) {
        return Ok(PawVerdict::CompleteMultipartite);
    }
    match find_induced_small(g, Pattern::Paw) {
        Some(hit) => Ok(PawVerdict::ContainsPaw { hit }),
        None => Err(PatternError::Unclassified),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::from_edges(4, [(2, 0), (0, 1), (1, 2), (2, 3)]).unwrap()
    }

    /// C6 on v1..v6 = 0..5 plus v = 6 pendant on v3 = 2.
    fn six_pan() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.push((2, 6));
        Graph::from_edges(7, e).unwrap()
    }

    #[test]
    fn small_patterns() {
        let hit = find_induced_small(&Graph::cycle(5).unwrap(), Pattern::P4).unwrap();
        assert!(hit.verify(&Graph::cycle(5).unwrap()));
        assert_eq!(
            find_induced_small(&Graph::complete(4).unwrap(), Pattern::Diamond),
            None
        );
        let hit = find_induced_small(&paw(), Pattern::Paw).unwrap();
        assert_eq!(hit.vertices.len(), 4);
        assert!(hit.verify(&paw()));
        // triangle 0,1,2 with 3 pendant on 2 is already canonical
        assert_eq!(hit.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn pans() {
        let hit = find_induced_pan(&six_pan()).unwrap();
        assert_eq!(hit.pattern, Pattern::KPan(6));
        assert!(hit.verify(&six_pan()));
        assert_eq!(hit.vertices[0], 2);
        assert_eq!(hit.vertices[6], 6);
        assert_eq!(find_induced_pan(&Graph::cycle(6).unwrap()), None);
        let hit = find_induced_pan(&paw()).unwrap();
        assert_eq!(hit.pattern, Pattern::KPan(3));
        assert!(hit.verify(&paw()));
    }

    #[test]
    fn verify_rejects_wrong_hits() {
        let g = Graph::cycle(5).unwrap();
        let bad = PatternHit {
            pattern: Pattern::C4,
            vertices: vec![0, 1, 2, 3],
        };
        assert!(!bad.verify(&g));
        let short = PatternHit {
            pattern: Pattern::P4,
            vertices: vec![0, 1, 2],
        };
        assert!(!short.verify(&g));
    }

    #[test]
    fn induced_cycles_of_k4_and_c6() {
        let mut count = 0;
        find_induced_cycle::<()>(&Graph::complete(4).unwrap(), |c| {
            assert_eq!(c.len(), 3);
            count += 1;
            None
        });
        assert_eq!(count, 4);
        let mut lens = Vec::new();
        find_induced_cycle::<()>(&Graph::cycle(6).unwrap(), |c| {
            lens.push(c.len());
            None
        });
        assert_eq!(lens, vec![6]);
    }

    #[test]
    fn structure_star() {
        let l = recognize_structure(&Graph::star(3).unwrap());
        assert_eq!(l.star, Some(true));
        assert_eq!(l.class_a, Some(true));
        assert_eq!(l.class_b, Some(true));
        assert_eq!(l.class_c, Some(true));
        assert_eq!(l.complete_bipartite, Some(true));
    }

    #[test]
    fn structure_c6() {
        let g = Graph::cycle(6).unwrap();
        let l = recognize_structure(&g);
        assert_eq!(l.cycle, Some(true));
        assert_eq!(l.class_b, Some(true));
        assert_eq!(l.class_a, Some(false));
        assert_eq!(l.class_c, Some(false));
        assert!(find_induced_small(&g, Pattern::P4).is_some());
    }

    #[test]
    fn structure_c4() {
        let l = recognize_structure(&Graph::cycle(4).unwrap());
        assert_eq!(l.complete_bipartite, Some(true));
        assert_eq!(l.cycle, Some(true));
        assert_eq!(l.class_b, Some(true));
        assert_eq!(l.class_c, Some(false));
    }

    #[test]
    fn structure_disconnected_is_unavailable() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let l = recognize_structure(&g);
        assert!(!l.connected);
        assert!(l.forest);
        assert!(l.trivially_perfect);
        assert_eq!(l.class_a, None);
        assert_eq!(l.star, None);
    }

    #[test]
    fn olariu_verdicts() {
        assert_eq!(
            paw_free_decomposition(&Graph::cycle(5).unwrap()),
            Ok(PawVerdict::TriangleFree)
        );
        let octahedron = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(find_induced_small(&octahedron, Pattern::Paw), None);
        assert_eq!(
            paw_free_decomposition(&octahedron),
            Ok(PawVerdict::CompleteMultipartite)
        );
        assert!(matches!(
            paw_free_decomposition(&paw()),
            Ok(PawVerdict::ContainsPaw { .. })
        ));
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            paw_free_decomposition(&disconnected),
            Err(PatternError::Disconnected)
        );
    }

    #[test]
    fn trivially_perfect_examples() {
        assert!(is_trivially_perfect(&Graph::star(4).unwrap()));
        assert!(is_trivially_perfect(&Graph::complete(5).unwrap()));
        assert!(!is_trivially_perfect(&Graph::path(4).unwrap()));
        assert!(!is_trivially_perfect(&Graph::cycle(4).unwrap()));
        // universal vertex over two disjoint triangles
        let g = Graph::from_edges(
            7,
            [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
                .into_iter()
                .chain((1..7).map(|v| (0, v))),
        )
        .unwrap();
        assert!(is_trivially_perfect(&g));
    }
}
