//! Simple undirected graphs over dense vertex indices `0..n`.

use std::fmt;

use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold (one `u64` adjacency word per vertex).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
}

/// A set of vertices stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.0.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// A finite simple undirected graph.
///
/// Adjacency is symmetric and loop-free; every constructor enforces this, and
/// the graph cannot be mutated afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::EMPTY; n];
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let all = VertexSet::full(n.min(MAX_VERTICES));
        let mut g = Graph::empty(n)?;
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all.difference(VertexSet::singleton(v));
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Complete multipartite graph with the given part sizes, parts laid out consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self, GraphError> {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v])
            .collect::<Vec<_>>();
        Graph::from_edges(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.adj.len())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Union of the neighborhoods of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            frontier = self
                .neighborhood(frontier)
                .intersection(within)
                .difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// True iff every vertex is reachable from vertex 0; vacuously true for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        self.adj.len() <= 1 || self.reachable_within(0, self.vertices()) == self.vertices()
    }

    /// Connected components of the subgraph induced by `within`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reachable_within(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Subgraph induced by `keep`, renumbered in increasing vertex order.
    ///
    /// Returns the new graph and the old-to-new index mapping (`None` for dropped vertices).
    pub fn induced_subgraph(
        &self,
        keep: &[usize],
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        let n = self.vertex_count();
        let mut set = VertexSet::EMPTY;
        for &v in keep {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        let mut mapping = vec![None; n];
        for (new, old) in set.iter().enumerate() {
            mapping[old] = Some(new);
        }
        let mut adj = vec![VertexSet::EMPTY; set.len()];
        for old in set.iter() {
            let new = mapping[old].expect("kept vertex");
            adj[new] = self.adj[old]
                .intersection(set)
                .iter()
                .map(|w| mapping[w].expect("kept neighbor"))
                .collect();
        }
        Ok((Graph { adj }, mapping))
    }

    /// The graph with the same vertices and exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| all.difference(*row).difference(VertexSet::singleton(v)))
            .collect();
        Graph { adj }
    }

    /// Graph obtained by relabelling vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_symmetric(g: &Graph) {
        for u in 0..g.vertex_count() {
            assert!(!g.has_edge(u, u));
            for v in g.neighbors(u) {
                assert!(v < g.vertex_count());
                assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn constructors_are_symmetric() {
        for g in [
            Graph::complete(5).unwrap(),
            Graph::path(4).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::star(3).unwrap(),
            Graph::complete_multipartite(&[2, 2, 2]).unwrap(),
            Graph::complete(64).unwrap(),
        ] {
            assert_symmetric(&g);
        }
        assert_eq!(
            Graph::complete_multipartite(&[2, 2, 2])
                .unwrap()
                .edge_count(),
            12
        );
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::empty(65), Err(GraphError::TooLarge(65)));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).unwrap().is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn c5_minus_vertex_is_p4() {
        // v1..v5 as 0..4; drop v5.
        let c5 = Graph::cycle(5).unwrap();
        let (h, mapping) = c5.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(h, Graph::path(4).unwrap());
        assert_eq!(mapping, vec![Some(0), Some(1), Some(2), Some(3), None]);
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let g = Graph::complete_multipartite(&[1, 2, 3]).unwrap();
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().0, g);
        let (empty, mapping) = g.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert!(mapping.iter().all(Option::is_none));
        assert!(g.induced_subgraph(&[6]).is_err());
    }

    #[test]
    fn induced_subgraph_preserves_adjacency() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 5), (5, 3), (3, 0), (1, 4)]).unwrap();
        for mask in 0u64..64 {
            let keep: Vec<usize> = VertexSet::from_bits(mask).iter().collect();
            let (h, mapping) = g.induced_subgraph(&keep).unwrap();
            assert_symmetric(&h);
            for &u in &keep {
                for &v in &keep {
                    let (nu, nv) = (mapping[u].unwrap(), mapping[v].unwrap());
                    assert_eq!(h.has_edge(nu, nv), g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1, 4, 7].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 4, 7]);
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.last(), Some(7));
        assert!(VertexSet::singleton(4).is_proper_subset(s));
        assert!(!s.is_proper_subset(s));
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
