//! Graph search orderings and the graphs on which search methods coincide.
//!
//! The crate runs and enumerates seven search paradigms (generic search, BFS,
//! DFS, LexBFS, LexDFS, MNS, MCS), decides whether an arbitrary vertex
//! ordering belongs to a paradigm, recognizes the forbidden-subgraph classes
//! that govern when two paradigms produce the same orderings, and checks
//! those equivalences graph by graph.

pub mod equivalence;
pub mod format;
pub mod graph;
pub mod ordering;
pub mod patterns;
pub mod scan;
pub mod search;
pub mod validate;

pub use equivalence::{
    check_theorem, find_mns_not_mcs, orderings_equal, orderings_subset, CheckOptions,
    EquivalenceError, EquivalenceReport, Relation, Theorem, TheoremReport, Witness,
};
pub use format::{
    detect_format, emit_graph6, parse_edge_list, parse_graph, parse_graph6, FormatError,
    InputFormat,
};
pub use graph::{Graph, GraphError, VertexSet};
pub use ordering::{OrderingError, VertexOrdering};
pub use patterns::{
    find_induced_pan, find_induced_small, paw_free_decomposition, recognize_structure, ClassLabel,
    GraphClass, Pattern, PatternHit, PawVerdict,
};
pub use scan::{scan_lines, scan_reader, ScanOptions, ScanSummary};
pub use search::{
    candidates, enumerate_orderings, run_search, Enumeration, SearchError, SearchKind, SearchState,
    TieBreak, DEFAULT_ENUMERATION_CAP,
};
pub use validate::{
    check_point_condition, is_generic_order, is_search_ordering, PointViolation, ValidationError,
    Verdict, Violation,
};
