//! Text formats: graph6 (short form) and whitespace-separated edge lists.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest vertex count representable by the single-byte graph6 size header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("graph6: malformed or unsupported size header at offset {offset}")]
    BadHeader { offset: usize },
    #[error("graph6: record ends at offset {offset}, expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("graph6: trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("graph6: nonzero padding bits in byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph6 short form holds at most {GRAPH6_MAX_VERTICES} vertices, graph has {0}")]
    UnsupportedSize(usize),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

fn graph6_body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Upper-triangle pairs `(i, j)`, `i < j`, in graph6 bit order (column by column).
fn graph6_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (base, record) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = record.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::NonPrintable {
                offset: base + i,
                byte: b,
            });
        }
    }
    let Some(&head) = bytes.first() else {
        return Err(FormatError::BadHeader { offset: base });
    };
    if head == 126 {
        // long-form header
        return Err(FormatError::BadHeader { offset: base });
    }
    let n = usize::from(head - 63);
    let expected = 1 + graph6_body_len(n);
    if bytes.len() < expected {
        return Err(FormatError::Truncated {
            offset: base + bytes.len(),
            expected: expected + base,
        });
    }
    if bytes.len() > expected {
        return Err(FormatError::TrailingData {
            offset: base + expected,
        });
    }
    let body = &bytes[1..];
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let pairs = n * n.saturating_sub(1) / 2;
    for k in pairs..body.len() * 6 {
        if bit(k) {
            return Err(FormatError::NonzeroPadding {
                offset: base + 1 + k / 6,
            });
        }
    }
    let edges: Vec<(usize, usize)> = graph6_pairs(n)
        .enumerate()
        .filter(|&(k, _)| bit(k))
        .map(|(_, e)| e)
        .collect();
    Ok(Graph::from_edges(n, edges)?)
}

pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(FormatError::UnsupportedSize(n));
    }
    let mut body = vec![0u8; graph6_body_len(n)];
    for (k, (i, j)) in graph6_pairs(n).enumerate() {
        if g.has_edge(i, j) {
            body[k / 6] |= 1 << (5 - k % 6);
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push(char::from(n as u8 + 63));
    out.extend(body.into_iter().map(|b| char::from(b + 63)));
    Ok(out)
}

/// Parses `u v` pairs separated by whitespace. An optional first line `n <count>`
/// fixes the vertex count; lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared: Option<usize> = None;
    let mut tokens: Vec<(usize, usize)> = Vec::new();
    let mut seen_content = false;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        last_line = line_no;
        let mut words = line.split_whitespace().peekable();
        if !seen_content && words.peek() == Some(&"n") {
            words.next();
            let count = words.next().ok_or_else(|| FormatError::EdgeList {
                line: line_no,
                message: "missing vertex count after 'n'".into(),
            })?;
            declared = Some(parse_index(count, line_no)?);
            if let Some(extra) = words.next() {
                return Err(FormatError::EdgeList {
                    line: line_no,
                    message: format!("unexpected token '{extra}' after vertex count"),
                });
            }
            seen_content = true;
            continue;
        }
        seen_content = true;
        for w in words {
            tokens.push((parse_index(w, line_no)?, line_no));
        }
    }
    if tokens.len() % 2 == 1 {
        return Err(FormatError::EdgeList {
            line: last_line,
            message: "odd number of vertex tokens; edges need two endpoints".into(),
        });
    }
    let max_index = tokens.iter().map(|&(v, _)| v + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) => n,
        None => max_index,
    };
    let mut edges = Vec::with_capacity(tokens.len() / 2);
    for pair in tokens.chunks(2) {
        let ((u, line), (v, _)) = (pair[0], pair[1]);
        if u == v {
            return Err(FormatError::EdgeList {
                line,
                message: format!("loop edge {u} {v}"),
            });
        }
        if u >= n || v >= n {
            return Err(FormatError::EdgeList {
                line,
                message: format!("edge {u} {v} exceeds declared vertex count {n}"),
            });
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn parse_index(token: &str, line: usize) -> Result<usize, FormatError> {
    token.parse::<usize>().map_err(|_| FormatError::EdgeList {
        line,
        message: format!("'{token}' is not a non-negative integer"),
    })
}

/// Treats `text` as graph6 when it is one line of the graph6 alphabet whose
/// length agrees with its size header; anything else is an edge list.
pub fn detect_format(text: &str) -> InputFormat {
    let line = text.trim();
    let record = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = record.as_bytes();
    let printable = !bytes.is_empty() && bytes.iter().all(|b| (63..=126).contains(b));
    if printable && bytes[0] != 126 {
        let n = usize::from(bytes[0] - 63);
        if bytes.len() == 1 + graph6_body_len(n) {
            return InputFormat::Graph6;
        }
    }
    InputFormat::EdgeList
}

pub fn parse_graph(text: &str, format: Option<InputFormat>) -> Result<Graph, FormatError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        InputFormat::Graph6 => parse_graph6(text.trim()),
        InputFormat::EdgeList => parse_edge_list(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight transcription of the nauty format description, kept apart from
    /// the production decoder.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let data: Vec<u8> = s.bytes().map(|b| b - 63).collect();
        let n = data[0] as usize;
        let mut bits = Vec::new();
        for &x in &data[1..] {
            for shift in (0..6).rev() {
                bits.push((x >> shift) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
        assert_eq!(reference_decode("A_"), (2, vec![(0, 1)]));
        assert_eq!(emit_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn star_k14_round_trip() {
        // independent decoder (networkx) gives the star on 5 vertices centred at 4
        let g = parse_graph6("D?{").unwrap();
        let expected = Graph::from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(
            reference_decode("D?{").1,
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn known_encodings() {
        // values produced by networkx.to_graph6_bytes
        assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(emit_graph6(&Graph::path(4).unwrap()).unwrap(), "Ch");
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(
            parse_graph6(">>graph6<<A_\n").unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert_eq!(
            parse_graph6("A _"),
            Err(FormatError::NonPrintable {
                offset: 1,
                byte: b' '
            })
        );
        assert_eq!(parse_graph6(""), Err(FormatError::BadHeader { offset: 0 }));
        assert_eq!(
            parse_graph6("~?@G"),
            Err(FormatError::BadHeader { offset: 0 })
        );
        assert_eq!(
            parse_graph6("D?"),
            Err(FormatError::Truncated {
                offset: 2,
                expected: 3
            })
        );
        assert_eq!(
            parse_graph6("A_?"),
            Err(FormatError::TrailingData { offset: 2 })
        );
        assert_eq!(
            parse_graph6("A`"),
            Err(FormatError::NonzeroPadding { offset: 1 })
        );
    }

    #[test]
    fn emit_rejects_large() {
        let g = Graph::empty(63).unwrap();
        assert_eq!(emit_graph6(&g), Err(FormatError::UnsupportedSize(63)));
        assert!(emit_graph6(&Graph::complete(62).unwrap()).is_ok());
    }

    #[test]
    fn exhaustive_round_trip_small() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = graph6_pairs(n).collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges).unwrap();
                let s = emit_graph6(&g).unwrap();
                assert_eq!(detect_format(&s), InputFormat::Graph6);
                assert_eq!(parse_graph6(&s).unwrap(), g);
                let (rn, mut redges) = reference_decode(&s);
                redges.sort_unstable();
                assert_eq!(rn, n);
                assert_eq!(redges, g.edges().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn edge_lists() {
        assert_eq!(
            parse_edge_list("0 1\n1 2").unwrap(),
            Graph::path(3).unwrap()
        );
        assert_eq!(
            parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0").unwrap(),
            Graph::cycle(4).unwrap()
        );
        assert_eq!(
            parse_edge_list("0 1\n0 1").unwrap(),
            Graph::complete(2).unwrap()
        );
        assert_eq!(
            parse_edge_list("# a comment\nn 3\n\n0 1")
                .unwrap()
                .vertex_count(),
            3
        );
        assert_eq!(parse_edge_list("").unwrap().vertex_count(), 0);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = |s: &str| match parse_edge_list(s) {
            Err(FormatError::EdgeList { line, .. }) => line,
            other => panic!("expected edge-list error, got {other:?}"),
        };
        assert_eq!(err("0 1\n2 2"), 2);
        assert_eq!(err("0 1\n1 -2"), 2);
        assert_eq!(err("0 1\n\n1 x"), 3);
        assert_eq!(err("0 1\n1"), 2);
        assert_eq!(err("n 2\n0 2"), 2);
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format("A_"), InputFormat::Graph6);
        assert_eq!(detect_format("Dhc\n"), InputFormat::Graph6);
        assert_eq!(detect_format("0 1\n1 2"), InputFormat::EdgeList);
        assert_eq!(detect_format("n 4"), InputFormat::EdgeList);
        // right alphabet, wrong length
        assert_eq!(detect_format("Dh"), InputFormat::EdgeList);
    }
}
