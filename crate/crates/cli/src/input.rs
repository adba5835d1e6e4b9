use std::collections::HashMap;
use std::fs;
use std::io::{self, Read};
use std::path::Path;

use gsearch_core::{parse_graph, Graph, InputFormat, VertexOrdering};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormatArg {
    Auto,
    Graph6,
    Edges,
}

impl FormatArg {
    fn resolve(self) -> Option<InputFormat> {
        match self {
            FormatArg::Auto => None,
            FormatArg::Graph6 => Some(InputFormat::Graph6),
            FormatArg::Edges => Some(InputFormat::EdgeList),
        }
    }
}

/// Reads the graph from `--graph`, a file, or standard input (`-` or absent).
pub fn load_graph(
    inline: Option<&str>,
    path: Option<&Path>,
    format: FormatArg,
) -> Result<Graph, Failure> {
    let text = match (inline, path) {
        (Some(text), _) => text.to_owned(),
        (None, Some(p)) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Parse(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    parse_graph(&text, format.resolve()).map_err(|e| Failure::Parse(e.to_string()))
}

/// Vertex names from a label file: one `label index` pair per line, or a bare
/// label meaning "the next index". Blank lines and `#` comments are ignored.
pub fn load_labels(path: &Path) -> Result<HashMap<String, usize>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_labels(&text)
}

pub fn parse_labels(text: &str) -> Result<HashMap<String, usize>, Failure> {
    let mut labels = HashMap::new();
    let mut next = 0;
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let name = parts.next().unwrap_or_default().to_owned();
        let index = match parts.next() {
            Some(i) => i.parse().map_err(|_| {
                Failure::Parse(format!("label file line {}: bad index '{i}'", no + 1))
            })?,
            None => next,
        };
        if parts.next().is_some() {
            return Err(Failure::Parse(format!(
                "label file line {}: expected 'label index'",
                no + 1
            )));
        }
        if labels.insert(name.clone(), index).is_some() {
            return Err(Failure::Parse(format!(
                "label file line {}: duplicate label '{name}'",
                no + 1
            )));
        }
        next = index + 1;
    }
    Ok(labels)
}

/// Parses `2,0,3,1` or `2 0 3 1`, resolving names through `labels` when given.
pub fn parse_ordering(
    text: &str,
    labels: Option<&HashMap<String, usize>>,
    n: usize,
) -> Result<VertexOrdering, Failure> {
    let order = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match labels.and_then(|l| l.get(t)) {
            Some(&v) => Ok(v),
            None => t.parse::<usize>().map_err(|_| {
                Failure::Parse(format!("'{t}' is neither a vertex index nor a known label"))
            }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if order.len() != n {
        return Err(Failure::Parse(format!(
            "ordering has {} vertices but the graph has {n}",
            order.len()
        )));
    }
    VertexOrdering::new(order).map_err(|e| Failure::Parse(e.to_string()))
}
