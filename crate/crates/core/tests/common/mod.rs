#![allow(dead_code)]

use std::path::PathBuf;

use gsearch_core::{parse_graph6, Graph};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

/// graph6 lines of all connected graphs on exactly `n` vertices (nauty geng -c).
pub fn inventory_lines(n: usize) -> Vec<String> {
    let path = data_path(&format!("connected_n{n}.g6"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(str::to_owned)
        .collect()
}

pub fn inventory_lines_upto(max_n: usize) -> Vec<String> {
    (1..=max_n).flat_map(inventory_lines).collect()
}

pub fn inventory_upto(max_n: usize) -> Vec<(String, Graph)> {
    inventory_lines_upto(max_n)
        .into_iter()
        .map(|l| {
            let g = parse_graph6(&l).expect("inventory line parses");
            (l, g)
        })
        .collect()
}

/// Every permutation of `0..n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Letter-labelled graph: vertex `a` is 0, `b` is 1, and so on.
pub fn lettered(n: usize, edges: &str) -> Graph {
    let idx = |c: char| (c as u8 - b'a') as usize;
    let pairs = edges.split_whitespace().map(|e| {
        let mut cs = e.chars();
        (idx(cs.next().unwrap()), idx(cs.next().unwrap()))
    });
    Graph::from_edges(n, pairs.collect::<Vec<_>>()).unwrap()
}

pub fn letters(s: &str) -> Vec<usize> {
    s.chars()
        .filter(|c| c.is_ascii_lowercase())
        .map(|c| (c as u8 - b'a') as usize)
        .collect()
}
