//! Edge-list text format.
//!
//! One edge per line as two whitespace-separated vertex tokens. Tokens become
//! vertex ids in order of first appearance. Blank lines and lines starting
//! with `#` are skipped. A DIMACS `p edge <n> <m>` header switches to
//! DIMACS mode for the whole file, where vertices are `1..=n`, edge lines may carry a leading
//! `e`, and `c` lines are comments.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::subset::EdgeSubset;

#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let dimacs = text.lines().any(|l| l.split_whitespace().next() == Some("p"));
    let mut declared = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "p" {
            if declared || !edges.is_empty() {
                return parse_err(line_no, "problem line must come first and only once");
            }
            let n = match tokens[..] {
                ["p", "edge" | "col", n, m] if m.parse::<usize>().is_ok() => n.parse::<usize>().ok(),
                _ => None,
            };
            let Some(n) = n else {
                return parse_err(line_no, "expected `p edge <vertices> <edges>`");
            };
            for v in 1..=n {
                ids.insert(v.to_string(), labels.len());
                labels.push(v.to_string());
            }
            declared = true;
            continue;
        }
        if dimacs {
            if !declared && tokens[0] != "c" {
                return parse_err(line_no, "edge before the problem line");
            }
            match tokens[0] {
                "c" => continue,
                "e" => {
                    tokens.remove(0);
                }
                _ => {}
            }
        }
        let [a, b] = tokens[..] else {
            return parse_err(line_no, format!("expected two vertex tokens, found {}", tokens.len()));
        };
        let mut id = |tok: &str| -> Result<VertexId> {
            if let Some(&v) = ids.get(tok) {
                return Ok(v);
            }
            if dimacs {
                return parse_err(line_no, format!("vertex `{tok}` outside the declared range"));
            }
            ids.insert(tok.to_string(), labels.len());
            labels.push(tok.to_string());
            Ok(labels.len() - 1)
        };
        let (u, v) = (id(a)?, id(b)?);
        if u == v {
            return parse_err(line_no, format!("self-loop at `{a}`"));
        }
        if let Some(first) = seen.insert((u.min(v), u.max(v)), line_no) {
            return parse_err(line_no, format!("edge {a}-{b} repeats line {first}"));
        }
        edges.push((u, v));
    }
    let graph = Graph::new(labels.len(), edges)?;
    Ok(LabeledGraph { graph, labels })
}

/// Edges as `u-v` tokens (endpoint with the smaller id first), in edge-id
/// order, joined by single spaces.
pub fn format_solution(g: &Graph, labels: &[String], solution: &EdgeSubset) -> String {
    let mut tokens: Vec<(usize, usize)> = solution.iter().map(|e| g.endpoints(e)).collect();
    tokens.sort_unstable();
    tokens
        .iter()
        .map(|&(u, v)| format!("{}-{}", labels[u], labels[v]))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn write_edge_list(g: &Graph, labels: &[String]) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", labels[u], labels[v]);
    }
    out
}

pub fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}
