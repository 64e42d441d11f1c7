//! Small named graphs used by tests, benchmarks and the command line.

use crate::graph::{EdgeId, Graph};
use crate::subset::EdgeSubset;

/// A graph with vertex names and, for level fixtures, a base transversal.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub level: usize,
    pub base: EdgeSubset,
}

impl Fixture {
    fn build(names: &[&str], edges: &[(&str, &str)], level: usize, base: &[(&str, &str)]) -> Self {
        let id = |n: &str| names.iter().position(|&x| x == n).expect("fixture vertex is declared");
        let graph = Graph::new(names.len(), edges.iter().map(|&(a, b)| (id(a), id(b)))).expect("fixture graph is simple");
        let base = EdgeSubset::from_edges(
            graph.edge_count(),
            base.iter().map(|&(a, b)| graph.edge_between(id(a), id(b)).expect("base edge exists")),
        );
        Self {
            graph,
            labels: names.iter().map(|s| s.to_string()).collect(),
            level,
            base,
        }
    }

    pub fn vertex(&self, name: &str) -> usize {
        self.labels.iter().position(|l| l == name).expect("known vertex")
    }

    pub fn edge(&self, a: &str, b: &str) -> EdgeId {
        self.graph.edge_between(self.vertex(a), self.vertex(b)).expect("known edge")
    }

    pub fn set(&self, edges: &[(&str, &str)]) -> EdgeSubset {
        EdgeSubset::from_edges(self.graph.edge_count(), edges.iter().map(|&(a, b)| self.edge(a, b)))
    }
}

/// a-b-c-d with edges ab=0, bc=1, cd=2.
pub fn path4() -> Fixture {
    Fixture::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")], 0, &[])
}

/// Edges ab=0, bc=1, ca=2.
pub fn triangle() -> Fixture {
    Fixture::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")], 0, &[])
}

pub fn cycle4() -> Fixture {
    Fixture::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")], 0, &[])
}

pub fn single_edge() -> Fixture {
    Fixture::build(&["a", "b"], &[("a", "b")], 0, &[])
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph")
}

/// `t` vertex-disjoint triangles.
pub fn triangles(t: usize) -> Graph {
    Graph::new(
        3 * t,
        (0..t).flat_map(|k| [(3 * k, 3 * k + 1), (3 * k + 1, 3 * k + 2), (3 * k + 2, 3 * k)]),
    )
    .expect("disjoint triangles")
}

/// The complete bipartite graph on `n + n` vertices minus a perfect matching.
pub fn crown(n: usize) -> Graph {
    Graph::new(
        2 * n,
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, n + v))),
    )
    .expect("crown graph")
}

/// Level 3 of this graph has matched edge xy. The base {vl-vj, u-u2} has two
/// free vertices zl, zj under anchor xw, and vl-vj keeps the pendant private
/// edges pl-vl and pj-vj, so zl-vl, zj-vj form an H-pattern.
pub fn h_pattern() -> Fixture {
    Fixture::build(
        &["x", "y", "w", "vl", "vj", "pl", "pj", "zl", "zj", "u", "u2", "q"],
        &[
            ("vl", "vj"),
            ("u", "u2"),
            ("pl", "vl"),
            ("pj", "vj"),
            ("zl", "vl"),
            ("zj", "vj"),
            ("zj", "u"),
            ("u2", "q"),
            ("x", "y"),
            ("x", "w"),
            ("y", "zl"),
            ("y", "zj"),
        ],
        3,
        &[("vl", "vj"), ("u", "u2")],
    )
}

/// As [`h_pattern`] with a third free vertex zm joined to vj and u, giving two
/// H-patterns through vl-vj that share zl-vl.
pub fn double_h_pattern() -> Fixture {
    Fixture::build(
        &["x", "y", "w", "vl", "vj", "pl", "pj", "zl", "zj", "zm", "u", "u2", "q"],
        &[
            ("vl", "vj"),
            ("u", "u2"),
            ("pl", "vl"),
            ("pj", "vj"),
            ("zl", "vl"),
            ("zj", "vj"),
            ("zm", "vj"),
            ("zj", "u"),
            ("zm", "u"),
            ("u2", "q"),
            ("x", "y"),
            ("x", "w"),
            ("y", "zl"),
            ("y", "zj"),
            ("y", "zm"),
        ],
        3,
        &[("vl", "vj"), ("u", "u2")],
    )
}

/// Level 1 with matched edge xy and anchor xw: free vertex z1 has options
/// z1-a, z1-b and free vertex z2 has z2-a, z2-b, z2-c.
pub fn selection_pair() -> Fixture {
    Fixture::build(
        &["x", "y", "w", "z1", "z2", "a", "a2", "b", "b2", "c", "c2"],
        &[
            ("x", "y"),
            ("a", "a2"),
            ("b", "b2"),
            ("c", "c2"),
            ("x", "w"),
            ("y", "z1"),
            ("y", "z2"),
            ("z1", "a"),
            ("z1", "b"),
            ("z2", "a"),
            ("z2", "b"),
            ("z2", "c"),
        ],
        1,
        &[],
    )
}

/// Level 3 with matched edge xy; the base {xw, v-v2} already touches x, the
/// single free vertex z has the one option z-v, and v-v2 keeps the private
/// edge v2-p.
pub fn extra_child() -> Fixture {
    Fixture::build(
        &["x", "y", "w", "w2", "v", "v2", "p", "z"],
        &[
            ("w", "w2"),
            ("v", "v2"),
            ("v2", "p"),
            ("z", "v"),
            ("x", "y"),
            ("x", "w"),
            ("y", "z"),
        ],
        3,
        &[("x", "w"), ("v", "v2")],
    )
}
