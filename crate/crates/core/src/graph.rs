use std::collections::HashMap;

use crate::error::{domain, usage, Result};
use crate::subset::EdgeSubset;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A finite simple undirected graph with dense vertex and edge identifiers.
///
/// Endpoints are stored with the smaller vertex id first. Closed edge
/// neighborhoods and their two-step closures are precomputed as bitsets.
#[derive(Clone, Debug)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
    closed: Vec<EdgeSubset>,
    two_step: Vec<EdgeSubset>,
}

impl Graph {
    /// Builds a graph; edge ids follow the order of `edges`.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut list = Vec::new();
        let mut index = HashMap::new();
        let mut incidence = vec![Vec::new(); vertex_count];
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return domain(format!("edge {a}-{b} names a vertex outside 0..{vertex_count}"));
            }
            if a == b {
                return domain(format!("self-loop at vertex {a}"));
            }
            let key = (a.min(b), a.max(b));
            let id = list.len();
            if index.insert(key, id).is_some() {
                return domain(format!("parallel edge {}-{}", key.0, key.1));
            }
            list.push(key);
            incidence[key.0].push(id);
            incidence[key.1].push(id);
        }
        let m = list.len();
        let closed: Vec<EdgeSubset> = list
            .iter()
            .map(|&(u, v)| {
                EdgeSubset::from_edges(m, incidence[u].iter().chain(&incidence[v]).copied())
            })
            .collect();
        let two_step = closed
            .iter()
            .map(|n| {
                let mut acc = EdgeSubset::new(m);
                for f in n {
                    acc.union_with(&closed[f]);
                }
                acc
            })
            .collect();
        Ok(Self {
            vertex_count,
            edges: list,
            incidence,
            index,
            closed,
            two_step,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    #[inline]
    pub fn has_endpoint(&self, e: EdgeId, v: VertexId) -> bool {
        let (a, b) = self.edges[e];
        a == v || b == v
    }

    /// The endpoint of `e` that is not `v`, if `v` lies on `e`.
    #[inline]
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        match self.edges[e] {
            (a, b) if a == v => Some(b),
            (a, b) if b == v => Some(a),
            _ => None,
        }
    }

    /// Edge ids at `v` in increasing order.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence[v]
            .iter()
            .map(move |&e| self.other_endpoint(e, v).expect("incidence list is consistent"))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// N[e] without bounds checking beyond the slice index.
    #[inline]
    pub fn nbhd(&self, e: EdgeId) -> &EdgeSubset {
        &self.closed[e]
    }

    /// Edges f whose closed neighborhood meets N[e].
    #[inline]
    pub fn two_step(&self, e: EdgeId) -> &EdgeSubset {
        &self.two_step[e]
    }

    pub fn closed_edge_neighborhood(&self, e: EdgeId) -> Result<EdgeSubset> {
        match self.closed.get(e) {
            Some(n) => Ok(n.clone()),
            None => usage(format!("edge id {e} out of range 0..{}", self.edge_count())),
        }
    }

    pub fn incident_edges(&self, v: VertexId) -> Result<EdgeSubset> {
        match self.incidence.get(v) {
            Some(list) => Ok(EdgeSubset::from_edges(self.edge_count(), list.iter().copied())),
            None => usage(format!("vertex id {v} out of range 0..{}", self.vertex_count)),
        }
    }

    pub fn is_edge_dominating(&self, t: &EdgeSubset) -> bool {
        self.closed.iter().all(|n| n.intersects(t))
    }

    /// Whether some member of `t` has `v` as an endpoint.
    pub fn touches(&self, t: &EdgeSubset, v: VertexId) -> bool {
        self.incidence[v].iter().any(|&e| t.contains(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn neighborhoods_of_path() {
        let g = p4();
        assert_eq!(g.closed_edge_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(g.closed_edge_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(g.closed_edge_neighborhood(3).is_err());
        assert_eq!(g.two_step(0).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn normalizes_orientation() {
        let g = Graph::new(3, [(2, 0)]).unwrap();
        assert_eq!(g.endpoints(0), (0, 2));
        assert_eq!(g.edge_between(2, 0), Some(0));
        assert_eq!(g.other_endpoint(0, 2), Some(0));
        assert_eq!(g.other_endpoint(0, 1), None);
    }
}
