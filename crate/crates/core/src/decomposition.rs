use crate::error::{domain, usage, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::subset::EdgeSubset;

/// One edge of the maximal matching; `x` is the endpoint with the smaller id.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchedEdge {
    pub edge: EdgeId,
    pub x: VertexId,
    pub y: VertexId,
}

/// Levels induced by a greedy maximal matching `b_1..b_k`, plus the total
/// edge order in which every level block follows all earlier blocks.
///
/// Levels are 1-based. A vertex covered by `b_i` has level `i`; uncovered
/// vertices have level 0 and belong to every level set. An edge belongs to
/// the block of the larger level among its endpoints.
#[derive(Clone, Debug)]
pub struct MatchingDecomposition {
    matching: Vec<MatchedEdge>,
    level_of_edge: Vec<usize>,
    vertex_level: Vec<usize>,
    order: Vec<EdgeId>,
    rank: Vec<usize>,
    boundary: Vec<usize>,
}

impl MatchingDecomposition {
    pub fn build(g: &Graph) -> Result<Self> {
        if g.edge_count() == 0 {
            return domain("the decomposition needs at least one edge");
        }
        Ok(Self::build_any(g))
    }

    /// Like [`build`](Self::build) but yields zero levels on an edgeless graph.
    pub(crate) fn build_any(g: &Graph) -> Self {
        let mut vertex_level = vec![0; g.vertex_count()];
        let mut matching = Vec::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if vertex_level[u] == 0 && vertex_level[v] == 0 {
                matching.push(MatchedEdge { edge: e, x: u, y: v });
                vertex_level[u] = matching.len();
                vertex_level[v] = matching.len();
            }
        }
        let level_of_edge: Vec<usize> = g
            .edges()
            .iter()
            .map(|&(u, v)| vertex_level[u].max(vertex_level[v]))
            .collect();

        let mut blocks = vec![Vec::new(); matching.len() + 1];
        for (e, &lvl) in level_of_edge.iter().enumerate() {
            blocks[lvl].push(e);
        }
        let mut order = Vec::with_capacity(g.edge_count());
        let mut boundary = vec![0];
        for (b, block) in matching.iter().zip(&blocks[1..]) {
            let x_side = block.iter().filter(|&&e| e != b.edge && g.has_endpoint(e, b.x));
            let y_side = block.iter().filter(|&&e| e != b.edge && !g.has_endpoint(e, b.x));
            order.push(b.edge);
            order.extend(x_side);
            order.extend(y_side);
            boundary.push(order.len());
        }
        let mut rank = vec![0; g.edge_count()];
        for (r, &e) in order.iter().enumerate() {
            rank[e] = r;
        }
        Self {
            matching,
            level_of_edge,
            vertex_level,
            order,
            rank,
            boundary,
        }
    }

    /// Number of levels `k`.
    pub fn levels(&self) -> usize {
        self.matching.len()
    }

    pub fn matching(&self) -> &[MatchedEdge] {
        &self.matching
    }

    /// The matched edge of level `i` (1-based).
    pub fn matched(&self, i: usize) -> &MatchedEdge {
        &self.matching[i - 1]
    }

    pub fn level_of_edge(&self, e: EdgeId) -> usize {
        self.level_of_edge[e]
    }

    /// Level of the matching edge covering `v`, or 0 if `v` is uncovered.
    pub fn vertex_level(&self, v: VertexId) -> usize {
        self.vertex_level[v]
    }

    /// Whether `v` belongs to the level-`i` vertex set.
    pub fn in_level_vertices(&self, v: VertexId, i: usize) -> bool {
        self.vertex_level[v] <= i
    }

    pub fn order(&self) -> &[EdgeId] {
        &self.order
    }

    #[inline]
    pub fn rank(&self, e: EdgeId) -> usize {
        self.rank[e]
    }

    /// The edge in position `r` of the order.
    pub fn edge_at(&self, r: usize) -> EdgeId {
        self.order[r]
    }

    /// Number of edges in the first `i` levels.
    pub fn level_boundary(&self, i: usize) -> usize {
        self.boundary[i]
    }

    /// Edges of level `i` in rank order.
    pub fn block(&self, i: usize) -> &[EdgeId] {
        &self.order[self.boundary[i - 1]..self.boundary[i]]
    }

    pub fn prefix_edges(&self, j: usize) -> Result<EdgeSubset> {
        if j > self.order.len() {
            return usage(format!("prefix length {j} exceeds edge count {}", self.order.len()));
        }
        Ok(EdgeSubset::from_edges(self.order.len(), self.order[..j].iter().copied()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_levels() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = MatchingDecomposition::build(&g).unwrap();
        assert_eq!(d.levels(), 2);
        assert_eq!(d.order(), &[0, 2, 1]);
        assert_eq!(d.block(2), &[2, 1]);
        assert_eq!(d.level_boundary(1), 1);
        assert_eq!(d.prefix_edges(1).unwrap().to_vec(), vec![0]);
        assert!(d.prefix_edges(4).is_err());
    }

    #[test]
    fn triangle_order_puts_x_side_first() {
        // a=0, b=1, c=2; edges ab, bc, ca
        let g = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let d = MatchingDecomposition::build(&g).unwrap();
        assert_eq!(d.order(), &[0, 2, 1]);
        assert_eq!(d.matched(1).x, 0);
    }

    #[test]
    fn edgeless_graph_is_rejected() {
        let g = Graph::new(3, []).unwrap();
        assert!(MatchingDecomposition::build(&g).is_err());
        assert_eq!(MatchingDecomposition::build_any(&g).levels(), 0);
    }
}
