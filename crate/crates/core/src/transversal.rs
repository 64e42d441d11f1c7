use std::cell::Cell;

use crate::decomposition::MatchingDecomposition;
use crate::error::{domain, usage, Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::subset::{EdgeSubset, Meet};

/// A graph together with its decomposition, the rank-order prefixes, and a
/// work meter.
///
/// The meter counts primitive checks: one unit per private-neighbor
/// computation and one per domination sweep. It is the machine-independent
/// delay measure reported by the enumerator.
#[derive(Debug)]
pub struct Instance {
    graph: Graph,
    decomposition: MatchingDecomposition,
    prefixes: Vec<EdgeSubset>,
    blocks: Vec<EdgeSubset>,
    meter: Cell<u64>,
}

impl Instance {
    /// Accepts edgeless graphs, which get zero levels.
    pub fn new(graph: Graph) -> Self {
        let decomposition = MatchingDecomposition::build_any(&graph);
        let m = graph.edge_count();
        let mut prefixes = Vec::with_capacity(m + 1);
        let mut acc = EdgeSubset::new(m);
        prefixes.push(acc.clone());
        for &e in decomposition.order() {
            acc.insert(e);
            prefixes.push(acc.clone());
        }
        let mut blocks = vec![EdgeSubset::new(m)];
        for i in 1..=decomposition.levels() {
            blocks.push(EdgeSubset::from_edges(m, decomposition.block(i).iter().copied()));
        }
        Self {
            graph,
            decomposition,
            prefixes,
            blocks,
            meter: Cell::new(0),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn decomposition(&self) -> &MatchingDecomposition {
        &self.decomposition
    }

    pub fn levels(&self) -> usize {
        self.decomposition.levels()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// The first `j` edges in rank order.
    pub fn prefix(&self, j: usize) -> &EdgeSubset {
        &self.prefixes[j]
    }

    /// E_i, the edges of levels `1..=i`.
    pub fn level_prefix(&self, i: usize) -> &EdgeSubset {
        &self.prefixes[self.decomposition.level_boundary(i)]
    }

    /// B_i, the edges of level `i`.
    pub fn block(&self, i: usize) -> &EdgeSubset {
        &self.blocks[i]
    }

    pub fn context(&self, j: usize) -> Result<LevelContext<'_>> {
        if j > self.edge_count() {
            return usage(format!("prefix length {j} exceeds edge count {}", self.edge_count()));
        }
        Ok(LevelContext { inst: self, j })
    }

    pub fn level_context(&self, i: usize) -> Result<LevelContext<'_>> {
        self.check_level(i, 0)?;
        self.context(self.decomposition.level_boundary(i))
    }

    /// Work units spent so far.
    pub fn steps(&self) -> u64 {
        self.meter.get()
    }

    pub(crate) fn charge(&self, units: u64) {
        self.meter.set(self.meter.get() + units);
    }

    pub(crate) fn check_level(&self, i: usize, lowest: usize) -> Result<()> {
        if i < lowest || i > self.levels() {
            return usage(format!("level {i} outside {lowest}..={}", self.levels()));
        }
        Ok(())
    }

    /// P_j(e, t), charged one unit.
    pub(crate) fn private_set(&self, j: usize, e: EdgeId, t: &EdgeSubset) -> EdgeSubset {
        self.charge(1);
        let mut out = self.graph.nbhd(e).intersection(&self.prefixes[j]);
        let candidates = out.to_vec();
        for f in candidates {
            if self.graph.nbhd(f).meet(t) != Meet::One(e) {
                out.remove(f);
            }
        }
        out
    }

    /// Whether P_j(e, t) is nonempty, charged one unit.
    pub(crate) fn has_private(&self, j: usize, e: EdgeId, t: &EdgeSubset) -> bool {
        self.charge(1);
        self.graph
            .nbhd(e)
            .iter()
            .any(|f| self.prefixes[j].contains(f) && self.graph.nbhd(f).meet(t) == Meet::One(e))
    }

    /// Whether every edge of `region` inside the j-prefix meets N[·] ∩ t.
    pub(crate) fn dominates(&self, j: usize, region: &EdgeSubset, t: &EdgeSubset) -> bool {
        self.charge(1);
        region
            .iter()
            .all(|f| !self.prefixes[j].contains(f) || self.graph.nbhd(f).intersects(t))
    }

    /// Minimality of `c` at prefix `j`, given that only edges in `dirty` may be
    /// undominated and only members in `suspects` may lack a private neighbor.
    pub(crate) fn minimal_near(
        &self,
        j: usize,
        c: &EdgeSubset,
        dirty: &EdgeSubset,
        suspects: &EdgeSubset,
    ) -> bool {
        self.dominates(j, dirty, c) && suspects.iter().filter(|&m| c.contains(m)).all(|m| self.has_private(j, m, c))
    }

    /// Minimality of `c ⊇ base` at E_i for `base` minimal at E_{i-1}.
    pub(crate) fn extends_minimally(&self, i: usize, base: &EdgeSubset, c: &EdgeSubset) -> bool {
        let added = c.difference(base);
        let mut suspects = added.clone();
        for z in &added {
            suspects.union_with(&self.graph.two_step(z).intersection(base));
        }
        self.minimal_near(self.decomposition.level_boundary(i), c, &self.blocks[i], &suspects)
    }
}

/// The hypergraph of closed edge neighborhoods restricted to the first `j`
/// edges in rank order.
#[derive(Clone, Copy, Debug)]
pub struct LevelContext<'a> {
    inst: &'a Instance,
    j: usize,
}

impl<'a> LevelContext<'a> {
    pub fn prefix_len(&self) -> usize {
        self.j
    }

    pub fn private_neighbors(&self, e: EdgeId, t: &EdgeSubset) -> Result<EdgeSubset> {
        if !t.contains(e) {
            return usage(format!("edge {e} is not a member of the set"));
        }
        Ok(self.inst.private_set(self.j, e, t))
    }

    pub fn is_transversal(&self, t: &EdgeSubset) -> bool {
        self.inst.dominates(self.j, self.inst.prefix(self.j), t)
    }

    pub fn is_minimal_transversal(&self, t: &EdgeSubset) -> bool {
        self.is_transversal(t) && t.iter().all(|e| self.inst.has_private(self.j, e, t))
    }

    /// The parent of `t` in Berge's tree: `t` itself when it is already minimal
    /// for the shorter prefix, otherwise `t` minus its unique member whose only
    /// private neighbor is the last prefix edge.
    pub fn berge_parent(&self, t: &EdgeSubset) -> Result<EdgeSubset> {
        if self.j == 0 || !self.is_minimal_transversal(t) {
            return domain(format!("{t} is not a minimal transversal of a nonempty prefix of length {}", self.j));
        }
        berge_step(self.inst, self.j, t.clone())
    }
}

/// Berge parent of `s`, which must be minimal for prefix `j`.
pub(crate) fn berge_step(inst: &Instance, j: usize, mut s: EdgeSubset) -> Result<EdgeSubset> {
    let last = inst.decomposition().edge_at(j - 1);
    let mut found = None;
    for v in inst.graph().nbhd(last).intersection(&s).iter() {
        let p = inst.private_set(j, v, &s);
        if p.len() == 1 && p.contains(last) {
            if let Some(prev) = found {
                return Err(Error::Internal(format!(
                    "members {prev} and {v} of {s} both own only edge {last}"
                )));
            }
            found = Some(v);
        }
    }
    if let Some(v) = found {
        s.remove(v);
    }
    Ok(s)
}

/// The ancestor of `t` in tr(E_{i-1}), for `t` minimal at E_i.
pub fn skip_parent(inst: &Instance, i: usize, t: &EdgeSubset) -> Result<EdgeSubset> {
    inst.check_level(i, 1)?;
    if !inst.level_context(i)?.is_minimal_transversal(t) {
        return domain(format!("{t} is not a minimal transversal of level {i}"));
    }
    skip_parent_trusted(inst, i, t)
}

pub(crate) fn skip_parent_trusted(inst: &Instance, i: usize, t: &EdgeSubset) -> Result<EdgeSubset> {
    let d = inst.decomposition();
    let mut s = t.clone();
    for j in (d.level_boundary(i - 1) + 1..=d.level_boundary(i)).rev() {
        s = berge_step(inst, j, s)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Instance {
        Instance::new(Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap())
    }

    fn set(items: &[EdgeId]) -> EdgeSubset {
        EdgeSubset::from_edges(3, items.iter().copied())
    }

    #[test]
    fn private_neighbors_on_path() {
        let inst = p4();
        let ctx = inst.context(3).unwrap();
        assert_eq!(ctx.private_neighbors(0, &set(&[0, 2])).unwrap(), set(&[0]));
        assert_eq!(ctx.private_neighbors(1, &set(&[1])).unwrap(), set(&[0, 1, 2]));
        assert!(ctx.private_neighbors(0, &set(&[1])).is_err());
    }

    #[test]
    fn minimality_on_path() {
        let inst = p4();
        assert!(inst.context(3).unwrap().is_minimal_transversal(&set(&[1])));
        assert!(!inst.context(3).unwrap().is_minimal_transversal(&set(&[0, 1])));
        assert!(inst.context(1).unwrap().is_minimal_transversal(&set(&[1])));
    }

    #[test]
    fn parents_on_path() {
        let inst = p4();
        assert_eq!(inst.context(3).unwrap().berge_parent(&set(&[1])).unwrap(), set(&[1]));
        assert_eq!(inst.context(2).unwrap().berge_parent(&set(&[0, 2])).unwrap(), set(&[0]));
        assert_eq!(skip_parent(&inst, 2, &set(&[0, 2])).unwrap(), set(&[0]));
        assert_eq!(skip_parent(&inst, 2, &set(&[1])).unwrap(), set(&[1]));
        assert!(skip_parent(&inst, 2, &set(&[0])).is_err());
    }

    #[test]
    fn single_edge_parent_is_empty() {
        let inst = Instance::new(Graph::new(2, [(0, 1)]).unwrap());
        let t = EdgeSubset::from_edges(1, [0]);
        assert!(inst.context(1).unwrap().berge_parent(&t).unwrap().is_empty());
    }
}
