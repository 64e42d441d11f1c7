use crate::decomposition::MatchingDecomposition;
use crate::error::{domain, usage, Error, Result};
use crate::graph::{EdgeId, VertexId};
use crate::skip_children::{analyze_trusted, is_non_extra, HPattern, Side};
use crate::subset::EdgeSubset;
use crate::transversal::{skip_parent_trusted, Instance};

/// Whether the lowest-ranked edge of `s Δ s2` lies in `s`.
pub fn lex_less(d: &MatchingDecomposition, s: &EdgeSubset, s2: &EdgeSubset) -> Result<bool> {
    match s.symmetric_difference(s2).iter().min_by_key(|&e| d.rank(e)) {
        Some(e) => Ok(s.contains(e)),
        None => usage("lexicographic comparison of equal sets"),
    }
}

/// How an H-child reaches its slide parent.
#[derive(Clone, Debug)]
pub(crate) struct SlideStep {
    /// Oriented so that `edge_zl_vl` is a new edge of the child.
    pub pattern: HPattern,
    /// The unique new edge at `z_j`.
    pub hub_edge: EdgeId,
    pub parent: EdgeSubset,
}

/// The (side, anchor) under which the extra child `c` of `base` is generated.
pub(crate) fn classify(
    inst: &Instance,
    i: usize,
    base: &EdgeSubset,
    c: &EdgeSubset,
) -> Option<(Side, Option<EdgeId>)> {
    let g = inst.graph();
    let added = c.difference(base);
    if is_non_extra(inst, i, &added) {
        return None;
    }
    let side = Side::BOTH.into_iter().find(|side| {
        let (s, o) = side.endpoints(inst, i);
        g.touches(c, s) && !g.touches(c, o)
    })?;
    let (s, _) = side.endpoints(inst, i);
    if g.touches(base, s) {
        return Some((side, None));
    }
    let d = inst.decomposition();
    let anchor = g
        .incident(s)
        .iter()
        .copied()
        .filter(|&e| added.contains(e))
        .min_by_key(|&e| d.rank(e));
    Some((side, anchor))
}

/// The slide step of `c`, which must be minimal at E_i, or `None` if `c` is
/// not an H-child.
pub(crate) fn slide_step(inst: &Instance, i: usize, c: &EdgeSubset) -> Result<Option<SlideStep>> {
    let base = skip_parent_trusted(inst, i, c)?;
    let Some((side, anchor)) = classify(inst, i, &base, c) else {
        return Ok(None);
    };
    let added = c.difference(&base);
    let analysis = analyze_trusted(inst, &base, i, side, anchor);
    let m = inst.edge_count();
    let d = inst.decomposition();
    let mut best: Option<(HPattern, EdgeSubset)> = None;
    for p in &analysis.h_patterns {
        if !added.contains(p.edge_zl_vl) && !added.contains(p.edge_zj_vj) {
            continue;
        }
        let edges = p.edge_set(m);
        let better = match &best {
            None => true,
            Some((_, current)) => lex_less(d, &edges, current)?,
        };
        if better {
            best = Some((*p, edges));
        }
    }
    let Some((pattern, _)) = best else {
        return Ok(None);
    };
    let pattern = if added.contains(pattern.edge_zl_vl) { pattern } else { pattern.flipped() };
    if added.contains(pattern.edge_zj_vj) {
        return Err(Error::Internal(format!(
            "child {c} contains both border edges of an H-pattern"
        )));
    }
    let g = inst.graph();
    let at_hub: Vec<EdgeId> = g.incident(pattern.z_j).iter().copied().filter(|&e| added.contains(e)).collect();
    let [hub_edge] = at_hub[..] else {
        return Err(Error::Internal(format!(
            "free vertex {} carries {} new edges in {c}",
            pattern.z_j,
            at_hub.len()
        )));
    };
    let mut parent = c.clone();
    parent.insert(pattern.edge_zj_vj);
    parent.remove(hub_edge);
    parent.remove(pattern.edge_vl_vj);
    Ok(Some(SlideStep {
        pattern,
        hub_edge,
        parent,
    }))
}

fn require_member(inst: &Instance, t_prime: &EdgeSubset, i: usize) -> Result<()> {
    inst.check_level(i, 1)?;
    if !inst.level_context(i)?.is_minimal_transversal(t_prime) {
        return domain(format!("{t_prime} is not a minimal transversal of level {i}"));
    }
    Ok(())
}

fn require_step(inst: &Instance, t_prime: &EdgeSubset, i: usize) -> Result<SlideStep> {
    require_member(inst, t_prime, i)?;
    slide_step(inst, i, t_prime)?
        .ok_or_else(|| Error::Domain(format!("{t_prime} is not an H-child at level {i}")))
}

/// The lexicographically least H-pattern of the skip parent hit by the new
/// edges of `t_prime`, oriented so that `edge_zl_vl` is new.
pub fn minimum_h_pattern(inst: &Instance, t_prime: &EdgeSubset, i: usize) -> Result<HPattern> {
    Ok(require_step(inst, t_prime, i)?.pattern)
}

/// `t_prime ∪ {v_j z_j} ∖ {u z_j, v_l v_j}` for the minimum hit pattern.
pub fn slide_parent(inst: &Instance, t_prime: &EdgeSubset, i: usize) -> Result<EdgeSubset> {
    Ok(require_step(inst, t_prime, i)?.parent)
}

/// Stream state for the slide children of one member of tr(E_i).
///
/// A slide child swaps one edge `r = v z` of the parent, with `z` adjacent to
/// an endpoint of `b_i`, for a new edge at `z` and a new edge at `v`.
#[derive(Clone, Debug)]
pub struct SlideChildren {
    level: usize,
    parent: EdgeSubset,
    moves: Vec<(VertexId, EdgeId, EdgeId, EdgeId)>,
    next: usize,
}

impl SlideChildren {
    pub fn new(inst: &Instance, parent: EdgeSubset, i: usize) -> Self {
        let g = inst.graph();
        let d = inst.decomposition();
        let b = d.matched(i);
        let mut hubs: Vec<VertexId> = g
            .neighbors(b.x)
            .chain(g.neighbors(b.y))
            .filter(|&z| z != b.x && z != b.y && d.in_level_vertices(z, i - 1))
            .collect();
        hubs.sort_unstable();
        hubs.dedup();
        let mut moves = Vec::new();
        for z in hubs {
            for &r in g.incident(z).iter().filter(|&&r| parent.contains(r)) {
                let v = g.other_endpoint(r, z).expect("incident edge");
                for &a1 in g.incident(z).iter().filter(|&&e| !parent.contains(e)) {
                    for &a2 in g.incident(v).iter().filter(|&&e| !parent.contains(e)) {
                        moves.push((z, r, a1, a2));
                    }
                }
            }
        }
        Self {
            level: i,
            parent,
            moves,
            next: 0,
        }
    }

    pub fn parent(&self) -> &EdgeSubset {
        &self.parent
    }

    pub fn advance(&mut self, inst: &Instance) -> Result<Option<EdgeSubset>> {
        let g = inst.graph();
        let j = inst.decomposition().level_boundary(self.level);
        while let Some(&(z, r, a1, a2)) = self.moves.get(self.next) {
            self.next += 1;
            let mut c = self.parent.without(r);
            c.insert(a1);
            c.insert(a2);
            let mut suspects = g.two_step(a1).union(g.two_step(a2));
            suspects.intersect_with(&c);
            if !inst.minimal_near(j, &c, g.nbhd(r), &suspects) {
                continue;
            }
            let Some(step) = slide_step(inst, self.level, &c)? else {
                continue;
            };
            if step.pattern.z_j == z
                && step.hub_edge == a1
                && step.pattern.edge_vl_vj == a2
                && step.parent == self.parent
            {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }
}

pub fn enumerate_slide_children<'a>(
    inst: &'a Instance,
    t2: &EdgeSubset,
    i: usize,
) -> Result<impl Iterator<Item = Result<EdgeSubset>> + 'a> {
    require_member(inst, t2, i)?;
    let mut state = SlideChildren::new(inst, t2.clone(), i);
    Ok(std::iter::from_fn(move || state.advance(inst).transpose()))
}
