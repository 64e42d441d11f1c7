use itertools::{Itertools, MultiProduct};

use crate::error::{domain, Result};
use crate::graph::{EdgeId, VertexId};
use crate::subset::EdgeSubset;
use crate::transversal::{skip_parent_trusted, Instance};

/// Which endpoint of the matched edge `b_i = x_i y_i` a child attaches to.
///
/// For side `X` the attached endpoint is `x_i` and the opposite one is
/// `y_i`; free vertices are neighbors of the opposite endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::X, Side::Y];

    /// `(attached, opposite)` endpoints at level `i`.
    pub fn endpoints(self, inst: &Instance, i: usize) -> (VertexId, VertexId) {
        let b = inst.decomposition().matched(i);
        match self {
            Side::X => (b.x, b.y),
            Side::Y => (b.y, b.x),
        }
    }
}

/// Two free vertices hanging off both ends of a transversal edge that has a
/// non-border private neighbor at each end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HPattern {
    pub z_l: VertexId,
    pub v_l: VertexId,
    pub z_j: VertexId,
    pub v_j: VertexId,
    pub edge_zl_vl: EdgeId,
    pub edge_zj_vj: EdgeId,
    pub edge_vl_vj: EdgeId,
}

impl HPattern {
    pub fn edge_set(&self, universe: usize) -> EdgeSubset {
        EdgeSubset::from_edges(universe, [self.edge_zl_vl, self.edge_zj_vj, self.edge_vl_vj])
    }

    /// The same pattern with the two sides exchanged.
    pub fn flipped(&self) -> Self {
        Self {
            z_l: self.z_j,
            v_l: self.v_j,
            z_j: self.z_l,
            v_j: self.v_l,
            edge_zl_vl: self.edge_zj_vj,
            edge_zj_vj: self.edge_zl_vl,
            edge_vl_vj: self.edge_vl_vj,
        }
    }
}

/// Derived data for extending a base transversal `T` of level `i - 1` on one
/// side, optionally through an anchor edge at the attached endpoint.
///
/// Options at a free vertex `z` are all edges at `z` except the one to the
/// opposite endpoint; an edge from `z` to the attached endpoint is an option
/// only when it ranks after the anchor.
#[derive(Clone, Debug)]
pub struct BorderAnalysis {
    pub level: usize,
    pub side: Side,
    pub base: EdgeSubset,
    pub anchor: Option<EdgeId>,
    pub free_vertices: Vec<VertexId>,
    pub border_edges: EdgeSubset,
    pub options_by_free: Vec<(VertexId, Vec<EdgeId>)>,
    pub x_set: EdgeSubset,
    pub preceding_set: EdgeSubset,
    pub h_patterns: Vec<HPattern>,
    pub h_set: EdgeSubset,
    /// Some member of `T ∪ {anchor}` has all its E_{i-1} private neighbors in
    /// the border and no private edge to the opposite endpoint at E_i.
    pub redundant_found: bool,
    pub fail_found: bool,
    /// Some member of `T ∪ {anchor}` has all its E_i private neighbors in the
    /// border, so every selection leaves it without one.
    pub dead_member: bool,
    /// Some free vertex has no option outside `X_T ∪ H_T`.
    pub uncovered_free: bool,
    /// Options minus `X_T ∪ H_T`, per free vertex, by increasing edge id.
    pub allowed_by_free: Vec<(VertexId, Vec<EdgeId>)>,
}

impl BorderAnalysis {
    /// Whether no selection can yield a child.
    pub fn is_pruned(&self) -> bool {
        self.dead_member || self.uncovered_free
    }

    /// `T ∪ {anchor}`.
    pub fn extended_base(&self) -> EdgeSubset {
        let mut s = self.base.clone();
        if let Some(a) = self.anchor {
            s.insert(a);
        }
        s
    }
}

/// One chosen edge per free vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub chosen: Vec<(VertexId, EdgeId)>,
}

impl Selection {
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.chosen.iter().map(|&(_, e)| e)
    }
}

pub fn analyze(
    inst: &Instance,
    t: &EdgeSubset,
    i: usize,
    side: Side,
    anchor: Option<EdgeId>,
) -> Result<BorderAnalysis> {
    inst.check_level(i, 1)?;
    if !inst.level_context(i - 1)?.is_minimal_transversal(t) {
        return domain(format!("{t} is not a minimal transversal of level {}", i - 1));
    }
    let (s, _) = side.endpoints(inst, i);
    if let Some(a) = anchor {
        let b = inst.decomposition().matched(i).edge;
        if a == b || a >= inst.edge_count() || !inst.graph().has_endpoint(a, s) {
            return domain(format!("anchor {a} is not an edge at vertex {s} other than {b}"));
        }
    }
    Ok(analyze_trusted(inst, t, i, side, anchor))
}

pub(crate) fn analyze_trusted(
    inst: &Instance,
    t: &EdgeSubset,
    i: usize,
    side: Side,
    anchor: Option<EdgeId>,
) -> BorderAnalysis {
    let g = inst.graph();
    let d = inst.decomposition();
    let m = g.edge_count();
    let (s, o) = side.endpoints(inst, i);
    let prev = d.level_boundary(i - 1);
    let cur = d.level_boundary(i);
    let block = inst.block(i);

    let mut ta = t.clone();
    if let Some(a) = anchor {
        ta.insert(a);
    }

    let mut free_vertices: Vec<VertexId> = g
        .neighbors(o)
        .filter(|&z| z != s && d.in_level_vertices(z, i) && !g.touches(&ta, z))
        .collect();
    free_vertices.sort_unstable();

    let mut border_edges = EdgeSubset::new(m);
    let mut options_by_free = Vec::with_capacity(free_vertices.len());
    for &z in &free_vertices {
        let mut options = Vec::new();
        for &e in g.incident(z) {
            if !block.contains(e) {
                border_edges.insert(e);
            }
            let w = g.other_endpoint(e, z).expect("incident edge");
            let before_anchor = anchor.is_some_and(|a| d.rank(e) < d.rank(a));
            if w != o && !(w == s && before_anchor) {
                options.push(e);
            }
        }
        options_by_free.push((z, options));
    }

    let mut near = EdgeSubset::new(m);
    for e in &border_edges {
        near.union_with(g.nbhd(e));
    }
    if let Some(a) = anchor {
        near.union_with(g.two_step(a));
    }
    let mut local = ta.intersection(&near);
    if let Some(a) = anchor {
        local.insert(a);
    }
    let opposite_edge = |z: VertexId| g.edge_between(o, z);

    let mut dead_member = false;
    let mut redundant_found = false;
    for e in &local {
        let at_level = inst.private_set(cur, e, &ta);
        dead_member |= at_level.is_subset(&border_edges);
        let below = inst.private_set(prev, e, &ta);
        let owns_opposite = at_level.iter().any(|f| g.has_endpoint(f, o));
        redundant_found |= below.is_subset(&border_edges) && !owns_opposite;
    }

    let mut fail_found = false;
    for e in t.intersection(&local).iter() {
        let (a, b) = g.endpoints(e);
        for zh in [a, b] {
            let Some(ozh) = opposite_edge(zh) else { continue };
            if !inst.prefix(cur).contains(ozh) {
                continue;
            }
            let below = inst.private_set(prev, e, &ta);
            if !below.is_subset(&border_edges) || !inst.private_set(cur, e, &ta).contains(ozh) {
                continue;
            }
            let later = below.iter().any(|f| {
                let (p, q) = g.endpoints(f);
                [p, q].into_iter().any(|zl| {
                    free_vertices.binary_search(&zl).is_ok()
                        && opposite_edge(zl).is_some_and(|ozl| d.rank(ozl) > d.rank(ozh))
                })
            });
            fail_found |= !later;
        }
    }

    let mut x_set = EdgeSubset::new(m);
    for (_, options) in &options_by_free {
        for &e in options {
            let with = ta.with(e);
            let mut members = local.union(&g.two_step(e).intersection(&ta));
            members.remove(e);
            if members
                .iter()
                .any(|mm| inst.private_set(cur, mm, &with).is_subset(&border_edges))
            {
                x_set.insert(e);
            }
        }
    }

    let mut preceding_set = EdgeSubset::new(m);
    for (z, options) in &options_by_free {
        let oz = opposite_edge(*z).expect("free vertices neighbor the opposite endpoint");
        for &e2 in options.iter().filter(|&&e2| !block.contains(e2)) {
            let v = g.other_endpoint(e2, *z).expect("option is incident");
            for &e in g.incident(v).iter().filter(|&&e| t.contains(e)) {
                let zh = g.other_endpoint(e, v).expect("incident edge");
                let Some(ozh) = opposite_edge(zh) else { continue };
                if d.rank(oz) < d.rank(ozh)
                    && inst.private_set(prev, e, &ta).is_subset(g.nbhd(e2))
                {
                    preceding_set.insert(e2);
                }
            }
        }
    }

    let mut h_patterns = Vec::new();
    let mut h_set = EdgeSubset::new(m);
    for e in t.intersection(&near).iter() {
        let (u, v) = g.endpoints(e);
        let mut spare = inst.private_set(prev, e, &ta);
        spare.difference_with(t);
        spare.difference_with(&border_edges);
        let at_u = spare.iter().any(|f| g.has_endpoint(f, u) && !g.has_endpoint(f, v));
        let at_v = spare.iter().any(|f| g.has_endpoint(f, v) && !g.has_endpoint(f, u));
        if !(at_u && at_v) {
            continue;
        }
        let hanging = |x: VertexId| -> Vec<(EdgeId, VertexId)> {
            g.incident(x)
                .iter()
                .filter(|&&f| border_edges.contains(f))
                .filter_map(|&f| {
                    let z = g.other_endpoint(f, x)?;
                    free_vertices.binary_search(&z).is_ok().then_some((f, z))
                })
                .collect()
        };
        for (e1, z1) in hanging(u) {
            for (e2, z2) in hanging(v) {
                if z1 == z2 {
                    continue;
                }
                h_patterns.push(HPattern {
                    z_l: z1,
                    v_l: u,
                    z_j: z2,
                    v_j: v,
                    edge_zl_vl: e1,
                    edge_zj_vj: e2,
                    edge_vl_vj: e,
                });
                h_set.insert(e1);
                h_set.insert(e2);
            }
        }
    }

    let excluded = x_set.union(&h_set);
    let allowed_by_free: Vec<(VertexId, Vec<EdgeId>)> = options_by_free
        .iter()
        .map(|(z, options)| {
            (*z, options.iter().copied().filter(|&e| !excluded.contains(e)).collect())
        })
        .collect();
    let uncovered_free = allowed_by_free.iter().any(|(_, list)| list.is_empty());

    BorderAnalysis {
        level: i,
        side,
        base: t.clone(),
        anchor,
        free_vertices,
        border_edges,
        options_by_free,
        x_set,
        preceding_set,
        h_patterns,
        h_set,
        redundant_found,
        fail_found,
        dead_member,
        uncovered_free,
        allowed_by_free,
    }
}

/// Every way of choosing one allowed edge per free vertex, in lexicographic
/// order of (free vertex, edge id).
pub struct Selections {
    free: Vec<VertexId>,
    product: MultiProduct<std::vec::IntoIter<EdgeId>>,
    empty_pending: bool,
}

impl Iterator for Selections {
    type Item = Selection;

    fn next(&mut self) -> Option<Selection> {
        if self.free.is_empty() {
            return std::mem::take(&mut self.empty_pending).then(|| Selection { chosen: Vec::new() });
        }
        let edges = self.product.next()?;
        Some(Selection {
            chosen: self.free.iter().copied().zip(edges).collect(),
        })
    }
}

pub fn enumerate_selections(a: &BorderAnalysis) -> Result<Selections> {
    if a.is_pruned() {
        return domain("the analysis admits no selection");
    }
    Ok(selections_of(a))
}

fn selections_of(a: &BorderAnalysis) -> Selections {
    Selections {
        free: a.allowed_by_free.iter().map(|(z, _)| *z).collect(),
        product: a
            .allowed_by_free
            .iter()
            .map(|(_, list)| list.clone().into_iter())
            .multi_cartesian_product(),
        empty_pending: true,
    }
}

/// Whether `added` is `{b_i}` or consists of at most one edge at `x_i` and at
/// most one edge at `y_i`, none of them `b_i`.
pub fn is_non_extra(inst: &Instance, i: usize, added: &EdgeSubset) -> bool {
    let g = inst.graph();
    let b = inst.decomposition().matched(i);
    if added.contains(b.edge) {
        return added.len() == 1;
    }
    let (mut at_x, mut at_y) = (0, 0);
    for e in added {
        if g.has_endpoint(e, b.x) {
            at_x += 1;
        } else if g.has_endpoint(e, b.y) {
            at_y += 1;
        } else {
            return false;
        }
    }
    at_x <= 1 && at_y <= 1
}

/// Whether `c ⊇ base` is minimal at E_i and its skip parent is `base`.
pub(crate) fn is_child_of(inst: &Instance, i: usize, base: &EdgeSubset, c: &EdgeSubset) -> Result<bool> {
    Ok(inst.extends_minimally(i, base, c) && skip_parent_trusted(inst, i, c)? == *base)
}

/// Stream state for children that add `b_i` alone or at most one edge on
/// each side of it.
#[derive(Clone, Debug)]
pub struct NonExtraChildren {
    level: usize,
    candidates: Vec<Vec<EdgeId>>,
    next: usize,
}

impl NonExtraChildren {
    pub fn new(inst: &Instance, base: &EdgeSubset, i: usize) -> Self {
        let g = inst.graph();
        let d = inst.decomposition();
        let b = d.matched(i);
        let fresh = |v: VertexId| -> Vec<EdgeId> {
            g.incident(v)
                .iter()
                .copied()
                .filter(|&e| e != b.edge && !base.contains(e))
                .collect()
        };
        let (xs, ys) = (fresh(b.x), fresh(b.y));
        let mut candidates: Vec<Vec<EdgeId>> = Vec::new();
        if !base.contains(b.edge) {
            candidates.push(vec![b.edge]);
        }
        candidates.extend(xs.iter().chain(&ys).map(|&e| vec![e]));
        for &a in &xs {
            for &c in &ys {
                candidates.push(vec![a, c]);
            }
        }
        for c in &mut candidates {
            c.sort_by_key(|&e| d.rank(e));
        }
        candidates.sort_by(|p, q| {
            p.iter().map(|&e| d.rank(e)).cmp(q.iter().map(|&e| d.rank(e)))
        });
        candidates.insert(0, Vec::new());
        Self {
            level: i,
            candidates,
            next: 0,
        }
    }

    pub fn advance(&mut self, inst: &Instance, base: &EdgeSubset) -> Result<Option<EdgeSubset>> {
        while let Some(add) = self.candidates.get(self.next) {
            self.next += 1;
            let mut c = base.clone();
            for &e in add {
                c.insert(e);
            }
            if is_child_of(inst, self.level, base, &c)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }
}

struct ActivePlan {
    extended: EdgeSubset,
    selections: Selections,
}

/// Stream state for children that are not of the non-extra shape and avoid
/// the H-pattern edges of their (side, anchor) analysis.
///
/// Plans run side X before side Y. A side is skipped when the base touches
/// its opposite endpoint. When the base does not touch the attached endpoint,
/// each other edge at it is tried as anchor in rank order; the anchor is the
/// lowest-ranked new edge at the attached endpoint, so no child is produced
/// twice.
pub struct ExtraChildren {
    level: usize,
    plans: Vec<(Side, Option<EdgeId>)>,
    next_plan: usize,
    active: Option<ActivePlan>,
}

impl ExtraChildren {
    pub fn new(inst: &Instance, base: &EdgeSubset, i: usize) -> Self {
        let g = inst.graph();
        let d = inst.decomposition();
        let b = d.matched(i).edge;
        let mut plans = Vec::new();
        for side in Side::BOTH {
            let (s, o) = side.endpoints(inst, i);
            if g.touches(base, o) {
                continue;
            }
            if g.touches(base, s) {
                plans.push((side, None));
            } else {
                let mut anchors: Vec<EdgeId> =
                    g.incident(s).iter().copied().filter(|&e| e != b).collect();
                anchors.sort_by_key(|&e| d.rank(e));
                plans.extend(anchors.into_iter().map(|a| (side, Some(a))));
            }
        }
        Self {
            level: i,
            plans,
            next_plan: 0,
            active: None,
        }
    }

    /// Edge subsets held beyond the base.
    pub fn retained_sets(&self) -> usize {
        usize::from(self.active.is_some())
    }

    pub fn advance(&mut self, inst: &Instance, base: &EdgeSubset) -> Result<Option<EdgeSubset>> {
        loop {
            if let Some(active) = &mut self.active {
                for sel in active.selections.by_ref() {
                    let mut c = active.extended.clone();
                    for e in sel.edges() {
                        c.insert(e);
                    }
                    if is_non_extra(inst, self.level, &c.difference(base)) {
                        continue;
                    }
                    if is_child_of(inst, self.level, base, &c)? {
                        return Ok(Some(c));
                    }
                }
                self.active = None;
            }
            let Some(&(side, anchor)) = self.plans.get(self.next_plan) else {
                return Ok(None);
            };
            self.next_plan += 1;
            let analysis = analyze_trusted(inst, base, self.level, side, anchor);
            if analysis.is_pruned() {
                continue;
            }
            self.active = Some(ActivePlan {
                extended: analysis.extended_base(),
                selections: selections_of(&analysis),
            });
        }
    }
}

fn check_base(inst: &Instance, t: &EdgeSubset, i: usize) -> Result<()> {
    inst.check_level(i, 1)?;
    if !inst.level_context(i - 1)?.is_minimal_transversal(t) {
        return domain(format!("{t} is not a minimal transversal of level {}", i - 1));
    }
    Ok(())
}

pub fn enumerate_nonextra_children<'a>(
    inst: &'a Instance,
    t: &'a EdgeSubset,
    i: usize,
) -> Result<impl Iterator<Item = Result<EdgeSubset>> + 'a> {
    check_base(inst, t, i)?;
    let mut state = NonExtraChildren::new(inst, t, i);
    Ok(std::iter::from_fn(move || state.advance(inst, t).transpose()))
}

pub fn enumerate_extra_non_h_children<'a>(
    inst: &'a Instance,
    t: &'a EdgeSubset,
    i: usize,
) -> Result<impl Iterator<Item = Result<EdgeSubset>> + 'a> {
    check_base(inst, t, i)?;
    let mut state = ExtraChildren::new(inst, t, i);
    Ok(std::iter::from_fn(move || state.advance(inst, t).transpose()))
}
