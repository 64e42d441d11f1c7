//! Exhaustive ground truth, fixtures, and random instances.
//!
//! The searches here share no code with the enumerator beyond the graph and
//! decomposition types; neighborhoods, private neighbors and parents are
//! recomputed on plain `u64` masks.

mod cnf;
pub mod fixtures;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use cnf::{imt_selection_exists, is_satisfiable, random_3cnf, sat_to_imt, CnfFormula, ImtInstance};

use crate::decomposition::MatchingDecomposition;
use crate::error::{usage, Error, Result};
use crate::graph::Graph;
use crate::subset::EdgeSubset;

pub const MAX_EDGES_MIN_EDS: usize = 24;
pub const MAX_EDGES_TR: usize = 20;

struct Masks {
    m: usize,
    nbhd: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        let m = g.edge_count();
        let nbhd = (0..m)
            .map(|e| {
                let (a, b) = g.endpoints(e);
                (0..m)
                    .filter(|&f| {
                        let (c, d) = g.endpoints(f);
                        a == c || a == d || b == c || b == d
                    })
                    .fold(0u64, |acc, f| acc | 1 << f)
            })
            .collect();
        Self { m, nbhd }
    }

    fn private(&self, e: usize, set: u64, hyper: u64) -> u64 {
        let others = set & !(1 << e);
        let mut out = 0;
        let mut cand = self.nbhd[e] & hyper;
        while cand != 0 {
            let f = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.nbhd[f] & others == 0 {
                out |= 1 << f;
            }
        }
        out
    }

    fn irredundant(&self, set: u64, hyper: u64) -> bool {
        bits(set).all(|e| self.private(e, set, hyper) != 0)
    }

    fn dominates(&self, set: u64, hyper: u64) -> bool {
        bits(hyper).all(|f| self.nbhd[f] & set != 0)
    }

    fn is_minimal(&self, set: u64, hyper: u64) -> bool {
        self.dominates(set, hyper) && self.irredundant(set, hyper)
    }

    /// All minimal transversals of the hyperedges `{N[f] : f ∈ hyper}`.
    ///
    /// Irredundance is inherited by subsets, so a depth-first search over
    /// edges in id order can cut every branch that loses it.
    fn minimal_transversals(&self, hyper: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u64)];
        while let Some((next, set)) = stack.pop() {
            if self.dominates(set, hyper) {
                out.push(set);
                continue;
            }
            for e in next..self.m {
                let grown = set | 1 << e;
                if self.irredundant(grown, hyper) {
                    stack.push((e + 1, grown));
                }
            }
        }
        out
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            b
        })
    })
}

fn to_subsets(m: usize, masks: Vec<u64>) -> Vec<EdgeSubset> {
    let mut out: Vec<EdgeSubset> = masks.into_iter().map(|s| EdgeSubset::from_edges(m, bits(s))).collect();
    out.sort();
    out
}

fn prefix_mask(d: &MatchingDecomposition, j: usize) -> u64 {
    d.order()[..j].iter().fold(0, |acc, &e| acc | 1 << e)
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.edge_count() > limit {
        return Err(Error::Refused(format!(
            "exhaustive search over {} edges exceeds the limit of {limit}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// All minimal edge dominating sets, sorted.
pub fn brute_force_min_eds(g: &Graph) -> Result<Vec<EdgeSubset>> {
    guard(g, MAX_EDGES_MIN_EDS)?;
    let masks = Masks::new(g);
    let all = (1u64 << g.edge_count()) - 1;
    Ok(to_subsets(g.edge_count(), masks.minimal_transversals(all)))
}

/// All minimal transversals of the first `j` edges in rank order, sorted.
pub fn brute_force_tr(g: &Graph, d: &MatchingDecomposition, j: usize) -> Result<Vec<EdgeSubset>> {
    guard(g, MAX_EDGES_TR)?;
    if j > g.edge_count() {
        return usage(format!("prefix length {j} exceeds edge count {}", g.edge_count()));
    }
    let masks = Masks::new(g);
    Ok(to_subsets(g.edge_count(), masks.minimal_transversals(prefix_mask(d, j))))
}

/// The skip parent computed straight from the definition of the Berge parent.
pub fn reference_skip_parent(g: &Graph, d: &MatchingDecomposition, i: usize, t: &EdgeSubset) -> Result<EdgeSubset> {
    guard(g, 63)?;
    let masks = Masks::new(g);
    let mut set = t.iter().fold(0u64, |acc, e| acc | 1 << e);
    for j in (d.level_boundary(i - 1) + 1..=d.level_boundary(i)).rev() {
        let shorter = prefix_mask(d, j - 1);
        if masks.is_minimal(set, shorter) {
            continue;
        }
        let last = 1u64 << d.edge_at(j - 1);
        let full = prefix_mask(d, j);
        let owners: Vec<usize> = bits(set).filter(|&v| masks.private(v, set, full) == last).collect();
        match owners[..] {
            [v] => set &= !(1 << v),
            _ => {
                return Err(Error::Domain(format!(
                    "{t} has {} members owning only the last edge of prefix {j}",
                    owners.len()
                )))
            }
        }
    }
    Ok(EdgeSubset::from_edges(g.edge_count(), bits(set)))
}

/// All members of tr(E_i) whose skip parent is `t`, sorted.
pub fn brute_force_children(g: &Graph, d: &MatchingDecomposition, t: &EdgeSubset, i: usize) -> Result<Vec<EdgeSubset>> {
    if i == 0 || i > d.levels() {
        return usage(format!("level {i} outside 1..={}", d.levels()));
    }
    let level = brute_force_tr(g, d, d.level_boundary(i))?;
    let mut out = Vec::new();
    for c in level {
        if reference_skip_parent(g, d, i, &c)? == *t {
            out.push(c);
        }
    }
    Ok(out)
}

/// A uniformly random simple graph on `n` vertices with `m` edges.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if m > pairs.len() {
        return usage(format!("{m} edges do not fit on {n} vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = sample(&mut rng, pairs.len(), m);
    Graph::new(n, picked.into_iter().map(|k| pairs[k]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_triangle() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let got: Vec<Vec<usize>> = brute_force_min_eds(&p4).unwrap().iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1]]);
        let k3 = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(brute_force_min_eds(&k3).unwrap().len(), 3);
    }

    #[test]
    fn empty_prefix_has_only_the_empty_transversal() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = MatchingDecomposition::build(&p4).unwrap();
        let tr = brute_force_tr(&p4, &d, 0).unwrap();
        assert_eq!(tr, vec![EdgeSubset::new(3)]);
    }

    #[test]
    fn random_graph_bounds() {
        assert!(random_graph(3, 4, 0).is_err());
        assert_eq!(random_graph(5, 10, 9).unwrap().edge_count(), 10);
    }
}
