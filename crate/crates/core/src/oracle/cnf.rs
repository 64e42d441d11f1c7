use std::collections::HashSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{usage, Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::subset::EdgeSubset;

/// A CNF formula with exactly three literals per clause. Literals are signed
/// 1-based variable indices; a literal may repeat inside a clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for clause in &clauses {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return usage(format!("literal {lit} outside 1..={num_vars}"));
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// Reads DIMACS CNF text.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut pending: Vec<i32> = Vec::new();
        let mut pending_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let parsed = match parts[..] {
                    ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                    _ => None,
                };
                let Some(h) = parsed else {
                    return parse_err(line_no, "expected `p cnf <vars> <clauses>`");
                };
                if header.replace(h).is_some() {
                    return parse_err(line_no, "duplicate problem line");
                }
                continue;
            }
            let Some((vars, _)) = header else {
                return parse_err(line_no, "clause before the problem line");
            };
            for tok in line.split_whitespace() {
                let Ok(lit) = tok.parse::<i32>() else {
                    return parse_err(line_no, format!("bad literal `{tok}`"));
                };
                if pending.is_empty() {
                    pending_line = line_no;
                }
                if lit == 0 {
                    let Ok(clause) = <[i32; 3]>::try_from(&pending[..]) else {
                        return parse_err(
                            pending_line,
                            format!("clause has {} literals, expected 3", pending.len()),
                        );
                    };
                    clauses.push(clause);
                    pending.clear();
                } else if lit.unsigned_abs() as usize > vars {
                    return parse_err(line_no, format!("variable {} exceeds declared {vars}", lit.abs()));
                } else {
                    pending.push(lit);
                }
            }
        }
        if !pending.is_empty() {
            return parse_err(pending_line, "clause is not terminated by 0");
        }
        let Some((vars, count)) = header else {
            return parse_err(1, "missing `p cnf` problem line");
        };
        if count != clauses.len() {
            return parse_err(1, format!("declared {count} clauses, found {}", clauses.len()));
        }
        Ok(Self {
            num_vars: vars,
            clauses,
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for [a, b, c] in &self.clauses {
            let _ = writeln!(out, "{a} {b} {c} 0");
        }
        out
    }

    pub fn evaluate(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment >> (lit.unsigned_abs() - 1) & 1 == 1;
                value == (lit > 0)
            })
        })
    }
}

/// Decides satisfiability by trying every assignment.
pub fn is_satisfiable(f: &CnfFormula) -> Result<bool> {
    if f.num_vars > 24 {
        return Err(Error::Refused(format!("{} variables exceed the limit of 24", f.num_vars)));
    }
    Ok((0..1u64 << f.num_vars).any(|a| f.evaluate(a)))
}

pub fn random_3cnf(num_vars: usize, num_clauses: usize, seed: u64) -> Result<CnfFormula> {
    if num_vars == 0 {
        return usage("a formula needs at least one variable");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            std::array::from_fn(|_| {
                let v = rng.gen_range(1..=num_vars as i32);
                if rng.gen_bool(0.5) { v } else { -v }
            })
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}

/// The graph built from a formula together with the level, base set and
/// anchor at which selections encode assignments.
///
/// Clause vertices are the free vertices. Each one must be covered through an
/// edge to a literal vertex; a literal vertex may be used only if the
/// pendant edge at its complement stays privately dominated.
#[derive(Clone, Debug)]
pub struct ImtInstance {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub level: usize,
    /// The edges `x_j x̄_j`.
    pub base_transversal: EdgeSubset,
    /// The edge `x w`, added on the `x` side of the matched edge.
    pub anchor: EdgeId,
    pub matched_edge: EdgeId,
    pub x: VertexId,
    pub y: VertexId,
    pub clause_vertices: Vec<VertexId>,
}

pub fn sat_to_imt(f: &CnfFormula) -> Result<ImtInstance> {
    let n = f.num_vars;
    let (x, y, w) = (0, 1, 2);
    let lit = |j: usize, positive: bool| 3 + 4 * (j - 1) + usize::from(!positive);
    let pendant_pos = |j: usize| 3 + 4 * (j - 1) + 2;
    let pendant_neg = |j: usize| 3 + 4 * (j - 1) + 3;
    let clause_vertex = |h: usize| 3 + 4 * n + h;

    let mut labels = vec!["x".to_string(), "y".to_string(), "w".to_string()];
    for j in 1..=n {
        labels.extend([format!("x{j}"), format!("nx{j}"), format!("z{j}"), format!("y{j}")]);
    }
    labels.extend((1..=f.clauses.len()).map(|h| format!("C{h}")));

    let mut edges = Vec::new();
    edges.extend((1..=n).map(|j| (lit(j, true), lit(j, false))));
    edges.extend((1..=n).map(|j| (lit(j, true), pendant_pos(j))));
    edges.extend((1..=n).map(|j| (lit(j, false), pendant_neg(j))));
    for (h, clause) in f.clauses.iter().enumerate() {
        for &l in clause {
            let j = l.unsigned_abs() as usize;
            if j == 0 || j > n {
                return usage(format!("literal {l} outside 1..={n}"));
            }
            let e = (lit(j, l > 0), clause_vertex(h));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    let matched_edge = edges.len();
    edges.push((x, y));
    let anchor = edges.len();
    edges.push((x, w));
    edges.extend((0..f.clauses.len()).map(|h| (y, clause_vertex(h))));

    let graph = Graph::new(labels.len(), edges)?;
    let base_transversal = EdgeSubset::from_edges(graph.edge_count(), 0..n);
    Ok(ImtInstance {
        graph,
        labels,
        level: n + 1,
        base_transversal,
        anchor,
        matched_edge,
        x,
        y,
        clause_vertices: (0..f.clauses.len()).map(clause_vertex).collect(),
    })
}

/// Whether `set` dominates every edge, and whether every member keeps a
/// private neighbor.
fn domination_profile(g: &Graph, set: &EdgeSubset) -> (bool, bool) {
    let touching = |f: EdgeId| -> Vec<EdgeId> {
        let (a, b) = g.endpoints(f);
        set.iter()
            .filter(|&e| {
                let (c, d) = g.endpoints(e);
                a == c || a == d || b == c || b == d
            })
            .collect()
    };
    let mut dominating = true;
    let mut owned = EdgeSubset::new(g.edge_count());
    for f in 0..g.edge_count() {
        match touching(f)[..] {
            [] => dominating = false,
            [only] => {
                owned.insert(only);
            }
            _ => {}
        }
    }
    (dominating, set.is_subset(&owned))
}

/// Whether one literal edge per clause vertex completes the base set and the
/// anchor to a minimal edge dominating set.
///
/// Partial selections are abandoned once a member loses its last private
/// neighbor, and failed states are remembered by the literal vertices in use.
pub fn imt_selection_exists(imt: &ImtInstance) -> Result<bool> {
    let g = &imt.graph;
    let choices: Vec<Vec<EdgeId>> = imt
        .clause_vertices
        .iter()
        .map(|&c| g.incident(c).iter().copied().filter(|&e| !g.has_endpoint(e, imt.y)).collect())
        .collect();
    let mut start = imt.base_transversal.clone();
    start.insert(imt.anchor);
    let mut failed = HashSet::new();
    Ok(extend(imt, &choices, 0, &start, &mut Vec::new(), &mut failed))
}

fn extend(
    imt: &ImtInstance,
    choices: &[Vec<EdgeId>],
    h: usize,
    set: &EdgeSubset,
    used: &mut Vec<VertexId>,
    failed: &mut HashSet<(usize, Vec<VertexId>)>,
) -> bool {
    let g = &imt.graph;
    if h == choices.len() {
        return domination_profile(g, set) == (true, true);
    }
    if failed.contains(&(h, used.clone())) {
        return false;
    }
    for &e in &choices[h] {
        let next = set.with(e);
        if !domination_profile(g, &next).1 {
            continue;
        }
        let literal = g.other_endpoint(e, imt.clause_vertices[h]).expect("clause edge");
        let fresh = used.binary_search(&literal).map_err(|at| used.insert(at, literal)).is_err();
        let found = extend(imt, choices, h + 1, &next, used, failed);
        if fresh {
            used.retain(|&v| v != literal);
        }
        if found {
            return true;
        }
    }
    failed.insert((h, used.clone()));
    false
}
