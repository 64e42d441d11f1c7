use mineds::oracle::{fixtures, random_graph};
use mineds::{EdgeSubset, Error, Graph, Instance};
use proptest::prelude::*;

fn set(universe: usize, edges: &[usize]) -> EdgeSubset {
    EdgeSubset::from_edges(universe, edges.iter().copied())
}

#[test]
fn closed_neighborhoods() {
    let k3 = fixtures::triangle().graph;
    assert_eq!(k3.closed_edge_neighborhood(0).unwrap(), set(3, &[0, 1, 2]));
    let p4 = fixtures::path4().graph;
    assert_eq!(p4.closed_edge_neighborhood(0).unwrap(), set(3, &[0, 1]));
    assert_eq!(p4.closed_edge_neighborhood(1).unwrap(), set(3, &[0, 1, 2]));
    assert!(matches!(p4.closed_edge_neighborhood(3), Err(Error::Usage(_))));
}

#[test]
fn incident_edge_sets() {
    let p4 = fixtures::path4();
    assert_eq!(p4.graph.incident_edges(p4.vertex("b")).unwrap(), set(3, &[0, 1]));
    assert_eq!(p4.graph.incident_edges(p4.vertex("a")).unwrap(), set(3, &[0]));
    let k3 = fixtures::triangle();
    assert_eq!(k3.graph.incident_edges(k3.vertex("c")).unwrap(), set(3, &[1, 2]));
    assert!(matches!(k3.graph.incident_edges(7), Err(Error::Usage(_))));
}

#[test]
fn domination_on_path() {
    let p4 = fixtures::path4().graph;
    assert!(p4.is_edge_dominating(&set(3, &[1])));
    assert!(!p4.is_edge_dominating(&set(3, &[0])));
    assert!(p4.is_edge_dominating(&set(3, &[0, 2])));
}

#[test]
fn rejects_loops_and_parallel_edges() {
    assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::Domain(_))));
    assert!(matches!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::Domain(_))));
    assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::Domain(_))));
}

#[test]
fn edges_are_normalized_and_keep_input_order() {
    let g = Graph::new(3, [(2, 1), (0, 2)]).unwrap();
    assert_eq!(g.edges(), &[(1, 2), (0, 2)]);
    assert_eq!(g.edge_between(2, 0), Some(1));
    assert_eq!(g.incident(2), &[0, 1]);
}

#[test]
fn isolated_vertices_are_allowed() {
    let g = Graph::new(5, [(0, 1)]).unwrap();
    assert_eq!(g.incident(4), &[] as &[usize]);
    assert!(g.is_edge_dominating(&set(1, &[0])));
}

proptest! {
    #[test]
    fn neighborhoods_are_closed_and_symmetric(n in 2usize..8, density in 0.0f64..1.0, seed in any::<u64>()) {
        let m = ((n * (n - 1) / 2) as f64 * density) as usize;
        let g = random_graph(n, m, seed).unwrap();
        for e in 0..g.edge_count() {
            let ne = g.closed_edge_neighborhood(e).unwrap();
            prop_assert!(ne.contains(e));
            for f in &ne {
                prop_assert!(g.closed_edge_neighborhood(f).unwrap().contains(e));
            }
        }
    }

    #[test]
    fn domination_equals_full_prefix_transversal(n in 2usize..8, density in 0.1f64..1.0, seed in any::<u64>(), bits in any::<u32>()) {
        let m = (((n * (n - 1) / 2) as f64 * density) as usize).max(1);
        let g = random_graph(n, m, seed).unwrap();
        let t = EdgeSubset::from_edges(m, (0..m).filter(|e| bits >> e & 1 == 1));
        let dominating = g.is_edge_dominating(&t);
        let inst = Instance::new(g);
        prop_assert_eq!(dominating, inst.context(m).unwrap().is_transversal(&t));
    }
}
