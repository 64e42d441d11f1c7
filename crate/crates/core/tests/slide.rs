use mineds::oracle::{brute_force_tr, fixtures, random_graph};
use mineds::slide::{enumerate_slide_children, lex_less, minimum_h_pattern, slide_parent};
use mineds::{EdgeSubset, Error, Graph, Instance, MatchingDecomposition, Result};
use proptest::prelude::*;

fn collect(stream: impl Iterator<Item = Result<EdgeSubset>>) -> Vec<EdgeSubset> {
    stream.collect::<Result<_>>().unwrap()
}

#[test]
fn lexicographic_comparison() {
    let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let d = MatchingDecomposition::build(&star).unwrap();
    assert_eq!(d.order(), &[0, 1, 2]);
    let s = |e: &[usize]| EdgeSubset::from_edges(3, e.iter().copied());
    assert!(lex_less(&d, &s(&[0, 2]), &s(&[1, 2])).unwrap());
    assert!(!lex_less(&d, &s(&[1]), &s(&[0, 1])).unwrap());
    assert!(lex_less(&d, &s(&[0, 1]), &s(&[0, 2])).unwrap());
    assert!(matches!(lex_less(&d, &s(&[1]), &s(&[1])), Err(Error::Usage(_))));
}

#[test]
fn h_child_slides_to_its_parent() {
    let h = fixtures::h_pattern();
    let inst = Instance::new(h.graph.clone());
    let child = h.base.union(&h.set(&[("x", "w"), ("zl", "vl"), ("zj", "u")]));
    assert!(inst.level_context(h.level).unwrap().is_minimal_transversal(&child));

    let p = minimum_h_pattern(&inst, &child, h.level).unwrap();
    assert_eq!(p.edge_zl_vl, h.edge("zl", "vl"));
    assert_eq!(p.edge_zj_vj, h.edge("zj", "vj"));
    assert_eq!(p.edge_vl_vj, h.edge("vl", "vj"));

    let parent = slide_parent(&inst, &child, h.level).unwrap();
    assert_eq!(parent, h.set(&[("u", "u2"), ("x", "w"), ("zl", "vl"), ("zj", "vj")]));
    assert_eq!(parent.len() + 1, child.len());
    assert!(inst.level_context(h.level).unwrap().is_minimal_transversal(&parent));

    let children = collect(enumerate_slide_children(&inst, &parent, h.level).unwrap());
    assert_eq!(children, vec![child]);
}

#[test]
fn minimum_of_two_hit_patterns() {
    let h = fixtures::double_h_pattern();
    let inst = Instance::new(h.graph.clone());
    let d = inst.decomposition();
    let child = h.base.union(&h.set(&[("x", "w"), ("zl", "vl"), ("zj", "u"), ("zm", "u")]));
    assert!(inst.level_context(h.level).unwrap().is_minimal_transversal(&child));
    let via_j = h.set(&[("zl", "vl"), ("zj", "vj"), ("vl", "vj")]);
    let via_m = h.set(&[("zl", "vl"), ("zm", "vj"), ("vl", "vj")]);
    assert!(lex_less(d, &via_j, &via_m).unwrap());
    let p = minimum_h_pattern(&inst, &child, h.level).unwrap();
    assert_eq!((p.z_l, p.z_j), (h.vertex("zl"), h.vertex("zj")));
    let parent = slide_parent(&inst, &child, h.level).unwrap();
    assert_eq!(parent, h.set(&[("u", "u2"), ("x", "w"), ("zl", "vl"), ("zj", "vj"), ("zm", "u")]));
}

#[test]
fn non_h_children_are_rejected() {
    let p4 = fixtures::path4();
    let inst = Instance::new(p4.graph.clone());
    let pair = p4.set(&[("a", "b"), ("c", "d")]);
    assert!(matches!(minimum_h_pattern(&inst, &pair, 2), Err(Error::Domain(_))));
    assert!(matches!(slide_parent(&inst, &pair, 2), Err(Error::Domain(_))));
    assert!(matches!(slide_parent(&inst, &p4.set(&[("a", "b")]), 2), Err(Error::Domain(_))));
}

#[test]
fn small_graphs_have_no_slide_children() {
    let p4 = fixtures::path4();
    let inst = Instance::new(p4.graph.clone());
    for t in [p4.set(&[("b", "c")]), p4.set(&[("a", "b"), ("c", "d")])] {
        assert!(collect(enumerate_slide_children(&inst, &t, 2).unwrap()).is_empty());
    }
    let k3 = fixtures::triangle();
    let inst = Instance::new(k3.graph.clone());
    for e in 0..3 {
        let t = EdgeSubset::from_edges(3, [e]);
        assert!(collect(enumerate_slide_children(&inst, &t, 1).unwrap()).is_empty());
    }
    assert!(enumerate_slide_children(&inst, &EdgeSubset::new(3), 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn slide_chains_are_consistent(n in 6usize..10, extra in 0usize..8, seed in any::<u64>()) {
        let m = (n + extra).min(16);
        let g = random_graph(n, m, seed).unwrap();
        let inst = Instance::new(g.clone());
        let d = inst.decomposition();
        for i in 1..=inst.levels() {
            for c in brute_force_tr(&g, d, d.level_boundary(i)).unwrap() {
                let Ok(parent) = slide_parent(&inst, &c, i) else { continue };
                prop_assert_eq!(parent.len() + 1, c.len());
                let children = collect(enumerate_slide_children(&inst, &parent, i).unwrap());
                prop_assert!(children.contains(&c));
                let mut cur = parent;
                while let Ok(next) = slide_parent(&inst, &cur, i) {
                    prop_assert!(next.len() < cur.len());
                    cur = next;
                }
                prop_assert!(inst.level_context(i).unwrap().is_minimal_transversal(&cur));
            }
        }
    }
}
