use mineds::oracle::{brute_force_tr, fixtures, random_graph, reference_skip_parent};
use mineds::{skip_parent, EdgeSubset, Error, Instance};
use proptest::prelude::*;

#[test]
fn private_neighbors_examples() {
    let p4 = fixtures::path4();
    let inst = Instance::new(p4.graph.clone());
    let full = inst.context(3).unwrap();
    let t = p4.set(&[("a", "b"), ("c", "d")]);
    assert_eq!(full.private_neighbors(p4.edge("a", "b"), &t).unwrap(), p4.set(&[("a", "b")]));
    let mid = p4.set(&[("b", "c")]);
    assert_eq!(full.private_neighbors(p4.edge("b", "c"), &mid).unwrap(), EdgeSubset::full(3));
    assert!(matches!(full.private_neighbors(p4.edge("a", "b"), &mid), Err(Error::Usage(_))));

    let k3 = fixtures::triangle();
    let inst = Instance::new(k3.graph.clone());
    let t = k3.set(&[("a", "b"), ("b", "c")]);
    assert!(inst.context(3).unwrap().private_neighbors(k3.edge("a", "b"), &t).unwrap().is_empty());
}

#[test]
fn minimality_examples() {
    let p4 = fixtures::path4();
    let inst = Instance::new(p4.graph.clone());
    assert!(inst.context(3).unwrap().is_minimal_transversal(&p4.set(&[("b", "c")])));
    assert!(!inst.context(3).unwrap().is_minimal_transversal(&p4.set(&[("a", "b"), ("b", "c")])));
    assert!(inst.context(1).unwrap().is_minimal_transversal(&p4.set(&[("b", "c")])));
    assert!(inst.context(4).is_err());
}

#[test]
fn berge_parent_examples() {
    let p4 = fixtures::path4();
    let inst = Instance::new(p4.graph.clone());
    let bc = p4.set(&[("b", "c")]);
    assert_eq!(inst.context(3).unwrap().berge_parent(&bc).unwrap(), bc);
    let pair = p4.set(&[("a", "b"), ("c", "d")]);
    assert_eq!(inst.context(2).unwrap().berge_parent(&pair).unwrap(), p4.set(&[("a", "b")]));
    assert!(matches!(inst.context(0).unwrap().berge_parent(&EdgeSubset::new(3)), Err(Error::Domain(_))));
    assert!(matches!(inst.context(3).unwrap().berge_parent(&p4.set(&[("a", "b")])), Err(Error::Domain(_))));

    let one = fixtures::single_edge();
    let inst = Instance::new(one.graph.clone());
    assert!(inst.context(1).unwrap().berge_parent(&EdgeSubset::full(1)).unwrap().is_empty());
}

#[test]
fn skip_parent_examples() {
    let p4 = fixtures::path4();
    let inst = Instance::new(p4.graph.clone());
    let pair = p4.set(&[("a", "b"), ("c", "d")]);
    assert_eq!(skip_parent(&inst, 2, &pair).unwrap(), p4.set(&[("a", "b")]));
    let bc = p4.set(&[("b", "c")]);
    assert_eq!(skip_parent(&inst, 2, &bc).unwrap(), bc);
    assert!(matches!(skip_parent(&inst, 2, &p4.set(&[("a", "b")])), Err(Error::Domain(_))));

    let k3 = fixtures::triangle();
    let inst = Instance::new(k3.graph.clone());
    assert!(skip_parent(&inst, 1, &k3.set(&[("a", "b")])).unwrap().is_empty());
}

proptest! {
    #[test]
    fn parents_stay_minimal(n in 2usize..7, density in 0.2f64..1.0, seed in any::<u64>()) {
        let m = (((n * (n - 1) / 2) as f64 * density) as usize).max(1);
        let g = random_graph(n, m, seed).unwrap();
        let inst = Instance::new(g.clone());
        let d = inst.decomposition();
        for j in 1..=m {
            let lower = brute_force_tr(&g, d, j - 1).unwrap();
            for t in brute_force_tr(&g, d, j).unwrap() {
                let p = inst.context(j).unwrap().berge_parent(&t).unwrap();
                prop_assert!(p.is_subset(&t) && t.len() - p.len() <= 1);
                prop_assert!(lower.binary_search(&p).is_ok());
            }
        }
        for i in 1..=inst.levels() {
            let lower = brute_force_tr(&g, d, d.level_boundary(i - 1)).unwrap();
            for t in brute_force_tr(&g, d, d.level_boundary(i)).unwrap() {
                let p = skip_parent(&inst, i, &t).unwrap();
                prop_assert!(p.is_subset(&t));
                prop_assert!(lower.binary_search(&p).is_ok());
                prop_assert_eq!(&p, &reference_skip_parent(&g, d, i, &t).unwrap());
                let mut cur = p;
                for lvl in (1..i).rev() {
                    cur = skip_parent(&inst, lvl, &cur).unwrap();
                }
                prop_assert!(cur.is_empty());
            }
        }
    }
}
