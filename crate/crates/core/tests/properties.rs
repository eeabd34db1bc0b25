use mcgraph::enumerate::isomorphic;
use mcgraph::{
    check_mc_coloring, edge_connectivity, edge_count_formula, make_product, mc_bounds_basic, mc_exact,
    mc_exact_naive, product_graph_bounds, spanning_tree_coloring, theorem1_certificate, vertex_connectivity,
    EdgeColoring, Graph, ProductGraph, ProductKind,
};
use proptest::prelude::*;

/// Connected graphs: a random tree on `n` vertices plus a subset of the
/// remaining pairs.
fn connected(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
            (Just(n), parents, proptest::collection::vec(any::<prop::sample::Index>(), 0..=max_extra))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let missing: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !edges.contains(&(u, v)))
                .collect();
            if !missing.is_empty() {
                for idx in extra {
                    let e = missing[idx.index(missing.len())];
                    if !edges.contains(&e) {
                        edges.push(e);
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

fn kind() -> impl Strategy<Value = ProductKind> {
    prop::sample::select(ProductKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_matches_naive(g in connected(7, 5)) {
        prop_assume!(g.edge_count() <= 11);
        prop_assert_eq!(mc_exact(&g).unwrap().value, mc_exact_naive(&g).unwrap().value);
    }

    #[test]
    fn exact_lies_in_basic_bounds_with_a_valid_witness(g in connected(9, 10)) {
        let r = mc_exact(&g).unwrap();
        prop_assert!(mc_bounds_basic(&g).contains(r.value));
        let w = r.witness.unwrap();
        prop_assert!(check_mc_coloring(&g, &w).unwrap().is_valid());
        prop_assert_eq!(w.color_count() as u64, r.value);
    }

    #[test]
    fn certificate_is_sound(g in connected(8, 8)) {
        prop_assume!(g.vertex_count() > 3);
        if let Some(v) = theorem1_certificate(&g).unwrap().value {
            prop_assert_eq!(mc_exact(&g).unwrap().value, v);
        }
    }

    #[test]
    fn merging_colors_preserves_validity(g in connected(8, 6), a in 0usize..8, b in 0usize..8) {
        let w = spanning_tree_coloring(&g).unwrap();
        let k = w.color_count();
        let merged = w.merge(a % k, b % k);
        prop_assert!(check_mc_coloring(&g, &merged).unwrap().is_valid());
    }

    #[test]
    fn whitney_chain(g in connected(9, 12)) {
        let (k, k1) = (vertex_connectivity(&g), edge_connectivity(&g));
        prop_assert!(k <= k1 && k1 <= g.min_degree());
    }

    #[test]
    fn product_edge_counts_and_json(g in connected(4, 2), h in connected(4, 2), kind in kind()) {
        let p = make_product(kind, &g, &h).unwrap();
        prop_assert_eq!(p.graph.edge_count() as u64, edge_count_formula(kind, &g, &h));
        let back = ProductGraph::from_json(&p.to_json()).unwrap();
        prop_assert_eq!(&back, &p);
        let (rg, rh) = p.recover_factors().unwrap();
        prop_assert_eq!(rg.edges(), g.edges());
        prop_assert_eq!(rh.edges(), h.edges());
    }

    #[test]
    fn commutative_products_are_isomorphic(g in connected(3, 1), h in connected(2, 1), kind in kind()) {
        prop_assume!(kind != ProductKind::Lexicographic);
        let a = make_product(kind, &g, &h).unwrap().graph.without_labels();
        let b = make_product(kind, &h, &g).unwrap().graph.without_labels();
        prop_assert!(isomorphic(&a, &b));
    }

    #[test]
    fn product_bounds_contain_mc(g in connected(4, 2), h in connected(3, 1), kind in kind()) {
        let p = make_product(kind, &g, &h).unwrap();
        prop_assume!(p.graph.is_connected());
        let mc = mc_exact(&p.graph).unwrap().value;
        let b = product_graph_bounds(&p);
        prop_assert!(b.contains(mc), "{} not in {}", mc, b);
    }

    #[test]
    fn coloring_json_round_trips(g in connected(6, 4)) {
        let w = spanning_tree_coloring(&g).unwrap();
        let back = EdgeColoring::from_json(&g, &w.to_json(&g)).unwrap();
        prop_assert_eq!(back, w);
        prop_assert_eq!(Graph::parse(&g.to_json()).unwrap(), g.clone());
        prop_assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    }
}
