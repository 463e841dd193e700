use proptest::prelude::*;

use rainbow_core::certify::{certify_rd_lex, general_bounds};
use rainbow_core::graph::{canonical_form, parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use rainbow_core::labeling::{dominating_set_to_rdf, rdf_to_dominating_set};
use rainbow_core::solvers::Solver;
use rainbow_core::{lexicographic, Graph, RainbowLabeling};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(a, b)| (perm[a], perm[b])).collect();
    Graph::from_edge_list(g.n(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_formats_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_vertex_order(g in graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&permuted(&g, &perm)));
    }

    #[test]
    fn rainbow_routes_agree(g in graph(7), k in 1usize..=3) {
        let solver = Solver::default();
        let direct = solver.min_rainbow(&g, k).unwrap();
        let via = solver.min_rainbow_via_cartesian(&g, k).unwrap();
        prop_assert_eq!(direct.value, via.value);
        prop_assert!(direct.witness.is_k_rainbow_dominating(&g));
        prop_assert!(via.witness.is_k_rainbow_dominating(&g));
        let d = rdf_to_dominating_set(&g, &direct.witness).unwrap();
        prop_assert_eq!(d.len(), direct.value);
        prop_assert_eq!(dominating_set_to_rdf(&g, k, &d).unwrap(), direct.witness);
    }

    #[test]
    fn domination_chain(g in connected(8)) {
        let solver = Solver::default();
        let gamma = solver.min_dominating_set(&g).unwrap().value;
        let r2 = solver.min_rainbow(&g, 2).unwrap().value;
        let (lo, hi) = general_bounds(&g, 2).unwrap();
        prop_assert!(lo <= r2 && r2 <= hi);
        prop_assert!(gamma <= r2);
        if g.n() >= 2 {
            let gt = solver.min_total_dominating_set(&g).unwrap().value;
            prop_assert!(gamma <= gt && gt <= 2 * gamma);
            let couple = solver.min_couple_cost(&g, 2, 3).unwrap().value;
            prop_assert!(couple <= 2 * gt && couple <= 3 * gamma);
        }
    }

    #[test]
    fn certificates_bracket_exact_value(g in connected(4), h in connected(4)) {
        let cert = certify_rd_lex(&g, &h).unwrap();
        let (product, _) = lexicographic(&g, &h);
        let exact = Solver::default().min_rainbow(&product, 2).unwrap().value;
        prop_assert!(cert.lo <= exact && exact <= cert.hi, "{} vs {}", cert, exact);
        if let Some(v) = cert.value() {
            prop_assert_eq!(v, exact);
        }
        cert.upper.validate(&product).unwrap();
    }

    #[test]
    fn certificates_on_disconnected_g(g in graph(5), h in connected(3)) {
        let cert = certify_rd_lex(&g, &h).unwrap();
        let (product, _) = lexicographic(&g, &h);
        let exact = Solver::default().min_rainbow(&product, 2).unwrap().value;
        prop_assert!(cert.lo <= exact && exact <= cert.hi);
        prop_assert_eq!(cert.upper.weight(), cert.hi);
    }

    #[test]
    fn couple_labelings_validate(g in connected(5), h in connected(4)) {
        prop_assume!(h.n() >= 2);
        let solver = Solver::default();
        let rd_h = solver.min_rainbow(&h, 2).unwrap().value;
        let couple = solver.min_couple_cost(&g, 2, rd_h).unwrap();
        let f = solver.couple_labeling(&g, &h, 2, &couple.witness).unwrap();
        prop_assert_eq!(f.weight(), couple.value);
    }

    #[test]
    fn labeling_text_round_trip(g in graph(8), k in 1usize..=4) {
        let f = Solver::default().min_rainbow(&g, k).unwrap().witness;
        prop_assert_eq!(RainbowLabeling::parse(&f.to_text(), k).unwrap(), f);
    }
}
