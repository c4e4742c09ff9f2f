use equitable::forest::{alpha_v_all, forest_equitable_color, forest_feasible};
use equitable::generators::{
    path, random_forest, random_graph_bounded_degree, random_ore_graph, random_tree,
};
use equitable::hs::equitable_color_hs;
use equitable::io;
use equitable::oracle::{decide_equitable, decide_list, Decision, ListMode, SearchBudget};
use equitable::ore::equitable_color_ore;
use equitable::{check_coloring, Coloring, Graph, ListAssignment, Mode};
use proptest::prelude::*;

fn is_equitable(g: &Graph, f: &Coloring, k: usize) -> bool {
    check_coloring(g, f, Mode::Equitable(k)).unwrap().ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hs_output_is_equitable_within_budget(n in 1usize..80, delta in 1usize..7, extra in 1usize..4, seed: u64) {
        let g = random_graph_bounded_degree(n, delta, seed);
        let k = g.max_degree() + extra;
        let out = equitable_color_hs(&g, k).unwrap();
        prop_assert!(is_equitable(&g, &out.coloring, k));
        prop_assert!(out.log.shift_count() <= 2 * k * out.padded_n);
        prop_assert!(out.rebalance_shifts.iter().all(|&s| s < 2 * k));
        prop_assert!(out.replay_check(&g).is_ok());
    }

    #[test]
    fn ore_output_is_equitable(k in 2usize..7, extra in 0usize..30, seed: u64) {
        let g = random_ore_graph(2 * k + extra, k, seed).unwrap();
        let out = equitable_color_ore(&g, k).unwrap();
        prop_assert!(is_equitable(&g, &out.coloring, k));
        prop_assert_eq!(out.stats.measure_violations, 0);
    }

    #[test]
    fn forest_criterion_matches_search(n in 3usize..12, seed: u64, tree: bool) {
        let g = if tree { random_tree(n, seed) } else { random_forest(n, seed) };
        for k in 3..=n {
            let (feasible, _) = forest_feasible(&g, k).unwrap();
            let oracle = decide_equitable(&g, k, SearchBudget::unlimited()).unwrap();
            prop_assert_eq!(feasible, oracle.is_yes(), "k = {}", k);
            if feasible {
                prop_assert!(is_equitable(&g, &forest_equitable_color(&g, k).unwrap(), k));
            }
        }
    }

    #[test]
    fn alpha_on_paths_has_closed_form(n in 1usize..200) {
        let alpha = alpha_v_all(&path(n)).unwrap();
        for (v, &a) in alpha.iter().enumerate() {
            let left = v.saturating_sub(1);
            let right = n.saturating_sub(v + 2);
            prop_assert_eq!(a, 1 + left.div_ceil(2) + right.div_ceil(2));
        }
    }

    #[test]
    fn isolated_vertices_add_to_alpha(n in 1usize..40, extra in 0usize..5, seed: u64) {
        let g = random_forest(n, seed);
        let alpha = alpha_v_all(&g).unwrap();
        let wider = alpha_v_all(&g.disjoint_union(&Graph::empty(extra))).unwrap();
        for v in 0..n {
            prop_assert_eq!(wider[v], alpha[v] + extra);
        }
    }

    #[test]
    fn equitable_implies_proper(n in 1usize..30, seed: u64, k in 1usize..6) {
        let g = random_graph_bounded_degree(n, 3, seed);
        if let Decision::Yes(f) = decide_equitable(&g, k, SearchBudget::nodes(200_000)).unwrap() {
            prop_assert!(is_equitable(&g, &f, k));
            prop_assert!(check_coloring(&g, &f, Mode::Proper).unwrap().ok());
        }
    }

    #[test]
    fn se_colorings_are_equitable_list_colorings(n in 2usize..9, k in 2usize..4, seed: u64, picks in prop::collection::vec(prop::collection::btree_set(0usize..6, 4), 9)) {
        let g = random_graph_bounded_degree(n, 3, seed);
        let lists: Vec<Vec<usize>> = picks.iter().take(n).map(|s| s.iter().copied().take(k).collect()).collect();
        let l = ListAssignment::new(k, lists).unwrap();
        if let Decision::Yes(f) = decide_list(&g, &l, ListMode::Se, SearchBudget::unlimited()).unwrap() {
            prop_assert!(check_coloring(&g, &f, Mode::SeList(&l)).unwrap().ok());
            prop_assert!(check_coloring(&g, &f, Mode::EquitableList(&l)).unwrap().ok());
        }
    }

    #[test]
    fn dimacs_round_trip(n in 0usize..40, seed: u64) {
        let g = random_graph_bounded_degree(n, 4, seed);
        let back = io::graph_from_dimacs(&io::graph_to_dimacs(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn coloring_round_trip(colors in prop::collection::vec(0usize..5, 0..30)) {
        let f = Coloring::new(5, colors.clone()).unwrap();
        let back = io::coloring_from_text(&io::coloring_to_text(&f), colors.len()).unwrap();
        prop_assert_eq!(back.colors(), f.colors());
    }
}

#[test]
fn hs_and_search_agree_on_small_graphs() {
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for code in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            for k in g.max_degree() + 1..=n + 1 {
                let out = equitable_color_hs(&g, k).unwrap();
                assert!(is_equitable(&g, &out.coloring, k), "n {n} code {code} k {k}");
                assert!(decide_equitable(&g, k, SearchBudget::unlimited()).unwrap().is_yes());
            }
        }
    }
}
