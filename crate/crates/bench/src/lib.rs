//! Fixed instance sets for the solver benchmarks.

use equitable::generators::{random_forest, random_graph_bounded_degree, random_ore_graph};
use equitable::Graph;

/// Bounded-degree graphs for the hs solver, `k = max_degree + 1`.
pub fn hs_instance(n: usize, max_degree: usize, seed: u64) -> (Graph, usize) {
    (random_graph_bounded_degree(n, max_degree, seed), max_degree + 1)
}

pub fn ore_instance(n: usize, k: usize, seed: u64) -> (Graph, usize) {
    (random_ore_graph(n, k, seed).expect("n >= 2k"), k)
}

/// A random forest together with the smallest `k >= 3` it admits.
pub fn forest_instance(n: usize, seed: u64) -> (Graph, usize) {
    let g = random_forest(n, seed);
    let k = (3..=n.max(3))
        .find(|&k| equitable::forest::forest_feasible(&g, k).expect("forest").0)
        .unwrap_or(n.max(3));
    (g, k)
}
