//! Instance families.
//!
//! Every randomized family draws from [`Lcg`](crate::rng::Lcg) with the
//! given seed, so the same `(family, seed)` pair always yields the same graph.

use std::collections::BTreeSet;
use std::fmt;

use crate::coloring::ListAssignment;
use crate::error::GenError;
use crate::graph::Graph;
use crate::rng::Lcg;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,t}`: center 0, leaves `1..=t`.
    Star(usize),
    Path(usize),
    Cycle(usize),
    RandomTree(usize),
    RandomForest(usize),
    RandomBoundedDegree {
        n: usize,
        max_degree: usize,
    },
    /// Random graph with Ore-degree below `2k` and at least one vertex of
    /// degree `>= k`.
    RandomOre {
        n: usize,
        k: usize,
    },
    /// Parts are shifted in order; part `i` of a union draws from `seed + i`.
    DisjointUnion(Vec<Family>),
    /// `K_d` joined to `max_degree - d + 1` independent vertices.
    DegenerateExample {
        d: usize,
        max_degree: usize,
    },
    Gk(usize),
    /// `K_n` minus the edges of a `K_{2(n-k)-1}` on its first vertices.
    KnMinusClique {
        n: usize,
        k: usize,
    },
}

const NAMES: &[&str] = &[
    "complete",
    "complete_bipartite",
    "star",
    "path",
    "cycle",
    "random_tree",
    "random_forest",
    "random_graph_bounded_degree",
    "random_ore",
    "disjoint_union",
    "degenerate_example",
    "gk_example",
    "kn_minus_clique",
];

impl Family {
    /// Looks a family up by name (or short alias) and binds its parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, GenError> {
        let canonical = match name {
            "k" => "complete",
            "kab" | "bipartite" => "complete_bipartite",
            "tree" => "random_tree",
            "forest" => "random_forest",
            "bounded" => "random_graph_bounded_degree",
            "ore" => "random_ore",
            "degenerate" => "degenerate_example",
            "gk" => "gk_example",
            "kn_minus" => "kn_minus_clique",
            other => other,
        };
        let family: &'static str = NAMES
            .iter()
            .find(|&&n| n == canonical)
            .ok_or_else(|| GenError::UnknownFamily(name.to_string()))?;
        let arity = |want: usize| -> Result<(), GenError> {
            if params.len() == want {
                Ok(())
            } else {
                Err(GenError::Params {
                    family,
                    msg: format!("expected {want} parameters, got {}", params.len()),
                })
            }
        };
        Ok(match family {
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "random_tree" => {
                arity(1)?;
                Family::RandomTree(params[0])
            }
            "random_forest" => {
                arity(1)?;
                Family::RandomForest(params[0])
            }
            "random_graph_bounded_degree" => {
                arity(2)?;
                Family::RandomBoundedDegree { n: params[0], max_degree: params[1] }
            }
            "random_ore" => {
                arity(2)?;
                Family::RandomOre { n: params[0], k: params[1] }
            }
            "degenerate_example" => {
                arity(2)?;
                Family::DegenerateExample { d: params[0], max_degree: params[1] }
            }
            "gk_example" => {
                arity(1)?;
                Family::Gk(params[0])
            }
            "kn_minus_clique" => {
                arity(2)?;
                Family::KnMinusClique { n: params[0], k: params[1] }
            }
            _ => return Err(GenError::Params { family, msg: "use Family::parse_spec for unions".into() }),
        })
    }

    /// Parses `name:p1,p2,..`; `+` separates the parts of a disjoint union,
    /// e.g. `kab:3,3+k:3`.
    pub fn parse_spec(spec: &str) -> Result<Family, GenError> {
        let parts = spec
            .split('+')
            .map(|part| {
                let (name, params) = part.split_once(':').unwrap_or((part, ""));
                let params = params
                    .split(',')
                    .filter(|p| !p.is_empty())
                    .map(|p| {
                        p.trim().parse().map_err(|_| GenError::Params {
                            family: "spec",
                            msg: format!("bad parameter `{p}` in `{part}`"),
                        })
                    })
                    .collect::<Result<Vec<usize>, _>>()?;
                Family::parse(name.trim(), &params)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if parts.len() == 1 { parts.into_iter().next().unwrap() } else { Family::DisjointUnion(parts) })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Star(t) => write!(f, "star:{t}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::RandomTree(n) => write!(f, "random_tree:{n}"),
            Family::RandomForest(n) => write!(f, "random_forest:{n}"),
            Family::RandomBoundedDegree { n, max_degree } => {
                write!(f, "random_graph_bounded_degree:{n},{max_degree}")
            }
            Family::RandomOre { n, k } => write!(f, "random_ore:{n},{k}"),
            Family::DisjointUnion(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Family::DegenerateExample { d, max_degree } => {
                write!(f, "degenerate_example:{d},{max_degree}")
            }
            Family::Gk(k) => write!(f, "gk_example:{k}"),
            Family::KnMinusClique { n, k } => write!(f, "kn_minus_clique:{n},{k}"),
        }
    }
}

pub fn generate(family: &Family, seed: u64) -> Result<Graph, GenError> {
    Ok(match *family {
        Family::Complete(n) => complete(n),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Family::Star(t) => star(t),
        Family::Path(n) => path(n),
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GenError::Params { family: "cycle", msg: format!("n = {n} < 3") });
            }
            cycle(n)
        }
        Family::RandomTree(n) => random_tree(n, seed),
        Family::RandomForest(n) => random_forest(n, seed),
        Family::RandomBoundedDegree { n, max_degree } => random_graph_bounded_degree(n, max_degree, seed),
        Family::RandomOre { n, k } => random_ore_graph(n, k, seed)?,
        Family::DisjointUnion(ref parts) => {
            let mut g = Graph::empty(0);
            for (i, p) in parts.iter().enumerate() {
                g = g.disjoint_union(&generate(p, seed.wrapping_add(i as u64))?);
            }
            g
        }
        Family::DegenerateExample { d, max_degree } => degenerate_example(d, max_degree)?,
        Family::Gk(k) => gk_example(k)?,
        Family::KnMinusClique { n, k } => kn_minus_clique(n, k)?,
    })
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

pub fn star(t: usize) -> Graph {
    Graph::from_edges(t + 1, (1..=t).map(|v| (0, v))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

/// Vertex `v >= 1` hangs off a parent drawn uniformly from `0..v`.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = Lcg::new(seed);
    let edges: Vec<_> = (1..n).map(|v| (rng.below(v), v)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Like [`random_tree`], but each vertex `v >= 1` starts a new component
/// with probability 1/4.
pub fn random_forest(n: usize, seed: u64) -> Graph {
    let mut rng = Lcg::new(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        if !rng.chance(1, 4) {
            edges.push((rng.below(v), v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// `2 * n * max_degree` uniform pair proposals; a proposal is kept when it is
/// new and both endpoints are still below `max_degree`.
pub fn random_graph_bounded_degree(n: usize, max_degree: usize, seed: u64) -> Graph {
    let mut rng = Lcg::new(seed);
    let mut adj = vec![BTreeSet::new(); n];
    if n >= 2 {
        for _ in 0..2 * n * max_degree {
            let (u, v) = (rng.below(n), rng.below(n));
            if u != v && adj[u].len() < max_degree && adj[v].len() < max_degree && adj[u].insert(v) {
                adj[v].insert(u);
            }
        }
    }
    from_sets(&adj)
}

fn from_sets(adj: &[BTreeSet<usize>]) -> Graph {
    let edges: Vec<_> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, s)| s.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    Graph::from_edges(adj.len(), edges).unwrap()
}

/// Adding `uv` keeps every edge's degree sum below `bound`.
fn ore_admissible(adj: &[BTreeSet<usize>], u: usize, v: usize, bound: usize) -> bool {
    if u == v || adj[u].contains(&v) {
        return false;
    }
    let (du, dv) = (adj[u].len() + 1, adj[v].len() + 1);
    du + dv < bound
        && adj[u].iter().all(|&x| du + adj[x].len() < bound)
        && adj[v].iter().all(|&x| dv + adj[x].len() < bound)
}

/// Hubs of degree in `k..=2k-2` wired to random vertices, then random edges,
/// every edge kept only if the Ore-degree stays below `2k`. The first hub
/// always reaches its target, so the maximum degree is at least `k`.
pub fn random_ore_graph(n: usize, k: usize, seed: u64) -> Result<Graph, GenError> {
    if k < 2 || n < 2 * k {
        return Err(GenError::Params {
            family: "random_ore",
            msg: format!("need k >= 2 and n >= 2k, got n = {n}, k = {k}"),
        });
    }
    let mut rng = Lcg::new(seed);
    let mut adj = vec![BTreeSet::new(); n];
    let bound = 2 * k;
    let hubs = 1 + rng.below((n / (2 * k)).max(1));
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    for &h in &order[..hubs] {
        let target = k + rng.below(k - 1);
        let mut candidates = order[hubs..].to_vec();
        rng.shuffle(&mut candidates);
        for &x in &candidates {
            if adj[h].len() >= target {
                break;
            }
            if ore_admissible(&adj, h, x, bound) {
                adj[h].insert(x);
                adj[x].insert(h);
            }
        }
    }
    for _ in 0..n * k {
        let (u, v) = (rng.below(n), rng.below(n));
        if ore_admissible(&adj, u, v, bound) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Ok(from_sets(&adj))
}

pub fn degenerate_example(d: usize, max_degree: usize) -> Result<Graph, GenError> {
    if d == 0 || d > max_degree {
        return Err(GenError::Params {
            family: "degenerate_example",
            msg: format!("need 1 <= d <= max_degree, got d = {d}, max_degree = {max_degree}"),
        });
    }
    let n = max_degree + 1;
    let edges = (0..d).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// Vertex layout of [`gk_example`]: blocks `V_0..V_k` of size `k-1`, then
/// blocks `U_0..U_k` of size `k^3 - 2k^2 + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GkLayout {
    pub k: usize,
    pub v_size: usize,
    pub u_size: usize,
}

impl GkLayout {
    pub fn new(k: usize) -> Self {
        GkLayout { k, v_size: k - 1, u_size: k * k * k - 2 * k * k + 1 }
    }

    pub fn n(&self) -> usize {
        (self.k + 1) * (self.v_size + self.u_size)
    }

    /// `v_{i,j}` for `j` in `0..k-1`.
    pub fn v(&self, i: usize, j: usize) -> usize {
        i * self.v_size + j
    }

    pub fn u(&self, i: usize, j: usize) -> usize {
        (self.k + 1) * self.v_size + i * self.u_size + j
    }

    pub fn v_block(&self, i: usize) -> std::ops::Range<usize> {
        self.v(i, 0)..self.v(i, 0) + self.v_size
    }

    pub fn u_block(&self, i: usize) -> std::ops::Range<usize> {
        self.u(i, 0)..self.u(i, 0) + self.u_size
    }
}

pub fn gk_example(k: usize) -> Result<Graph, GenError> {
    if k < 3 {
        return Err(GenError::Params { family: "gk_example", msg: format!("need k >= 3, got {k}") });
    }
    let lay = GkLayout::new(k);
    let mut edges = Vec::new();
    for a in lay.v_block(0) {
        for b in lay.v_block(0).filter(|&b| b > a) {
            edges.push((a, b));
        }
        for i in 1..=k {
            edges.extend(lay.v_block(i).map(|b| (a, b)));
        }
    }
    for i in 0..=k {
        for a in lay.v_block(i) {
            edges.extend(lay.u_block(i).map(|b| (a, b)));
        }
    }
    Ok(Graph::from_edges(lay.n(), edges).unwrap())
}

/// The list assignment under which [`gk_example`] has no equitable
/// list coloring. Colors are `1..=2k-1`.
pub fn gk_list_assignment(k: usize) -> Result<ListAssignment, GenError> {
    if k < 3 {
        return Err(GenError::Params { family: "gk_example", msg: format!("need k >= 3, got {k}") });
    }
    let lay = GkLayout::new(k);
    let base: Vec<usize> = (1..=k).collect();
    let mut lists = vec![Vec::new(); lay.n()];
    for v in lay.v_block(0).chain(lay.u_block(0)) {
        lists[v] = base.clone();
    }
    for i in 1..=k {
        for j in 0..lay.v_size {
            let mut l: Vec<usize> = base.iter().copied().filter(|&c| c != i).collect();
            l.push(k + 1 + j);
            lists[lay.v(i, j)] = l;
        }
        for u in lay.u_block(i) {
            let mut l: Vec<usize> = (k + 1..2 * k).collect();
            l.push(i);
            lists[u] = l;
        }
    }
    Ok(ListAssignment::new(k, lists).expect("k distinct colors per list"))
}

pub fn kn_minus_clique(n: usize, k: usize) -> Result<Graph, GenError> {
    if k == 0 || n < k || n > 2 * k {
        return Err(GenError::Params {
            family: "kn_minus_clique",
            msg: format!("need 1 <= k <= n <= 2k, got n = {n}, k = {k}"),
        });
    }
    let hole = (2 * (n - k)).saturating_sub(1);
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(_, v)| v >= hole);
    Ok(Graph::from_edges(n, edges).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_counts() {
        let g = complete_bipartite(3, 3);
        assert_eq!((g.n(), g.edge_count()), (6, 9));
    }

    #[test]
    fn gk3_counts() {
        let g = gk_example(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (48, 93));
        let lay = GkLayout::new(3);
        let v0: Vec<usize> = lay.v_block(0).collect();
        let mut nbhd = BTreeSet::new();
        for &v in &v0 {
            nbhd.extend(g.neighbors(v).iter().copied().filter(|u| !v0.contains(u)));
        }
        assert_eq!(nbhd.len(), 16);
        assert!(g.is_independent(&nbhd.iter().copied().collect::<Vec<_>>()));
        assert!(gk_example(2).is_err());
    }

    #[test]
    fn gk_structure() {
        for k in 3..=5 {
            let g = gk_example(k).unwrap();
            let lay = GkLayout::new(k);
            assert_eq!(g.n(), (k + 1) * k * (k - 1) * (k - 1));
            let v0: Vec<usize> = lay.v_block(0).collect();
            assert_eq!(g.induced(&v0).edge_count(), (k - 1) * (k - 2) / 2);
            let closed: BTreeSet<usize> =
                v0.iter().flat_map(|&v| g.neighbors(v).iter().copied()).chain(v0.clone()).collect();
            let open: Vec<usize> = closed.iter().copied().filter(|v| !v0.contains(v)).collect();
            let rest: Vec<usize> = (0..g.n()).filter(|v| !closed.contains(v)).collect();
            assert_eq!(open.len(), (k + 1) * (k - 1) * (k - 1));
            // (k-1)(k+1)(k-1)^2 counts V minus the open neighborhood, so V_0 is included.
            assert_eq!(rest.len() + v0.len(), (k - 1) * (k + 1) * (k - 1) * (k - 1));
            assert!(g.is_independent(&open));
            assert!(g.is_independent(&rest));
        }
    }

    #[test]
    fn gk_lists() {
        let l = gk_list_assignment(3).unwrap();
        let lay = GkLayout::new(3);
        assert_eq!(l.list(lay.v(0, 0)), &[1, 2, 3]);
        assert_eq!(l.list(lay.v(1, 0)), &[2, 3, 4]);
        assert_eq!(l.list(lay.v(2, 1)), &[1, 3, 5]);
        assert_eq!(l.list(lay.u(3, 0)), &[3, 4, 5]);
        assert_eq!(l.list(lay.u(0, 9)), &[1, 2, 3]);
    }

    #[test]
    fn degenerate_example_2_5() {
        let g = degenerate_example(2, 5).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.degeneracy(), 2);
        assert!(degenerate_example(6, 5).is_err());
    }

    #[test]
    fn kn_minus_clique_edges() {
        // n = 4, k = 3: remove K_1, i.e. nothing.
        assert_eq!(kn_minus_clique(4, 3).unwrap().edge_count(), 6);
        // n = 6, k = 4: remove K_3.
        assert_eq!(kn_minus_clique(6, 4).unwrap().edge_count(), 15 - 3);
        assert!(kn_minus_clique(7, 3).is_err());
    }

    #[test]
    fn random_families_are_deterministic() {
        for fam in [
            Family::RandomTree(30),
            Family::RandomForest(30),
            Family::RandomBoundedDegree { n: 40, max_degree: 4 },
            Family::RandomOre { n: 40, k: 4 },
        ] {
            assert_eq!(generate(&fam, 9).unwrap(), generate(&fam, 9).unwrap());
        }
        assert_ne!(random_tree(30, 1), random_tree(30, 2));
    }

    #[test]
    fn random_families_respect_shape() {
        for seed in 0..30 {
            let t = random_tree(25, seed);
            assert!(t.is_forest());
            assert_eq!(t.components().len(), 1);
            assert!(random_forest(25, seed).is_forest());
            let g = random_graph_bounded_degree(50, 5, seed);
            assert!(g.max_degree() <= 5);
            let o = random_ore_graph(40, 5, seed).unwrap();
            assert!(o.ore_degree() < 10);
            assert!(o.max_degree() >= 5);
        }
    }

    #[test]
    fn spec_parsing() {
        let f = Family::parse_spec("kab:3,3+k:3").unwrap();
        assert_eq!(f, Family::DisjointUnion(vec![Family::CompleteBipartite(3, 3), Family::Complete(3)]));
        let g = generate(&f, 0).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        assert_eq!(Family::parse_spec(&f.to_string()).unwrap(), f);
        assert!(matches!(Family::parse_spec("nope:1"), Err(GenError::UnknownFamily(_))));
        assert!(matches!(Family::parse("star", &[1, 2]), Err(GenError::Params { .. })));
    }
}
