//! Equitable colorings of forests with `k >= 3` colors.
//!
//! A forest on `n` vertices is equitably `k`-colorable exactly when every
//! vertex lies in an independent set of size `floor(n/k)`. [`alpha_v_all`]
//! computes those sizes by a rerooting tree DP, and
//! [`forest_equitable_color`] builds the coloring from a bipartition.

use crate::coloring::Coloring;
use crate::error::SolveError;
use crate::graph::Graph;

/// Target class sizes `s_i = floor((n + i - 1) / k)`, `i = 1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeProfile {
    pub sizes: Vec<usize>,
}

impl SizeProfile {
    pub fn new(n: usize, k: usize) -> Self {
        SizeProfile { sizes: (0..k).map(|i| (n + i) / k).collect() }
    }

    /// `s_1 + .. + s_j`.
    pub fn prefix(&self, j: usize) -> usize {
        self.sizes[..j].iter().sum()
    }
}

/// Two independent sets covering the forest, `|A| >= |B|`, such that
/// either `|A| - |B| <= 1` or no vertex of A is isolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestBipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// Vertices of A with exactly one neighbor.
    pub leaves: Vec<usize>,
}

impl ForestBipartition {
    pub fn new(g: &Graph) -> Result<Self, SolveError> {
        require_forest(g)?;
        let n = g.n();
        let mut side = vec![0u8; n];
        let mut seen = vec![false; n];
        for comp in g.components() {
            let mut stack = vec![comp[0]];
            seen[comp[0]] = true;
            while let Some(v) = stack.pop() {
                for &u in g.neighbors(v) {
                    if !seen[u] {
                        side[u] = 1 - side[v];
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        let zeros = side.iter().filter(|&&s| s == 0).count();
        let a_side = if 2 * zeros >= n { 0 } else { 1 };
        let mut in_a: Vec<bool> = side.iter().map(|&s| s == a_side).collect();
        let mut a = in_a.iter().filter(|&&x| x).count();
        for (v, x) in in_a.iter_mut().enumerate() {
            if a < n - a + 2 {
                break;
            }
            if *x && g.degree(v) == 0 {
                *x = false;
                a -= 1;
            }
        }
        let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
        let b: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();
        let leaves = a.iter().copied().filter(|&v| g.degree(v) == 1).collect();
        Ok(ForestBipartition { a, b, leaves })
    }
}

fn require_forest(g: &Graph) -> Result<(), SolveError> {
    if g.is_forest() {
        Ok(())
    } else {
        Err(SolveError::Precondition("graph has a cycle".into()))
    }
}

/// Rooted DP over one component: parent pointers, a BFS order, and for
/// each vertex the best independent set in its subtree without / with it.
struct Rooted {
    parent: Vec<usize>,
    order: Vec<usize>,
    down: Vec<[usize; 2]>,
}

const NONE: usize = usize::MAX;

fn root_component(g: &Graph, root: usize, parent: &mut [usize], down: &mut [[usize; 2]]) -> Vec<usize> {
    let mut order = vec![root];
    parent[root] = NONE;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in g.neighbors(v) {
            if u != parent[v] {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    for &v in order.iter().rev() {
        let mut d = [0, 1];
        for &c in g.neighbors(v) {
            if c != parent[v] {
                d[0] += down[c][0].max(down[c][1]);
                d[1] += down[c][0];
            }
        }
        down[v] = d;
    }
    order
}

fn rooted(g: &Graph) -> (Rooted, Vec<Vec<usize>>) {
    let n = g.n();
    let mut parent = vec![NONE; n];
    let mut down = vec![[0, 0]; n];
    let mut orders = Vec::new();
    for comp in g.components() {
        orders.push(root_component(g, comp[0], &mut parent, &mut down));
    }
    let order = orders.concat();
    (Rooted { parent, order, down }, orders)
}

/// For every vertex, the largest independent set containing it.
pub fn alpha_v_all(g: &Graph) -> Result<Vec<usize>, SolveError> {
    require_forest(g)?;
    let n = g.n();
    let (r, orders) = rooted(g);
    let best = |v: usize| r.down[v][0].max(r.down[v][1]);
    // up[v] = (best in the tree outside subtree(v) avoiding parent(v), best overall there)
    let mut up = vec![[0usize; 2]; n];
    for &p in &r.order {
        let children: Vec<usize> = g.neighbors(p).iter().copied().filter(|&c| c != r.parent[p]).collect();
        let sum_best: usize = children.iter().map(|&c| best(c)).sum();
        let sum_out: usize = children.iter().map(|&c| r.down[c][0]).sum();
        let (above0, above1) = if r.parent[p] == NONE { (0, 0) } else { (up[p][0], up[p][1]) };
        for &c in &children {
            let without_p = sum_best - best(c) + above1;
            let with_p = 1 + sum_out - r.down[c][0] + above0;
            up[c] = [without_p, without_p.max(with_p)];
        }
    }
    let comp_alpha: Vec<usize> = orders.iter().map(|o| best(o[0])).collect();
    let total: usize = comp_alpha.iter().sum();
    let mut alpha = vec![0; n];
    for (ci, order) in orders.iter().enumerate() {
        let rest = total - comp_alpha[ci];
        for &v in order {
            let above = if r.parent[v] == NONE { 0 } else { up[v][0] };
            alpha[v] = r.down[v][1] + above + rest;
        }
    }
    Ok(alpha)
}

/// A maximum independent set among those containing `v`.
pub fn max_independent_containing(g: &Graph, v: usize) -> Result<Vec<usize>, SolveError> {
    require_forest(g)?;
    let n = g.n();
    let mut parent = vec![NONE; n];
    let mut down = vec![[0, 0]; n];
    let mut set = Vec::new();
    let mut take = vec![false; n];
    for comp in g.components() {
        let root = if comp.binary_search(&v).is_ok() { v } else { comp[0] };
        let order = root_component(g, root, &mut parent, &mut down);
        for &x in &order {
            let p = parent[x];
            take[x] = if p == NONE {
                x == v || down[x][1] > down[x][0]
            } else {
                !take[p] && down[x][1] > down[x][0]
            };
            if take[x] {
                set.push(x);
            }
        }
    }
    set.sort_unstable();
    Ok(set)
}

/// Whether the forest has an equitable `k`-coloring. On failure returns a
/// vertex (lowest index) outside every independent set of size
/// `floor(n/k)`.
pub fn forest_feasible(g: &Graph, k: usize) -> Result<(bool, Option<usize>), SolveError> {
    if k < 3 {
        return Err(SolveError::OutOfScope(format!("forest criterion needs k >= 3, got {k}")));
    }
    let alpha = alpha_v_all(g)?;
    let need = g.n() / k;
    match (0..g.n()).find(|&v| alpha[v] < need) {
        Some(v) => Ok((false, Some(v))),
        None => Ok((true, None)),
    }
}

/// Equitable `k`-coloring of a feasible forest; color `c` gets exactly
/// `floor((n + c) / k)` vertices.
pub fn forest_equitable_color(g: &Graph, k: usize) -> Result<Coloring, SolveError> {
    let (ok, witness) = forest_feasible(g, k)?;
    if !ok {
        let v = witness.expect("infeasible has a witness");
        return Err(SolveError::Contract(format!(
            "vertex {} lies in no independent set of size {}",
            v + 1,
            g.n() / k
        )));
    }
    let n = g.n();
    let prof = SizeProfile::new(n, k);
    let bp = ForestBipartition::new(g)?;
    let b = bp.b.len();
    let j = (1..=k).find(|&j| b <= prof.prefix(j)).expect("b <= n");
    let classes = if b == prof.prefix(j) {
        let mut classes = split(&bp.b, &prof.sizes[..j]);
        classes.extend(split(&bp.a, &prof.sizes[j..]));
        classes
    } else if j > 1 {
        case1(g, &bp, &prof, j)?
    } else {
        case2(g, &bp, &prof)?
    };
    for class in &classes {
        debug_assert!(g.is_independent(class), "class {class:?} is not independent");
    }
    Coloring::from_classes(n, &classes)
        .map_err(|e| SolveError::internal(e.to_string(), format!("{classes:?}")))
}

/// Cuts `pool` (in order) into consecutive pieces of the given sizes.
fn split(pool: &[usize], sizes: &[usize]) -> Vec<Vec<usize>> {
    debug_assert_eq!(pool.len(), sizes.iter().sum::<usize>());
    let mut out = Vec::with_capacity(sizes.len());
    let mut at = 0;
    for &s in sizes {
        out.push(pool[at..at + s].to_vec());
        at += s;
    }
    out
}

fn case1(
    g: &Graph,
    bp: &ForestBipartition,
    prof: &SizeProfile,
    j: usize,
) -> Result<Vec<Vec<usize>>, SolveError> {
    let s = bp.b.len() - prof.prefix(j - 1);
    let mut by_degree = bp.b.clone();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut in_s = vec![false; g.n()];
    let mut near_s = vec![false; g.n()];
    for &v in &by_degree[..s] {
        in_s[v] = true;
        for &u in g.neighbors(v) {
            near_s[u] = true;
        }
    }
    let free: Vec<usize> = bp.a.iter().copied().filter(|&v| !near_s[v]).collect();
    let sj = prof.sizes[j - 1];
    if s + free.len() < sj {
        return Err(SolveError::internal(
            format!("S has {s} vertices and A - N(S) only {}, need {sj}", free.len()),
            format!("A = {:?}\nB = {:?}", bp.a, bp.b),
        ));
    }
    let mut s_prime: Vec<usize> = by_degree[..s].to_vec();
    s_prime.extend_from_slice(&free[..sj - s]);
    debug_assert!(g.is_independent(&s_prime));
    let mut in_sp = vec![false; g.n()];
    s_prime.iter().for_each(|&v| in_sp[v] = true);
    let rest_b: Vec<usize> = bp.b.iter().copied().filter(|&v| !in_s[v]).collect();
    let rest_a: Vec<usize> = bp.a.iter().copied().filter(|&v| !in_sp[v]).collect();
    let mut classes = split(&rest_b, &prof.sizes[..j - 1]);
    classes.push(s_prime);
    classes.extend(split(&rest_a, &prof.sizes[j..]));
    Ok(classes)
}

/// `b < s_1`: two disjoint independent sets `I_1`, `I_2` of sizes at least
/// `s_1`, `s_k` covering B leave an independent remainder inside A.
fn case2(g: &Graph, bp: &ForestBipartition, prof: &SizeProfile) -> Result<Vec<Vec<usize>>, SolveError> {
    let n = g.n();
    let k = prof.sizes.len();
    let (s1, sk) = (prof.sizes[0], prof.sizes[k - 1]);
    let (i1, i2) = cover_b(g, bp, s1, sk)?;
    debug_assert!(g.is_independent(&i1) && g.is_independent(&i2));
    let mut in_b = vec![false; n];
    bp.b.iter().for_each(|&v| in_b[v] = true);
    let trim = |set: Vec<usize>, size: usize| -> Vec<usize> {
        let (mut keep, extra): (Vec<usize>, Vec<usize>) = set.into_iter().partition(|&v| in_b[v]);
        keep.extend(extra.into_iter().take(size.saturating_sub(keep.len())));
        keep
    };
    let i1 = trim(i1, s1);
    let i2 = trim(i2, sk);
    if i1.len() != s1 || i2.len() != sk {
        return Err(SolveError::internal(
            format!("trimmed sets have sizes {} and {}, need {s1} and {sk}", i1.len(), i2.len()),
            format!("A = {:?}\nB = {:?}", bp.a, bp.b),
        ));
    }
    let mut used = vec![false; n];
    i1.iter().chain(&i2).for_each(|&v| used[v] = true);
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
    debug_assert!(rest.iter().all(|&v| !in_b[v]));
    let mut classes = vec![i1];
    classes.extend(split(&rest, &prof.sizes[1..k - 1]));
    classes.push(i2);
    Ok(classes)
}

fn cover_b(
    g: &Graph,
    bp: &ForestBipartition,
    s1: usize,
    sk: usize,
) -> Result<(Vec<usize>, Vec<usize>), SolveError> {
    let n = g.n();
    let dump = || format!("A = {:?}\nB = {:?}\nL = {:?}", bp.a, bp.b, bp.leaves);
    let mut is_leaf = vec![false; n];
    bp.leaves.iter().for_each(|&v| is_leaf[v] = true);
    // leaves hanging from each B vertex
    let mut hanging = vec![Vec::new(); n];
    for &x in &bp.leaves {
        hanging[g.neighbors(x)[0]].push(x);
    }

    // Q is good when |Q| + |L - N(Q)| >= s_k; a largest one takes the B
    // vertices with fewest hanging leaves first.
    let mut by_leaves = bp.b.clone();
    by_leaves.sort_by_key(|&q| (hanging[q].len(), q));
    let mut q_len = 0;
    let mut uncovered = bp.leaves.len();
    for &q in &by_leaves {
        if q_len + 1 + uncovered - hanging[q].len() < sk {
            break;
        }
        q_len += 1;
        uncovered -= hanging[q].len();
    }
    let q = &by_leaves[..q_len];
    let outside_q = &by_leaves[q_len..];
    let Some(&v) = outside_q.iter().min() else {
        return Err(SolveError::internal("B is good", dump()));
    };

    let covered: Vec<usize> = q.iter().flat_map(|&x| hanging[x].iter().copied()).collect();
    if covered.len() + outside_q.len() >= s1 {
        let mut i1: Vec<usize> = covered.iter().copied().chain(outside_q.iter().copied()).collect();
        let mut in_q = vec![false; n];
        q.iter().for_each(|&x| in_q[x] = true);
        let mut i2: Vec<usize> = q.to_vec();
        i2.extend(bp.leaves.iter().copied().filter(|&x| !in_q[g.neighbors(x)[0]]));
        i1.sort_unstable();
        i2.sort_unstable();
        debug_assert!(g.is_independent(&i1) && g.is_independent(&i2));
        return Ok((i1, i2));
    }

    let mut r = max_independent_containing(g, v)?;
    if r.len() < s1 {
        return Err(SolveError::internal(format!("alpha at {v} is below s_1"), dump()));
    }
    let mut in_b = vec![false; n];
    bp.b.iter().for_each(|&x| in_b[x] = true);
    // keep exactly s_1 vertices, dropping B first and leaves last
    r.sort_by_key(|&x| (x != v, !in_b[x], is_leaf[x], x));
    let drop = r.len() - s1;
    r.drain(1..1 + drop);
    r.sort_unstable();
    loop {
        let mut in_r = vec![false; n];
        r.iter().for_each(|&x| in_r[x] = true);
        let Some(&other) = r.iter().find(|&&x| x != v && in_b[x]) else {
            let mut i2: Vec<usize> = bp.b.iter().copied().filter(|&x| x != v).collect();
            i2.extend(hanging[v].iter().copied());
            i2.sort_unstable();
            debug_assert!(g.is_independent(&i2));
            if i2.len() < sk {
                return Err(SolveError::internal(format!("only {} vertices beside R", i2.len()), dump()));
            }
            return Ok((r, i2));
        };
        let free_leaf = bp
            .leaves
            .iter()
            .copied()
            .find(|&x| !in_r[x] && g.neighbors(x).iter().all(|&u| !in_r[u] || u == other));
        match free_leaf {
            // the leaf's only neighbor may be `other` itself, which leaves R
            Some(x) => {
                r.retain(|&y| y != other);
                r.push(x);
                r.sort_unstable();
                debug_assert!(g.is_independent(&r));
            }
            None => {
                let i2: Vec<usize> = (0..n).filter(|&x| (in_b[x] || is_leaf[x]) && !in_r[x]).collect();
                debug_assert!(g.is_independent(&i2));
                if i2.len() < sk {
                    return Err(SolveError::internal(
                        format!("(B + L) - R has {} vertices", i2.len()),
                        dump(),
                    ));
                }
                return Ok((r, i2));
            }
        }
    }
}
