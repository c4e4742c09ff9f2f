use crate::coloring::{mod_star, Coloring, ListAssignment};
use crate::error::SolveError;
use crate::graph::Graph;

use super::{palette_masks, Decision, Meter, SearchBudget};

/// Usage constraints on list colorings from `k`-lists on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListMode {
    /// Every color at most `ceil(n/k)` times.
    Equitable,
    /// As `Equitable`, and at most `n mod* k` colors used exactly
    /// `ceil(n/k)` times.
    Se,
    /// Color `c` used `floor(eta(c)/k)` or `ceil(eta(c)/k)` times, where
    /// `eta(c)` counts the lists containing `c`.
    Proportional,
}

impl ListMode {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "equitable" => Some(ListMode::Equitable),
            "se" => Some(ListMode::Se),
            "proportional" => Some(ListMode::Proportional),
            _ => None,
        }
    }
}

/// Decides whether `g` has a coloring from `lists` obeying `mode`.
pub fn decide_list(
    g: &Graph,
    lists: &ListAssignment,
    mode: ListMode,
    budget: SearchBudget,
) -> Result<Decision, SolveError> {
    let mut meter = Meter::new(budget);
    let found = decide_list_metered(g, lists, mode, &mut meter)?;
    Ok(match found {
        Some(f) => Decision::Yes(f),
        None if meter.exhausted() => Decision::Unknown,
        None => Decision::No,
    })
}

fn decide_list_metered(
    g: &Graph,
    lists: &ListAssignment,
    mode: ListMode,
    meter: &mut Meter,
) -> Result<Option<Coloring>, SolveError> {
    let n = g.n();
    if lists.n() != n {
        return Err(SolveError::Precondition(format!("{} lists for {n} vertices", lists.n())));
    }
    if n == 0 {
        return Ok(Some(Coloring::from_colors(Vec::new())));
    }
    let k = lists.k();
    if k == 0 {
        return Err(SolveError::Precondition("lists are empty".into()));
    }
    let (palette, masks) = palette_masks(lists);
    if palette.len() > 128 {
        return Err(SolveError::Precondition(format!("palette of {} colors exceeds 128", palette.len())));
    }
    let p = palette.len();
    let (lo, hi): (Vec<usize>, Vec<usize>) = match mode {
        ListMode::Proportional => {
            palette.iter().map(|&c| (lists.eta(c) / k, lists.eta(c).div_ceil(k))).unzip()
        }
        _ => (vec![0; p], vec![n.div_ceil(k); p]),
    };
    let mut s = ListSearch {
        g,
        dom: masks,
        color: vec![usize::MAX; n],
        used: vec![0; p],
        lo,
        hi,
        full_limit: if mode == ListMode::Se { mod_star(n, k) } else { usize::MAX },
        full: 0,
        trail: Vec::new(),
    };
    if !s.run(n, meter) {
        return Ok(None);
    }
    Ok(Some(Coloring::from_colors(s.color.iter().map(|&i| palette[i]).collect())))
}

struct ListSearch<'a> {
    g: &'a Graph,
    /// Colors still open to each uncolored vertex given its colored neighbors.
    dom: Vec<u128>,
    color: Vec<usize>,
    used: Vec<usize>,
    lo: Vec<usize>,
    hi: Vec<usize>,
    full_limit: usize,
    /// Colors used `hi` times (SE mode only).
    full: usize,
    trail: Vec<(usize, u128)>,
}

impl ListSearch<'_> {
    /// Colors that may still be used once more.
    fn allowed(&self) -> u128 {
        let mut mask = 0u128;
        for (c, &u) in self.used.iter().enumerate() {
            let blocked = u >= self.hi[c] || (self.full >= self.full_limit && u + 1 == self.hi[c]);
            if !blocked {
                mask |= 1 << c;
            }
        }
        mask
    }

    fn run(&mut self, left: usize, meter: &mut Meter) -> bool {
        let need: usize = self.used.iter().zip(&self.lo).map(|(&u, &lo)| lo.saturating_sub(u)).sum();
        if need > left {
            return false;
        }
        if left == 0 {
            return true;
        }
        let allowed = self.allowed();
        let mut best: Option<(u32, usize)> = None;
        for v in 0..self.g.n() {
            if self.color[v] != usize::MAX {
                continue;
            }
            let options = (self.dom[v] & allowed).count_ones();
            if options == 0 {
                return false;
            }
            let key = (options, usize::MAX - self.g.degree(v));
            if best.is_none_or(|(o, b)| key < (o, usize::MAX - self.g.degree(b))) {
                best = Some((options, v));
            }
        }
        // every color short of its minimum must still be reachable
        for (c, &u) in self.used.iter().enumerate() {
            let short = self.lo[c].saturating_sub(u);
            if short > 0 {
                let bit = 1u128 << c;
                let open = (0..self.g.n())
                    .filter(|&v| self.color[v] == usize::MAX && self.dom[v] & allowed & bit != 0)
                    .count();
                if open < short {
                    return false;
                }
            }
        }
        let (_, v) = best.expect("an uncolored vertex remains");
        let mut options = self.dom[v] & allowed;
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            if !meter.tick() {
                return false;
            }
            let mark = self.trail.len();
            self.color[v] = c;
            self.used[c] += 1;
            let became_full = self.full_limit != usize::MAX && self.used[c] == self.hi[c];
            self.full += usize::from(became_full);
            for &u in self.g.neighbors(v) {
                if self.color[u] == usize::MAX && self.dom[u] >> c & 1 == 1 {
                    self.trail.push((u, self.dom[u]));
                    self.dom[u] &= !(1 << c);
                }
            }
            if self.run(left - 1, meter) {
                return true;
            }
            while self.trail.len() > mark {
                let (u, d) = self.trail.pop().expect("trail entry");
                self.dom[u] = d;
            }
            self.full -= usize::from(became_full);
            self.used[c] -= 1;
            self.color[v] = usize::MAX;
            if meter.exhausted() {
                return false;
            }
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Choosability {
    Yes,
    /// A `k`-list assignment admitting no coloring of the requested kind.
    No(ListAssignment),
    Unknown,
}

/// Decides whether every `k`-list assignment of `g` admits a coloring of
/// the given kind. Assignments are enumerated up to renaming of colors:
/// colors are numbered by first appearance, so each list takes some colors
/// already seen and fills up with the next fresh ones. Intended for `n <= 6`.
pub fn decide_choosable(
    g: &Graph,
    k: usize,
    mode: ListMode,
    budget: SearchBudget,
) -> Result<Choosability, SolveError> {
    if k == 0 {
        return Err(SolveError::Precondition("k must be positive".into()));
    }
    if g.n() * k > 128 {
        return Err(SolveError::Precondition(format!("n*k = {} colors exceeds 128", g.n() * k)));
    }
    let mut meter = Meter::new(budget);
    let mut lists = Vec::with_capacity(g.n());
    let mut unknown = false;
    let found = enumerate(g, k, mode, &mut lists, 0, &mut meter, &mut unknown)?;
    Ok(match found {
        Some(l) => Choosability::No(l),
        None if unknown || meter.exhausted() => Choosability::Unknown,
        None => Choosability::Yes,
    })
}

fn enumerate(
    g: &Graph,
    k: usize,
    mode: ListMode,
    lists: &mut Vec<Vec<usize>>,
    seen: usize,
    meter: &mut Meter,
    unknown: &mut bool,
) -> Result<Option<ListAssignment>, SolveError> {
    if meter.exhausted() {
        return Ok(None);
    }
    if lists.len() == g.n() {
        let l = ListAssignment::new(k, lists.clone()).map_err(|e| SolveError::internal(e.to_string(), ""))?;
        let before = meter.exhausted();
        let ok = decide_list_metered(g, &l, mode, meter)?;
        if ok.is_none() {
            if meter.exhausted() && !before {
                *unknown = true;
                return Ok(None);
            }
            return Ok(Some(l));
        }
        return Ok(None);
    }
    for old in 0..=k.min(seen) {
        let fresh = k - old;
        let mut pick: Vec<usize> = (0..old).collect();
        loop {
            let mut list = pick.clone();
            list.extend(seen..seen + fresh);
            lists.push(list);
            let r = enumerate(g, k, mode, lists, seen + fresh, meter, unknown)?;
            lists.pop();
            if r.is_some() {
                return Ok(r);
            }
            if !next_combination(&mut pick, seen) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances a sorted `r`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    for i in (0..r).rev() {
        if c[i] < n - r + i {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Equitable coloring of the star `K_{1,2k}` from `k`-lists, `k >= 3`: the
/// center takes its smallest color, then each leaf the smallest color of
/// its list that differs from the center's and is used fewer than three
/// times.
pub fn star_greedy_list_color(g: &Graph, lists: &ListAssignment) -> Result<Coloring, SolveError> {
    let k = lists.k();
    if k < 3 {
        return Err(SolveError::Precondition(format!("needs lists of size at least 3, got {k}")));
    }
    let n = g.n();
    let center = (0..n).find(|&v| g.degree(v) == 2 * k);
    let Some(center) = center.filter(|_| n == 2 * k + 1 && g.edge_count() == 2 * k) else {
        return Err(SolveError::Precondition(format!("graph is not the star K_1,{}", 2 * k)));
    };
    if lists.n() != n {
        return Err(SolveError::Precondition(format!("{} lists for {n} vertices", lists.n())));
    }
    let mut colors = vec![0; n];
    colors[center] = lists.list(center)[0];
    let mut uses = std::collections::BTreeMap::new();
    for v in (0..n).filter(|&v| v != center) {
        let c = lists
            .list(v)
            .iter()
            .copied()
            .find(|&c| c != colors[center] && uses.get(&c).copied().unwrap_or(0) < 3)
            .ok_or_else(|| {
                SolveError::internal(format!("leaf {v} has no usable color"), format!("{uses:?}"))
            })?;
        colors[v] = c;
        *uses.entry(c).or_insert(0) += 1;
    }
    Ok(Coloring::from_colors(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{check_coloring, Mode};
    use crate::generators::{self, gk_example, gk_list_assignment, star};
    use crate::oracle::decide_equitable;

    fn list_mode<'a>(mode: ListMode, l: &'a ListAssignment) -> Mode<'a> {
        match mode {
            ListMode::Equitable => Mode::EquitableList(l),
            ListMode::Se => Mode::SeList(l),
            ListMode::Proportional => Mode::Proportional(l),
        }
    }

    #[test]
    fn gk3_has_no_equitable_list_coloring() {
        let g = gk_example(3).unwrap();
        let l = gk_list_assignment(3).unwrap();
        assert_eq!(g.n(), 48);
        let d = decide_list(&g, &l, ListMode::Equitable, SearchBudget::unlimited()).unwrap();
        assert!(d.is_no());
    }

    #[test]
    fn constant_lists_match_plain_equitable() {
        for code in 0u32..1 << 10 {
            let edges = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)));
            let g =
                Graph::from_edges(5, edges.enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, e)| e))
                    .unwrap();
            for k in 1..=5 {
                let l = ListAssignment::constant(5, k);
                let se = decide_list(&g, &l, ListMode::Se, SearchBudget::unlimited()).unwrap();
                let eq = decide_equitable(&g, k, SearchBudget::unlimited()).unwrap();
                assert_eq!(se.is_yes(), eq.is_yes(), "code {code} k {k}");
            }
        }
    }

    #[test]
    fn certificates_validate() {
        let mut rng = crate::rng::Lcg::new(9);
        for seed in 0..200 {
            let n = 3 + seed as usize % 6;
            let k = 2 + seed as usize % 2;
            let g = generators::random_graph_bounded_degree(n, 3, seed);
            let lists: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    let mut pal: Vec<usize> = (0..2 * k).collect();
                    rng.shuffle(&mut pal);
                    pal.truncate(k);
                    pal
                })
                .collect();
            let l = ListAssignment::new(k, lists).unwrap();
            for mode in [ListMode::Equitable, ListMode::Se, ListMode::Proportional] {
                if let Decision::Yes(f) = decide_list(&g, &l, mode, SearchBudget::unlimited()).unwrap() {
                    assert!(
                        check_coloring(&g, &f, list_mode(mode, &l)).unwrap().ok(),
                        "seed {seed} {mode:?}"
                    );
                    if mode == ListMode::Se {
                        assert!(check_coloring(&g, &f, Mode::EquitableList(&l)).unwrap().ok());
                    }
                }
            }
        }
    }

    #[test]
    fn single_vertex_proportional() {
        let l = ListAssignment::new(1, vec![vec![4]]).unwrap();
        let d = decide_list(&Graph::empty(1), &l, ListMode::Proportional, SearchBudget::unlimited()).unwrap();
        assert!(d.is_yes());
    }

    #[test]
    fn choosability_small_cases() {
        for mode in [ListMode::Equitable, ListMode::Se, ListMode::Proportional] {
            for k in 1..4 {
                let r = decide_choosable(&Graph::empty(1), k, mode, SearchBudget::unlimited()).unwrap();
                assert_eq!(r, Choosability::Yes);
            }
        }
        let k2 = generators::complete(2);
        assert_eq!(
            decide_choosable(&k2, 2, ListMode::Equitable, SearchBudget::unlimited()).unwrap(),
            Choosability::Yes
        );
    }

    #[test]
    fn two_cherries_not_proportionally_choosable() {
        let g = star(2).disjoint_union(&star(2));
        match decide_choosable(&g, 2, ListMode::Proportional, SearchBudget::unlimited()).unwrap() {
            Choosability::No(l) => {
                let d = decide_list(&g, &l, ListMode::Proportional, SearchBudget::unlimited()).unwrap();
                assert!(d.is_no());
            }
            other => panic!("expected a counterexample, got {other:?}"),
        }
        // the known assignment: centers {1,2}, one cherry's leaves {1,3}, the other's {1,4}
        let l = ListAssignment::new(
            2,
            vec![vec![1, 2], vec![1, 3], vec![1, 3], vec![1, 2], vec![1, 4], vec![1, 4]],
        )
        .unwrap();
        assert!(decide_list(&g, &l, ListMode::Proportional, SearchBudget::unlimited()).unwrap().is_no());
    }

    #[test]
    fn combinations() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all.len(), 6);
        let mut empty: Vec<usize> = Vec::new();
        assert!(!next_combination(&mut empty, 3));
    }

    #[test]
    fn star_greedy() {
        for k in 3..=4 {
            let g = star(2 * k);
            let l = ListAssignment::constant(2 * k + 1, k);
            let f = star_greedy_list_color(&g, &l).unwrap();
            assert!(check_coloring(&g, &f, Mode::EquitableList(&l)).unwrap().ok());
            assert!(decide_equitable(&g, k, SearchBudget::unlimited()).unwrap().is_no());
        }
        let mut rng = crate::rng::Lcg::new(1);
        let g = star(6);
        for _ in 0..200 {
            let lists: Vec<Vec<usize>> = (0..7)
                .map(|_| {
                    let mut pal: Vec<usize> = (1..=9).collect();
                    rng.shuffle(&mut pal);
                    pal.truncate(3);
                    pal
                })
                .collect();
            let l = ListAssignment::new(3, lists).unwrap();
            let f = star_greedy_list_color(&g, &l).unwrap();
            assert!(check_coloring(&g, &f, Mode::EquitableList(&l)).unwrap().ok());
        }
        assert!(star_greedy_list_color(&star(4), &ListAssignment::constant(5, 2)).is_err());
        assert!(star_greedy_list_color(&generators::path(7), &ListAssignment::constant(7, 3)).is_err());
    }
}
