//! Shift machinery shared by the bounded-degree and Ore-degree solvers.
//!
//! A *shift* moves one vertex to another color class. The auxiliary color
//! digraph has an arc `s -> t` whenever some vertex of class `s` has no
//! neighbor in class `t`; that vertex *witnesses* the arc and can be
//! shifted along it without breaking properness.

pub(crate) mod engine;

use std::collections::VecDeque;
use std::fmt;

use crate::coloring::{check_coloring, Coloring, Mode};
use crate::error::SolveError;
use crate::graph::Graph;

pub(crate) use engine::Engine;

/// Color of a vertex that has been lifted out of every class during a
/// composite move.
pub const DETACHED: usize = usize::MAX;

/// One move of a vertex between classes. `from` or `to` is [`DETACHED`]
/// when the vertex leaves or re-enters the coloring. A `joint` move is
/// completed by later moves: the coloring right after it need not be proper.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shift {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
    pub joint: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShiftLog {
    entries: Vec<Shift>,
}

impl ShiftLog {
    pub fn new(entries: Vec<Shift>) -> Self {
        ShiftLog { entries }
    }

    pub fn entries(&self) -> &[Shift] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of class changes. Lifting a vertex out and putting it back
    /// counts once.
    pub fn shift_count(&self) -> usize {
        self.entries.iter().filter(|s| s.to != DETACHED).count()
    }

    /// Applies the log to `initial`, checking that the coloring of `g` is
    /// proper after every non-joint entry.
    pub fn replay_checked(&self, g: &Graph, initial: &Coloring) -> Result<Coloring, String> {
        let mut colors = initial.colors().to_vec();
        let mut pending = Vec::new();
        for (i, s) in self.entries.iter().enumerate() {
            if colors[s.vertex] != s.from {
                return Err(format!(
                    "entry {i}: vertex {} has color {}, log says {}",
                    s.vertex, colors[s.vertex], s.from
                ));
            }
            colors[s.vertex] = s.to;
            pending.push(s.vertex);
            if !s.joint {
                for v in pending.drain(..) {
                    if colors[v] == DETACHED {
                        return Err(format!("entry {i}: vertex {v} still detached"));
                    }
                    if let Some(&u) = g.neighbors(v).iter().find(|&&u| colors[u] == colors[v]) {
                        return Err(format!("entry {i}: edge {u} {v} monochromatic"));
                    }
                }
            }
        }
        if !pending.is_empty() {
            return Err("log ends inside a joint move".into());
        }
        Coloring::new(initial.k(), colors).map_err(|e| e.to_string())
    }
}

/// The auxiliary digraph on colors, with the lowest-index witness per arc.
#[derive(Clone, PartialEq, Eq)]
pub struct ColorDigraph {
    k: usize,
    witness: Vec<usize>,
}

impl fmt::Debug for ColorDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<(usize, usize, usize)> = (0..self.k)
            .flat_map(|s| (0..self.k).map(move |t| (s, t)))
            .filter_map(|(s, t)| self.witness(s, t).map(|w| (s, t, w)))
            .collect();
        f.debug_struct("ColorDigraph").field("k", &self.k).field("arcs", &arcs).finish()
    }
}

impl ColorDigraph {
    pub(crate) fn of_engine(e: &Engine, active: &[usize]) -> Self {
        let k = e.k();
        let mut witness = vec![usize::MAX; k * k];
        for &s in active {
            for &y in e.class(s) {
                for &t in active {
                    if t != s && e.cnt(y, t) == 0 && y < witness[s * k + t] {
                        witness[s * k + t] = y;
                    }
                }
            }
        }
        ColorDigraph { k, witness }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn has_arc(&self, s: usize, t: usize) -> bool {
        self.witness[s * self.k + t] != usize::MAX
    }

    pub fn witness(&self, s: usize, t: usize) -> Option<usize> {
        Some(self.witness[s * self.k + t]).filter(|&w| w != usize::MAX)
    }

    pub fn arc_count(&self) -> usize {
        self.witness.iter().filter(|&&w| w != usize::MAX).count()
    }

    /// Colors in `allowed` that reach `target` through `allowed`, in BFS
    /// order from `target` along reversed arcs (lowest color first on ties).
    pub fn reaching(&self, target: usize, allowed: &[bool]) -> Vec<usize> {
        if !allowed[target] {
            return Vec::new();
        }
        let mut seen = vec![false; self.k];
        seen[target] = true;
        let mut order = vec![target];
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            i += 1;
            for s in 0..self.k {
                if allowed[s] && !seen[s] && self.has_arc(s, t) {
                    seen[s] = true;
                    order.push(s);
                }
            }
        }
        order
    }

    /// Colors in `allowed` reachable from `source` through `allowed`.
    pub fn reachable_from(&self, source: usize, allowed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.k];
        if !allowed[source] {
            return seen;
        }
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(s) = queue.pop_front() {
            for t in 0..self.k {
                if allowed[t] && !seen[t] && self.has_arc(s, t) {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Shortest `from -> to` path inside `allowed`; among shortest paths the
    /// BFS explores out-neighbors in ascending color order.
    pub fn shortest_path(&self, from: usize, to: usize, allowed: &[bool]) -> Option<Vec<usize>> {
        if !allowed[from] || !allowed[to] {
            return None;
        }
        let mut parent = vec![usize::MAX; self.k];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(s) = queue.pop_front() {
            if s == to {
                let mut path = vec![to];
                let mut c = to;
                while c != from {
                    c = parent[c];
                    path.push(c);
                }
                path.reverse();
                return Some(path);
            }
            for t in 0..self.k {
                if allowed[t] && parent[t] == usize::MAX && self.has_arc(s, t) {
                    parent[t] = s;
                    queue.push_back(t);
                }
            }
        }
        None
    }
}

/// Digraph of a proper coloring of `g`, over all `f.k()` colors.
pub fn build_color_digraph(g: &Graph, f: &Coloring) -> ColorDigraph {
    let e = Engine::from_graph(g, f, u64::MAX);
    let all: Vec<usize> = (0..f.k()).collect();
    ColorDigraph::of_engine(&e, &all)
}

/// Analysis of a nearly equitable coloring restricted to the classes in
/// `active`.
pub(crate) struct Split {
    pub active: Vec<usize>,
    pub m: usize,
    pub small: usize,
    pub large: usize,
    pub h: ColorDigraph,
    pub in_a: Vec<bool>,
    pub in_b: Vec<bool>,
    /// A-colors in BFS order from `small` along reversed arcs.
    pub a_order: Vec<usize>,
    pub b_colors: Vec<usize>,
    pub terminal: Vec<bool>,
    pub b_prime: Vec<bool>,
}

impl Split {
    /// `Ok(None)` when the active classes are already equitable.
    pub fn analyze(e: &Engine, active: &[usize]) -> Result<Option<Split>, SolveError> {
        let k = e.k();
        if active.is_empty() {
            return Ok(None);
        }
        let total: usize = active.iter().map(|&c| e.size(c)).sum();
        if !total.is_multiple_of(active.len()) {
            return Err(SolveError::Contract(format!(
                "{total} vertices over {} classes is not a multiple",
                active.len()
            )));
        }
        let m = total / active.len();
        let mut small = None;
        let mut large = None;
        for &c in active {
            let s = e.size(c);
            if s == m {
                continue;
            }
            let slot = if s + 1 == m {
                &mut small
            } else if s == m + 1 {
                &mut large
            } else {
                return Err(SolveError::Contract(format!(
                    "class {c} has {s} vertices, nearly equitable needs {}..={}",
                    m.saturating_sub(1),
                    m + 1
                )));
            };
            if slot.replace(c).is_some() {
                return Err(SolveError::Contract("more than one small or large class".into()));
            }
        }
        let (small, large) = match (small, large) {
            (None, None) => return Ok(None),
            (Some(s), Some(l)) => (s, l),
            _ => unreachable!("sizes sum to a multiple of the class count"),
        };

        let h = ColorDigraph::of_engine(e, active);
        let mut mask = vec![false; k];
        for &c in active {
            mask[c] = true;
        }
        let a_order = h.reaching(small, &mask);
        let mut in_a = vec![false; k];
        for &c in &a_order {
            in_a[c] = true;
        }
        let in_b: Vec<bool> = (0..k).map(|c| mask[c] && !in_a[c]).collect();
        let b_colors: Vec<usize> = active.iter().copied().filter(|&c| in_b[c]).collect();

        let mut terminal = vec![false; k];
        if a_order.len() == 1 {
            terminal[small] = true;
        } else {
            for &alpha in &a_order {
                if alpha == small {
                    continue;
                }
                let mut allowed = in_a.clone();
                allowed[alpha] = false;
                terminal[alpha] = h.reaching(small, &allowed).len() + 1 == a_order.len();
            }
        }
        let b_prime = if in_b[large] { h.reachable_from(large, &in_b) } else { vec![false; k] };
        Ok(Some(Split {
            active: active.to_vec(),
            m,
            small,
            large,
            h,
            in_a,
            in_b,
            a_order,
            b_colors,
            terminal,
            b_prime,
        }))
    }

    pub fn a(&self) -> usize {
        self.a_order.len()
    }

    pub fn b(&self) -> usize {
        self.b_colors.len()
    }

    pub fn a_prime(&self) -> usize {
        self.terminal.iter().filter(|&&t| t).count()
    }

    /// Solo leaves of `w` (whose class must be terminal), ascending.
    pub fn solo_leaves(&self, e: &Engine, w: usize) -> Vec<usize> {
        let cw = e.color(w);
        let mut leaves: Vec<usize> = e
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&z| {
                let cz = e.color(z);
                cz != DETACHED && self.in_b[cz] && e.cnt(z, cw) == 1
            })
            .collect();
        leaves.sort_unstable();
        leaves
    }

    /// Vertices of the classes selected by `mask`, ascending.
    pub fn vertices(&self, e: &Engine, mask: &[bool]) -> Vec<usize> {
        let mut vs: Vec<usize> =
            self.active.iter().filter(|&&c| mask[c]).flat_map(|&c| e.class(c).iter().copied()).collect();
        vs.sort_unstable();
        vs
    }

    /// Number of solo roots of `z` (a B-side vertex) among `roots_mask` classes.
    pub fn solo_roots(&self, e: &Engine, z: usize, roots_mask: &[bool]) -> usize {
        self.active.iter().filter(|&&c| roots_mask[c] && self.terminal[c] && e.cnt(z, c) == 1).count()
    }

    /// `||z, A|| >= a + a' - s_z` for every B-side vertex.
    pub fn check_solo_inequality(&self, e: &Engine) -> Result<(), SolveError> {
        let (a, ap) = (self.a(), self.a_prime());
        for z in self.vertices(e, &self.in_b) {
            let to_a: usize = self.a_order.iter().map(|&c| e.cnt(z, c)).sum();
            let s = self.solo_roots(e, z, &self.in_a);
            if to_a + s < a + ap {
                return Err(SolveError::internal(
                    format!("vertex {z}: ||z,A|| = {to_a} < a + a' - s_z = {}", a + ap - s),
                    e.dump(),
                ));
            }
        }
        Ok(())
    }
}

/// The A/B split of a nearly equitable coloring with its derived sets.
#[derive(Debug, Clone)]
pub struct RebalanceState {
    pub coloring: Coloring,
    pub digraph: ColorDigraph,
    pub m: usize,
    pub small: usize,
    pub large: usize,
    /// Colors reaching `small`, in BFS order from `small`.
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub a_prime: Vec<usize>,
    pub b_prime: Vec<usize>,
    /// Solo edges `(root, leaf)`, sorted.
    pub solo: Vec<(usize, usize)>,
}

impl RebalanceState {
    /// `f` must be a proper nearly equitable coloring of `g`.
    pub fn analyze(g: &Graph, f: &Coloring) -> Result<Self, SolveError> {
        let verdict = check_coloring(g, f, Mode::NearlyEquitable(f.k()))
            .map_err(|e| SolveError::Contract(e.to_string()))?;
        if let Some(v) = verdict.violations.first() {
            return Err(SolveError::Contract(format!("not nearly equitable: {v}")));
        }
        let e = Engine::from_graph(g, f, u64::MAX);
        let all: Vec<usize> = (0..f.k()).collect();
        let split = Split::analyze(&e, &all)?.expect("nearly equitable is not equitable");
        let pick = |mask: &[bool]| all.iter().copied().filter(|&c| mask[c]).collect::<Vec<_>>();
        let mut solo = Vec::new();
        if !split.in_a[split.large] {
            for &c in &split.a_order {
                if split.terminal[c] {
                    for &w in e.class(c) {
                        solo.extend(split.solo_leaves(&e, w).into_iter().map(|z| (w, z)));
                    }
                }
            }
        }
        solo.sort_unstable();
        Ok(RebalanceState {
            coloring: f.clone(),
            digraph: split.h.clone(),
            m: split.m,
            small: split.small,
            large: split.large,
            a: split.a_order.clone(),
            b: split.b_colors.clone(),
            a_prime: pick(&split.terminal),
            b_prime: pick(&split.b_prime),
            solo,
        })
    }
}
