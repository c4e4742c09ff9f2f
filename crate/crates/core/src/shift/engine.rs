use crate::coloring::Coloring;
use crate::error::SolveError;
use crate::graph::Graph;

use super::{Shift, DETACHED};

/// Mutable coloring of a growing graph with per-vertex neighbor counts in
/// every class, so arc tests in the color digraph are a single lookup.
pub(crate) struct Engine {
    n: usize,
    k: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
    color: Vec<usize>,
    classes: Vec<Vec<usize>>,
    pos: Vec<usize>,
    /// `cnt[v * k + c]` = number of neighbors of `v` colored `c`.
    cnt: Vec<u32>,
    detached: usize,
    /// Vertices moved since the coloring was last known to be proper.
    pending: Vec<usize>,
    log: Vec<Shift>,
    cap: u64,
}

impl Engine {
    /// Edgeless graph on `colors.len()` vertices.
    pub fn new(k: usize, colors: Vec<usize>, cap: u64) -> Self {
        let n = colors.len();
        let words = n.div_ceil(64);
        let mut classes = vec![Vec::new(); k];
        let mut pos = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            pos[v] = classes[c].len();
            classes[c].push(v);
        }
        Engine {
            n,
            k,
            adj: vec![Vec::new(); n],
            words,
            bits: vec![0; n * words],
            color: colors,
            classes,
            pos,
            cnt: vec![0; n * k],
            detached: 0,
            pending: Vec::new(),
            log: Vec::new(),
            cap,
        }
    }

    pub fn from_graph(g: &Graph, f: &Coloring, cap: u64) -> Self {
        let mut e = Engine::new(f.k(), f.colors().to_vec(), cap);
        for (u, v) in g.edges() {
            e.insert_edge(u, v);
        }
        e
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        let (cu, cv) = (self.color[u], self.color[v]);
        if cv != DETACHED {
            self.cnt[u * self.k + cv] += 1;
        }
        if cu != DETACHED {
            self.cnt[v * self.k + cu] += 1;
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.color[v]
    }

    /// Members of class `c`, in no particular order.
    #[inline]
    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    #[inline]
    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    /// `||v, class c||`.
    #[inline]
    pub fn cnt(&self, v: usize, c: usize) -> usize {
        self.cnt[v * self.k + c] as usize
    }

    pub fn has_conflict(&self, v: usize) -> bool {
        let c = self.color[v];
        c != DETACHED && self.cnt(v, c) > 0
    }

    #[cfg(test)]
    pub fn log(&self) -> &[Shift] {
        &self.log
    }

    pub fn take_log(&mut self) -> Vec<Shift> {
        std::mem::take(&mut self.log)
    }

    pub fn moves(&self) -> usize {
        self.log.len()
    }

    pub fn coloring(&self) -> Coloring {
        debug_assert_eq!(self.detached, 0);
        Coloring::new(self.k, self.color.clone()).expect("colors stay below k")
    }

    /// Lowest-index vertex of class `from` with no neighbor in class `to`,
    /// other than `exclude`.
    pub fn witness(&self, from: usize, to: usize, exclude: Option<usize>) -> Option<usize> {
        self.classes[from].iter().copied().filter(|&y| self.cnt(y, to) == 0 && Some(y) != exclude).min()
    }

    /// Moves `v` to `to`, either of which may be [`DETACHED`]. A `joint`
    /// move may leave the coloring improper; the next moves must repair it.
    pub fn shift(&mut self, v: usize, to: usize, joint: bool) -> Result<(), SolveError> {
        if self.log.len() as u64 >= self.cap {
            return Err(SolveError::StepCap(self.cap));
        }
        let from = self.color[v];
        debug_assert_ne!(from, to);
        if from == DETACHED {
            self.detached -= 1;
        } else {
            let i = self.pos[v];
            self.classes[from].swap_remove(i);
            if let Some(&moved) = self.classes[from].get(i) {
                self.pos[moved] = i;
            }
            for &u in &self.adj[v] {
                self.cnt[u * self.k + from] -= 1;
            }
        }
        if to == DETACHED {
            self.detached += 1;
        } else {
            self.pos[v] = self.classes[to].len();
            self.classes[to].push(v);
            for &u in &self.adj[v] {
                self.cnt[u * self.k + to] += 1;
            }
        }
        self.color[v] = to;
        let joint = joint || self.detached > 0;
        if cfg!(debug_assertions) {
            self.pending.push(v);
            if !joint {
                for x in std::mem::take(&mut self.pending) {
                    let c = self.color[x];
                    assert!(
                        self.adj[x].iter().all(|&u| self.color[u] != c),
                        "vertex {x} in class {c} has a neighbor there after a shift"
                    );
                }
            }
        }
        self.log.push(Shift { vertex: v, from, to, joint });
        Ok(())
    }

    /// Shift along the color path `path[0] -> .. -> path[last]`, each step
    /// moving the current lowest-index witness. `exclude` is never used as
    /// the first witness.
    pub fn shift_path(&mut self, path: &[usize], exclude: Option<usize>) -> Result<(), SolveError> {
        for (i, step) in path.windows(2).enumerate() {
            let (s, t) = (step[0], step[1]);
            let y = self.witness(s, t, if i == 0 { exclude } else { None }).ok_or_else(|| {
                SolveError::internal(format!("arc {s}->{t} lost its witness while shifting"), self.dump())
            })?;
            self.shift(y, t, false)?;
        }
        Ok(())
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        for c in 0..self.k {
            let mut class = self.classes[c].clone();
            class.sort_unstable();
            out.push_str(&format!("class {c} ({}): {class:?}\n", class.len()));
        }
        let detached: Vec<usize> = (0..self.n).filter(|&v| self.color[v] == DETACHED).collect();
        if !detached.is_empty() {
            out.push_str(&format!("detached: {detached:?}\n"));
        }
        out
    }
}
