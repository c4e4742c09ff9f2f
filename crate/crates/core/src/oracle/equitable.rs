use crate::coloring::Coloring;
use crate::error::SolveError;
use crate::graph::Graph;

use super::{Decision, Meter, SearchBudget};

/// Decides whether `g` has an equitable `k`-coloring by backtracking over
/// the vertices in degeneracy order.
pub fn decide_equitable(g: &Graph, k: usize, budget: SearchBudget) -> Result<Decision, SolveError> {
    decide_equitable_in_order(g, k, budget, &g.degeneracy_order())
}

/// As [`decide_equitable`], assigning vertices in the given order.
pub fn decide_equitable_in_order(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
    order: &[usize],
) -> Result<Decision, SolveError> {
    if k == 0 {
        return Err(SolveError::Precondition("k must be positive".into()));
    }
    let n = g.n();
    if order.len() != n {
        return Err(SolveError::Precondition(format!("order covers {} of {n} vertices", order.len())));
    }
    let mut meter = Meter::new(budget);
    Ok(match search(g, k, order, &mut meter) {
        Some(f) => Decision::Yes(f),
        None if meter.exhausted() => Decision::Unknown,
        None => Decision::No,
    })
}

/// The search behind [`decide_equitable`] on a caller's meter; `None` means
/// no coloring or an exhausted meter.
pub(crate) fn search(g: &Graph, k: usize, order: &[usize], meter: &mut Meter) -> Option<Coloring> {
    let n = g.n();
    let mut s = Search {
        g,
        order,
        k,
        m: n / k,
        r: n % k,
        words: g.words_per_row(),
        bits: vec![0; k * g.words_per_row()],
        size: vec![0; k],
        color: vec![0; n],
        full: 0,
        opened: 0,
        deficit: k * (n / k),
    };
    s.run(0, meter).then(|| Coloring::new(k, s.color).expect("colors below k"))
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    k: usize,
    m: usize,
    /// Number of classes that end with `m + 1` vertices.
    r: usize,
    words: usize,
    bits: Vec<u64>,
    size: Vec<usize>,
    color: Vec<usize>,
    /// Classes holding `m + 1` vertices.
    full: usize,
    /// Classes used so far; they are always `0..opened`.
    opened: usize,
    /// Vertices still needed to bring every class up to `m`.
    deficit: usize,
}

impl Search<'_> {
    fn fits(&self, v: usize, c: usize) -> bool {
        let row = self.g.row(v);
        let class = &self.bits[c * self.words..(c + 1) * self.words];
        row.iter().zip(class).all(|(a, b)| a & b == 0)
    }

    fn run(&mut self, i: usize, meter: &mut Meter) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        let left = self.order.len() - i - 1;
        for c in 0..self.k.min(self.opened + 1) {
            let sz = self.size[c];
            if sz == self.m + 1 || (sz == self.m && self.full == self.r) {
                continue;
            }
            let deficit = self.deficit - usize::from(sz < self.m);
            if deficit > left || !self.fits(v, c) {
                continue;
            }
            if !meter.tick() {
                return false;
            }
            self.bits[c * self.words + v / 64] |= 1 << (v % 64);
            self.size[c] += 1;
            self.full += usize::from(sz == self.m);
            let opened = self.opened;
            self.opened = self.opened.max(c + 1);
            let saved = self.deficit;
            self.deficit = deficit;
            self.color[v] = c;
            if self.run(i + 1, meter) {
                return true;
            }
            self.deficit = saved;
            self.opened = opened;
            self.full -= usize::from(sz == self.m);
            self.size[c] -= 1;
            self.bits[c * self.words + v / 64] &= !(1 << (v % 64));
            if meter.exhausted() {
                return false;
            }
        }
        false
    }
}
