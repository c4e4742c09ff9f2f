use std::collections::BTreeMap;
use std::fmt;

use crate::error::ColoringError;
use crate::graph::Graph;

/// Assignment of a color in `0..k` to every vertex, with the color classes
/// kept alongside. Empty classes are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    color_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    pub fn new(k: usize, color_of: Vec<usize>) -> Result<Self, ColoringError> {
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in color_of.iter().enumerate() {
            if c >= k {
                return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k });
            }
            classes[c].push(v);
        }
        Ok(Coloring { color_of, classes })
    }

    /// Palette size taken as one more than the largest color used.
    pub fn from_colors(color_of: Vec<usize>) -> Self {
        let k = color_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        Coloring::new(k, color_of).expect("k covers every color")
    }

    /// Coloring whose classes are the given vertex sets, in order.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self, ColoringError> {
        let mut color_of = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n || color_of[v] != usize::MAX {
                    return Err(ColoringError::BadLists(format!(
                        "vertex {v} repeated or out of range in class list"
                    )));
                }
                color_of[v] = c;
            }
        }
        if let Some(v) = color_of.iter().position(|&c| c == usize::MAX) {
            return Err(ColoringError::BadLists(format!("vertex {v} left uncolored")));
        }
        Coloring::new(classes.len(), color_of)
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn n(&self) -> usize {
        self.color_of.len()
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.color_of[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color_of
    }

    /// Members of class `c` in ascending order.
    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Restriction to the vertices `0..n`.
    pub fn truncate(&self, n: usize) -> Coloring {
        Coloring::new(self.k(), self.color_of[..n].to_vec()).expect("same palette")
    }
}

/// A `k`-list assignment: every vertex gets a set of exactly `k` colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    k: usize,
    lists: Vec<Vec<usize>>,
    eta: BTreeMap<usize, usize>,
}

impl ListAssignment {
    /// Lists are sorted and must hold `k` distinct colors each.
    pub fn new(k: usize, lists: Vec<Vec<usize>>) -> Result<Self, ColoringError> {
        let mut eta = BTreeMap::new();
        let mut sorted = Vec::with_capacity(lists.len());
        for (v, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.len() != k {
                return Err(ColoringError::BadLists(format!(
                    "vertex {v} has {} distinct colors, expected {k}",
                    list.len()
                )));
            }
            for &c in &list {
                *eta.entry(c).or_insert(0) += 1;
            }
            sorted.push(list);
        }
        Ok(ListAssignment { k, lists: sorted, eta })
    }

    /// Every one of `n` vertices gets the list `0..k`.
    pub fn constant(n: usize, k: usize) -> Self {
        ListAssignment::new(k, vec![(0..k).collect(); n]).expect("constant lists")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn contains(&self, v: usize, c: usize) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    /// Number of lists containing `c`.
    pub fn eta(&self, c: usize) -> usize {
        self.eta.get(&c).copied().unwrap_or(0)
    }

    /// Colors appearing in some list, ascending.
    pub fn palette(&self) -> impl Iterator<Item = usize> + '_ {
        self.eta.keys().copied()
    }
}

/// The coloring notion to validate against.
#[derive(Debug, Clone, Copy)]
pub enum Mode<'a> {
    Proper,
    Equitable(usize),
    NearlyEquitable(usize),
    EquitableList(&'a ListAssignment),
    SeList(&'a ListAssignment),
    Proportional(&'a ListAssignment),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MonochromaticEdge {
        u: usize,
        v: usize,
        color: usize,
    },
    ClassSize {
        color: usize,
        size: usize,
        min: usize,
        max: usize,
    },
    NotDivisible {
        n: usize,
        k: usize,
    },
    /// Nearly equitable colorings need exactly one class of each of the
    /// sizes `n/k - 1` and `n/k + 1`.
    NearlyProfile {
        small: usize,
        large: usize,
    },
    NotInList {
        vertex: usize,
        color: usize,
    },
    TooManyFull {
        full: usize,
        allowed: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::MonochromaticEdge { u, v, color } => {
                write!(f, "edge {} {} monochromatic (color {color})", u + 1, v + 1)
            }
            Violation::ClassSize { color, size, min, max } => {
                write!(f, "class {color} has {size} vertices, allowed {min}..={max}")
            }
            Violation::NotDivisible { n, k } => write!(f, "{n} vertices not divisible by {k}"),
            Violation::NearlyProfile { small, large } => {
                write!(f, "found {small} small and {large} large classes, need exactly one of each")
            }
            Violation::NotInList { vertex, color } => {
                write!(f, "vertex {} colored {color} outside its list", vertex + 1)
            }
            Violation::TooManyFull { full, allowed } => {
                write!(f, "{full} full classes, at most {allowed} allowed")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `n mod* k`: the unique `m` in `1..=k` with `n - m` divisible by `k`.
pub fn mod_star(n: usize, k: usize) -> usize {
    match n % k {
        0 => k,
        r => r,
    }
}

/// Validates `f` on `g` under `mode`.
///
/// Structural problems (wrong length, a color outside the mode's palette,
/// lists not covering the graph) are errors; everything else is reported
/// in the verdict.
pub fn check_coloring(g: &Graph, f: &Coloring, mode: Mode<'_>) -> Result<Verdict, ColoringError> {
    let n = g.n();
    if f.n() != n {
        return Err(ColoringError::LengthMismatch { expected: n, got: f.n() });
    }
    let mut violations = Vec::new();
    for (u, v) in g.edges() {
        if f.color(u) == f.color(v) {
            violations.push(Violation::MonochromaticEdge { u, v, color: f.color(u) });
        }
    }

    match mode {
        Mode::Proper => {}
        Mode::Equitable(k) | Mode::NearlyEquitable(k) => {
            if k == 0 && n > 0 {
                return Err(ColoringError::ColorOutOfRange { vertex: 0, color: f.color(0), k });
            }
            let mut sizes = vec![0usize; k];
            for (v, &c) in f.colors().iter().enumerate() {
                if c >= k {
                    return Err(ColoringError::ColorOutOfRange { vertex: v, color: c, k });
                }
                sizes[c] += 1;
            }
            if let Mode::Equitable(_) = mode {
                let (lo, hi) = (n / k, n.div_ceil(k));
                for (color, &size) in sizes.iter().enumerate() {
                    if size < lo || size > hi {
                        violations.push(Violation::ClassSize { color, size, min: lo, max: hi });
                    }
                }
            } else if !n.is_multiple_of(k) {
                violations.push(Violation::NotDivisible { n, k });
            } else {
                let m = n / k;
                let small = sizes.iter().filter(|&&s| s + 1 == m).count();
                let large = sizes.iter().filter(|&&s| s == m + 1).count();
                for (color, &size) in sizes.iter().enumerate() {
                    if size + 1 < m || size > m + 1 {
                        violations.push(Violation::ClassSize {
                            color,
                            size,
                            min: m.saturating_sub(1),
                            max: m + 1,
                        });
                    }
                }
                if small != 1 || large != 1 {
                    violations.push(Violation::NearlyProfile { small, large });
                }
            }
        }
        Mode::EquitableList(lists) | Mode::SeList(lists) | Mode::Proportional(lists) => {
            if lists.n() != n {
                return Err(ColoringError::BadLists(format!("{} lists for {n} vertices", lists.n())));
            }
            let k = lists.k();
            if k == 0 && n > 0 {
                return Err(ColoringError::BadLists("list size 0".into()));
            }
            let mut used: BTreeMap<usize, usize> = BTreeMap::new();
            for v in 0..n {
                let c = f.color(v);
                if !lists.contains(v, c) {
                    violations.push(Violation::NotInList { vertex: v, color: c });
                }
                *used.entry(c).or_insert(0) += 1;
            }
            match mode {
                Mode::Proportional(_) => {
                    for c in
                        lists.palette().chain(used.keys().copied()).collect::<std::collections::BTreeSet<_>>()
                    {
                        let eta = lists.eta(c);
                        let (lo, hi) = (eta / k, eta.div_ceil(k));
                        let size = used.get(&c).copied().unwrap_or(0);
                        if size < lo || size > hi {
                            violations.push(Violation::ClassSize { color: c, size, min: lo, max: hi });
                        }
                    }
                }
                _ => {
                    let cap = n.div_ceil(k);
                    for (&color, &size) in &used {
                        if size > cap {
                            violations.push(Violation::ClassSize { color, size, min: 0, max: cap });
                        }
                    }
                    if let Mode::SeList(_) = mode {
                        let full = used.values().filter(|&&s| s == cap).count();
                        let allowed = mod_star(n, k);
                        if full > allowed {
                            violations.push(Violation::TooManyFull { full, allowed });
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict { violations })
}
