use crate::error::SolveError;
use crate::graph::Graph;

use super::{equitable, Meter, SearchBudget};

/// Minimum number of edges of an `n`-vertex graph with no equitable
/// `k`-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum M0 {
    Finite(usize),
    /// Every graph on `n <= k` vertices is equitably `k`-colorable.
    Infinite,
}

impl std::fmt::Display for M0 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            M0::Finite(m) => write!(f, "{m}"),
            M0::Infinite => f.write_str("inf"),
        }
    }
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Closed form: `K_{k+1}` plus isolated vertices, or for `k < n <= 2k`
/// the complement of a clique on `2(n-k)-1` vertices, or for `n >= 2k` a
/// star with `n - floor(n/k) + 1` leaves, whichever is smallest.
pub fn m0_formula(n: usize, k: usize) -> Result<M0, SolveError> {
    if k < 2 {
        return Err(SolveError::Precondition(format!("k must be at least 2, got {k}")));
    }
    if n <= k {
        return Ok(M0::Infinite);
    }
    let clique = binom2(k + 1);
    let dense = || binom2(n) - binom2(2 * (n - k) - 1);
    let sparse = || n - n / k + 1;
    let other = match n.cmp(&(2 * k)) {
        std::cmp::Ordering::Less => dense(),
        std::cmp::Ordering::Greater => sparse(),
        std::cmp::Ordering::Equal => {
            if dense() != sparse() {
                return Err(SolveError::internal(
                    format!("formula branches disagree at n = 2k = {n}: {} vs {}", dense(), sparse()),
                    "",
                ));
            }
            sparse()
        }
    };
    Ok(M0::Finite(clique.min(other)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M0Search {
    /// `None` when the budget ran out first.
    pub value: Option<M0>,
    /// A graph attaining the value, lowest edge code first.
    pub witness: Option<Graph>,
}

/// Minimum over all labeled graphs on `n <= 7` vertices, by increasing
/// edge count.
pub fn m0_exhaustive(n: usize, k: usize, budget: SearchBudget) -> Result<M0Search, SolveError> {
    if k < 2 {
        return Err(SolveError::Precondition(format!("k must be at least 2, got {k}")));
    }
    if n > 7 {
        return Err(SolveError::Precondition(format!("exhaustive search needs n <= 7, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let e = pairs.len();
    let mut meter = Meter::new(budget);
    for m in 0..=e {
        let mut code: u32 = (1u32 << m) - 1;
        loop {
            let g = Graph::from_edges(n, (0..e).filter(|&i| code >> i & 1 == 1).map(|i| pairs[i]))
                .expect("valid pairs");
            let order = g.degeneracy_order();
            if equitable::search(&g, k, &order, &mut meter).is_none() {
                if meter.exhausted() {
                    return Ok(M0Search { value: None, witness: None });
                }
                return Ok(M0Search { value: Some(M0::Finite(m)), witness: Some(g) });
            }
            if m == 0 || !next_same_popcount(&mut code, e) {
                break;
            }
        }
    }
    Ok(M0Search { value: Some(M0::Infinite), witness: None })
}

/// Gosper's hack: the next larger integer with the same number of set
/// bits, if it still fits in `bits` bits.
fn next_same_popcount(x: &mut u32, bits: usize) -> bool {
    let c = *x & x.wrapping_neg();
    let r = *x + c;
    let next = (((r ^ *x) >> 2) / c) | r;
    if bits < 32 && next >> bits != 0 {
        return false;
    }
    *x = next;
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(m0_formula(6, 3).unwrap(), M0::Finite(5));
        assert_eq!(m0_formula(4, 3).unwrap(), M0::Finite(6));
        assert_eq!(m0_formula(6, 2).unwrap(), M0::Finite(3));
        assert_eq!(m0_formula(5, 2).unwrap(), M0::Finite(3));
        assert_eq!(m0_formula(3, 3).unwrap(), M0::Infinite);
        assert_eq!(m0_formula(2, 5).unwrap(), M0::Infinite);
        assert!(m0_formula(5, 1).is_err());
        for k in 2..30 {
            assert!(m0_formula(2 * k, k).is_ok());
        }
    }

    #[test]
    fn gosper_visits_every_subset_once() {
        let mut x = 0b111u32;
        let mut count = 1;
        while next_same_popcount(&mut x, 6) {
            assert_eq!(x.count_ones(), 3);
            count += 1;
        }
        assert_eq!(count, 20);
    }

    #[test]
    fn exhaustive_small() {
        let r = m0_exhaustive(6, 3, SearchBudget::unlimited()).unwrap();
        assert_eq!(r.value, Some(M0::Finite(5)));
        let w = r.witness.unwrap();
        assert_eq!(w.max_degree(), 5);
        assert_eq!(m0_exhaustive(4, 3, SearchBudget::unlimited()).unwrap().value, Some(M0::Finite(6)));
        assert_eq!(m0_exhaustive(5, 2, SearchBudget::unlimited()).unwrap().value, Some(M0::Finite(3)));
        assert_eq!(m0_exhaustive(3, 3, SearchBudget::unlimited()).unwrap().value, Some(M0::Infinite));
    }

    #[test]
    fn exhaustive_budget() {
        assert_eq!(m0_exhaustive(6, 3, SearchBudget::nodes(50)).unwrap().value, None);
    }
}
