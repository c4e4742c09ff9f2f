//! Exact deciders by exhaustive search, used as ground truth for the
//! constructive solvers.
//!
//! Every search runs under a [`SearchBudget`]; running out of it yields
//! [`Decision::Unknown`], never a guess.

use std::time::{Duration, Instant};

use crate::coloring::{Coloring, ListAssignment};

mod equitable;
mod list;
mod m0;

pub use equitable::{decide_equitable, decide_equitable_in_order};
pub use list::{decide_choosable, decide_list, star_greedy_list_color, Choosability, ListMode};
pub use m0::{m0_exhaustive, m0_formula, M0Search, M0};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Search nodes (tentative assignments) before giving up.
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub const fn unlimited() -> Self {
        SearchBudget { node_limit: u64::MAX, time_limit: None }
    }

    pub const fn nodes(node_limit: u64) -> Self {
        SearchBudget { node_limit, time_limit: None }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { node_limit: 50_000_000, time_limit: Some(Duration::from_secs(60)) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Coloring),
    No,
    Unknown,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        }
    }
}

/// Counts search nodes against a budget. One meter may be shared by many
/// searches.
pub(crate) struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
    exhausted: bool,
}

impl Meter {
    pub fn new(budget: SearchBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            exhausted: false,
        }
    }

    /// Records a node; false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }
}

/// Lists of a [`ListAssignment`] as bit masks over palette positions.
pub(crate) fn palette_masks(lists: &ListAssignment) -> (Vec<usize>, Vec<u128>) {
    let palette: Vec<usize> = lists.palette().collect();
    let masks = lists
        .lists()
        .iter()
        .map(|l| {
            l.iter()
                .map(|c| 1u128 << palette.binary_search(c).expect("palette covers lists"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    (palette, masks)
}
