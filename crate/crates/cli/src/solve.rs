use std::fmt;

use clap::ValueEnum;
use equitable::forest::{forest_equitable_color, forest_feasible};
use equitable::hs::equitable_color_hs;
use equitable::oracle::{decide_equitable, Decision, SearchBudget};
use equitable::ore::equitable_color_ore;
use equitable::{Coloring, Graph, ShiftLog, SolveError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Hs,
    Ore,
    Forest,
    Auto,
}

/// What actually ran; `auto` resolves to one of the others.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Used {
    Hs,
    Ore,
    Forest,
    Oracle,
}

impl fmt::Display for Used {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Used::Hs => "hs",
            Used::Ore => "ore",
            Used::Forest => "forest",
            Used::Oracle => "oracle",
        })
    }
}

pub enum Solved {
    Colored {
        coloring: Coloring,
        log: Option<ShiftLog>,
    },
    /// Proven: no equitable `k`-coloring exists.
    Infeasible(String),
    /// The algorithm's hypothesis fails, or the search ran out of budget.
    NotApplicable(String),
}

pub fn solve(g: &Graph, k: usize, algo: Algo, budget: SearchBudget) -> Result<(Used, Solved), SolveError> {
    match algo {
        Algo::Hs => Ok((Used::Hs, hs(g, k)?)),
        Algo::Ore => Ok((Used::Ore, ore(g, k)?)),
        Algo::Forest => Ok((Used::Forest, forest(g, k)?)),
        Algo::Auto => {
            if g.is_forest() && k >= 3 {
                Ok((Used::Forest, forest(g, k)?))
            } else if g.max_degree() < k {
                Ok((Used::Hs, hs(g, k)?))
            } else if g.ore_degree() < 2 * k {
                Ok((Used::Ore, ore(g, k)?))
            } else {
                Ok((Used::Oracle, oracle(g, k, budget)?))
            }
        }
    }
}

fn hs(g: &Graph, k: usize) -> Result<Solved, SolveError> {
    if g.max_degree() >= k {
        return Ok(Solved::NotApplicable(format!(
            "hs needs maximum degree below k, got {} >= {k}",
            g.max_degree()
        )));
    }
    let out = equitable_color_hs(g, k)?;
    Ok(Solved::Colored { coloring: out.coloring, log: Some(out.log) })
}

fn ore(g: &Graph, k: usize) -> Result<Solved, SolveError> {
    if g.ore_degree() >= 2 * k {
        return Ok(Solved::NotApplicable(format!(
            "ore needs Ore-degree below 2k, got {} >= {}",
            g.ore_degree(),
            2 * k
        )));
    }
    let out = equitable_color_ore(g, k)?;
    Ok(Solved::Colored { coloring: out.coloring, log: Some(out.log) })
}

fn forest(g: &Graph, k: usize) -> Result<Solved, SolveError> {
    if !g.is_forest() {
        return Ok(Solved::NotApplicable("forest needs an acyclic graph".into()));
    }
    if k < 3 {
        return Ok(Solved::NotApplicable(format!("forest needs k >= 3, got {k}")));
    }
    match forest_feasible(g, k)? {
        (true, _) => Ok(Solved::Colored { coloring: forest_equitable_color(g, k)?, log: None }),
        (false, witness) => Ok(Solved::Infeasible(format!(
            "vertex {} lies in no independent set of size {}",
            witness.expect("infeasible forests have a witness") + 1,
            g.n() / k
        ))),
    }
}

fn oracle(g: &Graph, k: usize, budget: SearchBudget) -> Result<Solved, SolveError> {
    Ok(match decide_equitable(g, k, budget)? {
        Decision::Yes(f) => Solved::Colored { coloring: f, log: None },
        Decision::No => Solved::Infeasible(format!("exhaustive search found no equitable {k}-coloring")),
        Decision::Unknown => {
            Solved::NotApplicable("no solver applies and the exact search ran out of budget".into())
        }
    })
}
