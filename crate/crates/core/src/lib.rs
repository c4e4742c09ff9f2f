//! Equitable graph coloring.
//!
//! A proper `k`-coloring is *equitable* when every color class has
//! `floor(n/k)` or `ceil(n/k)` vertices. This crate provides
//!
//! * constructive solvers: the shift-based rebalancing algorithm for
//!   `max_degree < k` ([`hs`]), its Ore-degree generalisation for
//!   `ore_degree < 2k` ([`ore`]) and the forest construction ([`forest`]);
//! * validators for proper, equitable, nearly equitable, list, strongly
//!   equitable and proportional colorings ([`coloring`]);
//! * exact backtracking oracles and extremal searches ([`oracle`]);
//! * generators for the standard instance families ([`generators`]) and
//!   DIMACS / coloring / list file formats ([`io`]).

pub mod coloring;
pub mod error;
pub mod forest;
pub mod generators;
pub mod graph;
pub mod hs;
pub mod io;
pub mod oracle;
pub mod ore;
pub mod rng;
mod shift;

pub use coloring::{check_coloring, Coloring, ListAssignment, Mode, Verdict, Violation};
pub use error::{ColoringError, GenError, GraphError, SolveError};
pub use graph::{degree_stats, DegreeStats, Graph};
pub use shift::{build_color_digraph, ColorDigraph, RebalanceState, Shift, ShiftLog, DETACHED};
