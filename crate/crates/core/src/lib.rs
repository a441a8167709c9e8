//! Exact solvers for making a graph's minimum vertex cover unique with the
//! fewest pre-assigned vertices.
//!
//! A pre-assignment fixes some vertices inside the target cover (Include),
//! some outside it (Exclude), or both (Mixed). It is feasible when exactly one
//! minimum vertex cover agrees with it. The crate provides:
//!
//! - [`graph`]: bitset graphs, DIMACS/JSON I/O, classification;
//! - [`vc`]: exact minimum vertex cover, König covers, branching leaves,
//!   enumeration of all minimum covers;
//! - [`uniqueness`]: feasibility checks and instance reduction;
//! - [`solvers`]: subset enumeration, FPT solvers and the dispatcher;
//! - [`tree`]: the tree solver and the rooted I-subtree counter;
//! - [`reductions`]: 1-in-3 SAT and pendant gadgets;
//! - [`gen`]: seeded random instances.

pub mod assignment;
pub mod error;
pub mod gen;
pub mod graph;
pub mod reductions;
mod search;
pub mod setcover;
pub mod solvers;
pub mod tree;
pub mod uniqueness;
pub mod vc;

pub use assignment::{Model, PreAssignment, PreAssignmentJson};
pub use error::{Error, Limits, ParseError, Result};
pub use graph::{Graph, VertexMap, VertexSet};
pub use search::Stats;
pub use solvers::{solve, solve_with, Algo, PauResult, SolveOptions};
pub use uniqueness::{has_unique_min_vc, is_feasible, reduce_instance, FeasibilityReport, InfeasibleReason};
pub use vc::{enumerate_min_vertex_covers, min_vertex_cover, VcSolution};
