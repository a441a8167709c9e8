//! Unique-vertex-cover checks and the reduction of a feasible pre-assignment to
//! a graph with a unique minimum vertex cover.

use std::fmt;

use serde::Serialize;

use crate::assignment::PreAssignment;
use crate::error::{Error, Limits, Result};
use crate::graph::{Graph, VertexMap, VertexSet};
use crate::search::Search;
use crate::vc::{self, VcSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum InfeasibleReason {
    /// More than one minimum cover is consistent with the pre-assignment.
    NotUnique,
    /// No minimum cover of the graph is consistent with the pre-assignment.
    NotMinimumConsistent,
    /// Two excluded vertices are adjacent.
    ExcludeNotIndependent,
    /// A vertex is both included and excluded.
    Overlap,
}

impl fmt::Display for InfeasibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InfeasibleReason::NotUnique => "NotUnique",
            InfeasibleReason::NotMinimumConsistent => "NotMinimumConsistent",
            InfeasibleReason::ExcludeNotIndependent => "ExcludeNotIndependent",
            InfeasibleReason::Overlap => "Overlap",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// The unique minimum cover consistent with the pre-assignment, when feasible.
    pub witness: Option<VertexSet>,
    pub reason: Option<InfeasibleReason>,
}

impl FeasibilityReport {
    fn from_outcome(outcome: std::result::Result<VertexSet, InfeasibleReason>) -> Self {
        match outcome {
            Ok(w) => FeasibilityReport { feasible: true, witness: Some(w), reason: None },
            Err(r) => FeasibilityReport { feasible: false, witness: None, reason: Some(r) },
        }
    }
}

/// Uniqueness oracle for one graph with τ(G) computed once.
pub(crate) struct Uvc<'g> {
    g: &'g Graph,
    tau: usize,
}

impl<'g> Uvc<'g> {
    pub fn new(g: &'g Graph, tau: usize) -> Self {
        Uvc { g, tau }
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    /// Unique minimum cover of `G[alive]` provided it has size `target`.
    pub fn unique_within(
        &self,
        alive: &VertexSet,
        target: usize,
        search: &mut Search,
    ) -> std::result::Result<VertexSet, InfeasibleReason> {
        search.uvc_calls += 1;
        let g = self.g;
        let Some(cover) = vc::mvc_within(g, alive, target, &mut search.nodes) else {
            return Err(InfeasibleReason::NotMinimumConsistent);
        };
        if cover.len() != target {
            return Err(InfeasibleReason::NotMinimumConsistent);
        }
        // another minimum cover would avoid some v of this one and so contain N(v)
        for v in &cover {
            let nv = g.neighbors(v) & alive;
            let d = nv.len();
            if d > target {
                continue;
            }
            let mut rest = alive - &nv;
            rest.remove(v);
            if vc::mvc_within(g, &rest, target - d, &mut search.nodes).is_some() {
                return Err(InfeasibleReason::NotUnique);
            }
        }
        Ok(cover)
    }

    /// Feasibility of `(include, exclude)`; returns the witness cover.
    pub fn check(
        &self,
        include: &VertexSet,
        exclude: &VertexSet,
        search: &mut Search,
    ) -> std::result::Result<VertexSet, InfeasibleReason> {
        let g = self.g;
        if include.intersects(exclude) {
            return Err(InfeasibleReason::Overlap);
        }
        if exclude.iter().any(|v| g.neighbors(v).intersects(exclude)) {
            return Err(InfeasibleReason::ExcludeNotIndependent);
        }
        let forced = include | &g.neighborhood(exclude);
        if forced.len() > self.tau {
            return Err(InfeasibleReason::NotMinimumConsistent);
        }
        let alive = (g.vertices() - &forced) - exclude;
        let cover = self.unique_within(&alive, self.tau - forced.len(), search)?;
        Ok(cover | &forced)
    }

    pub fn check_include(
        &self,
        include: &VertexSet,
        search: &mut Search,
    ) -> std::result::Result<VertexSet, InfeasibleReason> {
        self.check(include, &self.g.empty_set(), search)
    }

    pub fn check_exclude(
        &self,
        exclude: &VertexSet,
        search: &mut Search,
    ) -> std::result::Result<VertexSet, InfeasibleReason> {
        self.check(&self.g.empty_set(), exclude, search)
    }
}

/// Whether `g` has exactly one minimum vertex cover, plus one minimum cover.
pub fn has_unique_min_vc(g: &Graph) -> Result<(bool, VcSolution)> {
    Limits::default().check_vertices(g.n())?;
    let sol = vc::min_vertex_cover(g, None)?.expect("unbounded");
    let mut search = Search::new(None);
    let unique = Uvc::new(g, sol.tau)
        .unique_within(&g.vertices(), sol.tau, &mut search)
        .is_ok();
    Ok((unique, sol))
}

fn check_universe(g: &Graph, pa: &PreAssignment) -> Result<()> {
    if pa.universe() != g.n() {
        let stray = pa.include().iter().chain(pa.exclude().iter()).find(|&v| v >= g.n());
        if let Some(vertex) = stray {
            return Err(Error::VertexOutOfRange { vertex, n: g.n() });
        }
    }
    Ok(())
}

/// Decides whether exactly one minimum cover of `g` is consistent with `pa`.
pub fn is_feasible(g: &Graph, pa: &PreAssignment) -> Result<FeasibilityReport> {
    Limits::default().check_vertices(g.n())?;
    check_universe(g, pa)?;
    let include = pa.include().resized(g.n());
    let exclude = pa.exclude().resized(g.n());
    let uvc = Uvc::new(g, vc::tau(g)?);
    let mut search = Search::new(None);
    Ok(FeasibilityReport::from_outcome(uvc.check(&include, &exclude, &mut search)))
}

/// Graph left after applying a feasible pre-assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    /// Size of the unique minimum vertex cover of `graph`.
    pub expected_tau: usize,
    /// Maps reduced ids back to ids of the input graph.
    pub map: VertexMap,
}

/// Deletes `include ∪ exclude ∪ N(exclude)`; the result has a unique minimum
/// vertex cover of size `τ(G) − |include ∪ N(exclude)|`.
pub fn reduce_instance(g: &Graph, pa: &PreAssignment) -> Result<ReducedInstance> {
    let report = is_feasible(g, pa)?;
    if let Some(reason) = report.reason {
        return Err(Error::Infeasible(reason));
    }
    let include = pa.include().resized(g.n());
    let exclude = pa.exclude().resized(g.n());
    let forced = &include | &g.neighborhood(&exclude);
    let tau = report.witness.as_ref().expect("feasible").len();
    let (graph, map) = g.delete(&(&forced | &exclude))?;
    Ok(ReducedInstance { graph, expected_tau: tau - forced.len(), map })
}
