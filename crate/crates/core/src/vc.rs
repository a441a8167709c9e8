//! Minimum vertex covers: exact branching, König covers for bipartite graphs,
//! enumeration of all optimal covers, and the branch-to-matchings decomposition.

use std::collections::VecDeque;

use crate::error::{Error, Limits, Result};
use crate::graph::{Graph, VertexSet};

/// A minimum vertex cover and its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcSolution {
    pub tau: usize,
    pub cover: VertexSet,
}

/// Leaf of the branching tree: vertices forced into the cover and the
/// isolated edges left once they are removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchLeaf {
    pub forced: VertexSet,
    pub matching: Vec<(usize, usize)>,
}

impl BranchLeaf {
    /// Endpoints of the matching edges.
    pub fn matched_vertices(&self) -> VertexSet {
        let mut s = VertexSet::new(self.forced.universe());
        for &(a, b) in &self.matching {
            s.insert(a);
            s.insert(b);
        }
        s
    }

    /// `forced` plus the endpoints chosen by `mask` (bit `i` picks the second endpoint of edge `i`).
    pub fn cover_for(&self, mask: u64) -> VertexSet {
        let mut c = self.forced.clone();
        for (i, &(a, b)) in self.matching.iter().enumerate() {
            c.insert(if mask >> i & 1 == 1 { b } else { a });
        }
        c
    }
}

/// Exact minimum vertex cover.
///
/// With `bound = Some(b)` the search stops early and returns `None` once it is
/// clear that τ(g) > b.
pub fn min_vertex_cover(g: &Graph, bound: Option<usize>) -> Result<Option<VcSolution>> {
    min_vertex_cover_with(g, bound, &Limits::default())
}

pub fn min_vertex_cover_with(
    g: &Graph,
    bound: Option<usize>,
    limits: &Limits,
) -> Result<Option<VcSolution>> {
    limits.check_vertices(g.n())?;
    let mut nodes = 0;
    let max = bound.unwrap_or(g.n());
    Ok(mvc_within(g, &g.vertices(), max, &mut nodes)
        .map(|cover| VcSolution { tau: cover.len(), cover }))
}

/// τ(g) without a bound.
pub fn tau(g: &Graph) -> Result<usize> {
    Ok(min_vertex_cover(g, None)?.expect("unbounded search always succeeds").tau)
}

/// Lower bound on τ(G[alive]) from a greedy maximal matching.
pub(crate) fn matching_lower_bound(g: &Graph, alive: &VertexSet) -> usize {
    let mut free = alive.clone();
    let mut size = 0;
    while let Some(v) = free.first() {
        free.remove(v);
        if let Some(u) = g.neighbors(v).first_common(&free) {
            free.remove(u);
            size += 1;
        }
    }
    size
}

/// Minimum vertex cover of `G[alive]` if its size is at most `max_size`.
pub(crate) fn mvc_within(
    g: &Graph,
    alive: &VertexSet,
    max_size: usize,
    nodes: &mut u64,
) -> Option<VertexSet> {
    search(g, alive.clone(), max_size, nodes)
}

fn search(g: &Graph, mut alive: VertexSet, max_size: usize, nodes: &mut u64) -> Option<VertexSet> {
    *nodes += 1;
    let mut taken = VertexSet::new(g.n());

    // degree-0 vertices leave, degree-1 vertices pull their neighbor in
    loop {
        let mut changed = false;
        let snapshot = alive.clone();
        for v in &snapshot {
            if !alive.contains(v) {
                continue;
            }
            match g.neighbors(v).intersection_len(&alive) {
                0 => {
                    alive.remove(v);
                    changed = true;
                }
                1 => {
                    let u = g.neighbors(v).first_common(&alive).expect("degree one");
                    taken.insert(u);
                    alive.remove(u);
                    alive.remove(v);
                    changed = true;
                    if taken.len() > max_size {
                        return None;
                    }
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    if taken.len() > max_size {
        return None;
    }
    if alive.is_empty() {
        return Some(taken);
    }
    let budget = max_size - taken.len();
    if matching_lower_bound(g, &alive) > budget {
        return None;
    }

    let comps = g.components_within(&alive);
    if comps.len() > 1 {
        let lbs: Vec<usize> = comps.iter().map(|c| matching_lower_bound(g, c)).collect();
        let mut rest_lb: usize = lbs.iter().sum();
        let mut remaining = budget;
        for (c, lb) in comps.into_iter().zip(lbs) {
            rest_lb -= lb;
            let sol = search(g, c, remaining.checked_sub(rest_lb)?, nodes)?;
            remaining -= sol.len();
            taken |= &sol;
        }
        return Some(taken);
    }

    let (v, deg) = max_degree_vertex(g, &alive);
    let nv = g.neighbors(v) & &alive;
    let mut best: Option<VertexSet> = None;

    if budget >= 1 {
        let mut rest = alive.clone();
        rest.remove(v);
        if let Some(mut s) = search(g, rest, budget - 1, nodes) {
            s.insert(v);
            best = Some(s);
        }
    }
    let limit = best.as_ref().map_or(budget, |b| b.len().saturating_sub(1).min(budget));
    if deg <= limit {
        let rest = &alive - &nv;
        if let Some(mut s) = search(g, rest - &VertexSet::singleton(g.n(), v), limit - deg, nodes)
        {
            s |= &nv;
            best = Some(s);
        }
    }
    best.map(|s| s | &taken)
}

/// Lowest-id vertex of maximum degree in `G[alive]`.
pub(crate) fn max_degree_vertex(g: &Graph, alive: &VertexSet) -> (usize, usize) {
    let mut best = (usize::MAX, 0);
    for v in alive {
        let d = g.neighbors(v).intersection_len(alive);
        if best.0 == usize::MAX || d > best.1 {
            best = (v, d);
        }
    }
    best
}

/// Minimum vertex cover of a bipartite graph via Hopcroft–Karp and König's theorem.
pub fn min_vertex_cover_bipartite(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<VcSolution> {
    if !g.is_bipartition(left, right) {
        return Err(Error::InvalidBipartition);
    }
    let mate = hopcroft_karp(g, left);
    let cover = konig_cover(g, left, &mate);
    debug_assert_eq!(cover.len(), mate.iter().filter(|m| m.is_some()).count() / 2);
    Ok(VcSolution { tau: cover.len(), cover })
}

/// Maximum matching; `mate[v]` is the partner of `v`.
pub fn hopcroft_karp(g: &Graph, left: &VertexSet) -> Vec<Option<usize>> {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let lefts: Vec<usize> = left.to_vec();
    const INF: usize = usize::MAX;
    let mut dist = vec![INF; n];

    loop {
        // layer the free left vertices
        let mut queue = VecDeque::new();
        for &u in &lefts {
            if mate[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                match mate[v] {
                    None => found = true,
                    Some(w) if dist[w] == INF => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for &u in &lefts {
            if mate[u].is_none() {
                augment(g, u, &mut mate, &mut dist);
            }
        }
    }
    mate
}

fn augment(g: &Graph, u: usize, mate: &mut [Option<usize>], dist: &mut [usize]) -> bool {
    for v in g.neighbors(u) {
        let ok = match mate[v] {
            None => true,
            Some(w) => dist[w] == dist[u] + 1 && augment(g, w, mate, dist),
        };
        if ok {
            mate[u] = Some(v);
            mate[v] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

fn konig_cover(g: &Graph, left: &VertexSet, mate: &[Option<usize>]) -> VertexSet {
    // Z = vertices reachable from free left vertices by alternating paths
    let mut z = VertexSet::new(g.n());
    let mut queue: VecDeque<usize> = left.iter().filter(|&u| mate[u].is_none()).collect();
    for &u in &queue {
        z.insert(u);
    }
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if mate[u] == Some(v) || z.contains(v) {
                continue;
            }
            z.insert(v);
            if let Some(w) = mate[v] {
                if z.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    // (L ∖ Z) ∪ (R ∩ Z)
    (left - &z) | &(&left.complement() & &z)
}

/// Complete branching tree of the rule {take v} / {take N(v)} applied to the
/// lowest-id maximum-degree vertex while its degree is at least 2.
///
/// Only leaves with `|forced| + |matching| = τ(g)` are kept, so every minimum
/// vertex cover extends exactly one returned leaf.
pub fn branch_to_matchings(g: &Graph) -> Result<Vec<BranchLeaf>> {
    Limits::default().check_vertices(g.n())?;
    let t = tau(g)?;
    let mut nodes = 0;
    Ok(branch_leaves(g, t, &mut nodes))
}

pub(crate) fn branch_leaves(g: &Graph, tau: usize, nodes: &mut u64) -> Vec<BranchLeaf> {
    let mut out = Vec::new();
    branch_rec(g, g.vertices(), VertexSet::new(g.n()), tau, nodes, &mut out);
    out
}

fn branch_rec(
    g: &Graph,
    mut alive: VertexSet,
    forced: VertexSet,
    tau: usize,
    nodes: &mut u64,
    out: &mut Vec<BranchLeaf>,
) {
    *nodes += 1;
    if forced.len() > tau {
        return;
    }
    let budget = tau - forced.len();
    for v in &alive.clone() {
        if !g.neighbors(v).intersects(&alive) {
            alive.remove(v);
        }
    }
    if matching_lower_bound(g, &alive) > budget {
        return;
    }
    let (v, deg) = max_degree_vertex(g, &alive);
    if alive.is_empty() || deg <= 1 {
        let mut matching = Vec::new();
        for a in &alive {
            if let Some(b) = g.neighbors(a).first_common(&alive) {
                if a < b {
                    matching.push((a, b));
                }
            }
        }
        if matching.len() == budget {
            out.push(BranchLeaf { forced, matching });
        }
        return;
    }
    let nv = g.neighbors(v) & &alive;
    {
        let mut rest = alive.clone();
        rest.remove(v);
        let mut f = forced.clone();
        f.insert(v);
        branch_rec(g, rest, f, tau, nodes, out);
    }
    {
        let mut rest = &alive - &nv;
        rest.remove(v);
        branch_rec(g, rest, forced | &nv, tau, nodes, out);
    }
}

/// All minimum vertex covers, each once, in lexicographic order.
pub fn enumerate_min_vertex_covers(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_min_vertex_covers_with(g, &Limits::default())
}

pub fn enumerate_min_vertex_covers_with(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    limits.check_vertices(g.n())?;
    let t = tau(g)?;
    let mut nodes = 0;
    let leaves = branch_leaves(g, t, &mut nodes);
    let mut total: usize = 0;
    for leaf in &leaves {
        let k = leaf.matching.len();
        let count = if k >= usize::BITS as usize { usize::MAX } else { 1usize << k };
        total = total.saturating_add(count);
        if total > limits.max_covers {
            return Err(Error::CoverCountLimit { limit: limits.max_covers });
        }
    }
    let mut covers = Vec::with_capacity(total);
    for leaf in &leaves {
        for mask in 0..(1u64 << leaf.matching.len()) {
            covers.push(leaf.cover_for(mask));
        }
    }
    covers.sort();
    Ok(covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn brute_tau(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| g.is_vertex_cover(&set(g.n(), &bits(m))))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn bits(m: u32) -> Vec<usize> {
        (0..32).filter(|&i| m >> i & 1 == 1).collect()
    }

    #[test]
    fn complete_graphs() {
        for n in 1..9 {
            assert_eq!(tau(&Graph::complete(n)).unwrap(), n - 1);
        }
    }

    #[test]
    fn small_fixed_points() {
        assert_eq!(tau(&Graph::path(2)).unwrap(), 1);
        let p4 = Graph::path(4);
        let sol = min_vertex_cover(&p4, None).unwrap().unwrap();
        assert_eq!(sol.tau, 2);
        assert_eq!(brute_tau(&p4), 2);
        assert!(p4.is_vertex_cover(&sol.cover));
    }

    #[test]
    fn bound_reports_infeasible() {
        let k5 = Graph::complete(5);
        assert_eq!(min_vertex_cover(&k5, Some(3)).unwrap(), None);
        assert_eq!(min_vertex_cover(&k5, Some(4)).unwrap().unwrap().tau, 4);
    }

    #[test]
    fn vertex_limit() {
        let limits = Limits { vertex_limit: 3, ..Limits::builtin() };
        let err = min_vertex_cover_with(&Graph::path(4), None, &limits).unwrap_err();
        assert_eq!(err, Error::VertexLimit { n: 4, limit: 3 });
        assert!(err.is_limit());
    }

    #[test]
    fn konig_cover_small() {
        let c4 = Graph::cycle(4);
        let (l, r) = c4.bipartition().unwrap();
        assert_eq!(min_vertex_cover_bipartite(&c4, &l, &r).unwrap().tau, 2);

        let e = Graph::new(3);
        let (l, r) = e.bipartition().unwrap();
        let sol = min_vertex_cover_bipartite(&e, &l, &r).unwrap();
        assert_eq!(sol.tau, 0);
        assert!(sol.cover.is_empty());

        let k3 = Graph::complete(3);
        let err = min_vertex_cover_bipartite(&k3, &set(3, &[0]), &set(3, &[1, 2]));
        assert_eq!(err.unwrap_err(), Error::InvalidBipartition);
    }

    #[test]
    fn enumeration_fixed_points() {
        assert_eq!(enumerate_min_vertex_covers(&Graph::path(2)).unwrap().len(), 2);
        for k in 0..6 {
            assert_eq!(enumerate_min_vertex_covers(&Graph::matching(k)).unwrap().len(), 1 << k);
        }
        let star = enumerate_min_vertex_covers(&Graph::star(3)).unwrap();
        assert_eq!(star, vec![set(4, &[0])]);
        let k3 = enumerate_min_vertex_covers(&Graph::complete(3)).unwrap();
        assert_eq!(k3, vec![set(3, &[0, 1]), set(3, &[0, 2]), set(3, &[1, 2])]);
    }

    #[test]
    fn cover_count_limit() {
        let limits = Limits { max_covers: 15, ..Limits::builtin() };
        let err = enumerate_min_vertex_covers_with(&Graph::matching(4), &limits).unwrap_err();
        assert_eq!(err, Error::CoverCountLimit { limit: 15 });
    }

    #[test]
    fn leaves_of_single_edge() {
        let leaves = branch_to_matchings(&Graph::path(2)).unwrap();
        assert_eq!(leaves, vec![BranchLeaf { forced: set(2, &[]), matching: vec![(0, 1)] }]);
    }

    #[test]
    fn leaves_of_p4() {
        let leaves = branch_to_matchings(&Graph::path(4)).unwrap();
        assert!(leaves.contains(&BranchLeaf { forced: set(4, &[1]), matching: vec![(2, 3)] }));
        assert!(leaves.contains(&BranchLeaf { forced: set(4, &[0, 2]), matching: vec![] }));
        assert_eq!(leaves.len(), 2);
    }

    #[test]
    fn leaves_of_triangle() {
        let leaves = branch_to_matchings(&Graph::complete(3)).unwrap();
        assert!(leaves.contains(&BranchLeaf { forced: set(3, &[1, 2]), matching: vec![] }));
        for leaf in &leaves {
            assert_eq!(leaf.forced.len() + leaf.matching.len(), 2);
        }
    }
}
