//! Simple undirected graphs over dense vertex ids and their structural predicates.

mod dimacs;
mod set;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dimacs::{parse_dimacs, Parsed};
pub use set::{IdList, Iter, VertexSet};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(n); n], m: 0 }
    }

    /// Builds a graph from an edge list; repeated edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns false if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop on vertex {u}")));
        }
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Open neighborhood of a set: `N(X) = ∪ N(v) ∖ X`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in x {
            out |= &self.adj[v];
        }
        out -= x;
        out
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut out = self.adj[v].clone();
        out.insert(v);
        out
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            if let Some(v) = s.iter().find(|&v| v >= self.n()) {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        Ok(())
    }

    /// Every edge has an endpoint in `c`.
    pub fn is_vertex_cover(&self, c: &VertexSet) -> bool {
        (0..self.n()).all(|u| c.contains(u) || self.adj[u].is_subset_of_universe_set(c))
    }

    /// No edge has both endpoints in `s`.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint_from_universe_set(s))
    }

    /// `d` is independent and `d ∪ N(d) = V`.
    pub fn is_independent_dominating_set(&self, d: &VertexSet) -> bool {
        if !self.is_independent_set(d) {
            return false;
        }
        let mut dominated = self.neighborhood(&d.resized(self.n()));
        dominated |= &d.resized(self.n());
        dominated.len() == self.n()
    }

    /// Induced subgraph on `keep`, with ids compacted in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, VertexMap) {
        let map = VertexMap::new(self.n(), keep);
        let mut g = Graph::new(map.new_len());
        for (new_u, &old_u) in map.to_old.iter().enumerate() {
            for old_v in self.adj[old_u].iter() {
                if let Some(new_v) = map.to_new[old_v] {
                    if new_v > new_u {
                        g.adj[new_u].insert(new_v);
                        g.adj[new_v].insert(new_u);
                        g.m += 1;
                    }
                }
            }
        }
        (g, map)
    }

    /// `G − X`: deletes the vertices of `x`.
    pub fn delete(&self, x: &VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_subset(x)?;
        let x = x.resized(self.n());
        Ok(self.induced(&x.complement()))
    }

    /// Disjoint union: the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::new(off + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off).expect("in range");
        }
        g
    }

    /// Connected components of `G[within]`, each listed once, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = self.empty_set();
                for v in &frontier {
                    next |= &self.adj[v];
                }
                next &= within;
                next -= &comp;
                comp |= &next;
                frontier = next;
            }
            left -= &comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Two-coloring by BFS from the smallest vertex of each component (color 0).
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("colored");
                for v in self.adj[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let left = VertexSet::from_vertices(n, (0..n).filter(|&v| color[v] == Some(false)));
        let right = left.complement();
        Some((left, right))
    }

    /// Checks that `left`/`right` partition V with every edge crossing.
    pub fn is_bipartition(&self, left: &VertexSet, right: &VertexSet) -> bool {
        left.universe() == self.n()
            && right.universe() == self.n()
            && left.is_disjoint(right)
            && (left | right).len() == self.n()
            && self.edges().iter().all(|&(u, v)| left.contains(u) != left.contains(v))
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m + 1 == self.n() && self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    /// Structural class plus the connected components.
    pub fn classify(&self) -> Classification {
        let components = self.components();
        let acyclic = self.m + components.len() == self.n();
        let kind = if acyclic && components.len() == 1 {
            GraphKind::Tree
        } else if acyclic {
            GraphKind::Forest
        } else if let Some((left, right)) = self.bipartition() {
            GraphKind::Bipartite { left, right }
        } else {
            GraphKind::General
        };
        Classification { kind, components }
    }

    /// DIMACS edge format with 1-indexed endpoints.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n(), edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let mut g = Graph::new(json.n);
        for &[u, v] in &json.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("in range");
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u).expect("in range");
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("in range");
        }
        g
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v).expect("in range");
        }
        g
    }

    /// `k` disjoint edges `{2i, 2i+1}`.
    pub fn matching(k: usize) -> Self {
        let mut g = Graph::new(2 * k);
        for i in 0..k {
            g.add_edge(2 * i, 2 * i + 1).expect("in range");
        }
        g
    }
}

// Helpers that tolerate sets over a different universe, used by the predicates
// so callers may pass sets built against a larger or smaller id range.
trait UniverseTolerant {
    fn is_subset_of_universe_set(&self, other: &VertexSet) -> bool;
    fn is_disjoint_from_universe_set(&self, other: &VertexSet) -> bool;
}

impl UniverseTolerant for VertexSet {
    fn is_subset_of_universe_set(&self, other: &VertexSet) -> bool {
        if self.universe() == other.universe() {
            self.is_subset(other)
        } else {
            self.iter().all(|v| other.contains(v))
        }
    }

    fn is_disjoint_from_universe_set(&self, other: &VertexSet) -> bool {
        if self.universe() == other.universe() {
            self.is_disjoint(other)
        } else {
            self.iter().all(|v| !other.contains(v))
        }
    }
}

/// JSON export shape `{"n":int,"edges":[[u,v],...]}` with 0-indexed ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    Tree,
    Forest,
    Bipartite { left: VertexSet, right: VertexSet },
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: GraphKind,
    pub components: Vec<VertexSet>,
}

/// Id translation between a graph and one of its induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    to_old: Vec<usize>,
    to_new: Vec<Option<usize>>,
}

impl VertexMap {
    fn new(old_n: usize, keep: &VertexSet) -> Self {
        let to_old: Vec<usize> = keep.iter().collect();
        let mut to_new = vec![None; old_n];
        for (i, &o) in to_old.iter().enumerate() {
            to_new[o] = Some(i);
        }
        VertexMap { to_old, to_new }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap { to_old: (0..n).collect(), to_new: (0..n).map(Some).collect() }
    }

    pub fn old_len(&self) -> usize {
        self.to_new.len()
    }

    pub fn new_len(&self) -> usize {
        self.to_old.len()
    }

    /// Original id of a vertex of the subgraph.
    pub fn old(&self, new: usize) -> usize {
        self.to_old[new]
    }

    /// Subgraph id of an original vertex, if it survived.
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.to_new.get(old).copied().flatten()
    }

    /// Lifts a subgraph set to original ids.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.old_len(), s.iter().map(|v| self.to_old[v]))
    }

    /// Restricts an original-id set to surviving vertices, in subgraph ids.
    pub fn project(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.new_len(), s.iter().filter_map(|v| self.new_id(v)))
    }

    /// `self` maps A→B and `inner` maps B→C; the result maps A→C.
    pub fn compose(&self, inner: &VertexMap) -> VertexMap {
        let to_old: Vec<usize> = inner.to_old.iter().map(|&b| self.to_old[b]).collect();
        let mut to_new = vec![None; self.old_len()];
        for (c, &a) in to_old.iter().enumerate() {
            to_new[a] = Some(c);
        }
        VertexMap { to_old, to_new }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn cover_predicates() {
        let k3 = Graph::complete(3);
        assert!(k3.is_vertex_cover(&set(3, &[0, 1])));
        assert!(!k3.is_vertex_cover(&set(3, &[0])));
        let p4 = Graph::path(4);
        assert!(p4.is_vertex_cover(&set(4, &[1, 2])));
    }

    #[test]
    fn independence_predicates() {
        let k3 = Graph::complete(3);
        assert!(k3.is_independent_set(&set(3, &[0])));
        assert!(!k3.is_independent_set(&set(3, &[0, 1])));
        assert!(Graph::path(4).is_independent_set(&set(4, &[0, 2])));
    }

    #[test]
    fn independent_domination() {
        assert!(Graph::star(3).is_independent_dominating_set(&set(4, &[0])));
        let c4 = Graph::cycle(4);
        assert!(c4.is_independent_dominating_set(&set(4, &[0, 2])));
        assert!(!c4.is_independent_dominating_set(&set(4, &[0])));
        // brute force: in C4 only {0,2} and {1,3} are independent dominating
        let ids: Vec<u32> = (0u32..16)
            .filter(|&mask| {
                c4.is_independent_dominating_set(&VertexSet::from_vertices(
                    4,
                    (0..4).filter(|&v| mask >> v & 1 == 1),
                ))
            })
            .collect();
        assert_eq!(ids, vec![0b0101, 0b1010]);
    }

    #[test]
    fn delete_vertices() {
        let (g, map) = Graph::complete(3).delete(&set(3, &[0])).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!((map.old(0), map.old(1)), (1, 2));

        let p4 = Graph::path(4);
        let (g, map) = p4.delete(&set(4, &[])).unwrap();
        assert_eq!(g, p4);
        assert_eq!(map, VertexMap::identity(4));

        let (g, map) = p4.delete(&set(4, &[1])).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert_eq!(g.degree(0), 0);
        assert_eq!(map.old(1), 2);
        assert_eq!(map.new_id(1), None);
    }

    #[test]
    fn delete_rejects_foreign_ids() {
        let err = Graph::path(3).delete(&set(5, &[4])).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 4, n: 3 });
    }

    #[test]
    fn classification() {
        let c = Graph::path(4).classify();
        assert_eq!(c.kind, GraphKind::Tree);
        assert_eq!(c.components.len(), 1);

        let c = Graph::complete(3).classify();
        assert_eq!(c.kind, GraphKind::General);
        assert_eq!(c.components.len(), 1);

        let c = Graph::cycle(4).classify();
        assert_eq!(
            c.kind,
            GraphKind::Bipartite { left: set(4, &[0, 2]), right: set(4, &[1, 3]) }
        );

        let c = Graph::matching(2).classify();
        assert_eq!(c.kind, GraphKind::Forest);
        assert_eq!(c.components, vec![set(4, &[0, 1]), set(4, &[2, 3])]);
        assert_eq!(Graph::new(1).classify().kind, GraphKind::Tree);
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&Graph::path(3).to_json()).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Graph::from_json(&back).unwrap(), Graph::path(3));
    }
}
