//! Divide-and-conquer PAU on trees with subtree memoization, and the rooted
//! I-subtree counter.

use std::collections::{HashMap, HashSet};

use crate::assignment::{Model, PreAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::search::Search;
use crate::solvers::{PauResult, SolveOptions};
use crate::uniqueness::Uvc;

/// Memo key: the exact vertex subset of the current subtree plus the model.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeMemoKey {
    pub vertices: VertexSet,
    pub model: Model,
}

/// `(τ(T), opt(T))` with a minimum feasible pre-assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeAnswer {
    pub tau: usize,
    pub opt: usize,
    pub witness: PreAssignment,
}

#[derive(Debug, Clone)]
struct Entry {
    tau: usize,
    opt: usize,
    /// Pre-assigned vertices, all on the model's side.
    chosen: VertexSet,
}

struct TreeSolver<'g> {
    g: &'g Graph,
    /// Include or Exclude; Mixed is answered as Exclude.
    model: Model,
    memo: Option<HashMap<TreeMemoKey, Entry>>,
    search: Search,
}

/// Size and number (capped at 2) of minimum vertex covers of the subtree `s`.
fn cover_profile(g: &Graph, s: &VertexSet) -> (usize, u8) {
    fn best((a, ac): (usize, u8), (b, bc): (usize, u8)) -> (usize, u8) {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => (a, ac),
            std::cmp::Ordering::Greater => (b, bc),
            std::cmp::Ordering::Equal => (a, ac.saturating_add(bc).min(2)),
        }
    }
    let root = s.first().expect("non-empty subtree");
    let mut order = Vec::with_capacity(s.len());
    let mut parent = vec![usize::MAX; g.n()];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        order.push(v);
        let pv = parent[v];
        for w in g.neighbors(v).iter().filter(|&w| s.contains(w) && w != pv) {
            parent[w] = v;
            stack.push(w);
        }
    }
    // (size, count) with v in the cover, and with v out of it
    let mut take = vec![(1usize, 1u8); g.n()];
    let mut skip = vec![(0usize, 1u8); g.n()];
    for &v in order.iter().rev() {
        let p = parent[v];
        if p == usize::MAX {
            continue;
        }
        let (bs, bc) = best(take[v], skip[v]);
        take[p] = (take[p].0 + bs, take[p].1.saturating_mul(bc).min(2));
        skip[p] = (skip[p].0 + take[v].0, skip[p].1.saturating_mul(take[v].1).min(2));
    }
    best(take[root], skip[root])
}

impl<'g> TreeSolver<'g> {
    fn forest(&mut self, s: &VertexSet) -> Result<Entry> {
        let mut total = Entry { tau: 0, opt: 0, chosen: self.g.empty_set() };
        for comp in self.g.components_within(s) {
            let e = self.subtree(&comp)?;
            total.tau += e.tau;
            total.opt += e.opt;
            total.chosen |= &e.chosen;
        }
        Ok(total)
    }

    fn subtree(&mut self, s: &VertexSet) -> Result<Entry> {
        let key = TreeMemoKey { vertices: s.clone(), model: self.model };
        if let Some(e) = self.memo.as_ref().and_then(|m| m.get(&key)) {
            return Ok(e.clone());
        }
        let e = self.compute(s)?;
        if let Some(m) = self.memo.as_mut() {
            m.insert(key, e.clone());
        }
        Ok(e)
    }

    fn compute(&mut self, s: &VertexSet) -> Result<Entry> {
        self.search.check()?;
        self.search.nodes += 1;
        let g = self.g;
        let (tau, count) = cover_profile(g, s);
        if count == 1 {
            return Ok(Entry { tau, opt: 0, chosen: g.empty_set() });
        }
        if s.len() == 2 {
            let first = s.first().expect("edge");
            return Ok(Entry { tau: 1, opt: 1, chosen: VertexSet::singleton(g.n(), first) });
        }
        let mut best: Option<Entry> = None;
        for v in s {
            let nv = g.neighbors(v) & s;
            let (removed, need) = match self.model {
                Model::Include if nv.len() >= 2 => (VertexSet::singleton(g.n(), v), tau - 1),
                // a minimum cover holding the leaf v avoids its neighbour w, so
                // including v acts like excluding w; on P4 every optimum is a leaf
                Model::Include => {
                    let w = nv.first().expect("no isolated vertices in a subtree");
                    let nw = g.neighbors(w) & s;
                    if nw.len() > tau {
                        continue;
                    }
                    let mut closed = nw.clone();
                    closed.insert(w);
                    (closed, tau - nw.len())
                }
                _ => {
                    if nv.len() > tau {
                        continue;
                    }
                    let mut closed = nv.clone();
                    closed.insert(v);
                    (closed, tau - nv.len())
                }
            };
            let rest = s - &removed;
            let sub = self.forest(&rest)?;
            if sub.tau != need {
                continue;
            }
            let cost = 1 + sub.opt;
            if best.as_ref().is_none_or(|b| cost < b.opt) {
                let mut chosen = sub.chosen;
                chosen.insert(v);
                best = Some(Entry { tau, opt: cost, chosen });
            }
        }
        Ok(best.expect("some vertex of a non-unique tree admits a pre-assignment"))
    }
}

/// Solves PAU on a tree. Mixed is answered as Exclude with the witness `(∅, X)`.
pub fn pau_tree(t: &Graph, model: Model) -> Result<TreeAnswer> {
    pau_tree_with(t, model, &SolveOptions::default())
}

pub fn pau_tree_with(t: &Graph, model: Model, opts: &SolveOptions) -> Result<TreeAnswer> {
    Ok(run(t, model, opts)?.0)
}

fn run(t: &Graph, model: Model, opts: &SolveOptions) -> Result<(TreeAnswer, Search)> {
    opts.limits.check_vertices(t.n())?;
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let inner = if model == Model::Include { Model::Include } else { Model::Exclude };
    let mut solver = TreeSolver {
        g: t,
        model: inner,
        memo: opts.memoize.then(HashMap::new),
        search: Search::new(opts.time_limit),
    };
    let e = solver.subtree(&t.vertices())?;
    let empty = t.empty_set();
    let witness = match model {
        Model::Include => PreAssignment::including(e.chosen),
        Model::Exclude => PreAssignment::excluding(e.chosen),
        Model::Mixed => PreAssignment::mixed(empty, e.chosen)?,
    };
    Ok((TreeAnswer { tau: e.tau, opt: e.opt, witness }, solver.search))
}

/// Tree solver wrapped as a [`PauResult`], with the unique cover recovered.
pub fn solve_tree_with(t: &Graph, model: Model, opts: &SolveOptions) -> Result<PauResult> {
    let (ans, mut search) = run(t, model, opts)?;
    let uvc = Uvc::new(t, ans.tau);
    let cover = uvc
        .check(ans.witness.include(), ans.witness.exclude(), &mut search)
        .map_err(Error::Infeasible)?;
    Ok(PauResult {
        model,
        opt_size: ans.opt,
        pre: ans.witness,
        unique_cover: cover,
        stats: search.stats(),
    })
}

/// Number of rooted I-subtrees of `t` at `r`, up to root-preserving isomorphism.
///
/// The family starts at `t` and is closed under "delete a non-leaf vertex other
/// than the root and keep the root's component".
pub fn count_rooted_i_subtrees(t: &Graph, r: usize) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if r >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: r, n: t.n() });
    }
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue = vec![t.vertices()];
    seen.insert(t.vertices());
    while let Some(s) = queue.pop() {
        for v in &s {
            if v == r || t.neighbors(v).intersection_len(&s) < 2 {
                continue;
            }
            let mut rest = s.clone();
            rest.remove(v);
            let comp = component_of(t, &rest, r);
            if seen.insert(comp.clone()) {
                queue.push(comp);
            }
        }
    }
    let codes: HashSet<String> = seen.iter().map(|s| canonical_code(t, s, r)).collect();
    Ok(codes.len())
}

fn component_of(g: &Graph, within: &VertexSet, r: usize) -> VertexSet {
    let mut comp = VertexSet::singleton(g.n(), r);
    let mut stack = vec![r];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if within.contains(w) && !comp.contains(w) {
                comp.insert(w);
                stack.push(w);
            }
        }
    }
    comp
}

/// AHU encoding of the subtree `s` rooted at `r`.
pub fn canonical_code(g: &Graph, s: &VertexSet, r: usize) -> String {
    fn enc(g: &Graph, s: &VertexSet, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&w| s.contains(w) && Some(w) != parent)
            .map(|w| enc(g, s, w, Some(v)))
            .collect();
        kids.sort_unstable();
        let mut out = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        out.push('(');
        for k in kids {
            out.push_str(&k);
        }
        out.push(')');
        out
    }
    enc(g, s, r, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn base_cases() {
        let a = pau_tree(&Graph::star(3), Model::Include).unwrap();
        assert_eq!((a.tau, a.opt), (1, 0));
        let a = pau_tree(&Graph::path(2), Model::Exclude).unwrap();
        assert_eq!((a.tau, a.opt), (1, 1));
        assert_eq!(a.witness.exclude().to_vec(), vec![0]);
        let a = pau_tree(&Graph::new(1), Model::Include).unwrap();
        assert_eq!((a.tau, a.opt), (0, 0));
        let a = pau_tree(&Graph::path(4), Model::Include).unwrap();
        assert_eq!((a.tau, a.opt), (2, 1));
    }

    #[test]
    fn mixed_reported_as_exclude() {
        let a = pau_tree(&Graph::path(4), Model::Mixed).unwrap();
        assert_eq!(a.witness.model(), Model::Mixed);
        assert!(a.witness.include().is_empty());
        assert_eq!(a.opt, 1);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(pau_tree(&Graph::cycle(4), Model::Include).unwrap_err(), Error::NotATree);
        assert_eq!(pau_tree(&Graph::matching(2), Model::Exclude).unwrap_err(), Error::NotATree);
        assert_eq!(count_rooted_i_subtrees(&Graph::new(0), 0).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn cover_profiles() {
        let g = Graph::path(4);
        assert_eq!(cover_profile(&g, &g.vertices()), (2, 2));
        let g = Graph::path(3);
        assert_eq!(cover_profile(&g, &g.vertices()), (1, 1));
        let g = Graph::path(5);
        assert_eq!(cover_profile(&g, &g.vertices()), (2, 1));
    }

    #[test]
    fn small_rooted_counts() {
        assert_eq!(count_rooted_i_subtrees(&Graph::new(1), 0).unwrap(), 1);
        assert_eq!(count_rooted_i_subtrees(&Graph::path(2), 0).unwrap(), 1);
        let p4 = Graph::path(4);
        let star = tree(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(count_rooted_i_subtrees(&p4, 0).unwrap(), 3);
        assert_eq!(count_rooted_i_subtrees(&p4, 1).unwrap(), 2);
        assert_eq!(count_rooted_i_subtrees(&star, 1).unwrap(), 2);
        assert_eq!(count_rooted_i_subtrees(&star, 0).unwrap(), 1);
    }

    #[test]
    fn codes_ignore_labels() {
        let a = tree(3, &[(0, 1), (0, 2)]);
        let b = tree(3, &[(2, 1), (2, 0)]);
        assert_eq!(canonical_code(&a, &a.vertices(), 0), canonical_code(&b, &b.vertices(), 2));
        assert_ne!(canonical_code(&a, &a.vertices(), 0), canonical_code(&a, &a.vertices(), 1));
    }
}
