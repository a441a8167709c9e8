//! Brute-force oracles and exhaustive graph families, written without the
//! crate's solvers. Graphs are read through `edges()` only.
#![allow(dead_code)]

use std::collections::HashSet;

use pauvc::{Graph, Model};

/// Adjacency bitmasks; `n ≤ 32`.
pub fn adjacency(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    let mut adj = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn mask_of(vs: impl IntoIterator<Item = usize>) -> u32 {
    vs.into_iter().fold(0, |m, v| m | 1 << v)
}

pub fn ids(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn is_cover(adj: &[u32], c: u32) -> bool {
    (0..adj.len()).all(|v| c >> v & 1 == 1 || adj[v] & !c == 0)
}

/// τ and every minimum cover, by enumerating all `2^n` subsets.
pub fn min_covers(g: &Graph) -> (usize, Vec<u32>) {
    let adj = adjacency(g);
    let n = g.n();
    assert!(n <= 22, "oracle too slow");
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for c in 0u32..1 << n {
        let k = c.count_ones() as usize;
        if k > best || !is_cover(&adj, c) {
            continue;
        }
        if k < best {
            best = k;
            out.clear();
        }
        out.push(c);
    }
    (best, out)
}

/// Number of minimum covers containing `inc` and avoiding `exc`.
pub fn consistent(covers: &[u32], inc: u32, exc: u32) -> usize {
    covers.iter().filter(|&&c| c & inc == inc && c & exc == 0).count()
}

/// Minimum feasible pre-assignment size by exhaustive search over the model's sides.
pub fn brute_opt(g: &Graph, model: Model) -> usize {
    let (_, covers) = min_covers(g);
    let n = g.n();
    let full = (1u64 << n) as u32;
    let mut best = usize::MAX;
    match model {
        Model::Include | Model::Exclude => {
            for s in 0..full.max(1) {
                let k = s.count_ones() as usize;
                if k >= best {
                    continue;
                }
                let ok = if model == Model::Include {
                    consistent(&covers, s, 0) == 1
                } else {
                    consistent(&covers, 0, s) == 1
                };
                if ok {
                    best = k;
                }
            }
        }
        Model::Mixed => {
            for inc in 0..full.max(1) {
                let rest = !inc & (full.wrapping_sub(1));
                // all subsets of the complement
                let mut exc = rest;
                loop {
                    let k = (inc.count_ones() + exc.count_ones()) as usize;
                    if k < best && consistent(&covers, inc, exc) == 1 {
                        best = k;
                    }
                    if exc == 0 {
                        break;
                    }
                    exc = (exc - 1) & rest;
                }
            }
        }
    }
    best
}

/// Independent dominating set of minimum size, brute force.
pub fn brute_min_ids(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    (0u32..=full)
        .filter(|&s| {
            let independent = ids(s).iter().all(|&v| adj[v] & s == 0);
            let dominated = ids(s).iter().fold(s, |d, &v| d | adj[v]);
            independent && dominated == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Canonical form: lexicographically smallest upper-triangle bit string over all relabellings.
fn canonical(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    let idx = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b * (b - 1) / 2 + a
    };
    loop {
        let code = edges.iter().fold(0u64, |m, &(u, v)| m | 1 << idx(perm[u], perm[v]));
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative of every connected graph on `n` vertices up to isomorphism.
///
/// Every connected graph has a vertex whose removal keeps it connected, so the
/// family for `n` arises from the family for `n - 1` by adding a vertex.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for nb in 1u32..1 << k {
                let mut e = edges.clone();
                e.extend(ids(nb).into_iter().map(|v| (v, k)));
                if seen.insert(canonical(k + 1, &e)) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|e| Graph::from_edges(n, &e).unwrap()).collect()
}

/// One representative of every free tree on `n` vertices.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &level {
            for v in 0..k {
                let mut e = edges.clone();
                e.push((v, k));
                if seen.insert(tree_code(k + 1, &e)) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|e| Graph::from_edges(n, &e).unwrap()).collect()
}

/// Unrooted tree code: the smaller rooted code over the tree's centres.
fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn enc(adj: &[Vec<usize>], v: usize, p: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != p).map(|&w| enc(adj, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| enc(&adj, c, usize::MAX)).min().unwrap()
}
