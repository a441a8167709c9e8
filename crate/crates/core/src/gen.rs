//! Seeded random instances. All generators use ChaCha8 so a seed gives the same
//! instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::reductions::{Cnf1in3, Literal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v).expect("distinct endpoints");
            }
        }
    }
    g
}

/// Uniform labelled tree on `n ≥ 1` vertices from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        g.add_edge(leaf, s).expect("tree edge");
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).expect("last edge");
    g
}

/// Random connected graph: a random tree plus `G(n, p)` edges.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = random_tree(n, rng);
    for (u, v) in erdos_renyi(n, p, rng).edges() {
        g.add_edge(u, v).expect("distinct endpoints");
    }
    g
}

/// Random graph on `n` vertices whose minimum cover has at most `k` vertices:
/// edges only touch a random `k`-subset.
pub fn random_bounded_cover(n: usize, k: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let hubs = &ids[..k.min(n)];
    let mut g = Graph::new(n);
    for v in 0..n {
        for &h in hubs {
            if h != v && rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(v, h).expect("distinct endpoints");
            }
        }
    }
    g
}

/// Random 1-in-3 instance with distinct variables in each clause.
pub fn random_cnf1in3(num_vars: usize, num_clauses: usize, rng: &mut impl Rng) -> Cnf1in3 {
    assert!(num_vars >= 3 || num_clauses == 0, "a clause needs three variables");
    let vars: Vec<usize> = (0..num_vars).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            let pick: Vec<usize> = vars.choose_multiple(rng, 3).copied().collect();
            [0, 1, 2].map(|i| Literal { var: pick[i], positive: rng.gen_bool(0.5) })
        })
        .collect();
    Cnf1in3::new(num_vars, clauses).expect("distinct variables")
}
