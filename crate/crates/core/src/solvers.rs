//! Minimum feasible pre-assignments: subset enumeration, the two FPT solvers
//! built on branching leaves, model conversions and the dispatcher.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::assignment::{Model, PreAssignment};
use crate::error::{Error, Limits, Result};
use crate::graph::{Graph, VertexSet};
use crate::search::{Search, Stats};
use crate::setcover::SetCoverTables;
use crate::tree;
use crate::uniqueness::Uvc;
use crate::vc::{self, BranchLeaf};

/// A minimum feasible pre-assignment and the cover it pins down.
#[derive(Debug, Clone, PartialEq)]
pub struct PauResult {
    pub model: Model,
    pub opt_size: usize,
    pub pre: PreAssignment,
    pub unique_cover: VertexSet,
    pub stats: Stats,
}

/// `{"model":..,"opt_size":..,"include":[..],"exclude":[..],"unique_cover":[..],"stats":{..}}`
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PauResultJson {
    pub model: Model,
    pub opt_size: usize,
    pub include: Vec<usize>,
    pub exclude: Vec<usize>,
    pub unique_cover: Vec<usize>,
    pub stats: Stats,
}

impl PauResult {
    pub fn to_json(&self) -> PauResultJson {
        PauResultJson {
            model: self.model,
            opt_size: self.opt_size,
            include: self.pre.include().to_vec(),
            exclude: self.pre.exclude().to_vec(),
            unique_cover: self.unique_cover.to_vec(),
            stats: self.stats,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Auto,
    Enum,
    Fpt,
    Tree,
}

impl Algo {
    pub fn as_str(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Enum => "enum",
            Algo::Fpt => "fpt",
            Algo::Tree => "tree",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Algo::Auto),
            "enum" => Ok(Algo::Enum),
            "fpt" => Ok(Algo::Fpt),
            "tree" => Ok(Algo::Tree),
            other => Err(Error::InvalidInput(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub limits: Limits,
    pub time_limit: Option<Duration>,
    /// Use branching leaves instead of enumerating every minimum cover.
    pub refined: bool,
    /// Memoize subtrees in the tree solver.
    pub memoize: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { limits: Limits::default(), time_limit: None, refined: true, memoize: true }
    }
}

/// Keeps the lexicographically smallest feasible candidate of the current size.
struct Best {
    pre: Option<(VertexSet, VertexSet)>,
}

impl Best {
    fn new() -> Self {
        Best { pre: None }
    }

    fn beats(&self, cand: &VertexSet) -> bool {
        self.pre.as_ref().is_none_or(|(p, _)| cand.cmp_lex(p).is_lt())
    }

    fn offer(&mut self, cand: VertexSet, witness: VertexSet) {
        if self.beats(&cand) {
            self.pre = Some((cand, witness));
        }
    }
}

fn finish(
    model: Model,
    include: VertexSet,
    exclude: VertexSet,
    unique_cover: VertexSet,
    search: &Search,
) -> PauResult {
    let pre = PreAssignment::new(model, include, exclude).expect("solver respects the model");
    PauResult { model, opt_size: pre.size(), pre, unique_cover, stats: search.stats() }
}

/// Calls `f` on every `k`-subset of `pool` in lexicographic order until it returns false.
fn for_each_combination(pool: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        let need = k - cur.len();
        for i in start..=pool.len().saturating_sub(need) {
            if pool.len() < need {
                break;
            }
            cur.push(pool[i]);
            let go = rec(pool, k, i + 1, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    if k > pool.len() {
        return true;
    }
    rec(pool, k, 0, &mut Vec::with_capacity(k), f)
}

/// Subset enumeration with the uniqueness oracle; the ground truth for the other strategies.
pub fn solve_enum(g: &Graph, model: Model) -> Result<PauResult> {
    solve_enum_with(g, model, &SolveOptions::default())
}

pub fn solve_enum_with(g: &Graph, model: Model, opts: &SolveOptions) -> Result<PauResult> {
    let limit = opts.limits.enum_vertex_limit.min(opts.limits.vertex_limit);
    if g.n() > limit {
        return Err(Error::VertexLimit { n: g.n(), limit });
    }
    let n = g.n();
    let mut search = Search::new(opts.time_limit);
    let uvc = Uvc::new(g, vc::tau(g)?);
    let all: Vec<usize> = (0..n).collect();

    for k in 0..=n {
        search.check()?;
        let mut found: Option<(VertexSet, VertexSet, VertexSet)> = None;
        match model {
            Model::Include | Model::Exclude => {
                for_each_combination(&all, k, &mut |c| {
                    let u = VertexSet::from_vertices(n, c.iter().copied());
                    let outcome = if model == Model::Include {
                        uvc.check_include(&u, &mut search)
                    } else {
                        uvc.check_exclude(&u, &mut search)
                    };
                    match outcome {
                        Ok(w) if model == Model::Include => {
                            found = Some((u, g.empty_set(), w));
                            false
                        }
                        Ok(w) => {
                            found = Some((g.empty_set(), u, w));
                            false
                        }
                        Err(_) => true,
                    }
                });
            }
            Model::Mixed => {
                // include lists in lexicographic order, then exclude lists
                let mut inc = Vec::new();
                mixed_rec(g, &uvc, &mut search, &all, k, 0, &mut inc, &mut found);
            }
        }
        if let Some((inc, exc, w)) = found {
            return Ok(finish(model, inc, exc, w, &search));
        }
    }
    unreachable!("including a whole minimum cover is always feasible")
}

#[allow(clippy::too_many_arguments)]
fn mixed_rec(
    g: &Graph,
    uvc: &Uvc<'_>,
    search: &mut Search,
    all: &[usize],
    k: usize,
    start: usize,
    inc: &mut Vec<usize>,
    found: &mut Option<(VertexSet, VertexSet, VertexSet)>,
) -> bool {
    let n = g.n();
    let include = VertexSet::from_vertices(n, inc.iter().copied());
    let pool: Vec<usize> = all.iter().copied().filter(|v| !include.contains(*v)).collect();
    let go = for_each_combination(&pool, k - inc.len(), &mut |c| {
        let exclude = VertexSet::from_vertices(n, c.iter().copied());
        match uvc.check(&include, &exclude, search) {
            Ok(w) => {
                *found = Some((include.clone(), exclude, w));
                false
            }
            Err(_) => true,
        }
    });
    if !go {
        return false;
    }
    if inc.len() == k {
        return true;
    }
    for v in start..n {
        inc.push(v);
        let go = mixed_rec(g, uvc, search, all, k, v + 1, inc, found);
        inc.pop();
        if !go {
            return false;
        }
    }
    true
}

/// FPT solver for the Include model over branching leaves.
pub fn solve_fpt_include(g: &Graph) -> Result<PauResult> {
    solve_fpt_include_with(g, &SolveOptions::default())
}

pub fn solve_fpt_include_with(g: &Graph, opts: &SolveOptions) -> Result<PauResult> {
    opts.limits.check_vertices(g.n())?;
    let mut search = Search::new(opts.time_limit);
    let tau = vc::tau(g)?;
    let uvc = Uvc::new(g, tau);
    if !opts.refined {
        return include_over_all_covers(g, &uvc, &mut search, opts);
    }
    let leaves = vc::branch_leaves(g, tau, &mut search.nodes);

    for size in 0..=tau {
        search.check()?;
        let mut best = Best::new();
        let mut tested = HashSet::new();
        for leaf in &leaves {
            let k = leaf.matching.len();
            if k > size || size - k > leaf.forced.len() {
                continue;
            }
            let forced: Vec<usize> = leaf.forced.to_vec();
            for mask in 0..1u64 << k {
                search.check()?;
                let mut picked = g.empty_set();
                for (i, &(a, b)) in leaf.matching.iter().enumerate() {
                    picked.insert(if mask >> i & 1 == 1 { b } else { a });
                }
                for_each_combination(&forced, size - k, &mut |c| {
                    let mut cand = picked.clone();
                    for &v in c {
                        cand.insert(v);
                    }
                    if best.beats(&cand) && tested.insert(cand.clone()) {
                        if let Ok(w) = uvc.check_include(&cand, &mut search) {
                            best.offer(cand, w);
                        }
                    }
                    true
                });
            }
        }
        if let Some((inc, w)) = best.pre {
            return Ok(finish(Model::Include, inc, g.empty_set(), w, &search));
        }
    }
    unreachable!("a whole minimum cover is a feasible include set")
}

fn include_over_all_covers(
    g: &Graph,
    uvc: &Uvc<'_>,
    search: &mut Search,
    opts: &SolveOptions,
) -> Result<PauResult> {
    let covers = vc::enumerate_min_vertex_covers_with(g, &opts.limits)?;
    for size in 0..=uvc.tau() {
        search.check()?;
        let mut best = Best::new();
        for cover in &covers {
            for_each_combination(&cover.to_vec(), size, &mut |c| {
                let cand = VertexSet::from_vertices(g.n(), c.iter().copied());
                if best.beats(&cand) {
                    if let Ok(w) = uvc.check_include(&cand, search) {
                        best.offer(cand, w);
                    }
                }
                true
            });
        }
        if let Some((inc, w)) = best.pre {
            return Ok(finish(Model::Include, inc, g.empty_set(), w, search));
        }
    }
    unreachable!("a whole minimum cover is a feasible include set")
}

/// Per-leaf data for the Exclude solver.
struct ExcludeLeaf<'a> {
    leaf: &'a BranchLeaf,
    /// Vertices off the leaf; their neighborhoods lie inside `forced`.
    outside: Vec<usize>,
    tables: SetCoverTables,
    /// Ground-set masks grouped by their set-cover cost.
    by_cost: Vec<Vec<u64>>,
}

impl<'a> ExcludeLeaf<'a> {
    fn new(g: &Graph, leaf: &'a BranchLeaf, limits: &Limits) -> Result<Self> {
        let ground = leaf.forced.to_vec();
        if ground.len() > limits.ground_limit.min(63) {
            return Err(Error::GroundLimit { size: ground.len(), limit: limits.ground_limit.min(63) });
        }
        let off = g.vertices() - &leaf.forced - &leaf.matched_vertices();
        let outside: Vec<usize> = off.to_vec();
        let masks: Vec<u64> = outside
            .iter()
            .map(|&u| {
                g.neighbors(u)
                    .iter()
                    .map(|v| ground.binary_search(&v).expect("neighbors of off-leaf vertices are forced"))
                    .fold(0u64, |m, i| m | 1 << i)
            })
            .collect();
        let tables = SetCoverTables::from_masks(ground, masks);
        let mut by_cost: Vec<Vec<u64>> = Vec::new();
        for mask in 0..1u64 << tables.ground().len() {
            if let Some(c) = tables.cost_mask(mask) {
                if by_cost.len() <= c {
                    by_cost.resize(c + 1, Vec::new());
                }
                by_cost[c].push(mask);
            }
        }
        Ok(ExcludeLeaf { leaf, outside, tables, by_cost })
    }

    fn ground_mask(&self, s: &VertexSet) -> u64 {
        self.tables
            .ground()
            .iter()
            .enumerate()
            .filter(|(_, &v)| s.contains(v))
            .fold(0u64, |m, (i, _)| m | 1 << i)
    }

    fn exclude_set(&self, n: usize, mask: u64) -> VertexSet {
        let family = self.tables.family_mask(mask).expect("finite cost");
        VertexSet::from_vertices(n, family.into_iter().map(|j| self.outside[j]))
    }
}

/// FPT solver for the Exclude model: branching leaves plus set-cover costs.
pub fn solve_fpt_exclude(g: &Graph) -> Result<PauResult> {
    solve_fpt_exclude_with(g, &SolveOptions::default())
}

pub fn solve_fpt_exclude_with(g: &Graph, opts: &SolveOptions) -> Result<PauResult> {
    opts.limits.check_vertices(g.n())?;
    let mut search = Search::new(opts.time_limit);
    let tau = vc::tau(g)?;
    let uvc = Uvc::new(g, tau);
    if !opts.refined {
        return exclude_over_all_covers(g, &uvc, &mut search, opts);
    }
    let raw_leaves = vc::branch_leaves(g, tau, &mut search.nodes);
    let leaves: Vec<ExcludeLeaf<'_>> = raw_leaves
        .iter()
        .map(|l| ExcludeLeaf::new(g, l, &opts.limits))
        .collect::<Result<_>>()?;

    for size in 0..=g.n() {
        search.check()?;
        let mut best = Best::new();
        let mut tested = HashSet::new();
        for xl in &leaves {
            let k = xl.leaf.matching.len();
            if k > size || size - k >= xl.by_cost.len() {
                continue;
            }
            for mask in 0..1u64 << k {
                search.check()?;
                // K2: the endpoints left out of the cover; they must be excluded
                let mut unpicked = g.empty_set();
                for (i, &(a, b)) in xl.leaf.matching.iter().enumerate() {
                    unpicked.insert(if mask >> i & 1 == 1 { a } else { b });
                }
                let blocked = xl.ground_mask(&g.neighborhood(&unpicked));
                for &w in &xl.by_cost[size - k] {
                    if w & blocked != 0 {
                        continue;
                    }
                    let cand = xl.exclude_set(g.n(), w) | &unpicked;
                    if best.beats(&cand) && tested.insert(cand.clone()) {
                        if let Ok(wit) = uvc.check_exclude(&cand, &mut search) {
                            best.offer(cand, wit);
                        }
                    }
                }
            }
        }
        if let Some((exc, w)) = best.pre {
            return Ok(finish(Model::Exclude, g.empty_set(), exc, w, &search));
        }
    }
    unreachable!("the complement of a minimum cover is a feasible exclude set")
}

fn exclude_over_all_covers(
    g: &Graph,
    uvc: &Uvc<'_>,
    search: &mut Search,
    opts: &SolveOptions,
) -> Result<PauResult> {
    let covers = vc::enumerate_min_vertex_covers_with(g, &opts.limits)?;
    let mut prepared = Vec::with_capacity(covers.len());
    for cover in &covers {
        let ground = cover.to_vec();
        if ground.len() > opts.limits.ground_limit.min(63) {
            return Err(Error::GroundLimit { size: ground.len(), limit: opts.limits.ground_limit.min(63) });
        }
        let outside: Vec<usize> = cover.complement().to_vec();
        let masks = outside
            .iter()
            .map(|&u| {
                g.neighbors(u)
                    .iter()
                    .filter_map(|v| ground.binary_search(&v).ok())
                    .fold(0u64, |m, i| m | 1 << i)
            })
            .collect();
        prepared.push((outside, SetCoverTables::from_masks(ground, masks)));
    }
    for size in 0..=g.n() {
        search.check()?;
        let mut best = Best::new();
        for (outside, tables) in &prepared {
            for mask in 0..1u64 << tables.ground().len() {
                if tables.cost_mask(mask) != Some(size) {
                    continue;
                }
                let family = tables.family_mask(mask).expect("finite");
                let cand = VertexSet::from_vertices(g.n(), family.into_iter().map(|j| outside[j]));
                if best.beats(&cand) {
                    if let Ok(w) = uvc.check_exclude(&cand, search) {
                        best.offer(cand, w);
                    }
                }
            }
        }
        if let Some((exc, w)) = best.pre {
            return Ok(finish(Model::Exclude, g.empty_set(), exc, w, search));
        }
    }
    unreachable!("the complement of a minimum cover is a feasible exclude set")
}

/// FPT solver for any model; Mixed is answered as Exclude and reported as `(∅, X)`.
pub fn solve_fpt_with(g: &Graph, model: Model, opts: &SolveOptions) -> Result<PauResult> {
    match model {
        Model::Include => solve_fpt_include_with(g, opts),
        Model::Exclude => solve_fpt_exclude_with(g, opts),
        Model::Mixed => Ok(as_mixed(solve_fpt_exclude_with(g, opts)?)),
    }
}

pub(crate) fn as_mixed(mut r: PauResult) -> PauResult {
    r.model = Model::Mixed;
    r.pre = r.pre.with_model(Model::Mixed).expect("mixed accepts any sides");
    r
}

/// Exclude set with the same unique cover as an Include pre-assignment.
pub fn include_to_exclude(g: &Graph, inc: &VertexSet, ustar: &VertexSet) -> Result<VertexSet> {
    let mut out = g.empty_set();
    for v in inc {
        if !ustar.contains(v) {
            return Err(Error::InvalidInput(format!("included vertex {v} is not in the cover")));
        }
        let partner = g.neighbors(v).iter().find(|&w| !ustar.contains(w)).ok_or_else(|| {
            Error::InvalidInput(format!("N({v}) lies inside the cover, so the cover is not minimum"))
        })?;
        out.insert(partner);
    }
    Ok(out)
}

/// Exclude set `exclude ∪ {v' : v ∈ include}` with the same unique cover.
pub fn mixed_to_exclude(g: &Graph, pa: &PreAssignment, ustar: &VertexSet) -> Result<VertexSet> {
    let include = pa.include().resized(g.n());
    let exclude = pa.exclude().resized(g.n());
    Ok(include_to_exclude(g, &include, ustar)? | &exclude)
}

/// Dispatcher. `Auto` sends trees to the tree solver and everything else to
/// the FPT solver; both `Auto` and `Fpt` solve disconnected graphs per component.
pub fn solve(g: &Graph, model: Model, algo: Algo) -> Result<PauResult> {
    solve_with(g, model, algo, &SolveOptions::default())
}

pub fn solve_with(g: &Graph, model: Model, algo: Algo, opts: &SolveOptions) -> Result<PauResult> {
    opts.limits.check_vertices(g.n())?;
    if algo == Algo::Enum {
        return solve_enum_with(g, model, opts);
    }
    if algo == Algo::Tree && !g.is_forest() {
        return Err(Error::NotATree);
    }
    let comps = g.components();
    if comps.len() <= 1 {
        return solve_connected(g, model, algo, opts);
    }
    let n = g.n();
    let mut include = g.empty_set();
    let mut exclude = g.empty_set();
    let mut cover = g.empty_set();
    let mut stats = Stats::default();
    for comp in &comps {
        let (sub, map) = g.induced(comp);
        let r = solve_connected(&sub, model, algo, opts)?;
        include |= &map.lift(r.pre.include());
        exclude |= &map.lift(r.pre.exclude());
        cover |= &map.lift(&r.unique_cover);
        stats.absorb(&r.stats);
    }
    let pre = PreAssignment::new(model, include, exclude)?;
    debug_assert_eq!(cover.universe(), n);
    Ok(PauResult { model, opt_size: pre.size(), pre, unique_cover: cover, stats })
}

fn solve_connected(g: &Graph, model: Model, algo: Algo, opts: &SolveOptions) -> Result<PauResult> {
    let use_tree = match algo {
        Algo::Tree => true,
        Algo::Auto => g.n() > 0 && g.is_tree(),
        _ => false,
    };
    if use_tree {
        tree::solve_tree_with(g, model, opts)
    } else {
        solve_fpt_with(g, model, opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniqueness::is_feasible;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        for_each_combination(&[0, 1, 2, 3], 2, &mut |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(&[0, 1], 0, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_combination(&[0, 1], 3, &mut |_| panic!("no 3-subsets"));
    }

    #[test]
    fn enum_complete_graphs() {
        let k4 = Graph::complete(4);
        assert_eq!(solve_enum(&k4, Model::Exclude).unwrap().opt_size, 1);
        assert_eq!(solve_enum(&k4, Model::Include).unwrap().opt_size, 3);
        let k3 = Graph::complete(3);
        assert_eq!(solve_enum(&k3, Model::Include).unwrap().opt_size, 2);
        assert_eq!(solve_enum(&k3, Model::Exclude).unwrap().opt_size, 1);
    }

    #[test]
    fn enum_mixed_prefers_empty_include() {
        let r = solve_enum(&Graph::complete(4), Model::Mixed).unwrap();
        assert_eq!(r.opt_size, 1);
        assert!(r.pre.include().is_empty());
        assert_eq!(r.pre.exclude(), &set(4, &[0]));
    }

    #[test]
    fn enum_vertex_limit() {
        let err = solve_enum(&Graph::new(25), Model::Include).unwrap_err();
        assert_eq!(err, Error::VertexLimit { n: 25, limit: 24 });
    }

    #[test]
    fn fpt_include_examples() {
        let r = solve_fpt_include(&Graph::path(4)).unwrap();
        assert_eq!(r.opt_size, 1);
        assert_eq!(r.pre.include(), &set(4, &[0]));
        assert_eq!(r.unique_cover, set(4, &[0, 2]));
        assert_eq!(solve_fpt_include(&Graph::star(3)).unwrap().opt_size, 0);
        assert_eq!(solve_fpt_include(&Graph::matching(2)).unwrap().opt_size, 2);
        assert_eq!(solve_fpt_include(&Graph::new(3)).unwrap().opt_size, 0);
    }

    #[test]
    fn fpt_exclude_examples() {
        assert_eq!(solve_fpt_exclude(&Graph::complete(4)).unwrap().opt_size, 1);
        assert_eq!(solve_fpt_exclude(&Graph::cycle(4)).unwrap().opt_size, 1);
        assert_eq!(solve_enum(&Graph::cycle(4), Model::Exclude).unwrap().opt_size, 1);
        assert_eq!(solve_fpt_exclude(&Graph::star(3)).unwrap().opt_size, 0);
        assert_eq!(solve_fpt_exclude(&Graph::new(0)).unwrap().opt_size, 0);
    }

    #[test]
    fn unrefined_variants_agree() {
        let opts = SolveOptions { refined: false, ..SolveOptions::default() };
        for g in [Graph::path(5), Graph::cycle(5), Graph::complete(4), Graph::matching(3)] {
            assert_eq!(
                solve_fpt_include_with(&g, &opts).unwrap().opt_size,
                solve_fpt_include(&g).unwrap().opt_size
            );
            assert_eq!(
                solve_fpt_exclude_with(&g, &opts).unwrap().opt_size,
                solve_fpt_exclude(&g).unwrap().opt_size
            );
        }
    }

    #[test]
    fn conversions() {
        let k4 = Graph::complete(4);
        let ex = include_to_exclude(&k4, &set(4, &[0, 1, 2]), &set(4, &[0, 1, 2])).unwrap();
        assert_eq!(ex, set(4, &[3]));
        assert!(is_feasible(&k4, &PreAssignment::excluding(ex)).unwrap().feasible);

        assert_eq!(include_to_exclude(&Graph::path(2), &set(2, &[0]), &set(2, &[0])).unwrap(), set(2, &[1]));
        let p4 = Graph::path(4);
        assert_eq!(include_to_exclude(&p4, &set(4, &[0]), &set(4, &[0, 2])).unwrap(), set(4, &[1]));
        // N(1) = {0, 2} inside the "cover" {0, 1, 2}
        assert!(include_to_exclude(&p4, &set(4, &[1]), &set(4, &[0, 1, 2])).is_err());

        let pa = PreAssignment::mixed(set(4, &[]), set(4, &[0])).unwrap();
        assert_eq!(mixed_to_exclude(&k4, &pa, &set(4, &[1, 2, 3])).unwrap(), set(4, &[0]));
        let pa = PreAssignment::mixed(set(2, &[0]), set(2, &[])).unwrap();
        assert_eq!(mixed_to_exclude(&Graph::path(2), &pa, &set(2, &[0])).unwrap(), set(2, &[1]));

        let pa = PreAssignment::mixed(set(4, &[0]), set(4, &[3])).unwrap();
        let report = is_feasible(&p4, &pa).unwrap();
        assert!(report.feasible);
        let ex = mixed_to_exclude(&p4, &pa, report.witness.as_ref().unwrap()).unwrap();
        assert_eq!(ex, set(4, &[1, 3]));
        assert!(is_feasible(&p4, &PreAssignment::excluding(ex)).unwrap().feasible);
        assert_eq!(solve_enum(&p4, Model::Exclude).unwrap().opt_size, 1);
    }

    #[test]
    fn dispatcher_examples() {
        for model in Model::ALL {
            let r = solve(&Graph::path(4), model, Algo::Auto).unwrap();
            assert_eq!(r.opt_size, 1, "{model}");
        }
        assert_eq!(solve(&Graph::complete(4), Model::Exclude, Algo::Auto).unwrap().opt_size, 1);
        let r = solve(&Graph::matching(2), Model::Exclude, Algo::Auto).unwrap();
        assert_eq!(r.opt_size, 2);
        assert!(is_feasible(&Graph::matching(2), &r.pre).unwrap().feasible);
        let r = solve(&Graph::matching(2), Model::Mixed, Algo::Fpt).unwrap();
        assert_eq!(r.model, Model::Mixed);
        assert!(r.pre.include().is_empty());
        assert_eq!(solve(&Graph::complete(3), Model::Include, Algo::Tree).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn result_json_shape() {
        let r = solve(&Graph::complete(4), Model::Exclude, Algo::Fpt).unwrap();
        let v = serde_json::to_value(r.to_json()).unwrap();
        assert_eq!(v["model"], "exclude");
        assert_eq!(v["opt_size"], 1);
        assert_eq!(v["exclude"], serde_json::json!([0]));
        assert_eq!(v["unique_cover"], serde_json::json!([1, 2, 3]));
        assert!(v["stats"]["uvc_calls"].as_u64().unwrap() >= 1);
    }
}
