//! Hardness gadgets as instance translators: 1-in-3 SAT to vertex cover, and the
//! bipartite pendant construction for independent domination.
//!
//! Vertex layout of `G_C` for `n` variables and `m` clauses (0-based variable `i`):
//!
//! | vertex      | id          |
//! |-------------|-------------|
//! | `v(x_i)`    | `5i`        |
//! | `v(¬x_i)`   | `5i + 1`    |
//! | `v'(x_i)`   | `5i + 2`    |
//! | `v'(¬x_i)`  | `5i + 3`    |
//! | `u(x_i)`    | `5i + 4`    |
//! | `r`         | `5n`        |
//! | clause `j`, position `p` | `5n + 1 + 3j + p` |

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Limits, ParseError, Result};
use crate::graph::{Graph, VertexSet};

/// A literal over 0-based variable `var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    pub fn negated(self) -> Self {
        Literal { var: self.var, positive: !self.positive }
    }

    /// DIMACS integer form (1-based, negative for negated literals).
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive { v } else { -v }
    }

    pub fn is_true(self, f: &[bool]) -> bool {
        f[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// 1-in-3 SAT instance with exactly three literals per clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf1in3 {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl Cnf1in3 {
    /// Checks variable ranges and rejects clauses that repeat a literal.
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var >= num_vars) {
                return Err(Error::InvalidInput(format!("clause {j}: variable {} out of range", l.var + 1)));
            }
            if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
                return Err(Error::InvalidInput(format!("clause {j} repeats a literal")));
            }
        }
        Ok(Cnf1in3 { num_vars, clauses })
    }

    /// True when exactly one literal of every clause is true under `f`.
    pub fn is_1in3(&self, f: &[bool]) -> bool {
        f.len() == self.num_vars
            && self.clauses.iter().all(|c| c.iter().filter(|l| l.is_true(f)).count() == 1)
    }

    /// `3n + 2m`, the minimum cover size of `G_C` when a 1-in-3 assignment exists.
    pub fn cover_size(&self) -> usize {
        3 * self.num_vars + 2 * self.clauses.len()
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }
}

/// Parses DIMACS CNF where every clause has exactly three literals.
pub fn parse_cnf(text: &str) -> Result<Cnf1in3> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut clause_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') || t.starts_with('%') {
            continue;
        }
        if let Some(rest) = t.strip_prefix('p') {
            if header.is_some() {
                return Err(ParseError::DuplicateProblemLine { line }.into());
            }
            let f: Vec<&str> = rest.split_whitespace().collect();
            let bad = || ParseError::Syntax { line, msg: "expected `p cnf <vars> <clauses>`".into() };
            if f.len() != 3 || f[0] != "cnf" {
                return Err(bad().into());
            }
            let vars = f[1].parse().map_err(|_| bad())?;
            let count = f[2].parse().map_err(|_| bad())?;
            header = Some((vars, count));
            continue;
        }
        let (vars, _) = header.ok_or(ParseError::MissingProblemLine)?;
        for tok in t.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| ParseError::Syntax { line, msg: format!("bad literal `{tok}`") })?;
            if current.is_empty() {
                clause_line = line;
            }
            if lit == 0 {
                if current.len() != 3 {
                    return Err(ParseError::ClauseWidth { line: clause_line, len: current.len() }.into());
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > vars {
                return Err(ParseError::LiteralOutOfRange { line, literal: lit, vars }.into());
            }
            current.push(Literal { var: var - 1, positive: lit > 0 });
        }
    }
    let (vars, declared) = header.ok_or(ParseError::MissingProblemLine)?;
    if !current.is_empty() {
        return Err(ParseError::ClauseWidth { line: clause_line, len: current.len() }.into());
    }
    if declared != clauses.len() {
        return Err(ParseError::ClauseCountMismatch { declared, found: clauses.len() }.into());
    }
    Cnf1in3::new(vars, clauses)
}

/// Vertex ids of the `G_C` gadgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcLabeling {
    num_vars: usize,
    num_clauses: usize,
}

impl GcLabeling {
    pub fn v(&self, l: Literal) -> usize {
        5 * l.var + usize::from(!l.positive)
    }

    pub fn vp(&self, l: Literal) -> usize {
        5 * l.var + 2 + usize::from(!l.positive)
    }

    pub fn u(&self, var: usize) -> usize {
        5 * var + 4
    }

    pub fn r(&self) -> usize {
        5 * self.num_vars
    }

    pub fn clause(&self, j: usize, pos: usize) -> usize {
        5 * self.num_vars + 1 + 3 * j + pos
    }

    pub fn num_vertices(&self) -> usize {
        5 * self.num_vars + 1 + 3 * self.num_clauses
    }

    pub fn to_json(&self) -> GcLabelingJson {
        let mut v = BTreeMap::new();
        let mut vp = BTreeMap::new();
        let mut u = BTreeMap::new();
        for var in 0..self.num_vars {
            for l in [Literal::pos(var), Literal::neg(var)] {
                v.insert(l.to_string(), self.v(l));
                vp.insert(l.to_string(), self.vp(l));
            }
            u.insert((var + 1).to_string(), self.u(var));
        }
        let clause = (0..self.num_clauses)
            .map(|j| [self.clause(j, 0), self.clause(j, 1), self.clause(j, 2)])
            .collect();
        GcLabelingJson { r: self.r(), v, vp, u, clause }
    }
}

/// `{"r":id,"v":{lit:id},"vp":{lit:id},"u":{var:id},"clause":[[id,id,id],..]}`,
/// with literals and variables in 1-based DIMACS notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcLabelingJson {
    pub r: usize,
    pub v: BTreeMap<String, usize>,
    pub vp: BTreeMap<String, usize>,
    pub u: BTreeMap<String, usize>,
    pub clause: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcInstance {
    pub graph: Graph,
    pub labeling: GcLabeling,
}

/// Builds `G_C`: house gadgets with their `u(x)`–`r` edges, clause triangles,
/// literal–clause edges and complement-literal triangles.
pub fn build_gc(cnf: &Cnf1in3) -> GcInstance {
    let lab = GcLabeling { num_vars: cnf.num_vars, num_clauses: cnf.clauses.len() };
    let mut g = Graph::new(lab.num_vertices());
    let mut add = |a: usize, b: usize| {
        g.add_edge(a, b).expect("layout ids are in range and distinct");
    };
    for var in 0..cnf.num_vars {
        let (x, nx) = (Literal::pos(var), Literal::neg(var));
        add(lab.v(x), lab.v(nx));
        add(lab.v(x), lab.vp(nx));
        add(lab.v(nx), lab.vp(x));
        add(lab.vp(x), lab.vp(nx));
        add(lab.vp(x), lab.u(var));
        add(lab.vp(nx), lab.u(var));
        add(lab.u(var), lab.r());
    }
    for (j, c) in cnf.clauses.iter().enumerate() {
        for p in 0..3 {
            add(lab.clause(j, p), lab.clause(j, (p + 1) % 3));
            add(lab.clause(j, p), lab.v(c[p]));
            add(lab.v(c[p].negated()), lab.v(c[(p + 1) % 3].negated()));
        }
    }
    GcInstance { graph: g, labeling: lab }
}

/// The cover `U_f`: every `u(x)`, `v(l)` and `v'(l)` for the true literal `l`
/// of each variable, and the two clause vertices not attached to the true literal.
pub fn assignment_to_cover(cnf: &Cnf1in3, lab: &GcLabeling, f: &[bool]) -> Result<VertexSet> {
    if !cnf.is_1in3(f) {
        return Err(Error::InvalidInput("assignment is not a 1-in-3 assignment".into()));
    }
    let mut u = VertexSet::new(lab.num_vertices());
    for (var, &val) in f.iter().enumerate() {
        let t = Literal { var, positive: val };
        u.insert(lab.u(var));
        u.insert(lab.v(t));
        u.insert(lab.vp(t));
    }
    for (j, c) in cnf.clauses.iter().enumerate() {
        for (p, l) in c.iter().enumerate() {
            if !l.is_true(f) {
                u.insert(lab.clause(j, p));
            }
        }
    }
    Ok(u)
}

/// The assignment `f_U` with `f_U(x) = 1` iff `v(x) ∈ U`.
pub fn cover_to_assignment(
    g: &Graph,
    cnf: &Cnf1in3,
    lab: &GcLabeling,
    u: &VertexSet,
) -> Result<Vec<bool>> {
    if !g.is_vertex_cover(u) {
        return Err(Error::InvalidInput("not a vertex cover of the gadget graph".into()));
    }
    if u.len() != cnf.cover_size() {
        return Err(Error::InvalidInput(format!(
            "cover has {} vertices, expected {}",
            u.len(),
            cnf.cover_size()
        )));
    }
    let f: Vec<bool> = (0..cnf.num_vars).map(|var| u.contains(lab.v(Literal::pos(var)))).collect();
    debug_assert!(cnf.is_1in3(&f));
    Ok(f)
}

/// A failed structural condition of a `(3n + 2m)`-cover of `G_C`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("condition {condition} fails: {detail}")]
pub struct ClaimViolation {
    /// 1: two vertices per clause triangle; 2: `r` out and every `u(x)` in;
    /// 3: house restricted to `{v(x), v'(x)}` or `{v(¬x), v'(¬x)}`;
    /// 4: no literal vertex in `U` next to a clause vertex in `U`.
    pub condition: u8,
    pub detail: String,
}

/// Checks the four structural conditions every minimum cover of `G_C` satisfies.
pub fn verify_cover_structure(
    g: &Graph,
    cnf: &Cnf1in3,
    lab: &GcLabeling,
    u: &VertexSet,
) -> std::result::Result<(), ClaimViolation> {
    let fail = |condition, detail: String| Err(ClaimViolation { condition, detail });
    for j in 0..cnf.clauses.len() {
        let k = (0..3).filter(|&p| u.contains(lab.clause(j, p))).count();
        if k != 2 {
            return fail(1, format!("clause {j} has {k} cover vertices"));
        }
    }
    if u.contains(lab.r()) {
        return fail(2, "r is in the cover".into());
    }
    if let Some(var) = (0..cnf.num_vars).find(|&x| !u.contains(lab.u(x))) {
        return fail(2, format!("u(x{}) is not in the cover", var + 1));
    }
    for var in 0..cnf.num_vars {
        let (x, nx) = (Literal::pos(var), Literal::neg(var));
        let got: Vec<bool> = [lab.v(x), lab.v(nx), lab.vp(x), lab.vp(nx)].iter().map(|&w| u.contains(w)).collect();
        if got != [true, false, true, false] && got != [false, true, false, true] {
            return fail(3, format!("house of x{} has pattern {got:?}", var + 1));
        }
    }
    for j in 0..cnf.clauses.len() {
        for p in 0..3 {
            let c = lab.clause(j, p);
            if !u.contains(c) {
                continue;
            }
            if let Some(w) = g.neighbors(c).iter().find(|&w| w < lab.r() && u.contains(w)) {
                return fail(4, format!("literal vertex {w} and clause vertex {c} are both in the cover"));
            }
        }
    }
    Ok(())
}

/// All 1-in-3 assignments, in increasing binary order with variable 1 as the
/// most significant bit.
pub fn enumerate_1in3(cnf: &Cnf1in3) -> Result<Vec<Vec<bool>>> {
    enumerate_1in3_with(cnf, &Limits::default())
}

pub fn enumerate_1in3_with(cnf: &Cnf1in3, limits: &Limits) -> Result<Vec<Vec<bool>>> {
    let n = cnf.num_vars;
    if n > limits.var_limit {
        return Err(Error::VariableLimit { vars: n, limit: limits.var_limit });
    }
    let mut out = Vec::new();
    for bits in 0u64..1 << n {
        let f: Vec<bool> = (0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect();
        if cnf.is_1in3(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

/// `G'`: every vertex `v` gets a pendant neighbour `n + v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGadget {
    pub graph: Graph,
    /// `pendant[v]` is the id of the vertex attached to `v`.
    pub pendant: Vec<usize>,
    /// Whether the input graph was bipartite.
    pub bipartite: bool,
}

pub fn build_bipartite_gadget(g: &Graph) -> BipartiteGadget {
    let n = g.n();
    let mut out = Graph::new(2 * n);
    for (a, b) in g.edges() {
        out.add_edge(a, b).expect("copied edge");
    }
    let pendant: Vec<usize> = (0..n).map(|v| n + v).collect();
    for (v, &p) in pendant.iter().enumerate() {
        out.add_edge(v, p).expect("pendant edge");
    }
    BipartiteGadget { graph: out, pendant, bipartite: g.bipartition().is_some() }
}

/// Smallest independent dominating set; the lexicographically first among ties.
pub fn min_independent_dominating_set(g: &Graph) -> Result<VertexSet> {
    min_independent_dominating_set_with(g, &Limits::default())
}

pub fn min_independent_dominating_set_with(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    let limit = limits.enum_vertex_limit.min(limits.vertex_limit);
    if g.n() > limit {
        return Err(Error::VertexLimit { n: g.n(), limit });
    }
    fn rec(g: &Graph, k: usize, start: usize, cur: &mut VertexSet, dominated: &VertexSet) -> bool {
        if cur.len() == k {
            return dominated.len() == g.n();
        }
        for v in start..g.n() {
            if g.neighbors(v).intersects(cur) || cur.contains(v) {
                continue;
            }
            cur.insert(v);
            let d = dominated | &g.closed_neighborhood(v);
            if rec(g, k, v + 1, cur, &d) {
                return true;
            }
            cur.remove(v);
        }
        false
    }
    for k in 0..=g.n() {
        let mut cur = g.empty_set();
        if rec(g, k, 0, &mut cur, &g.empty_set()) {
            return Ok(cur);
        }
    }
    unreachable!("a maximal independent set dominates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vc;

    fn figure1() -> Cnf1in3 {
        let (x, nx) = (Literal::pos, Literal::neg);
        Cnf1in3::new(4, vec![[x(0), x(1), x(2)], [nx(1), x(2), x(3)]]).unwrap()
    }

    #[test]
    fn gadget_sizes() {
        let gc = build_gc(&figure1());
        assert_eq!(gc.graph.n(), 27);
        let one = Cnf1in3::new(3, vec![[Literal::pos(0), Literal::pos(1), Literal::pos(2)]]).unwrap();
        assert_eq!(build_gc(&one).graph.n(), 19);
        let empty = Cnf1in3::new(1, vec![]).unwrap();
        let gc = build_gc(&empty);
        assert_eq!((gc.graph.n(), gc.graph.m()), (6, 7));
    }

    #[test]
    fn house_only_structure() {
        let cnf = Cnf1in3::new(1, vec![]).unwrap();
        let gc = build_gc(&cnf);
        let covers = vc::enumerate_min_vertex_covers(&gc.graph).unwrap();
        assert_eq!(covers.len(), 2);
        for c in &covers {
            assert_eq!(c.len(), 3);
            verify_cover_structure(&gc.graph, &cnf, &gc.labeling, c).unwrap();
        }
    }

    #[test]
    fn figure1_roundtrip() {
        let cnf = figure1();
        let gc = build_gc(&cnf);
        let f = [true, false, false, false];
        let u = assignment_to_cover(&cnf, &gc.labeling, &f).unwrap();
        assert_eq!(u.len(), 16);
        assert!(gc.graph.is_vertex_cover(&u));
        verify_cover_structure(&gc.graph, &cnf, &gc.labeling, &u).unwrap();
        assert_eq!(cover_to_assignment(&gc.graph, &cnf, &gc.labeling, &u).unwrap(), f);
        assert!(enumerate_1in3(&cnf).unwrap().contains(&f.to_vec()));
        assert!(assignment_to_cover(&cnf, &gc.labeling, &[true, true, false, false]).is_err());
    }

    #[test]
    fn structure_violations() {
        let cnf = figure1();
        let gc = build_gc(&cnf);
        let lab = &gc.labeling;
        let u = assignment_to_cover(&cnf, lab, &[true, false, false, false]).unwrap();
        let mut with_r = u.clone();
        with_r.insert(lab.r());
        with_r.remove(lab.u(0));
        assert_eq!(verify_cover_structure(&gc.graph, &cnf, lab, &with_r).unwrap_err().condition, 2);
        let mut both = u.clone();
        both.insert(lab.v(Literal::neg(0)));
        both.remove(lab.vp(Literal::pos(0)));
        assert_eq!(verify_cover_structure(&gc.graph, &cnf, lab, &both).unwrap_err().condition, 3);
    }

    #[test]
    fn one_in_three_counts() {
        let (x, nx) = (Literal::pos, Literal::neg);
        let one = Cnf1in3::new(3, vec![[x(0), x(1), x(2)]]).unwrap();
        assert_eq!(enumerate_1in3(&one).unwrap().len(), 3);
        let pair = Cnf1in3::new(3, vec![[x(0), x(1), x(2)], [nx(0), nx(1), nx(2)]]).unwrap();
        // exactly one true and exactly one false among three variables is impossible
        assert_eq!(enumerate_1in3(&pair).unwrap().len(), 0);
        let big = Cnf1in3::new(25, vec![]).unwrap();
        assert_eq!(enumerate_1in3(&big).unwrap_err(), Error::VariableLimit { vars: 25, limit: 24 });
    }

    #[test]
    fn cnf_parsing() {
        let cnf = parse_cnf("c demo\np cnf 4 2\n1 2 3 0\n-2 3\n4 0\n").unwrap();
        assert_eq!(cnf, figure1());
        assert_eq!(parse_cnf(&cnf.to_dimacs()).unwrap(), cnf);
        assert!(matches!(
            parse_cnf("p cnf 3 1\n1 2 0\n"),
            Err(Error::Parse(ParseError::ClauseWidth { line: 2, len: 2 }))
        ));
        assert!(matches!(
            parse_cnf("p cnf 2 1\n1 2 3 0\n"),
            Err(Error::Parse(ParseError::LiteralOutOfRange { literal: 3, .. }))
        ));
        assert!(matches!(parse_cnf("1 2 3 0\n"), Err(Error::Parse(ParseError::MissingProblemLine))));
        assert!(matches!(
            parse_cnf("p cnf 3 2\n1 2 3 0\n"),
            Err(Error::Parse(ParseError::ClauseCountMismatch { declared: 2, found: 1 }))
        ));
        assert!(parse_cnf("p cnf 3 1\n1 1 2 0\n").is_err());
    }

    #[test]
    fn labeling_json() {
        let gc = build_gc(&figure1());
        let v = serde_json::to_value(gc.labeling.to_json()).unwrap();
        assert_eq!(v["r"], 20);
        assert_eq!(v["v"]["-2"], 6);
        assert_eq!(v["vp"]["1"], 2);
        assert_eq!(v["u"]["4"], 19);
        assert_eq!(v["clause"][1], serde_json::json!([24, 25, 26]));
    }

    #[test]
    fn pendant_gadget() {
        let g = build_bipartite_gadget(&Graph::cycle(4));
        assert_eq!(g.graph.n(), 8);
        assert!(g.bipartite);
        assert_eq!(vc::tau(&g.graph).unwrap(), 4);
        let g = build_bipartite_gadget(&Graph::new(1));
        assert_eq!(g.graph, Graph::path(2));
        let g = build_bipartite_gadget(&Graph::path(3));
        assert_eq!((g.graph.n(), vc::tau(&g.graph).unwrap()), (6, 3));
        assert!(!build_bipartite_gadget(&Graph::complete(3)).bipartite);
    }

    #[test]
    fn independent_domination() {
        assert_eq!(min_independent_dominating_set(&Graph::star(3)).unwrap().to_vec(), vec![0]);
        assert_eq!(min_independent_dominating_set(&Graph::cycle(4)).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(min_independent_dominating_set(&Graph::complete(3)).unwrap().len(), 1);
        assert!(min_independent_dominating_set(&Graph::new(0)).unwrap().is_empty());
    }
}
