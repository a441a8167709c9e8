use std::collections::HashSet;

use super::Graph;
use crate::error::ParseError;

/// A parsed DIMACS graph plus the number of repeated edge lines that were collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

/// Parses the DIMACS edge format (`c` comments, one `p edge n m`, then `e u v`, 1-indexed).
///
/// The declared edge count may equal either the distinct edge count or the raw
/// number of `e` lines.
pub fn parse_dimacs(text: &str) -> Result<Parsed, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::new(0);
    let mut seen = HashSet::new();
    let mut lines_with_edges = 0usize;
    let mut duplicate_edges = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateProblemLine { line });
                }
                let format = tok.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(syntax(line, "expected `p edge <n> <m>`"));
                }
                let n = number(tok.next(), line)?;
                let m = number(tok.next(), line)?;
                if tok.next().is_some() {
                    return Err(syntax(line, "trailing tokens on problem line"));
                }
                header = Some((n, m));
                graph = Graph::new(n);
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(syntax(line, "edge before problem line"));
                };
                let u = number(tok.next(), line)?;
                let v = number(tok.next(), line)?;
                if tok.next().is_some() {
                    return Err(syntax(line, "trailing tokens on edge line"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(ParseError::EndpointOutOfRange { line, vertex: x, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                lines_with_edges += 1;
                let key = (u.min(v) - 1, u.max(v) - 1);
                if seen.insert(key) {
                    graph.add_edge(key.0, key.1).expect("endpoints checked");
                } else {
                    duplicate_edges += 1;
                }
            }
            other => return Err(syntax(line, &format!("unknown line type `{other}`"))),
        }
    }

    let (_, declared) = header.ok_or(ParseError::MissingProblemLine)?;
    if declared != graph.m() && declared != lines_with_edges {
        return Err(ParseError::EdgeCountMismatch { declared, found: graph.m() });
    }
    Ok(Parsed { graph, duplicate_edges })
}

fn syntax(line: usize, msg: &str) -> ParseError {
    ParseError::Syntax { line, msg: msg.to_string() }
}

fn number(tok: Option<&str>, line: usize) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, "missing number"))?;
    tok.parse().map_err(|_| syntax(line, &format!("`{tok}` is not a non-negative integer")))
}
