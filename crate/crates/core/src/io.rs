//! PACE `.gr` graphs, `.td` decompositions and cover files.
//!
//! Files number vertices and bags from 1; everything in memory is 0-based.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::decomposition::{Decomposition, DecompositionKind};
use crate::graph::{Graph, VertexId, VertexSet};

/// Vertex and bag counts above this are rejected before allocating.
pub const MAX_DECLARED: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("missing header line")]
    MissingHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("malformed header: expected `{0}`")]
    BadHeader(&'static str),
    #[error("declared count {0} is too large")]
    TooLarge(usize),
    #[error("unexpected token `{0}`")]
    BadToken(String),
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("bag id {id} outside 1..={count}")]
    BagOutOfRange { id: usize, count: usize },
    #[error("bag {0} defined twice")]
    DuplicateBag(usize),
    #[error("bag {0} never defined")]
    MissingBag(usize),
    #[error("vertex {0} repeated in a bag")]
    RepeatedVertex(usize),
    #[error("header declares bag size {declared}, largest bag has {actual}")]
    WidthMismatch { declared: usize, actual: usize },
    #[error("bag graph is not a tree")]
    NotATree,
    #[error("bag graph is not a path")]
    NotAPath,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn as_text(bytes: &[u8]) -> Result<&str, ParseError> {
    std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        err(line, ParseErrorKind::InvalidUtf8)
    })
}

/// Content lines with 1-based numbers; blank lines are skipped, comment
/// lines are returned so callers can look for directives.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty())
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| err(line, ParseErrorKind::BadToken(tok.to_string())))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<VertexId, ParseError> {
    let v = number(line, tok)?;
    if v == 0 || v > n {
        return Err(err(line, ParseErrorKind::VertexOutOfRange { vertex: v, n }));
    }
    Ok(v - 1)
}

fn declared(line: usize, tok: &str) -> Result<usize, ParseError> {
    let v = number(line, tok)?;
    if v > MAX_DECLARED {
        return Err(err(line, ParseErrorKind::TooLarge(v)));
    }
    Ok(v)
}

/// Parses a `.gr` file: `c` comment lines, one `p tw <n> <m>` header, then
/// `m` lines `<u> <v>`.
pub fn parse_gr(bytes: &[u8]) -> Result<Graph, ParseError> {
    let text = as_text(bytes)?;
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (line, toks) in lines(text) {
        if toks[0].starts_with('c') {
            continue;
        }
        if toks[0] == "p" {
            if header.is_some() {
                return Err(err(line, ParseErrorKind::DuplicateHeader));
            }
            if toks.len() != 4 || toks[1] != "tw" {
                return Err(err(line, ParseErrorKind::BadHeader("p tw <n> <m>")));
            }
            header = Some((declared(line, toks[2])?, number(line, toks[3])?));
            continue;
        }
        let Some((n, m)) = header else {
            return Err(err(line, ParseErrorKind::MissingHeader));
        };
        if toks.len() != 2 {
            return Err(err(line, ParseErrorKind::BadToken(toks.get(2).unwrap_or(&toks[0]).to_string())));
        }
        let u = vertex(line, toks[0], n)?;
        let v = vertex(line, toks[1], n)?;
        if u == v {
            return Err(err(line, ParseErrorKind::SelfLoop(u + 1)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, ParseErrorKind::DuplicateEdge(u + 1, v + 1)));
        }
        if edges.len() == m {
            return Err(err(line, ParseErrorKind::EdgeCountMismatch { expected: m, found: m + 1 }));
        }
        edges.push((u, v));
    }
    let Some((n, m)) = header else {
        return Err(err(last_line(text), ParseErrorKind::MissingHeader));
    };
    if edges.len() != m {
        return Err(err(last_line(text), ParseErrorKind::EdgeCountMismatch { expected: m, found: edges.len() }));
    }
    Ok(Graph::from_edges(n, edges).expect("edges checked while parsing"))
}

/// Writes a graph as a `.gr` file.
pub fn emit_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// A parsed `.td` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdDocument {
    /// Vertex count declared in the header.
    pub n: usize,
    /// Largest bag size declared in the header.
    pub bag_size: usize,
    pub decomposition: Decomposition,
}

/// Writes a decomposition in `.td` form. Path decompositions get a leading
/// `c path` line.
pub fn emit_td(d: &Decomposition, n: usize) -> String {
    let mut out = String::new();
    if d.kind == DecompositionKind::Path {
        out.push_str("c path\n");
    }
    let bag_size = d.bags.iter().map(Vec::len).max().unwrap_or(0);
    let _ = writeln!(out, "s td {} {} {}", d.bags.len(), bag_size, n);
    for (i, bag) in d.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in &d.edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Parses a `.td` file. Checks the header, bag ids, vertex ranges and that
/// the bag graph is a tree (a path when the file carries `c path`).
pub fn parse_td(bytes: &[u8]) -> Result<TdDocument, ParseError> {
    let text = as_text(bytes)?;
    let mut kind = DecompositionKind::Tree;
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<VertexId>>> = Vec::new();
    let mut edges = Vec::new();
    for (line, toks) in lines(text) {
        match toks[0] {
            "c" => {
                if toks.len() == 2 && toks[1] == "path" {
                    kind = DecompositionKind::Path;
                }
            }
            "s" => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(err(line, ParseErrorKind::BadHeader("s td <bags> <bag size> <n>")));
                }
                let count = declared(line, toks[2])?;
                let size = number(line, toks[3])?;
                let n = declared(line, toks[4])?;
                header = Some((count, size, n));
                bags = vec![None; count];
            }
            "b" => {
                let Some((count, _, n)) = header else {
                    return Err(err(line, ParseErrorKind::MissingHeader));
                };
                let Some(id_tok) = toks.get(1) else {
                    return Err(err(line, ParseErrorKind::BadToken("b".to_string())));
                };
                let id = number(line, id_tok)?;
                if id == 0 || id > count {
                    return Err(err(line, ParseErrorKind::BagOutOfRange { id, count }));
                }
                if bags[id - 1].is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateBag(id)));
                }
                let mut bag = Vec::with_capacity(toks.len() - 2);
                for tok in &toks[2..] {
                    bag.push(vertex(line, tok, n)?);
                }
                bag.sort_unstable();
                if let Some(w) = bag.windows(2).find(|w| w[0] == w[1]) {
                    return Err(err(line, ParseErrorKind::RepeatedVertex(w[0] + 1)));
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let Some((count, _, _)) = header else {
                    return Err(err(line, ParseErrorKind::MissingHeader));
                };
                if toks.len() != 2 {
                    return Err(err(line, ParseErrorKind::BadToken(toks.get(2).unwrap_or(&toks[0]).to_string())));
                }
                let mut ends = [0; 2];
                for (slot, tok) in ends.iter_mut().zip(&toks) {
                    let id = number(line, tok)?;
                    if id == 0 || id > count {
                        return Err(err(line, ParseErrorKind::BagOutOfRange { id, count }));
                    }
                    *slot = id - 1;
                }
                edges.push((line, ends[0], ends[1]));
            }
        }
    }
    let end = last_line(text);
    let Some((count, size, n)) = header else {
        return Err(err(end, ParseErrorKind::MissingHeader));
    };
    let mut full = Vec::with_capacity(count);
    for (i, bag) in bags.into_iter().enumerate() {
        match bag {
            Some(b) => full.push(b),
            None => return Err(err(end, ParseErrorKind::MissingBag(i + 1))),
        }
    }
    let actual = full.iter().map(Vec::len).max().unwrap_or(0);
    if actual != size {
        return Err(err(end, ParseErrorKind::WidthMismatch { declared: size, actual }));
    }
    check_tree(count, &edges, kind, end)?;
    let decomposition = Decomposition {
        kind,
        bags: full,
        edges: edges.iter().map(|&(_, a, b)| (a, b)).collect(),
        root: 0,
    };
    Ok(TdDocument { n, bag_size: size, decomposition })
}

/// Union-find pass: the first edge closing a cycle is reported at its line,
/// a wrong edge count at the end of input.
fn check_tree(
    count: usize,
    edges: &[(usize, usize, usize)],
    kind: DecompositionKind,
    end: usize,
) -> Result<(), ParseError> {
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut degree = vec![0usize; count];
    for &(line, a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Err(err(line, ParseErrorKind::NotATree));
        }
        parent[ra] = rb;
        degree[a] += 1;
        degree[b] += 1;
        if kind == DecompositionKind::Path && (degree[a] > 2 || degree[b] > 2) {
            return Err(err(line, ParseErrorKind::NotAPath));
        }
    }
    if count > 0 && edges.len() != count - 1 {
        return Err(err(end, ParseErrorKind::NotATree));
    }
    Ok(())
}

/// Parses a cover file: whitespace-separated 1-based vertex ids; lines
/// starting with `c` are comments.
pub fn parse_cover(bytes: &[u8], n: usize) -> Result<VertexSet, ParseError> {
    let text = as_text(bytes)?;
    let mut set = VertexSet::new(n);
    for (line, toks) in lines(text) {
        if toks[0] == "c" {
            continue;
        }
        for tok in toks {
            set.insert(vertex(line, tok, n)?);
        }
    }
    Ok(set)
}
