//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! digraph 4
//! 0 1
//! 2 1
//! 3 2
//! ```
//!
//! The first non-comment line is `digraph <n>` or `graph <n>`; every further
//! line holds one edge `<u> <v>`. Vertices are 0-based.

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{Digraph, UndirectedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// A parsed file of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Directed(Digraph),
    Undirected(UndirectedGraph),
}

impl AnyGraph {
    pub fn underlying(&self) -> UndirectedGraph {
        match self {
            AnyGraph::Directed(d) => d.underlying(),
            AnyGraph::Undirected(g) => g.clone(),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &content[s..i], column: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &content[s..], column: s + 1 });
    }
    out
}

fn number(line: usize, tok: &Token<'_>) -> Result<usize, ParseError> {
    tok.text
        .parse()
        .map_err(|_| ParseError::new(line, tok.column, format!("expected a vertex index, found `{}`", tok.text)))
}

pub fn parse_any(input: &str) -> Result<AnyGraph, ParseError> {
    let mut header: Option<(bool, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    let mut last_line = 0;

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        let Some((directed, n)) = header else {
            let directed = match toks[0].text {
                "digraph" => true,
                "graph" => false,
                other => {
                    return Err(ParseError::new(
                        line,
                        toks[0].column,
                        format!("expected `digraph <n>` or `graph <n>`, found `{other}`"),
                    ))
                }
            };
            if toks.len() != 2 {
                let col = toks.get(2).map_or(raw.len() + 1, |t| t.column);
                return Err(ParseError::new(line, col, "header takes exactly one vertex count"));
            }
            header = Some((directed, number(line, &toks[1])?));
            continue;
        };
        if toks.len() != 2 {
            let col = toks.get(2).map_or(raw.len() + 1, |t| t.column);
            return Err(ParseError::new(line, col, "an edge line holds exactly two vertices"));
        }
        let u = number(line, &toks[0])?;
        let v = number(line, &toks[1])?;
        for (w, tok) in [(u, &toks[0]), (v, &toks[1])] {
            if w >= n {
                return Err(ParseError::new(line, tok.column, format!("vertex {w} out of range 0..{n}")));
            }
        }
        if u == v {
            return Err(ParseError::new(line, toks[0].column, format!("self-loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if let Some(&(prev_line, prev)) = seen.get(&key) {
            let what = if !directed || prev == (u, v) { "duplicate" } else { "anti-parallel" };
            return Err(ParseError::new(
                line,
                toks[0].column,
                format!("{what} edge {u} {v} (first given on line {prev_line})"),
            ));
        }
        seen.insert(key, (line, (u, v)));
        edges.push((u, v));
    }

    let Some((directed, n)) = header else {
        return Err(ParseError::new(last_line.max(1), 1, "missing `digraph <n>` or `graph <n>` header"));
    };
    // endpoints and duplicates were checked above, so construction cannot fail
    let wrap = |e: crate::Error| ParseError::new(last_line, 1, e.to_string());
    if directed {
        Digraph::new(n, edges).map(AnyGraph::Directed).map_err(wrap)
    } else {
        UndirectedGraph::new(n, edges).map(AnyGraph::Undirected).map_err(wrap)
    }
}

pub fn parse_digraph(input: &str) -> Result<Digraph, ParseError> {
    match parse_any(input)? {
        AnyGraph::Directed(d) => Ok(d),
        AnyGraph::Undirected(_) => Err(ParseError::new(header_line(input), 1, "expected a `digraph` file")),
    }
}

pub fn parse_graph(input: &str) -> Result<UndirectedGraph, ParseError> {
    match parse_any(input)? {
        AnyGraph::Undirected(g) => Ok(g),
        AnyGraph::Directed(_) => Err(ParseError::new(header_line(input), 1, "expected a `graph` file")),
    }
}

fn header_line(input: &str) -> usize {
    input.lines().position(|l| !tokens(l).is_empty()).map_or(1, |i| i + 1)
}

fn write_edges(out: &mut String, kind: &str, n: usize, edges: &[(usize, usize)]) {
    let _ = writeln!(out, "{kind} {n}");
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
}

impl Digraph {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        write_edges(&mut s, "digraph", self.n(), self.edges());
        s
    }
}

impl UndirectedGraph {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        write_edges(&mut s, "graph", self.n(), self.edges());
        s
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
