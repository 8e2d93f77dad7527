//! Plain-text edge lists: an `n m` header followed by `m` lines `u v`
//! (0-based). Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct EdgeListError {
    /// 1-based line number; the line after the last one for missing lines.
    pub line: usize,
    pub kind: EdgeListErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListErrorKind {
    #[error("missing \"n m\" header")]
    MissingHeader,
    #[error("expected {expected} integers, found {found}")]
    WrongFieldCount { expected: usize, found: usize },
    #[error("not a non-negative integer: {0:?}")]
    BadInteger(String),
    #[error("header declares {declared} edges but {found} edge lines follow")]
    CountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let err = |kind| EdgeListError { line, kind };
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(EdgeListErrorKind::WrongFieldCount { expected: 2, found: fields.len() }));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| err(EdgeListErrorKind::BadInteger(s.to_string())));
    Ok((num(fields[0])?, num(fields[1])?))
}

/// Whether `text` looks like an edge list, i.e. its first content line starts
/// with a digit. graph6 never contains digits.
pub fn looks_like_edge_list(text: &str) -> bool {
    content_lines(text).next().is_some_and(|(_, l)| l.starts_with(|c: char| c.is_ascii_digit()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = content_lines(text);
    let last_line = text.lines().count() + 1;
    let (header_line, header) =
        lines.next().ok_or(EdgeListError { line: 1, kind: EdgeListErrorKind::MissingHeader })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(EdgeListError { line, kind: EdgeListErrorKind::CountMismatch { declared: m, found: m + 1 } });
        }
        let (u, v) = parse_pair(line, text)?;
        // Validate per line so errors carry the offending line number.
        Graph::new(n, [(u, v)]).map_err(|e| EdgeListError { line, kind: e.into() })?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError {
            line: last_line,
            kind: EdgeListErrorKind::CountMismatch { declared: m, found: edges.len() },
        });
    }
    Graph::new(n, edges).map_err(|e| EdgeListError { line: header_line, kind: e.into() })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}
