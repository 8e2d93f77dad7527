//! Standard graph families with fixed labelings.
//!
//! * complete, empty: vertices `0..n`
//! * cycle: edges `i - (i+1 mod n)`
//! * path: edges `i - (i+1)`
//! * star: vertex 0 is the centre, leaves `1..=k`
//! * complete bipartite `K_{a,b}`: sides `0..a` and `a..a+b`

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Empty,
    Cycle,
    Path,
    Star,
    CompleteBipartite,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Complete, Family::Empty, Family::Cycle, Family::Path, Family::Star, Family::CompleteBipartite];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::CompleteBipartite => "complete_bipartite",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| GeneratorError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter(s), got {found}")]
    ParameterCount { family: Family, expected: &'static str, found: usize },
    #[error("{family}: {reason}")]
    OutOfRange { family: Family, reason: &'static str },
}

fn out_of_range(family: Family, reason: &'static str) -> GeneratorError {
    GeneratorError::OutOfRange { family, reason }
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(out_of_range(Family::Complete, "n must be at least 1"));
    }
    let edges = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect::<Vec<_>>();
    Ok(Graph::new(n, edges).expect("valid by construction"))
}

pub fn empty(n: usize) -> Result<Graph, GeneratorError> {
    Graph::empty(n).map_err(|_| out_of_range(Family::Empty, "n must be at least 1"))
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(out_of_range(Family::Cycle, "n must be at least 3"));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid by construction"))
}

pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(out_of_range(Family::Path, "n must be at least 1"));
    }
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid by construction"))
}

/// `K_{1,leaves}`.
pub fn star(leaves: usize) -> Result<Graph, GeneratorError> {
    if leaves == 0 {
        return Err(out_of_range(Family::Star, "a star needs at least one leaf"));
    }
    Ok(Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid by construction"))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GeneratorError> {
    if a == 0 || b == 0 {
        return Err(out_of_range(Family::CompleteBipartite, "both sides need at least one vertex"));
    }
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect::<Vec<_>>();
    Ok(Graph::new(a + b, edges).expect("valid by construction"))
}

/// Builds a family member from integer parameters: `[n]` for complete,
/// empty, cycle and path; `[leaves]` or `[1, leaves]` for star; `[a, b]` for
/// complete bipartite.
pub fn generate_family(family: Family, params: &[usize]) -> Result<Graph, GeneratorError> {
    let count = |expected| GeneratorError::ParameterCount { family, expected, found: params.len() };
    match (family, params) {
        (Family::Complete, &[n]) => complete(n),
        (Family::Empty, &[n]) => empty(n),
        (Family::Cycle, &[n]) => cycle(n),
        (Family::Path, &[n]) => path(n),
        (Family::Star, &[k]) | (Family::Star, &[1, k]) => star(k),
        (Family::Star, &[_, _]) => Err(out_of_range(family, "a star is K_{1,k}")),
        (Family::CompleteBipartite, &[a, b]) => complete_bipartite(a, b),
        (Family::Star, _) => Err(count("1 or 2")),
        (Family::CompleteBipartite, _) => Err(count("2")),
        _ => Err(count("1")),
    }
}
