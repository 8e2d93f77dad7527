//! Graph ingestion, serialization, generation and enumeration.

pub mod edge_list;
pub mod enumerate;
pub mod generators;
pub mod graph6;
pub mod random;

use thiserror::Error;

use crate::graph::Graph;

pub use edge_list::{parse_edge_list, to_edge_list, EdgeListError};
pub use enumerate::{canonical_form, enumerate_graphs, enumerate_orders, is_canonical, EnumerationSpec};
pub use generators::{generate_family, Family};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use random::{random_graph, SplitMix64};

/// A parse failure located by 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
}

/// Reads a text corpus: either one edge list, or graph6 strings one per line
/// (blank lines and `#` comments skipped). The format is sniffed from the
/// first content line.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>, CorpusError> {
    if edge_list::looks_like_edge_list(text) {
        return Ok(vec![parse_edge_list(text)?]);
    }
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| parse_graph6(l).map_err(|source| CorpusError::Graph6 { line, source }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_formats() {
        let g6 = parse_corpus(">>graph6<<A_\n# comment\n\nD?{\n").unwrap();
        assert_eq!(g6.len(), 2);
        let el = parse_corpus("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(el.len(), 1);
        assert!(parse_corpus("").unwrap().is_empty());
        assert!(matches!(parse_corpus("A_\nA`\n"), Err(CorpusError::Graph6 { line: 2, .. })));
    }
}
