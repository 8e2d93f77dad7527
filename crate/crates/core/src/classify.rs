//! Structural classification: regular, bi-regular (semi-regular bipartite),
//! bi-degreed.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// No edges.
    Empty,
    /// Every vertex has degree `k >= 1`.
    Regular(usize),
    /// Connected, non-regular, bipartite, one side all `high`, the other all `low`.
    BiRegular {
        high: usize,
        low: usize,
    },
    /// Exactly two distinct degrees, but not bi-regular.
    BiDegreed,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClassification {
    pub kind: GraphKind,
    pub connected: bool,
    pub bipartite: bool,
    /// `d(u)^2 + d(v)^2` takes one value over all edges. False when `m = 0`.
    pub edge_sumsq_constant: bool,
}

impl GraphClassification {
    /// Regular in the broad sense: edgeless graphs are 0-regular.
    pub fn is_regular(&self) -> bool {
        matches!(self.kind, GraphKind::Empty | GraphKind::Regular(_))
    }
}

pub fn classify(g: &Graph) -> GraphClassification {
    let connected = g.is_connected();
    let bipartition = g.bipartition();
    let bipartite = bipartition.is_some();
    let edge_sumsq_constant = edge_quantity_constant(g, |a, b| a * a + b * b);
    let distinct: BTreeSet<usize> = g.degrees().iter().copied().collect();

    let kind = if g.is_edgeless() {
        GraphKind::Empty
    } else if distinct.len() == 1 {
        GraphKind::Regular(g.degree(0))
    } else {
        let side_uniform = |side: &[usize]| side.iter().all(|&v| g.degree(v) == g.degree(side[0]));
        match &bipartition {
            Some((a, b)) if connected && side_uniform(a) && side_uniform(b) => {
                // Connected and non-regular, so both sides are non-empty and differ.
                let (da, db) = (g.degree(a[0]), g.degree(b[0]));
                GraphKind::BiRegular { high: da.max(db), low: da.min(db) }
            }
            _ if distinct.len() == 2 => GraphKind::BiDegreed,
            _ => GraphKind::General,
        }
    };

    GraphClassification { kind, connected, bipartite, edge_sumsq_constant }
}

/// Whether `f(d(u), d(v))` is the same for every edge. False when `m = 0`.
pub(crate) fn edge_quantity_constant(g: &Graph, f: impl Fn(usize, usize) -> usize) -> bool {
    let mut values = g.edges().iter().map(|&(u, v)| f(g.degree(u), g.degree(v)));
    match values.next() {
        None => false,
        Some(first) => values.all(|x| x == first),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is regular")]
    Regular,
}

/// The three characterisations of bi-regularity for a connected non-regular
/// graph, each evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiRegularPredicates {
    /// Classified as `BiRegular`.
    pub bi_regular: bool,
    /// Two distinct degrees and a constant positive `|d(u) - d(v)|` over edges.
    pub constant_degree_gap: bool,
    /// Constant `d(u)^2 + d(v)^2` over edges.
    pub constant_sum_of_squares: bool,
}

impl BiRegularPredicates {
    pub fn agree(&self) -> bool {
        self.bi_regular == self.constant_degree_gap && self.bi_regular == self.constant_sum_of_squares
    }
}

pub fn bi_regular_predicates(g: &Graph) -> Result<BiRegularPredicates, EquivalenceError> {
    if !g.is_connected() {
        return Err(EquivalenceError::Disconnected);
    }
    let class = classify(g);
    if class.is_regular() {
        return Err(EquivalenceError::Regular);
    }
    let distinct: BTreeSet<usize> = g.degrees().iter().copied().collect();
    let gap_constant = edge_quantity_constant(g, |a, b| a.abs_diff(b));
    let gap_positive = g.edges().iter().all(|&(u, v)| g.degree(u) != g.degree(v));
    Ok(BiRegularPredicates {
        bi_regular: matches!(class.kind, GraphKind::BiRegular { .. }),
        constant_degree_gap: distinct.len() == 2 && gap_constant && gap_positive,
        constant_sum_of_squares: class.edge_sumsq_constant,
    })
}

/// True iff the three bi-regularity predicates agree on `g`, which must be
/// connected and non-regular.
pub fn check_bi_regular_equivalence(g: &Graph) -> Result<bool, EquivalenceError> {
    bi_regular_predicates(g).map(|p| p.agree())
}
