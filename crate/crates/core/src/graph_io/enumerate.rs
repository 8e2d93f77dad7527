//! Exhaustive enumeration of small graphs, optionally one per isomorphism
//! class.
//!
//! Labeled enumeration walks all `2^(n(n-1)/2)` edge subsets, with edge-set
//! bit `k` standing for the `k`-th vertex pair in graph6 column order.
//!
//! The canonical form of a graph is its relabeling whose adjacency bit
//! string, read in graph6 column order, is lexicographically smallest over
//! all `n!` vertex permutations. It is found by branch and bound: placing a
//! vertex at position `j` fixes the bits of column `j`, so any partial
//! labeling whose prefix already exceeds the best complete string is cut.

use std::ops::RangeInclusive;

use thiserror::Error;

use crate::graph::Graph;

/// Largest order for exhaustive enumeration (labeled or deduplicated).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub connected_only: bool,
    pub dedup_isomorphism: bool,
}

impl EnumerationSpec {
    pub fn labeled(n: usize) -> Self {
        EnumerationSpec { n, connected_only: false, dedup_isomorphism: false }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn dedup(mut self) -> Self {
        self.dedup_isomorphism = true;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration needs n >= 1")]
    NoVertices,
    #[error("exhaustive enumeration is capped at n = {max}, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Adjacency as one bitmask row per vertex.
struct BitAdjacency {
    n: usize,
    rows: Vec<u16>,
}

impl BitAdjacency {
    fn new(g: &Graph) -> Self {
        let mut rows = vec![0u16; g.order()];
        for &(u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        BitAdjacency { n: g.order(), rows }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn total_bits(&self) -> u32 {
        (self.n * (self.n.saturating_sub(1)) / 2) as u32
    }

    /// Bits of column `pos` under `perm`, `x(perm[0], w) .. x(perm[pos-1], w)`.
    fn column(&self, perm: &[usize], w: usize) -> u64 {
        perm.iter().fold(0, |acc, &p| (acc << 1) | self.adjacent(p, w) as u64)
    }

    fn key(&self, perm: &[usize]) -> u64 {
        (1..self.n).fold(0, |acc, j| (acc << j) | self.column(&perm[..j], perm[j]))
    }
}

struct Search<'a> {
    adj: &'a BitAdjacency,
    total: u32,
    best: u64,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
    /// Stop at the first strictly smaller prefix (canonicity test).
    stop_on_smaller: bool,
    found_smaller: bool,
}

impl Search<'_> {
    fn run(&mut self, used: u16, prefix: u64, len: u32) {
        let pos = self.perm.len();
        if pos == self.adj.n {
            if prefix < self.best {
                self.best = prefix;
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        for w in 0..self.adj.n {
            if used >> w & 1 == 1 {
                continue;
            }
            let column = self.adj.column(&self.perm, w);
            let next_len = len + pos as u32;
            let next = (prefix << pos) | column;
            let best_prefix = self.best >> (self.total - next_len);
            if next > best_prefix {
                continue;
            }
            if next < best_prefix && self.stop_on_smaller {
                self.found_smaller = true;
                return;
            }
            self.perm.push(w);
            self.run(used | 1 << w, next, next_len);
            self.perm.pop();
            if self.found_smaller {
                return;
            }
        }
    }
}

fn check_canonical_order(g: &Graph) -> Result<(), EnumerationError> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(EnumerationError::TooLarge { n: g.order(), max: MAX_CANONICAL_ORDER });
    }
    Ok(())
}

fn run_search(adj: &BitAdjacency, stop_on_smaller: bool) -> (u64, Vec<usize>, bool) {
    let identity: Vec<usize> = (0..adj.n).collect();
    let mut s = Search {
        adj,
        total: adj.total_bits(),
        best: adj.key(&identity),
        best_perm: identity,
        perm: Vec::with_capacity(adj.n),
        stop_on_smaller,
        found_smaller: false,
    };
    s.run(0, 0, 0);
    (s.best, s.best_perm, s.found_smaller)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph, EnumerationError> {
    check_canonical_order(g)?;
    let adj = BitAdjacency::new(g);
    let (_, perm, _) = run_search(&adj, false);
    let mut edges = Vec::with_capacity(g.size());
    for j in 1..g.order() {
        for i in 0..j {
            if adj.adjacent(perm[i], perm[j]) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(g.order(), edges))
}

/// Whether `g` is already its own canonical form.
pub fn is_canonical(g: &Graph) -> Result<bool, EnumerationError> {
    check_canonical_order(g)?;
    let adj = BitAdjacency::new(g);
    Ok(!run_search(&adj, true).2)
}

/// Iterator over the graphs described by an [`EnumerationSpec`].
pub struct GraphEnumerator {
    spec: EnumerationSpec,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end_mask: u64,
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end_mask {
            let mask = self.next_mask;
            self.next_mask += 1;
            let mut edges: Vec<(usize, usize)> =
                self.pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
            edges.sort_unstable();
            let g = Graph::from_sorted_edges(self.spec.n, edges);
            if self.spec.connected_only && !g.is_connected() {
                continue;
            }
            if self.spec.dedup_isomorphism && !is_canonical(&g).expect("order checked") {
                continue;
            }
            return Some(g);
        }
        None
    }
}

/// Every graph on `spec.n` vertices, each labeled graph once (or one per
/// isomorphism class with `dedup_isomorphism`), in increasing edge-mask order.
pub fn enumerate_graphs(spec: EnumerationSpec) -> Result<GraphEnumerator, EnumerationError> {
    if spec.n == 0 {
        return Err(EnumerationError::NoVertices);
    }
    if spec.n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::TooLarge { n: spec.n, max: MAX_ENUMERATION_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (1..spec.n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let end_mask = 1u64 << pairs.len();
    Ok(GraphEnumerator { spec, pairs, next_mask: 0, end_mask })
}

/// Enumeration over a range of orders, smallest first.
pub fn enumerate_orders(
    orders: RangeInclusive<usize>,
    connected_only: bool,
    dedup_isomorphism: bool,
) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    let enumerators = orders
        .map(|n| enumerate_graphs(EnumerationSpec { n, connected_only, dedup_isomorphism }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(enumerators.into_iter().flatten())
}
