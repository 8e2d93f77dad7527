//! Immutable finite simple graphs.
//!
//! Vertices are dense `0..n` indices. Edges are stored once as `(u, v)` with
//! `u < v`, sorted lexicographically, so two graphs with the same edge set
//! compare equal regardless of construction order.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// A finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a simple graph from an edge list.
    ///
    /// Pairs are unordered and duplicates collapse to one edge. Self-loops,
    /// out-of-range endpoints and `n == 0` are rejected.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    /// Caller guarantees `edges` is sorted, deduplicated, `u < v < n`.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut degrees = vec![0; n];
        for &(u, v) in &edges {
            debug_assert!(u < v && v < n);
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Graph { n, edges, degrees }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// `n(n-1)/2`, the edge count of the complete graph on the same vertices.
    pub fn max_size(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.max_size()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(self.degrees.clone())
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = self.degrees.iter().map(|&d| Vec::with_capacity(d)).collect();
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.max_size() - self.size());
        let mut present = self.edges.iter().peekable();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if present.peek() == Some(&&(u, v)) {
                    present.next();
                } else {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_sorted_edges(self.n, edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_sorted_edges(self.n + other.n, edges)
    }

    /// A copy of this graph with one more edge (no-op if already present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().copied().chain(std::iter::once((u, v))))
    }

    /// Whether a traversal from vertex 0 reaches every vertex.
    ///
    /// The single-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut component = Vec::new();
            while let Some(u) = stack.pop() {
                component.push(u);
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// A proper 2-colouring as `(side_a, side_b)`, or `None` for graphs with
    /// an odd cycle. Each component's smallest vertex is placed in `side_a`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let adj = self.adjacency_lists();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let side = colour[u].expect("queued vertices are coloured");
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!side);
                            queue.push_back(w);
                        }
                        Some(c) if c == side => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (b, a): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| colour[v] == Some(true));
        Some((a, b))
    }
}

/// Vertex degrees together with the minimum and maximum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

impl DegreeProfile {
    fn new(degrees: Vec<usize>) -> Self {
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, min, max }
    }

    /// Minimum degree over vertices that have at least one neighbour.
    pub fn min_non_isolated(&self) -> Option<usize> {
        self.degrees.iter().copied().filter(|&d| d > 0).min()
    }

    /// Maximum degree over vertices that have at least one neighbour.
    pub fn max_non_isolated(&self) -> Option<usize> {
        self.degrees.iter().copied().filter(|&d| d > 0).max()
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Whether all vertices of positive degree share one degree. Vacuously
    /// false for edgeless graphs.
    pub fn non_isolated_uniform(&self) -> bool {
        matches!((self.min_non_isolated(), self.max_non_isolated()), (Some(a), Some(b)) if a == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn construction() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3, path(3));

        let dup = Graph::new(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.size(), 1);

        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::empty(0), Err(GraphError::NoVertices));
    }

    #[test]
    fn degree_profiles() {
        let p = path(3).degree_profile();
        assert_eq!(p.degrees, vec![1, 2, 1]);
        assert_eq!((p.min, p.max), (1, 2));

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = k4.degree_profile();
        assert_eq!(p.degrees, vec![3; 4]);
        assert_eq!((p.min, p.max), (3, 3));

        let p = Graph::empty(5).unwrap().degree_profile();
        assert_eq!(p.degrees, vec![0; 5]);
        assert_eq!((p.min, p.max), (0, 0));
        assert_eq!(p.min_non_isolated(), None);
        assert!(!p.non_isolated_uniform());
    }

    #[test]
    fn complement_of_complete_and_c5() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.complement().is_edgeless());

        // The complement of 0-1-2-3-4-0 is the pentagram 0-2-4-1-3-0.
        let c5 = cycle(5);
        let pentagram = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5.complement(), pentagram);
        assert!(c5.complement().degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        assert!(!Graph::new(4, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert_eq!(Graph::new(4, [(0, 1)]).unwrap().components().len(), 3);
    }

    #[test]
    fn long_path_is_connected_without_recursion() {
        assert!(path(100_000).is_connected());
    }

    #[test]
    fn bipartitions() {
        assert_eq!(cycle(4).bipartition(), Some((vec![0, 2], vec![1, 3])));
        assert_eq!(cycle(5).bipartition(), None);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.bipartition(), Some((vec![0], vec![1, 2, 3])));
    }

    #[test]
    fn union_and_edge_insertion() {
        let g = path(3).disjoint_union(&cycle(3));
        assert_eq!(g.order(), 6);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (3, 4), (3, 5), (4, 5)]);
        let h = path(3).with_edge(0, 2).unwrap();
        assert_eq!(h, cycle(3));
    }
}
