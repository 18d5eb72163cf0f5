//! Immutable simple undirected graphs with dense 0-based vertex ids.

use crate::error::{Error, Result};

/// An undirected edge stored in canonical orientation `u < v`.
///
/// The canonical orientation is a storage convention only; analyses that care
/// about which endpoint plays which role take the endpoints explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    u: usize,
    v: usize,
}

impl EdgeRef {
    /// Builds an edge reference, swapping endpoints into `u < v` order.
    ///
    /// Panics on a loop; loops are rejected much earlier by every constructor.
    pub fn new(a: usize, b: usize) -> EdgeRef {
        assert!(a != b, "EdgeRef cannot be a loop");
        if a < b {
            EdgeRef { u: a, v: b }
        } else {
            EdgeRef { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// Both endpoints as a pair in storage order.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// An immutable simple undirected graph.
///
/// Invariants established at construction and never broken afterwards:
/// no loops, no duplicate edges, edges sorted in canonical order, and the
/// cached adjacency lists consistent with the edge set. A constructed graph
/// is freely shareable across threads for read-only analysis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<EdgeRef>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating repeated pairs.
    ///
    /// Loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        Self::build(vertex_count, pairs, false)
    }

    /// Like [`Graph::from_edge_list`] but reports duplicate edges instead of
    /// silently merging them.
    pub fn from_edge_list_strict(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        Self::build(vertex_count, pairs, true)
    }

    fn build(n: usize, pairs: &[(usize, usize)], strict: bool) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, vertex_count: n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, vertex_count: n });
            }
            if a == b {
                return Err(Error::LoopEdge { vertex: a });
            }
            edges.push(EdgeRef::new(a, b));
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if strict && edges.len() != before {
            // Find one duplicate to report.
            let mut sorted: Vec<EdgeRef> = pairs.iter().map(|&(a, b)| EdgeRef::new(a, b)).collect();
            sorted.sort_unstable();
            let dup = sorted
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0])
                .expect("dedup removed something");
            return Err(Error::DuplicateEdge { u: dup.u, v: dup.v });
        }
        Ok(Self::from_canonical_edges(n, edges))
    }

    /// Internal constructor for edge vectors already sorted, deduplicated and
    /// range-checked.
    pub(crate) fn from_canonical_edges(n: usize, edges: Vec<EdgeRef>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]), "edges must be sorted and unique");
        debug_assert!(edges.iter().all(|e| e.v < n), "edges must be in range");
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in canonical sorted order.
    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// True when `e` is an edge of this graph.
    pub fn contains(&self, e: EdgeRef) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Applies a vertex relabeling: vertex `i` becomes `perm[i]`.
    ///
    /// `perm` must be a permutation of `0..vertex_count`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut edges: Vec<EdgeRef> =
            self.edges.iter().map(|e| EdgeRef::new(perm[e.u], perm[e.v])).collect();
        edges.sort_unstable();
        Self::from_canonical_edges(self.n, edges)
    }

    /// BFS connectivity over all vertices. Graphs on 0 or 1 vertices count
    /// as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0usize);
        let mut reached = 1usize;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// BFS two-coloring. Returns per-vertex colors (0/1) when the graph is
    /// bipartite, covering every component, and `None` otherwise.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}
