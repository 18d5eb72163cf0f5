//! All-pairs hop distances plus the vertex-to-edge and edge-to-edge
//! distance helpers built on top of them.

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};

/// Sentinel for unreachable vertex pairs.
pub const UNREACHABLE: u16 = u16::MAX;

/// Symmetric matrix of hop distances with a 16-bit sentinel for unreachable
/// pairs. Computed once per graph and shared read-only by every per-edge
/// analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    connected: bool,
    d: Vec<u16>,
}

/// BFS from every vertex; `O(|V| * (|V| + |E|))`.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![UNREACHABLE; n * n];
    let mut queue = std::collections::VecDeque::new();
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let dv = row[v];
            for &w in g.neighbors(v) {
                if row[w] == UNREACHABLE {
                    row[w] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let connected = d.iter().all(|&x| x != UNREACHABLE);
    DistanceMatrix { n, connected, d }
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Whether every pair is reachable (vacuously true for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Hop distance between `u` and `v`, or [`UNREACHABLE`].
    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    /// Largest finite entry. Errors on disconnected graphs.
    pub fn diameter(&self) -> Result<usize> {
        if !self.connected {
            return Err(Error::DisconnectedGraph);
        }
        Ok(self.d.iter().copied().max().unwrap_or(0) as usize)
    }

    /// Distance from vertex `w` to edge `f`: the nearer endpoint wins.
    pub fn vertex_edge_distance(&self, w: usize, f: EdgeRef) -> u16 {
        self.get(w, f.u()).min(self.get(w, f.v()))
    }

    /// Distance between two edges: minimum over the four endpoint pairs.
    pub fn edge_edge_distance(&self, f: EdgeRef, g: EdgeRef) -> u16 {
        self.vertex_edge_distance(f.u(), g).min(self.vertex_edge_distance(f.v(), g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_bipartite, cycle, empty, hypercube, path};

    #[test]
    fn c4_distances() {
        let g = cycle(4).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(0, 1), 1);
        for v in 0..4 {
            assert_eq!(d.get(v, v), 0);
        }
    }

    #[test]
    fn k24_distances() {
        // Parts {0,1} (degree 4) and {2..5} (degree 2).
        let g = complete_bipartite(2, 4).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 1), 2);
        assert_eq!(d.get(2, 3), 2);
        assert_eq!(d.get(0, 2), 1);
    }

    #[test]
    fn vertex_edge_examples() {
        let c4 = cycle(4).unwrap();
        let d = all_pairs_distances(&c4);
        assert_eq!(d.vertex_edge_distance(0, EdgeRef::new(2, 3)), 1);
        assert_eq!(d.vertex_edge_distance(2, EdgeRef::new(2, 3)), 0);

        let k24 = complete_bipartite(2, 4).unwrap();
        let dk = all_pairs_distances(&k24);
        // w = the second degree-4 vertex, f = first cross edge.
        assert_eq!(dk.vertex_edge_distance(1, EdgeRef::new(0, 2)), 1);
    }

    #[test]
    fn edge_edge_examples() {
        let c6 = cycle(6).unwrap();
        let d = all_pairs_distances(&c6);
        let f = EdgeRef::new(0, 1);
        assert_eq!(d.edge_edge_distance(f, f), 0);
        assert_eq!(d.edge_edge_distance(f, EdgeRef::new(3, 4)), 2);
        assert_eq!(d.edge_edge_distance(f, EdgeRef::new(1, 2)), 0);
        assert_eq!(d.edge_edge_distance(EdgeRef::new(3, 4), f), 2);
    }

    #[test]
    fn diameters() {
        assert_eq!(all_pairs_distances(&complete_bipartite(2, 4).unwrap()).diameter().unwrap(), 2);
        assert_eq!(all_pairs_distances(&path(5).unwrap()).diameter().unwrap(), 4);
        assert_eq!(all_pairs_distances(&hypercube(3).unwrap()).diameter().unwrap(), 3);
        assert_eq!(all_pairs_distances(&path(1).unwrap()).diameter().unwrap(), 0);
    }

    #[test]
    fn disconnected_diameter_rejected() {
        let d = all_pairs_distances(&empty(2).unwrap());
        assert!(!d.is_connected());
        assert_eq!(d.diameter(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn endpoint_distance_gap_is_at_most_one() {
        for g in [cycle(6).unwrap(), hypercube(3).unwrap(), complete_bipartite(2, 3).unwrap()] {
            let d = all_pairs_distances(&g);
            for f in g.edges() {
                for e in g.edges() {
                    let da = d.vertex_edge_distance(f.u(), *e) as i32;
                    let db = d.vertex_edge_distance(f.v(), *e) as i32;
                    assert!((da - db).abs() <= 1, "gap too wide for {f:?} vs {e:?}");
                }
            }
        }
    }
}
