//! Generators for the standard graph families used throughout the crate.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Complete bipartite graph with parts `{0..p}` and `{p..p+q}`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(Error::ParameterOutOfRange {
            what: format!("complete_bipartite needs both parts nonempty, got ({p}, {q})"),
        });
    }
    let mut pairs = Vec::with_capacity(p * q);
    for a in 0..p {
        for b in 0..q {
            pairs.push((a, p + b));
        }
    }
    Graph::from_edge_list(p + q, &pairs)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::ParameterOutOfRange { what: format!("cycle needs n >= 3, got {n}") });
    }
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &pairs)
}

/// Path on `n >= 1` vertices (`n - 1` edges).
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange { what: "path needs n >= 1".into() });
    }
    let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &pairs)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange { what: "complete needs n >= 1".into() });
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Hypercube of dimension `d >= 1`: vertices are bit strings, edges flip one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 20 {
        return Err(Error::ParameterOutOfRange {
            what: format!("hypercube needs 1 <= d <= 20, got {d}"),
        });
    }
    let n = 1usize << d;
    let mut pairs = Vec::with_capacity(d * n / 2);
    for v in 0..n {
        for bit in 0..d {
            let w = v ^ (1 << bit);
            if v < w {
                pairs.push((v, w));
            }
        }
    }
    Graph::from_edge_list(n, &pairs)
}

/// Edgeless graph on `n >= 0` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::from_edge_list(n, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_edge_count() {
        let g = complete_bipartite(2, 4).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn hypercube_edge_count() {
        let g = hypercube(3).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn degenerate_cycle_rejected() {
        assert!(matches!(cycle(2), Err(Error::ParameterOutOfRange { .. })));
    }

    #[test]
    fn family_shapes() {
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(5).unwrap().edge_count(), 4);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(empty(0).unwrap().vertex_count(), 0);
        assert_eq!(empty(3).unwrap().edge_count(), 0);
        assert!(complete_bipartite(0, 2).is_err());
    }
}
