//! Cartesian and lexicographic graph products.
//!
//! The product vertex `(a, b)` always gets id `a * |V(B)| + b`, so results
//! are reproducible bit for bit across runs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on product vertex counts; this is a desk-scale tool.
pub const DEFAULT_VERTEX_BUDGET: usize = 4096;

fn pair_id(a: usize, b: usize, nb: usize) -> usize {
    a * nb + b
}

fn check_budget(a: &Graph, b: &Graph, budget: usize) -> Result<usize> {
    let vertices = a
        .vertex_count()
        .checked_mul(b.vertex_count())
        .ok_or(Error::ProductTooLarge { vertices: usize::MAX, budget })?;
    if vertices > budget {
        return Err(Error::ProductTooLarge { vertices, budget });
    }
    Ok(vertices)
}

/// Cartesian product: `(a1,b1) ~ (a2,b2)` iff the vertices agree in one
/// coordinate and are adjacent in the other.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Result<Graph> {
    cartesian_product_with_budget(a, b, DEFAULT_VERTEX_BUDGET)
}

pub fn cartesian_product_with_budget(a: &Graph, b: &Graph, budget: usize) -> Result<Graph> {
    let n = check_budget(a, b, budget)?;
    let nb = b.vertex_count();
    let mut pairs = Vec::with_capacity(a.vertex_count() * b.edge_count() + nb * a.edge_count());
    for av in 0..a.vertex_count() {
        for be in b.edges() {
            pairs.push((pair_id(av, be.u(), nb), pair_id(av, be.v(), nb)));
        }
    }
    for ae in a.edges() {
        for bv in 0..nb {
            pairs.push((pair_id(ae.u(), bv, nb), pair_id(ae.v(), bv, nb)));
        }
    }
    let g = Graph::from_edge_list(n, &pairs)?;
    debug_assert_eq!(
        g.edge_count(),
        a.vertex_count() * b.edge_count() + b.vertex_count() * a.edge_count()
    );
    Ok(g)
}

/// Lexicographic product `A[B]`: `(a1,b1) ~ (a2,b2)` iff `a1 ~ a2`, or
/// `a1 = a2` and `b1 ~ b2`.
pub fn lexicographic_product(a: &Graph, b: &Graph) -> Result<Graph> {
    lexicographic_product_with_budget(a, b, DEFAULT_VERTEX_BUDGET)
}

pub fn lexicographic_product_with_budget(a: &Graph, b: &Graph, budget: usize) -> Result<Graph> {
    let n = check_budget(a, b, budget)?;
    let nb = b.vertex_count();
    let mut pairs = Vec::new();
    for ae in a.edges() {
        for b1 in 0..nb {
            for b2 in 0..nb {
                pairs.push((pair_id(ae.u(), b1, nb), pair_id(ae.v(), b2, nb)));
            }
        }
    }
    for av in 0..a.vertex_count() {
        for be in b.edges() {
            pairs.push((pair_id(av, be.u(), nb), pair_id(av, be.v(), nb)));
        }
    }
    let g = Graph::from_edge_list(n, &pairs)?;
    debug_assert_eq!(g.edge_count(), a.edge_count() * nb * nb + a.vertex_count() * b.edge_count());
    Ok(g)
}
