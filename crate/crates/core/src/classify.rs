//! Membership tests for the distance-balanced graph families and their
//! generalized t-variants.
//!
//! A graph is t-distance-balanced when every edge, under some per-edge
//! orientation, has one nearer-vertex count exactly t times the other; the
//! edge variant compares nearer-edge counts instead. The "nicely" variants
//! additionally require the same count pair on every edge, and the
//! "strongly" edge variant balances the distance-partition cells level by
//! level.
//!
//! `t` ranges over positive integers. Value sets include `t = 1` (the plain
//! balanced specializations) so callers can filter as they see fit. Under
//! the strict convention an edge whose side counts are both zero is
//! compatible with every `t`, which makes some one-edge graphs satisfy every
//! value; that situation is reported explicitly as [`TSet::All`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::balance::{
    distance_partition, edge_balance_counts, edge_counts, vertex_counts, Convention,
    EdgeBalanceCounts,
};
use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A set of admissible `t` values: either every positive integer (vacuous
/// constraints) or a finite set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TSet {
    /// Serialized as the string `"all"`.
    All(AllTag),
    Finite(BTreeSet<u64>),
}

/// Marker carrying the `"all"` wire form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AllTag {
    #[serde(rename = "all")]
    All,
}

impl TSet {
    pub fn all() -> TSet {
        TSet::All(AllTag::All)
    }

    pub fn finite(values: impl IntoIterator<Item = u64>) -> TSet {
        TSet::Finite(values.into_iter().collect())
    }

    pub fn contains(&self, t: u64) -> bool {
        match self {
            TSet::All(_) => t >= 1,
            TSet::Finite(set) => set.contains(&t),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            TSet::All(_) => false,
            TSet::Finite(set) => set.is_empty(),
        }
    }

    /// The finite values, clamped to `1..=cap` for the vacuous case.
    pub fn values_up_to(&self, cap: u64) -> Vec<u64> {
        match self {
            TSet::All(_) => (1..=cap).collect(),
            TSet::Finite(set) => set.iter().copied().filter(|&t| t <= cap).collect(),
        }
    }
}

/// Witness that every edge carries the count pair `{gamma_prime, t * gamma_prime}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NicelyEdgeWitness {
    pub t: u64,
    pub gamma_prime: u64,
}

/// Vertex-side analogue: every edge carries `{gamma, t * gamma}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NicelyVertexWitness {
    pub t: u64,
    pub gamma: u64,
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(d)
}

/// Does the pair `(a, b)` satisfy `a = t b` or `b = t a`?
fn pair_matches(a: u64, b: u64, t: u64) -> bool {
    a == t * b || b == t * a
}

fn vertex_pairs(g: &Graph, d: &DistanceMatrix) -> Result<Vec<(u64, u64)>> {
    g.edges()
        .iter()
        .map(|e| {
            let (na, nb, _) = vertex_counts(g, d, e.u(), e.v())?;
            Ok((na as u64, nb as u64))
        })
        .collect()
}

fn edge_pairs(g: &Graph, d: &DistanceMatrix, conv: Convention) -> Result<Vec<(u64, u64)>> {
    g.edges()
        .iter()
        .map(|e| {
            let (ma, mb, _) = edge_counts(g, d, e.u(), e.v(), conv)?;
            Ok((ma as u64, mb as u64))
        })
        .collect()
}

fn values_from_pairs(pairs: &[(u64, u64)]) -> TSet {
    if pairs.iter().all(|&(a, b)| a == 0 && b == 0) {
        // Vacuous: both-zero pairs satisfy every t. With no edges at all the
        // conditions are vacuous as well.
        return TSet::all();
    }
    let bound = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    TSet::finite((1..=bound).filter(|&t| pairs.iter().all(|&(a, b)| pair_matches(a, b, t))))
}

/// Every edge of `g` has one nearer-vertex count `t` times the other.
pub fn is_gt_db(g: &Graph, t: u64) -> Result<bool> {
    let d = connected_distances(g)?;
    Ok(vertex_pairs(g, &d)?.iter().all(|&(a, b)| pair_matches(a, b, t)))
}

/// All `t >= 1` for which [`is_gt_db`] holds. Vertex counts are at least 1
/// (each endpoint counts itself), so the result is always finite.
pub fn gt_db_values(g: &Graph) -> Result<TSet> {
    let d = connected_distances(g)?;
    Ok(values_from_pairs(&vertex_pairs(g, &d)?))
}

/// Every edge of `g` has one nearer-edge count `t` times the other, under
/// the given convention.
pub fn is_gt_edb(g: &Graph, t: u64, conv: Convention) -> Result<bool> {
    let d = connected_distances(g)?;
    Ok(edge_pairs(g, &d, conv)?.iter().all(|&(a, b)| pair_matches(a, b, t)))
}

/// All `t >= 1` for which [`is_gt_edb`] holds.
pub fn gt_edb_values(g: &Graph, conv: Convention) -> Result<TSet> {
    let d = connected_distances(g)?;
    Ok(values_from_pairs(&edge_pairs(g, &d, conv)?))
}

/// Shared nicely-balanced detection across the vertex and edge variants:
/// all pairs must be the same `{gamma, t * gamma}`, with the smallest t
/// reported.
fn nicely_witness(pairs: &[(u64, u64)]) -> Option<(u64, u64)> {
    let first = pairs.first()?;
    let lo = first.0.min(first.1);
    let hi = first.0.max(first.1);
    for &(a, b) in pairs {
        if a.min(b) != lo || a.max(b) != hi {
            return None;
        }
    }
    if lo == 0 {
        // {gamma, t gamma} with a zero member forces gamma = 0.
        return (hi == 0).then_some((1, 0));
    }
    (hi % lo == 0).then(|| (hi / lo, lo))
}

/// Like [`nicely_witness`] but for one fixed `t`.
fn nicely_witness_with(pairs: &[(u64, u64)], t: u64) -> Option<u64> {
    let (lo, hi) = {
        let first = pairs.first()?;
        (first.0.min(first.1), first.0.max(first.1))
    };
    for &(a, b) in pairs {
        if a.min(b) != lo || a.max(b) != hi {
            return None;
        }
    }
    (hi == t * lo).then_some(lo)
}

/// Nicely edge-balanced witness: `(t, gamma_prime)` such that every edge
/// carries the count pair `{gamma_prime, t * gamma_prime}` under `conv`.
/// Under the strict convention `gamma_prime` may be 0.
pub fn gt_nedb(g: &Graph, conv: Convention) -> Result<Option<NicelyEdgeWitness>> {
    let d = connected_distances(g)?;
    let pairs = edge_pairs(g, &d, conv)?;
    Ok(nicely_witness(&pairs).map(|(t, gamma_prime)| NicelyEdgeWitness { t, gamma_prime }))
}

/// `gamma_prime` when `g` is nicely edge-balanced at exactly this `t`.
pub fn gt_nedb_with(g: &Graph, conv: Convention, t: u64) -> Result<Option<u64>> {
    let d = connected_distances(g)?;
    let pairs = edge_pairs(g, &d, conv)?;
    Ok(nicely_witness_with(&pairs, t))
}

/// Vertex-side nicely balanced witness `(t, gamma)`.
pub fn gt_ndb(g: &Graph) -> Result<Option<NicelyVertexWitness>> {
    let d = connected_distances(g)?;
    let pairs = vertex_pairs(g, &d)?;
    Ok(nicely_witness(&pairs).map(|(t, gamma)| NicelyVertexWitness { t, gamma }))
}

/// `gamma` when `g` is vertex-nicely balanced at exactly this `t`.
pub fn gt_ndb_with(g: &Graph, t: u64) -> Result<Option<u64>> {
    let d = connected_distances(g)?;
    let pairs = vertex_pairs(g, &d)?;
    Ok(nicely_witness_with(&pairs, t))
}

/// Per-edge strongly-balanced test against precomputed cell sizes.
///
/// `cells` holds the sizes of the distance-partition cells `(i - 1, i)` and
/// `(i, i - 1)` for every level `i` at which they are not both empty. The
/// orientation is fixed per edge across all levels; the flipped orientation
/// swaps every `(a, b)`.
fn sedb_edge_ok(cells: &[(u64, u64)], t: u64) -> bool {
    let forward = cells.iter().all(|&(a, b)| a == t * b + (t - 1));
    let backward = cells.iter().all(|&(a, b)| b == t * a + (t - 1));
    forward || backward
}

fn sedb_cells_per_edge(g: &Graph, d: &DistanceMatrix) -> Result<Vec<Vec<(u64, u64)>>> {
    let diam = d.diameter()?;
    let mut per_edge = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let p = distance_partition(g, d, e.u(), e.v())?;
        let levels: Vec<(u64, u64)> = (1..=diam as u16)
            .map(|i| (p.cell_size(i - 1, i) as u64, p.cell_size(i, i - 1) as u64))
            .filter(|&(a, b)| (a, b) != (0, 0))
            .collect();
        per_edge.push(levels);
    }
    Ok(per_edge)
}

/// Strongly t-edge-balanced: for every edge there is one orientation under
/// which every level `i` with nonempty side cells satisfies
/// `|cell(i-1, i)| = t * |cell(i, i-1)| + (t - 1)`. For `t = 1` this is
/// level-by-level cardinality equality, which makes the side-count sums
/// equal and so implies plain edge balance.
pub fn is_gt_sedb(g: &Graph, t: u64) -> Result<bool> {
    let d = connected_distances(g)?;
    Ok(sedb_cells_per_edge(g, &d)?.iter().all(|cells| sedb_edge_ok(cells, t)))
}

/// All `t >= 1` for which [`is_gt_sedb`] holds. Graphs with at most one edge
/// have no levels to constrain, which yields [`TSet::All`].
pub fn gt_sedb_values(g: &Graph) -> Result<TSet> {
    let d = connected_distances(g)?;
    let per_edge = sedb_cells_per_edge(g, &d)?;
    if per_edge.iter().all(|cells| cells.is_empty()) {
        return Ok(TSet::all());
    }
    // t = (a + 1) / (b + 1) caps the scan at the largest cell size plus one.
    let bound =
        per_edge.iter().flat_map(|cells| cells.iter().map(|&(a, b)| a.max(b))).max().unwrap_or(0)
            + 1;
    Ok(TSet::finite((1..=bound).filter(|&t| per_edge.iter().all(|cells| sedb_edge_ok(cells, t)))))
}

/// Everything the classifiers know about one graph under one convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub convention: Convention,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub diameter: usize,
    pub bipartite: bool,
    pub db: bool,
    pub gt_db_values: TSet,
    pub gt_edb_values: TSet,
    pub gt_nedb: Option<NicelyEdgeWitness>,
    pub gt_ndb: Option<NicelyVertexWitness>,
    pub gt_sedb_values: TSet,
    pub per_edge_counts: Vec<EdgeBalanceCounts>,
}

/// Aggregates every classifier output plus diameter, bipartiteness and the
/// per-edge counts.
pub fn full_report(g: &Graph, conv: Convention) -> Result<ClassificationReport> {
    let d = connected_distances(g)?;
    let per_edge_counts = g
        .edges()
        .iter()
        .map(|e| edge_balance_counts(g, &d, *e, conv))
        .collect::<Result<Vec<_>>>()?;
    let gt_db = values_from_pairs(&vertex_pairs(g, &d)?);
    Ok(ClassificationReport {
        convention: conv,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        diameter: d.diameter()?,
        bipartite: g.is_bipartite(),
        db: gt_db.contains(1),
        gt_db_values: gt_db,
        gt_edb_values: values_from_pairs(&edge_pairs(g, &d, conv)?),
        gt_nedb: gt_nedb(g, conv)?,
        gt_ndb: gt_ndb(g)?,
        gt_sedb_values: gt_sedb_values(g)?,
        per_edge_counts,
    })
}
