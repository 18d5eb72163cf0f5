//! Exact canonical forms, isomorphism testing, exhaustive enumeration of
//! small connected graphs, and predicate search over the enumerated atlas.
//!
//! The canonical form of a graph is the lexicographically minimal
//! column-major upper-triangle adjacency bit string over all vertex
//! relabelings, found by a depth-first search with prefix pruning and
//! twin-vertex skipping. Equal forms mean isomorphic graphs, exactly, for
//! the supported size range.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::balance::Convention;
use crate::classify::{full_report, ClassificationReport, NicelyEdgeWitness, TSet};
use crate::codec::to_graph6;
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};

/// Exact isomorphism machinery is a permutation search; keep it small.
pub const MAX_EXACT_ISO: usize = 10;

/// Exhaustive enumeration ceiling.
pub const MAX_ENUMERATION: usize = 8;

/// Permutation-minimal packed adjacency bits plus the vertex count.
///
/// Byte strings compare equal exactly when the underlying graphs are
/// isomorphic (within [`MAX_EXACT_ISO`]).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Packed upper-triangle bits, column major, most significant bit first.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bits
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Rebuilds the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut pos = 0usize;
        for j in 1..self.n {
            for i in 0..j {
                if (self.bits[pos / 8] >> (7 - pos % 8)) & 1 == 1 {
                    edges.push(EdgeRef::new(i, j));
                }
                pos += 1;
            }
        }
        edges.sort_unstable();
        Graph::from_canonical_edges(self.n, edges)
    }
}

/// Minimal-bit-string search state. Columns are compared as integers with
/// the lowest placed position as the most significant bit, which makes the
/// column sequence order agree with the flat bit-string order.
struct CanonSearch<'a> {
    adj: &'a [u16],
    n: usize,
    placed: Vec<usize>,
    cols: Vec<u16>,
    used: u16,
    best: Option<Vec<u16>>,
}

impl CanonSearch<'_> {
    fn column_for(&self, u: usize) -> u16 {
        let k = self.placed.len();
        let mut col = 0u16;
        for (i, &p) in self.placed.iter().enumerate() {
            if self.adj[p] & (1 << u) != 0 {
                col |= 1 << (k - 1 - i);
            }
        }
        col
    }

    /// Twins have identical adjacency outside the pair and can be placed in
    /// either order without changing the reachable bit strings.
    fn twins(&self, u: usize, w: usize) -> bool {
        (self.adj[u] & !(1u16 << w)) == (self.adj[w] & !(1u16 << u))
    }

    fn dfs(&mut self) {
        let k = self.placed.len();
        if k == self.n {
            if self.best.as_ref().is_none_or(|b| self.cols < *b) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        let mut cands: Vec<(u16, usize)> = (0..self.n)
            .filter(|&u| self.used & (1 << u) == 0)
            .map(|u| (self.column_for(u), u))
            .collect();
        cands.sort_unstable();

        for idx in 0..cands.len() {
            let (col, u) = cands[idx];
            // Skip candidates interchangeable with an earlier equal-column twin.
            if cands[..idx].iter().any(|&(c, w)| c == col && self.twins(u, w)) {
                continue;
            }
            if let Some(best) = &self.best {
                // The path so far never exceeds best, so the prefix is Less or Equal.
                let prefix_equal = self.cols[..k] == best[..k];
                if prefix_equal && col > best[k] {
                    break; // candidates are sorted ascending
                }
            }
            self.placed.push(u);
            self.cols.push(col);
            self.used |= 1 << u;
            self.dfs();
            self.used &= !(1 << u);
            self.cols.pop();
            self.placed.pop();
        }
    }
}

/// Computes the canonical form of `g`. Errors above [`MAX_EXACT_ISO`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    if n > MAX_EXACT_ISO {
        return Err(Error::TooLargeForExactIso { vertices: n, limit: MAX_EXACT_ISO });
    }
    if n == 0 {
        return Ok(CanonicalForm { n, bits: Vec::new() });
    }
    let mut adj = vec![0u16; n];
    for e in g.edges() {
        adj[e.u()] |= 1 << e.v();
        adj[e.v()] |= 1 << e.u();
    }
    let mut search = CanonSearch {
        adj: &adj,
        n,
        placed: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.dfs();
    let cols = search.best.expect("search places all vertices");

    let nbits = n * (n - 1) / 2;
    let mut bits = vec![0u8; nbits.div_ceil(8)];
    let mut pos = 0usize;
    for (j, &col) in cols.iter().enumerate().skip(1) {
        for i in 0..j {
            if (col >> (j - 1 - i)) & 1 == 1 {
                bits[pos / 8] |= 1 << (7 - pos % 8);
            }
            pos += 1;
        }
    }
    Ok(CanonicalForm { n, bits })
}

/// Exact isomorphism via canonical form equality.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// One class-form set per vertex count from 1 to `n`.
///
/// Built by repeatedly attaching a new vertex with every nonempty
/// neighborhood to each smaller representative: deleting a non-cut vertex
/// of a connected graph leaves a connected graph, so every class on `k`
/// vertices is reached from some class on `k - 1`.
fn connected_forms_up_to(n: usize) -> Result<Vec<BTreeSet<CanonicalForm>>> {
    if !(1..=MAX_ENUMERATION).contains(&n) {
        return Err(Error::ParameterOutOfRange {
            what: format!("enumeration supports 1..={MAX_ENUMERATION} vertices, got {n}"),
        });
    }
    let mut levels: Vec<BTreeSet<CanonicalForm>> =
        vec![[canonical_form(&Graph::from_edge_list(1, &[])?)?].into()];
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for form in levels.last().expect("previous level exists") {
            let g = form.to_graph();
            let base: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
            for mask in 1u32..(1 << (k - 1)) {
                let mut pairs = base.clone();
                for i in 0..k - 1 {
                    if mask & (1 << i) != 0 {
                        pairs.push((i, k - 1));
                    }
                }
                let h = Graph::from_edge_list(k, &pairs)?;
                next.insert(canonical_form(&h)?);
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

fn sorted_level(forms: &BTreeSet<CanonicalForm>) -> Vec<Graph> {
    let mut sorted: Vec<&CanonicalForm> = forms.iter().collect();
    sorted.sort_by_key(|f| (f.edge_count(), *f));
    sorted.into_iter().map(CanonicalForm::to_graph).collect()
}

/// Exactly one representative per isomorphism class of connected simple
/// graphs on `n` vertices, in deterministic (edge count, canonical form)
/// order. Representatives carry their canonical labeling.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    let levels = connected_forms_up_to(n)?;
    Ok(sorted_level(levels.last().expect("nonempty levels")))
}

/// All levels `1..=n` in enumeration order, computed in one pass.
pub(crate) fn enumerate_connected_up_to(n: usize) -> Result<Vec<Vec<Graph>>> {
    Ok(connected_forms_up_to(n)?.iter().map(sorted_level).collect())
}

/// Independent brute-force enumeration used to audit [`enumerate_connected`]
/// and the claim-audit scans: iterate every edge subset of the complete
/// graph, keep the connected ones, and deduplicate by canonical form.
pub mod oracle {
    use super::*;

    fn edge_positions(n: usize) -> Vec<(usize, usize)> {
        let mut pos = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                pos.push((i, j));
            }
        }
        pos
    }

    fn subset_scan(
        n: usize,
        mut keep: impl FnMut(&Graph) -> bool,
    ) -> Result<BTreeSet<CanonicalForm>> {
        let positions = edge_positions(n);
        let m = positions.len();
        let mut classes = BTreeSet::new();
        let mut adj = vec![0u16; n];
        for mask in 0u32..(1u32 << m) {
            adj.iter_mut().for_each(|a| *a = 0);
            let mut bits = mask;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (i, j) = positions[b];
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            // Bitset BFS connectivity before building anything.
            let mut seen: u16 = 1;
            let mut frontier: u16 = 1;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[v] & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            if seen.count_ones() as usize != n {
                continue;
            }
            let pairs: Vec<(usize, usize)> =
                (0..m).filter(|&b| mask & (1 << b) != 0).map(|b| positions[b]).collect();
            let g = Graph::from_edge_list(n, &pairs)?;
            if keep(&g) {
                classes.insert(canonical_form(&g)?);
            }
        }
        Ok(classes)
    }

    /// All connected isomorphism classes on `n <= 6` vertices.
    pub fn connected_class_forms(n: usize) -> Result<BTreeSet<CanonicalForm>> {
        if !(1..=6).contains(&n) {
            return Err(Error::ParameterOutOfRange {
                what: format!("naive enumeration oracle supports 1..=6 vertices, got {n}"),
            });
        }
        subset_scan(n, |_| true)
    }

    /// Connected classes on `n <= 7` vertices whose representatives satisfy
    /// `pred`. The predicate must be isomorphism-invariant.
    pub fn connected_class_forms_where(
        n: usize,
        pred: impl FnMut(&Graph) -> bool,
    ) -> Result<BTreeSet<CanonicalForm>> {
        if !(1..=7).contains(&n) {
            return Err(Error::ParameterOutOfRange {
                what: format!("filtered enumeration oracle supports 1..=7 vertices, got {n}"),
            });
        }
        subset_scan(n, pred)
    }
}

/// One catalog line: the graph plus its classification summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub diameter: usize,
    pub bipartite: bool,
    pub gt_edb_values: TSet,
    pub gt_db_values: TSet,
    pub gt_nedb: Option<NicelyEdgeWitness>,
    pub gt_sedb_values: TSet,
    pub convention: Convention,
}

impl CatalogEntry {
    pub fn from_report(g: &Graph, report: &ClassificationReport) -> CatalogEntry {
        CatalogEntry {
            graph6: to_graph6(g),
            n: report.vertex_count,
            m: report.edge_count,
            diameter: report.diameter,
            bipartite: report.bipartite,
            gt_edb_values: report.gt_edb_values.clone(),
            gt_db_values: report.gt_db_values.clone(),
            gt_nedb: report.gt_nedb,
            gt_sedb_values: report.gt_sedb_values.clone(),
            convention: report.convention,
        }
    }
}

/// Classifies every connected graph on up to `n_max` vertices and returns
/// the entries whose reports satisfy `pred`, in enumeration order.
pub fn search(
    n_max: usize,
    conv: Convention,
    mut pred: impl FnMut(&ClassificationReport) -> bool,
) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for level in connected_forms_up_to(n_max)? {
        for g in sorted_level(&level) {
            let report = full_report(&g, conv)?;
            if pred(&report) {
                out.push(CatalogEntry::from_report(&g, &report));
            }
        }
    }
    Ok(out)
}

/// Writes entries as JSON lines with stable key order.
pub fn write_catalog(
    entries: &[CatalogEntry],
    out: &mut impl std::io::Write,
) -> std::io::Result<()> {
    for entry in entries {
        let line = serde_json::to_string(entry).expect("catalog entries serialize");
        writeln!(out, "{line}")?;
    }
    Ok(())
}
