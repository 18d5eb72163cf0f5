//! Graph invariants around edge distance balance.
//!
//! The crate provides:
//!
//! * immutable simple graphs with graph6 and edge-list codecs, standard
//!   family generators, and Cartesian / lexicographic products;
//! * all-pairs hop distances plus vertex-to-edge and edge-to-edge distances;
//! * per-edge proximity counts under two explicit counting conventions,
//!   distance partitions, and the Szeged / edge-Szeged indices;
//! * classifiers for the distance-balanced families and their generalized
//!   t-variants;
//! * an exact small-graph atlas (canonical forms, exhaustive enumeration,
//!   predicate search) with an independent brute-force oracle;
//! * a claim-audit harness that brute-force evaluates a fixed set of
//!   identities about these invariants on concrete instances and reports
//!   pass, counterexample, or discrepancy verdicts with reproducible
//!   witnesses.

pub mod atlas;
pub mod balance;
pub mod classify;
pub mod codec;
pub mod distance;
pub mod error;
pub mod generate;
pub mod graph;
pub mod product;
pub mod rational;
pub mod verify;

pub use atlas::{
    are_isomorphic, canonical_form, enumerate_connected, search, CanonicalForm, CatalogEntry,
};
pub use balance::{
    distance_partition, edge_balance_counts, edge_counts, edge_szeged_closed_form,
    edge_szeged_index, szeged_index, vertex_counts, Convention, EdgeBalanceCounts, EdgePartition,
};
pub use classify::{
    full_report, gt_db_values, gt_edb_values, gt_ndb, gt_nedb, gt_sedb_values, is_gt_db, is_gt_edb,
    is_gt_sedb, ClassificationReport, TSet,
};
pub use codec::{parse_edge_list_text, parse_graph6, to_edge_list_text, to_graph6};
pub use distance::{all_pairs_distances, DistanceMatrix, UNREACHABLE};
pub use error::{Error, Result};
pub use graph::{EdgeRef, Graph};
pub use product::{
    cartesian_product, cartesian_product_with_budget, lexicographic_product,
    lexicographic_product_with_budget, DEFAULT_VERTEX_BUDGET,
};
pub use rational::Rational;
pub use verify::{
    run_all, run_check, CheckId, CheckResult, Verdict, VerificationReport, VerifyConfig,
};
