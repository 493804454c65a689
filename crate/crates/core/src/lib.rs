//! Exact engine for the difference between the Szeged and Wiener indices of
//! a graph, with the machinery to verify the bounds that govern it: graph6
//! interchange, block decomposition, closed-form extremal families, an
//! isomorph-free enumerator for small orders, and a parallel scan driver
//! over a registry of named theorem checks.
//!
//! All index arithmetic is integer-exact; revised-index quantities are kept
//! in quarter units (`4 * Sz*`, `4 * eta*`) so the half terms never force
//! floating point.

pub mod blocks;
pub mod canonical;
pub mod checks;
pub mod codec;
pub mod distance;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod scan;

pub use blocks::{blocks, BlockDecomposition};
pub use checks::{evaluate, CheckId, CheckOutcome, CheckStatus};
pub use codec::{encode_graph6, parse_edge_list, parse_graph6};
pub use distance::DistanceMatrix;
pub use enumeration::{builtin_enumerate, enumerate_all, stream_graph6, Graph6Stream, GraphFilter};
pub use error::{Error, Result};
pub use families::{
    build, build_cycle_with_rooted_trees, detect_knt, eta_c4_trees, eta_c5_trees, eta_knt_special,
    eta_star_c3_trees_q4, is_block_graph, FamilySpec,
};
pub use graph::{Graph, MAX_VERTICES};
pub use invariants::{
    contribution, edge_split, eta, eta_pair, eta_star_q4, full_report, full_report_with,
    good_count, horizontal_count, revised_szeged_q4, szeged, verify_good_edge_identity,
    verify_horizontal_identity, wiener, EdgeSplit, InvariantReport,
};
pub use scan::{scan, Counterexample, ScanReport};
