//! Shared fixtures: the karate-club benchmark graph and its reference
//! values.
//!
//! The centrality columns were cross-checked against Gephi output for the
//! same graph; the ILP/ITP columns are raw activation counts verified against
//! an independent fixpoint oracle. Normalized reference values are rounded to
//! two decimals, hence the +-0.005 comparisons where they are used.

#![allow(dead_code)]

use std::path::PathBuf;

use spreadnet::{load_edge_list, Graph, IngestOptions, IngestSummary, NodeId};

/// Repository-level data directory.
pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

/// Loads the karate-club benchmark graph (34 nodes, 78 undirected edges,
/// 1-based external labels).
pub fn zachary() -> (Graph, IngestSummary) {
    let opts = IngestOptions {
        treat_as_undirected: true,
        ..IngestOptions::default()
    };
    load_edge_list(data_path("zachary.txt"), &opts).expect("zachary.txt must load")
}

/// Internal id of a 1-based reference label.
pub fn node(g: &Graph, label: u64) -> NodeId {
    (0..g.node_count() as NodeId)
        .find(|&i| g.label(i) == label)
        .expect("label present")
}

pub const N: usize = 34;

/// Degree column, nodes 1..=34.
pub const DEGREE: [usize; N] = [
    16, 9, 10, 6, 3, 4, 4, 4, 5, 2, 3, 1, 2, 5, 2, 2, 2, 2, 2, 3, 2, 2, 2, 5, 3, 3, 2, 4, 3, 4,
    4, 6, 12, 17,
];

/// Eccentricity column.
pub const ECCENTRICITY: [u32; N] = [
    3, 3, 3, 3, 4, 4, 4, 4, 3, 4, 4, 4, 4, 3, 5, 5, 5, 4, 5, 3, 5, 4, 5, 5, 4, 4, 5, 4, 4, 5, 4,
    3, 4, 4,
];

/// Closeness column (2 decimals).
pub const CLOSENESS: [f64; N] = [
    0.57, 0.49, 0.56, 0.46, 0.38, 0.38, 0.38, 0.44, 0.52, 0.43, 0.38, 0.37, 0.37, 0.52, 0.37,
    0.37, 0.28, 0.38, 0.37, 0.50, 0.37, 0.38, 0.37, 0.39, 0.38, 0.38, 0.36, 0.46, 0.45, 0.38,
    0.46, 0.54, 0.52, 0.55,
];

/// Betweenness column (unordered pairs, 2 decimals).
pub const BETWEENNESS: [f64; N] = [
    231.07, 28.48, 75.85, 6.29, 0.33, 15.83, 15.83, 0.0, 29.53, 0.45, 0.33, 0.0, 0.0, 24.22, 0.0,
    0.0, 0.0, 0.0, 0.0, 17.15, 0.0, 0.0, 0.0, 9.30, 1.17, 2.03, 0.0, 11.79, 0.95, 1.54, 7.61,
    73.01, 76.69, 160.55,
];

/// Eigenvector column as published (max-normalized, 2 decimals).
///
/// Four cells (nodes 2, 6, 7 and 26) deviate from the converged principal
/// eigenvector by up to 0.017: the tool that produced the reference table
/// accumulates its power-iteration buffer across rounds and reports a
/// partially converged state after a fixed 100 rounds. We pin the converged
/// values for those cells ([`EIGENVECTOR_EXACT_DEVIANTS`]) and the published
/// values everywhere else.
pub const EIGENVECTOR: [f64; N] = [
    0.96, 0.70, 0.84, 0.56, 0.21, 0.23, 0.23, 0.45, 0.61, 0.27, 0.21, 0.14, 0.22, 0.60, 0.27,
    0.27, 0.07, 0.25, 0.27, 0.40, 0.27, 0.25, 0.27, 0.41, 0.16, 0.17, 0.20, 0.36, 0.35, 0.36,
    0.46, 0.52, 0.83, 1.00,
];

/// (1-based node, converged eigenvector value) for the four cells where the
/// reference table reflects the producing tool's accumulation artifact.
pub const EIGENVECTOR_EXACT_DEVIANTS: [(u64, f64); 4] = [
    (2, 0.712335),
    (6, 0.212884),
    (7, 0.212884),
    (26, 0.158576),
];

/// PageRank column (beta = 0.85, 2 decimals).
pub const PAGERANK: [f64; N] = [
    0.10, 0.05, 0.06, 0.04, 0.02, 0.03, 0.03, 0.02, 0.03, 0.01, 0.02, 0.01, 0.01, 0.03, 0.01,
    0.01, 0.02, 0.01, 0.01, 0.02, 0.01, 0.01, 0.01, 0.03, 0.02, 0.02, 0.02, 0.03, 0.02, 0.03,
    0.02, 0.04, 0.07, 0.10,
];

/// HITS authority column (L2-normalized, 2 decimals); equals the hub column
/// on this undirected graph.
pub const AUTHORITY: [f64; N] = [
    0.36, 0.27, 0.32, 0.21, 0.08, 0.08, 0.08, 0.17, 0.23, 0.10, 0.08, 0.05, 0.08, 0.23, 0.10,
    0.10, 0.02, 0.09, 0.10, 0.15, 0.10, 0.09, 0.10, 0.15, 0.06, 0.06, 0.08, 0.13, 0.13, 0.13,
    0.17, 0.19, 0.31, 0.37,
];

/// ILP at alpha = 1.5, normalized (2 decimals).
pub const ILP_15: [f64; N] = [
    1.0, 1.0, 1.0, 0.06, 0.0, 0.06, 0.06, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.03, 0.0, 0.0, 0.0, 0.0, 0.0, 0.03, 0.0, 0.09, 1.0, 1.0,
];

/// ILP at alpha = 1.5 as raw activation counts (fixpoint-oracle verified).
pub const ILP_15_RAW: [u32; N] = [
    33, 33, 33, 2, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1,
    0, 3, 33, 33,
];

/// ITP at alpha = 1.5, normalized (2 decimals).
pub const ITP_15: [f64; N] = [
    0.12, 0.12, 0.12, 0.15, 0.15, 0.18, 0.18, 0.18, 0.15, 0.15, 0.15, 0.15, 0.18, 0.15, 0.15,
    0.15, 0.21, 0.15, 0.15, 0.15, 0.15, 0.15, 0.15, 0.15, 0.18, 0.21, 0.18, 0.15, 0.18, 0.15,
    0.15, 0.15, 0.12, 0.12,
];

/// ITP at alpha = 1.5 as raw counts.
pub const ITP_15_RAW: [u32; N] = [
    4, 4, 4, 5, 5, 6, 6, 6, 5, 5, 5, 5, 6, 5, 5, 5, 7, 5, 5, 5, 5, 5, 5, 5, 6, 7, 6, 5, 6, 5, 5,
    5, 4, 4,
];

/// ILP at alpha = 3.0, normalized (2 decimals).
pub const ILP_30: [f64; N] = [
    0.61, 0.09, 0.06, 0.03, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.27, 0.61,
];

/// ILP at alpha = 3.0 as raw counts.
pub const ILP_30_RAW: [u32; N] = [
    20, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    0, 9, 20,
];

/// ITP at alpha = 3.0, normalized (2 decimals).
pub const ITP_30: [f64; N] = [
    0.0, 0.03, 0.06, 0.03, 0.03, 0.03, 0.03, 0.03, 0.09, 0.09, 0.03, 0.03, 0.06, 0.06, 0.06,
    0.06, 0.03, 0.06, 0.06, 0.09, 0.06, 0.06, 0.06, 0.06, 0.03, 0.03, 0.03, 0.03, 0.09, 0.06,
    0.09, 0.06, 0.03, 0.0,
];

/// ITP at alpha = 3.0 as raw counts.
pub const ITP_30_RAW: [u32; N] = [
    0, 1, 2, 1, 1, 1, 1, 1, 3, 3, 1, 1, 2, 2, 2, 2, 1, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1, 3, 2, 3,
    2, 1, 0,
];
