//! Deterministic influence-propagation analysis for social graphs.
//!
//! spreadnet computes, for every node of a directed social graph, two
//! linear-threshold cascade indices:
//!
//! - **ILP** (individual launching power): the fraction of other nodes a
//!   message seeded at this node activates,
//! - **ITP** (individual target potential): the fraction of other seeds whose
//!   message reaches this node,
//!
//! where a node adopts a message once the summed out-degrees of its active
//! predecessors reach `alpha` times its own out-degree. The hurdle
//! coefficient `alpha` encodes message virality: larger means harder to pass
//! along. Everything is deterministic; batch runs over all seeds produce
//! bit-identical results regardless of worker count.
//!
//! The crate also ships seven classic centrality metrics for comparison
//! (degree, eccentricity, closeness, betweenness, eigenvector, PageRank,
//! HITS), a Watts-Strogatz small-world generator with partial edge
//! orientation, edge-list ingestion for SNAP/KONECT-style datasets, and
//! launcher/target classification reports in CSV or JSON.
//!
//! ```
//! use spreadnet::{Graph, HurdleCoefficient, IndexTable};
//!
//! // a directed path: 0 -> 1 -> 2
//! let g = Graph::build(3, &[(0, 1), (1, 2)], false).unwrap();
//! let alpha = HurdleCoefficient::new(1.0).unwrap();
//! let t = IndexTable::compute(&g, &alpha).unwrap();
//! assert_eq!(t.ilp_raw, vec![2, 1, 0]); // node 0 reaches everyone
//! assert_eq!(t.itp_raw, vec![0, 1, 2]); // node 2 is reached by everyone
//! ```
//!
//! The `parallel` feature (on by default) fans cascade batches and per-source
//! metric passes out to rayon workers; disable it for single-threaded or wasm
//! builds.

pub mod cascade;
pub mod error;
pub mod generate;
pub mod graph;
pub mod ingest;
pub mod metrics;
mod par;
pub mod report;

pub use cascade::{
    activation_test, cascade, fixpoint_oracle, CascadeResult, HurdleCoefficient, IndexTable,
};
pub use error::{Error, Result};
pub use generate::{orient, watts_strogatz, WsParams};
pub use graph::{Graph, GraphKind, NodeId};
pub use ingest::{load_edge_list, parse_edge_list, write_edge_list, IngestOptions, IngestSummary};
pub use metrics::MetricTable;
pub use report::{
    breaking_points, classify, emit_report, shortlist, strong_influencer_pct, ClassifyMethod,
    NodeClass, PartitionReport, ReportFormat, ReportMeta, ShortlistQuery, SortKey,
};
