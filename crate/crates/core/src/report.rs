//! Launcher/target classification, breaking points, shortlists and report
//! serialization.
//!
//! ILP values empirically split social graphs into a high plateau (launchers)
//! and a low tail; ITP does the same for targets. The gap classifier makes
//! that observation an algorithm: sort the raw counts, split at the largest
//! gap between consecutive values, and demand that this gap dominate the
//! median consecutive gap so that murky distributions are reported as such
//! instead of force-split.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cascade::{HurdleCoefficient, IndexTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, NodeId};
use crate::metrics::MetricTable;

/// A separating gap must be at least this multiple of the median consecutive
/// gap to count as a clear separation.
pub const MIN_GAP_FACTOR: f64 = 5.0;

/// How to split index values into the high and low class.
#[derive(Debug, Clone, PartialEq)]
pub enum ClassifyMethod {
    /// Split at the largest gap between consecutive sorted values, subject to
    /// the [`MIN_GAP_FACTOR`] floor. When no clear separation exists, fall
    /// back to the explicit threshold if one is supplied, otherwise report an
    /// empty class with a diagnostic.
    Gap { fallback_threshold: Option<f64> },
    /// Every node whose normalized index reaches the threshold.
    Threshold(f64),
}

impl ClassifyMethod {
    pub fn gap() -> Self {
        ClassifyMethod::Gap {
            fallback_threshold: None,
        }
    }
}

impl FromStr for ClassifyMethod {
    type Err = Error;

    /// Accepts `gap` or `threshold=<t>`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "gap" {
            return Ok(ClassifyMethod::gap());
        }
        if let Some(t) = s.strip_prefix("threshold=") {
            let t: f64 = t
                .parse()
                .map_err(|_| Error::UnknownClassifier(s.to_string()))?;
            if !(0.0..=1.0).contains(&t) {
                return Err(Error::UnknownClassifier(s.to_string()));
            }
            return Ok(ClassifyMethod::Threshold(t));
        }
        Err(Error::UnknownClassifier(s.to_string()))
    }
}

/// Record of the classifier that produced a partition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifierInfo {
    pub method: String,
    pub threshold: Option<f64>,
    pub min_gap_factor: f64,
    /// True when the gap method found no clear separation and the fallback
    /// threshold was applied instead.
    pub fell_back: bool,
}

/// One side of the classification (launchers or targets).
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    /// Member node ids, ascending.
    pub members: Vec<NodeId>,
    mask: Vec<bool>,
    /// `|members| / n`.
    pub pct: f64,
    /// Minimum normalized index value inside the class (the breaking point);
    /// absent when the class is empty.
    pub breaking_point: Option<f64>,
    /// Same, as a raw activation count.
    pub breaking_point_raw: Option<u32>,
    /// Size of the separating gap in normalized units (0 when empty).
    pub gap: f64,
    /// Present when the distribution had no separating gap.
    pub diagnostic: Option<String>,
}

impl Partition {
    pub fn contains(&self, v: NodeId) -> bool {
        self.mask[v as usize]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Launcher/target classification of one [`IndexTable`].
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionReport {
    pub alpha: HurdleCoefficient,
    pub launchers: Partition,
    pub targets: Partition,
    pub classifier: ClassifierInfo,
    /// `|launcher_pct - mtbp|`: the launchers are essentially the seeds that
    /// reach the target class, so these two proportions track each other on
    /// social graphs. Reported, not asserted.
    pub duality_launchers_vs_mtbp: Option<f64>,
    /// `|target_pct - mibp|`, the mirrored observation.
    pub duality_targets_vs_mibp: Option<f64>,
}

impl PartitionReport {
    /// Minimum influential breaking point: minimum ILP over launchers.
    pub fn mibp(&self) -> Option<f64> {
        self.launchers.breaking_point
    }

    /// Minimum targeting breaking point: minimum ITP over targets.
    pub fn mtbp(&self) -> Option<f64> {
        self.targets.breaking_point
    }

    pub fn launcher_pct(&self) -> f64 {
        self.launchers.pct
    }

    pub fn target_pct(&self) -> f64 {
        self.targets.pct
    }

    pub fn is_launcher(&self, v: NodeId) -> bool {
        self.launchers.contains(v)
    }

    pub fn is_target(&self, v: NodeId) -> bool {
        self.targets.contains(v)
    }
}

/// The breaking-point pair `(mibp, mtbp)` of a classified report.
pub fn breaking_points(report: &PartitionReport) -> (Option<f64>, Option<f64>) {
    (report.mibp(), report.mtbp())
}

/// Classifies nodes into launchers (by ILP) and targets (by ITP).
pub fn classify(indices: &IndexTable, method: &ClassifyMethod) -> PartitionReport {
    let n = indices.node_count();
    let launchers = classify_side(&indices.ilp_raw, n, method);
    let targets = classify_side(&indices.itp_raw, n, method);
    let classifier = match method {
        ClassifyMethod::Gap { fallback_threshold } => ClassifierInfo {
            method: "gap".into(),
            threshold: *fallback_threshold,
            min_gap_factor: MIN_GAP_FACTOR,
            fell_back: launchers.1 || targets.1,
        },
        ClassifyMethod::Threshold(t) => ClassifierInfo {
            method: "threshold".into(),
            threshold: Some(*t),
            min_gap_factor: MIN_GAP_FACTOR,
            fell_back: false,
        },
    };
    let (launchers, targets) = (launchers.0, targets.0);
    PartitionReport {
        alpha: indices.alpha().clone(),
        duality_launchers_vs_mtbp: targets
            .breaking_point
            .map(|mtbp| (launchers.pct - mtbp).abs()),
        duality_targets_vs_mibp: launchers
            .breaking_point
            .map(|mibp| (targets.pct - mibp).abs()),
        launchers,
        targets,
        classifier,
    }
}

/// Returns the partition plus whether the gap method fell back to the
/// explicit threshold.
fn classify_side(raw: &[u32], n: usize, method: &ClassifyMethod) -> (Partition, bool) {
    let norm = (n - 1).max(1) as f64;
    match method {
        ClassifyMethod::Threshold(t) => (threshold_partition(raw, n, *t), false),
        ClassifyMethod::Gap { fallback_threshold } => {
            // raw counts give exact integer gaps; scale invariance makes the
            // normalized split identical
            let mut sorted: Vec<(u32, NodeId)> = raw
                .iter()
                .enumerate()
                .map(|(v, &c)| (c, v as NodeId))
                .collect();
            sorted.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

            let gaps: Vec<u32> = sorted.windows(2).map(|w| w[0].0 - w[1].0).collect();
            let max_gap = gaps.iter().copied().max().unwrap_or(0);
            let mut diagnostic = None;
            if max_gap == 0 {
                diagnostic = Some("no separating gap".to_string());
            } else {
                let mut g = gaps.clone();
                g.sort_unstable();
                let mid = g.len() / 2;
                let median = if g.len() % 2 == 1 {
                    g[mid] as f64
                } else {
                    (g[mid - 1] as f64 + g[mid] as f64) / 2.0
                };
                if (max_gap as f64) < MIN_GAP_FACTOR * median {
                    diagnostic = Some(format!(
                        "no clear separation: largest gap {max_gap} below {MIN_GAP_FACTOR} x median gap {median}"
                    ));
                }
            }

            if let Some(diag) = diagnostic {
                if let Some(t) = fallback_threshold {
                    let mut p = threshold_partition(raw, n, *t);
                    p.diagnostic = Some(diag);
                    return (p, true);
                }
                return (
                    Partition {
                        members: Vec::new(),
                        mask: vec![false; n],
                        pct: 0.0,
                        breaking_point: None,
                        breaking_point_raw: None,
                        gap: 0.0,
                        diagnostic: Some(diag),
                    },
                    false,
                );
            }

            // among ties for the largest gap, split at the bottom-most one:
            // the class keeps every value above the last clear break
            let split = gaps.iter().rposition(|&g| g == max_gap).unwrap();
            let members_sorted = &sorted[..=split];
            let bp_raw = members_sorted.last().unwrap().0;
            let mut members: Vec<NodeId> = members_sorted.iter().map(|&(_, v)| v).collect();
            members.sort_unstable();
            let mut mask = vec![false; n];
            for &v in &members {
                mask[v as usize] = true;
            }
            (
                Partition {
                    pct: members.len() as f64 / n as f64,
                    members,
                    mask,
                    breaking_point: Some(bp_raw as f64 / norm),
                    breaking_point_raw: Some(bp_raw),
                    gap: max_gap as f64 / norm,
                    diagnostic: None,
                },
                false,
            )
        }
    }
}

fn threshold_partition(raw: &[u32], n: usize, t: f64) -> Partition {
    let norm = (n - 1).max(1) as f64;
    let mut members = Vec::new();
    let mut mask = vec![false; n];
    let mut bp_raw: Option<u32> = None;
    for (v, &c) in raw.iter().enumerate() {
        if c as f64 / norm >= t {
            members.push(v as NodeId);
            mask[v] = true;
            bp_raw = Some(bp_raw.map_or(c, |b| b.min(c)));
        }
    }
    Partition {
        pct: members.len() as f64 / n as f64,
        members,
        mask,
        breaking_point: bp_raw.map(|b| b as f64 / norm),
        breaking_point_raw: bp_raw,
        gap: 0.0,
        diagnostic: None,
    }
}

/// Fraction of nodes whose ILP reaches `coverage` (default 0.99: nodes able
/// to activate at least 99% of the remaining nodes).
pub fn strong_influencer_pct(indices: &IndexTable, coverage: f64) -> Result<f64> {
    if !(coverage > 0.0 && coverage <= 1.0) {
        return Err(Error::InvalidParams {
            msg: format!("coverage {coverage} outside (0, 1]"),
        });
    }
    let n = indices.node_count();
    let strong = indices.ilp.iter().filter(|&&v| v >= coverage).count();
    Ok(strong as f64 / n as f64)
}

/// Which class a shortlist draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeClass {
    Launchers,
    Targets,
}

impl FromStr for NodeClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "launchers" => Ok(NodeClass::Launchers),
            "targets" => Ok(NodeClass::Targets),
            other => Err(Error::InvalidQuery {
                msg: format!("unknown class {other:?}"),
            }),
        }
    }
}

/// Shortlist orderings. Low-degree launchers are the interesting case: nodes
/// as effective as the hubs but much cheaper to recruit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortKey {
    DegreeAsc,
    DegreeDesc,
    BetweennessDesc,
    PagerankDesc,
    ClosenessDesc,
}

impl FromStr for SortKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree-asc" => Ok(SortKey::DegreeAsc),
            "degree-desc" => Ok(SortKey::DegreeDesc),
            "betweenness-desc" => Ok(SortKey::BetweennessDesc),
            "pagerank-desc" => Ok(SortKey::PagerankDesc),
            "closeness-desc" => Ok(SortKey::ClosenessDesc),
            other => Err(Error::UnknownSortKey(other.to_string())),
        }
    }
}

/// A filtered, ordered view into one class.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortlistQuery {
    pub class: NodeClass,
    pub sort_key: SortKey,
    pub limit: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
}

/// Filters the requested class by degree bounds, sorts by the key (node id
/// breaks ties) and truncates to `limit`.
pub fn shortlist(
    report: &PartitionReport,
    metrics: &MetricTable,
    q: &ShortlistQuery,
) -> Result<Vec<NodeId>> {
    if q.limit == 0 {
        return Err(Error::InvalidQuery {
            msg: "limit must be at least 1".into(),
        });
    }
    if let (Some(lo), Some(hi)) = (q.min_degree, q.max_degree) {
        if lo > hi {
            return Err(Error::InvalidQuery {
                msg: format!("min_degree {lo} exceeds max_degree {hi}"),
            });
        }
    }
    let class = match q.class {
        NodeClass::Launchers => &report.launchers,
        NodeClass::Targets => &report.targets,
    };
    let mut picked: Vec<NodeId> = class
        .members
        .iter()
        .copied()
        .filter(|&v| {
            let d = metrics.degree[v as usize];
            q.min_degree.is_none_or(|lo| d >= lo) && q.max_degree.is_none_or(|hi| d <= hi)
        })
        .collect();
    let by_desc = |key: &dyn Fn(NodeId) -> f64, picked: &mut Vec<NodeId>| {
        picked.sort_by(|&a, &b| {
            key(b)
                .partial_cmp(&key(a))
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
    };
    match q.sort_key {
        SortKey::DegreeAsc => {
            picked.sort_by_key(|&v| (metrics.degree[v as usize], v));
        }
        SortKey::DegreeDesc => {
            picked.sort_by_key(|&v| (std::cmp::Reverse(metrics.degree[v as usize]), v));
        }
        SortKey::BetweennessDesc => by_desc(&|v| metrics.betweenness[v as usize], &mut picked),
        SortKey::PagerankDesc => by_desc(&|v| metrics.pagerank[v as usize], &mut picked),
        SortKey::ClosenessDesc => by_desc(&|v| metrics.closeness[v as usize], &mut picked),
    }
    picked.truncate(q.limit);
    Ok(picked)
}

/// Provenance recorded in every report header.
#[derive(Debug, Clone, Default)]
pub struct ReportMeta {
    /// Where the graph came from: an input path or generator parameters.
    pub graph_provenance: String,
    /// Generator seed, when the graph was generated.
    pub rng_seed: Option<u64>,
}

/// Report file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::InvalidQuery {
                msg: format!("unknown report format {other:?}"),
            }),
        }
    }
}

/// Serializable per-node report row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRow {
    pub node: u64,
    pub out_degree: usize,
    pub ilp_raw: u32,
    pub ilp: f64,
    pub itp_raw: u32,
    pub itp: f64,
    pub launcher: bool,
    pub target: bool,
    pub eccentricity: u32,
    pub closeness: f64,
    pub betweenness: f64,
    pub eigenvector: f64,
    pub pagerank: f64,
    pub authority: f64,
    pub hub: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonMeta {
    pub graph: String,
    pub nodes: usize,
    pub arcs: usize,
    pub kind: String,
    pub alpha: String,
    pub rng_seed: Option<u64>,
    pub betweenness_pairs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonClassSide {
    pub count: usize,
    pub pct: f64,
    pub breaking_point: Option<f64>,
    pub breaking_point_raw: Option<u32>,
    pub gap: f64,
    pub diagnostic: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonClassification {
    pub classifier: ClassifierInfo,
    pub launchers: JsonClassSide,
    pub targets: JsonClassSide,
    pub duality_launchers_vs_mtbp: Option<f64>,
    pub duality_targets_vs_mibp: Option<f64>,
}

/// The complete JSON report document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub meta: JsonMeta,
    pub classification: JsonClassification,
    pub nodes: Vec<NodeRow>,
}

fn betweenness_pairs(g: &Graph) -> &'static str {
    match g.kind() {
        GraphKind::UndirectedExpanded => "unordered (undirected)",
        GraphKind::Directed => "ordered (directed)",
    }
}

/// Rows in external-label order, one per node.
pub fn report_rows(
    g: &Graph,
    indices: &IndexTable,
    metrics: &MetricTable,
    partition: &PartitionReport,
) -> Vec<NodeRow> {
    let mut order: Vec<NodeId> = (0..g.node_count() as NodeId).collect();
    order.sort_by_key(|&v| g.label(v));
    order
        .into_iter()
        .map(|v| {
            let i = v as usize;
            NodeRow {
                node: g.label(v),
                out_degree: g.out_degree(v),
                ilp_raw: indices.ilp_raw[i],
                ilp: indices.ilp[i],
                itp_raw: indices.itp_raw[i],
                itp: indices.itp[i],
                launcher: partition.is_launcher(v),
                target: partition.is_target(v),
                eccentricity: metrics.eccentricity[i],
                closeness: metrics.closeness[i],
                betweenness: metrics.betweenness[i],
                eigenvector: metrics.eigenvector[i],
                pagerank: metrics.pagerank[i],
                authority: metrics.authority[i],
                hub: metrics.hub[i],
            }
        })
        .collect()
}

/// Renders the CSV report: `#`-prefixed header lines carrying provenance and
/// classifier parameters, then one row per node in external-label order with
/// 6-decimal fixed-point values.
pub fn render_csv(
    g: &Graph,
    indices: &IndexTable,
    metrics: &MetricTable,
    partition: &PartitionReport,
    meta: &ReportMeta,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# spreadnet report");
    let _ = writeln!(
        out,
        "# graph: {} ({} nodes, {} arcs, {})",
        meta.graph_provenance,
        g.node_count(),
        g.arc_count(),
        g.kind().as_str()
    );
    let _ = writeln!(out, "# alpha: {}", partition.alpha);
    match meta.rng_seed {
        Some(seed) => {
            let _ = writeln!(out, "# rng_seed: {seed}");
        }
        None => {
            let _ = writeln!(out, "# rng_seed: none");
        }
    }
    let c = &partition.classifier;
    let mut cls = format!("{} (min_gap_factor {})", c.method, c.min_gap_factor);
    if let Some(t) = c.threshold {
        let _ = write!(cls, ", threshold {t}");
    }
    if c.fell_back {
        cls.push_str(", fell back to threshold");
    }
    let _ = writeln!(out, "# classifier: {cls}");
    let side = |name: &str, p: &Partition, out: &mut String| {
        let bp = p
            .breaking_point
            .map(|b| format!("{b:.6}"))
            .unwrap_or_else(|| "none".into());
        let _ = writeln!(
            out,
            "# {name}: {} ({:.4}%), breaking point: {bp}{}",
            p.len(),
            p.pct * 100.0,
            p.diagnostic
                .as_deref()
                .map(|d| format!(" [{d}]"))
                .unwrap_or_default()
        );
    };
    side("launchers", &partition.launchers, &mut out);
    side("targets", &partition.targets, &mut out);
    let _ = writeln!(out, "# betweenness pairs: {}", betweenness_pairs(g));
    let _ = writeln!(
        out,
        "node,out_degree,ilp_raw,ilp,itp_raw,itp,launcher,target,\
         eccentricity,closeness,betweenness,eigenvector,pagerank,authority,hub"
    );
    for r in report_rows(g, indices, metrics, partition) {
        let _ = writeln!(
            out,
            "{},{},{},{:.6},{},{:.6},{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}",
            r.node,
            r.out_degree,
            r.ilp_raw,
            r.ilp,
            r.itp_raw,
            r.itp,
            r.launcher as u8,
            r.target as u8,
            r.eccentricity,
            r.closeness,
            r.betweenness,
            r.eigenvector,
            r.pagerank,
            r.authority,
            r.hub
        );
    }
    out
}

/// Builds the JSON report document.
pub fn build_json_report(
    g: &Graph,
    indices: &IndexTable,
    metrics: &MetricTable,
    partition: &PartitionReport,
    meta: &ReportMeta,
) -> JsonReport {
    let json_side = |p: &Partition| JsonClassSide {
        count: p.len(),
        pct: p.pct,
        breaking_point: p.breaking_point,
        breaking_point_raw: p.breaking_point_raw,
        gap: p.gap,
        diagnostic: p.diagnostic.clone(),
    };
    JsonReport {
        meta: JsonMeta {
            graph: meta.graph_provenance.clone(),
            nodes: g.node_count(),
            arcs: g.arc_count(),
            kind: g.kind().as_str().to_string(),
            alpha: partition.alpha.as_str().to_string(),
            rng_seed: meta.rng_seed,
            betweenness_pairs: betweenness_pairs(g).to_string(),
        },
        classification: JsonClassification {
            classifier: partition.classifier.clone(),
            launchers: json_side(&partition.launchers),
            targets: json_side(&partition.targets),
            duality_launchers_vs_mtbp: partition.duality_launchers_vs_mtbp,
            duality_targets_vs_mibp: partition.duality_targets_vs_mibp,
        },
        nodes: report_rows(g, indices, metrics, partition),
    }
}

/// Renders the JSON report (pretty-printed, stable field order).
pub fn render_json(
    g: &Graph,
    indices: &IndexTable,
    metrics: &MetricTable,
    partition: &PartitionReport,
    meta: &ReportMeta,
) -> Result<String> {
    let doc = build_json_report(g, indices, metrics, partition, meta);
    Ok(serde_json::to_string_pretty(&doc)?)
}

/// Writes the per-node report to `path` in the requested format.
pub fn emit_report(
    g: &Graph,
    indices: &IndexTable,
    metrics: &MetricTable,
    partition: &PartitionReport,
    meta: &ReportMeta,
    path: impl AsRef<Path>,
    format: ReportFormat,
) -> Result<()> {
    let text = match format {
        ReportFormat::Csv => render_csv(g, indices, metrics, partition, meta),
        ReportFormat::Json => render_json(g, indices, metrics, partition, meta)?,
    };
    let mut out = BufWriter::new(File::create(path.as_ref())?);
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::IndexTable;

    fn table(ilp_raw: Vec<u32>, itp_raw: Vec<u32>) -> IndexTable {
        // synthetic counts; only the classifier arithmetic is under test here
        IndexTable::from_raw_parts(HurdleCoefficient::new(1.0).unwrap(), ilp_raw, itp_raw)
    }

    #[test]
    fn gap_classifier_splits_plateau() {
        let t = table(vec![5, 5, 5, 1, 0, 0], vec![2, 2, 2, 2, 2, 2]);
        let r = classify(&t, &ClassifyMethod::gap());
        assert_eq!(r.launchers.members, vec![0, 1, 2]);
        assert_eq!(r.mibp(), Some(1.0));
        assert_eq!(r.launchers.breaking_point_raw, Some(5));
        assert!((r.launcher_pct() - 0.5).abs() < 1e-12);
        // all-equal itp column: empty target class
        assert!(r.targets.is_empty());
    }

    #[test]
    fn all_equal_yields_empty_class_with_diagnostic() {
        let t = table(vec![3, 3, 3, 3], vec![0, 0, 0, 0]);
        let r = classify(&t, &ClassifyMethod::gap());
        assert!(r.launchers.is_empty());
        assert_eq!(
            r.launchers.diagnostic.as_deref(),
            Some("no separating gap")
        );
        assert!(r.targets.is_empty());
        assert_eq!(r.mibp(), None);
    }

    #[test]
    fn threshold_classifier_is_monotone() {
        let t = table(vec![9, 7, 5, 3, 1, 0], vec![0; 6]);
        let mut last = usize::MAX;
        for cut in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0] {
            let r = classify(&t, &ClassifyMethod::Threshold(cut));
            assert!(r.launchers.len() <= last);
            last = r.launchers.len();
        }
    }

    #[test]
    fn gap_ties_split_at_bottom() {
        // gaps of 4 occur twice; the bottom-most one wins, keeping both
        // plateaus above the break in the class
        let t = table(vec![8, 8, 4, 4, 0, 0], vec![0; 6]);
        let r = classify(&t, &ClassifyMethod::gap());
        assert_eq!(r.launchers.members, vec![0, 1, 2, 3]);
        assert_eq!(r.launchers.breaking_point_raw, Some(4));
    }

    #[test]
    fn murky_distribution_reports_no_separation() {
        // strictly decreasing by equal steps: every gap equals the median
        let t = table(vec![10, 8, 6, 4, 2, 0], vec![0; 6]);
        let r = classify(&t, &ClassifyMethod::gap());
        assert!(r.launchers.is_empty());
        assert!(r
            .launchers
            .diagnostic
            .as_deref()
            .unwrap()
            .contains("no clear separation"));
        // fallback threshold takes over when supplied
        let r = classify(
            &t,
            &ClassifyMethod::Gap {
                fallback_threshold: Some(0.9),
            },
        );
        assert!(r.classifier.fell_back);
        assert_eq!(r.launchers.members, vec![0, 1, 2]);
    }

    #[test]
    fn single_launcher_star_breaks_at_one() {
        // directed star: the hub covers every leaf, leaves cover nobody
        let arcs: Vec<(u32, u32)> = (1..=6).map(|l| (0, l)).collect();
        let g = crate::graph::Graph::build(7, &arcs, false).unwrap();
        let t = IndexTable::compute(&g, &HurdleCoefficient::new(2.0).unwrap()).unwrap();
        let r = classify(&t, &ClassifyMethod::gap());
        assert_eq!(r.launchers.members, vec![0]);
        assert_eq!(r.mibp(), Some(1.0));
        assert_eq!(breaking_points(&r).0, Some(1.0));
    }

    #[test]
    fn strong_influencer_pct_bounds() {
        let t = table(vec![5, 5, 1, 0], vec![0; 4]);
        assert!(strong_influencer_pct(&t, 0.0).is_err());
        assert!(strong_influencer_pct(&t, 1.5).is_err());
        let pct = strong_influencer_pct(&t, 0.99).unwrap();
        assert_eq!(pct, 0.5);
    }

    #[test]
    fn classify_method_parsing() {
        assert_eq!(
            "gap".parse::<ClassifyMethod>().unwrap(),
            ClassifyMethod::gap()
        );
        assert_eq!(
            "threshold=0.25".parse::<ClassifyMethod>().unwrap(),
            ClassifyMethod::Threshold(0.25)
        );
        assert!("median".parse::<ClassifyMethod>().is_err());
        assert!("threshold=2.0".parse::<ClassifyMethod>().is_err());
    }

    #[test]
    fn sort_key_parsing() {
        assert_eq!("degree-asc".parse::<SortKey>().unwrap(), SortKey::DegreeAsc);
        assert!("degree".parse::<SortKey>().is_err());
    }
}
