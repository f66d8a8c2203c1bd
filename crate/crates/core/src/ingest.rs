//! Edge-list ingestion for SNAP / KONECT / UCINET style datasets.
//!
//! One arc per line, two leading integer node labels, further columns
//! (timestamps, weights) ignored. Comment lines start with `#` (SNAP) or
//! `%` (KONECT) by default. Node labels may be arbitrary non-negative
//! integers; they are mapped to dense internal ids in first-seen order and
//! echoed back in every report.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, NodeId};

/// Preprocessing switches applied while reading an edge list.
#[derive(Debug, Clone)]
pub struct IngestOptions {
    /// Expand each input line `{i, j}` into the two arcs `(i, j)` and `(j, i)`.
    pub treat_as_undirected: bool,
    /// Replace every arc `(i, j)` by `(j, i)` before storage. Datasets that
    /// record "i follows j" need this so that the arc points from the
    /// influencer to the follower.
    pub flip_orientation: bool,
    /// Line prefixes that mark comments.
    pub comment_prefixes: Vec<char>,
}

impl Default for IngestOptions {
    fn default() -> Self {
        IngestOptions {
            treat_as_undirected: false,
            flip_orientation: false,
            comment_prefixes: vec!['#', '%'],
        }
    }
}

/// What happened while reading a dataset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IngestSummary {
    /// Distinct node labels encountered (including nodes seen only in loops).
    pub nodes_seen: usize,
    /// Data lines read (comments and blank lines excluded).
    pub arcs_read: usize,
    /// Data lines dropped because both endpoints were equal.
    pub loops_removed: usize,
    /// Data lines dropped because the arc (or undirected edge) was already
    /// present.
    pub duplicates_collapsed: usize,
    /// Whether arcs were reversed before storage.
    pub flipped: bool,
    /// Flip combined with undirected expansion is the identity; accepted but
    /// flagged here.
    pub redundant_flip: bool,
    /// Data lines that carried more than two columns.
    pub extra_column_lines: usize,
}

/// Reads an edge-list file and applies the preprocessing in `opts`.
pub fn load_edge_list(path: impl AsRef<Path>, opts: &IngestOptions) -> Result<(Graph, IngestSummary)> {
    let file = File::open(path.as_ref())?;
    parse_edge_list(BufReader::new(file), opts)
}

/// Reads an edge list from any buffered reader. See [`load_edge_list`].
pub fn parse_edge_list<R: BufRead>(reader: R, opts: &IngestOptions) -> Result<(Graph, IngestSummary)> {
    let mut labels: Vec<u64> = Vec::new();
    let mut index: HashMap<u64, NodeId> = HashMap::new();
    let intern = |label: u64, labels: &mut Vec<u64>, index: &mut HashMap<u64, NodeId>| -> NodeId {
        *index.entry(label).or_insert_with(|| {
            labels.push(label);
            (labels.len() - 1) as NodeId
        })
    };

    let mut arcs: Vec<(NodeId, NodeId)> = Vec::new();
    let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
    let mut summary = IngestSummary {
        nodes_seen: 0,
        arcs_read: 0,
        loops_removed: 0,
        duplicates_collapsed: 0,
        flipped: opts.flip_orientation,
        redundant_flip: opts.flip_orientation && opts.treat_as_undirected,
        extra_column_lines: 0,
    };

    for (line_no, line) in reader.lines().enumerate() {
        let line_no = line_no + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(first) = trimmed.chars().next() {
            if opts.comment_prefixes.contains(&first) {
                continue;
            }
        }
        let mut tokens = trimmed.split([' ', '\t', ',']).filter(|t| !t.is_empty());
        let a = parse_label(tokens.next(), line_no)?;
        let b = parse_label(tokens.next(), line_no)?;
        if tokens.next().is_some() {
            summary.extra_column_lines += 1;
        }
        summary.arcs_read += 1;

        let (mut u, mut v) = (
            intern(a, &mut labels, &mut index),
            intern(b, &mut labels, &mut index),
        );
        if u == v {
            summary.loops_removed += 1;
            continue;
        }
        if opts.flip_orientation {
            std::mem::swap(&mut u, &mut v);
        }
        // Duplicate tracking is per input line (an undirected edge matches
        // either orientation of an earlier line).
        let key = if opts.treat_as_undirected {
            let (lo, hi) = (u.min(v), u.max(v));
            (lo as u64) << 32 | hi as u64
        } else {
            (u as u64) << 32 | v as u64
        };
        if !seen.insert(key) {
            summary.duplicates_collapsed += 1;
            continue;
        }
        arcs.push((u, v));
    }

    if arcs.is_empty() {
        return Err(Error::NoArcs);
    }
    summary.nodes_seen = labels.len();
    let n = labels.len();
    let graph = Graph::build_labeled(n, &arcs, opts.treat_as_undirected, Some(labels))?;
    Ok((graph, summary))
}

fn parse_label(token: Option<&str>, line_no: usize) -> Result<u64> {
    let token = token.ok_or_else(|| Error::Parse {
        line: line_no,
        msg: "expected two node ids".into(),
    })?;
    token.parse::<u64>().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("non-numeric node id {token:?}"),
    })
}

/// Writes a graph back as an edge list readable by [`load_edge_list`].
///
/// Directed graphs emit every arc; undirected-expanded graphs emit each edge
/// once (reload them with `treat_as_undirected`). Lines carry external labels
/// in deterministic internal-id order.
pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let file = File::create(path.as_ref())?;
    let mut out = BufWriter::new(file);
    write_edge_list_to(g, &mut out)?;
    out.flush()?;
    Ok(())
}

/// Streaming variant of [`write_edge_list`].
pub fn write_edge_list_to<W: Write>(g: &Graph, out: &mut W) -> Result<()> {
    match g.kind() {
        GraphKind::Directed => {
            for (i, j) in g.arcs() {
                writeln!(out, "{} {}", g.label(i), g.label(j))?;
            }
        }
        GraphKind::UndirectedExpanded => {
            for (i, j) in g.edges() {
                writeln!(out, "{} {}", g.label(i), g.label(j))?;
            }
        }
    }
    Ok(())
}
