//! Deterministic linear-threshold cascades and the ILP/ITP index batch.
//!
//! A node `v` activates once the summed out-degrees of its already-active
//! predecessors reach `alpha * out_degree(v)`. Each cascade starts from a
//! single seed and runs a worklist that always examines the candidate with
//! the smallest out-degree first; a rejected candidate re-enters the list
//! whenever another of its predecessors activates, so the final active set
//! is the unique least fixpoint of the activation condition and does not
//! depend on the examination order.
//!
//! The batch operation runs one cascade per seed and aggregates two counts,
//! `ilp_raw(i)` (how many other nodes seed `i` activates — launching power)
//! and `itp_raw(v)` (how many other seeds activate `v` — target potential),
//! both normalized by `n - 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::par;

/// The hurdle coefficient `alpha`: a finite positive scalar encoding how hard
/// a message is to adopt (larger = less viral). The original decimal spelling
/// is preserved for report metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct HurdleCoefficient {
    value: f64,
    text: String,
}

impl HurdleCoefficient {
    pub fn new(value: f64) -> Result<Self> {
        Self::with_text(value, format!("{value}"))
    }

    /// Parses a decimal string, keeping it verbatim as the display form.
    pub fn parse(text: &str) -> Result<Self> {
        let value: f64 = text.trim().parse().map_err(|_| Error::InvalidHurdle {
            text: text.to_string(),
        })?;
        Self::with_text(value, text.trim().to_string())
    }

    fn with_text(value: f64, text: String) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::InvalidHurdle { text });
        }
        Ok(HurdleCoefficient { value, text })
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

impl fmt::Display for HurdleCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for HurdleCoefficient {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HurdleCoefficient::parse(s)
    }
}

/// Activation test: does `v` activate given the current active set?
///
/// True iff the out-degree sum of v's active predecessors is positive and
/// meets `alpha * out_degree(v)`. The left side is an exact integer sum; only
/// the final comparison is done in floating point. Influence must come from
/// somewhere: a node with no active predecessor never activates, even when
/// its own out-degree (and therefore its hurdle) is zero.
pub fn activation_test(g: &Graph, active: &[bool], v: NodeId, alpha: &HurdleCoefficient) -> bool {
    debug_assert!(!active[v as usize], "activation test on an active node");
    let mut sum: u64 = 0;
    for &p in g.predecessors(v) {
        if active[p as usize] {
            sum += g.out_degree(p) as u64;
        }
    }
    sum > 0 && sum as f64 >= alpha.value() * g.out_degree(v) as f64
}

/// Outcome of a single-seed cascade.
#[derive(Debug, Clone, PartialEq)]
pub struct CascadeResult {
    pub seed: NodeId,
    active: Vec<bool>,
    active_count: usize,
    /// Non-seed nodes in the order they activated; the node at position `k`
    /// activated at step `k + 1`.
    pub activation_order: Vec<NodeId>,
}

impl CascadeResult {
    /// Membership mask over all nodes (seed included).
    pub fn active(&self) -> &[bool] {
        &self.active
    }

    #[inline]
    pub fn is_active(&self, v: NodeId) -> bool {
        self.active[v as usize]
    }

    /// Size of the active set, seed included.
    pub fn active_count(&self) -> usize {
        self.active_count
    }

    /// Nodes activated by the seed, i.e. `|S| - 1`.
    pub fn reached(&self) -> usize {
        self.active_count - 1
    }

    /// Active node ids in ascending order.
    pub fn active_nodes(&self) -> Vec<NodeId> {
        self.active
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| a.then_some(i as NodeId))
            .collect()
    }
}

/// Reusable per-worker state so batch runs do not reallocate per seed.
struct Scratch {
    active: Vec<bool>,
    influence: Vec<u64>,
    /// Candidate list keyed by (out-degree, node id); the id breaks ties so
    /// extraction order is reproducible.
    list: BTreeSet<(u32, NodeId)>,
    order: Vec<NodeId>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            active: vec![false; n],
            influence: vec![0; n],
            list: BTreeSet::new(),
            order: Vec::new(),
        }
    }

    fn reset(&mut self) {
        self.active.fill(false);
        self.influence.fill(0);
        self.list.clear();
        self.order.clear();
    }
}

/// Worklist cascade, one seed. `influence[w]` incrementally tracks the
/// out-degree sum of w's active predecessors.
fn run_cascade(g: &Graph, seed: NodeId, alpha: f64, s: &mut Scratch) -> usize {
    s.reset();
    s.active[seed as usize] = true;
    let mut active_count = 1usize;

    let feed = |v: NodeId, s: &mut Scratch| {
        let deg = g.out_degree(v) as u64;
        for &w in g.successors(v) {
            if !s.active[w as usize] {
                s.influence[w as usize] += deg;
                s.list.insert((g.out_degree(w) as u32, w));
            }
        }
    };

    feed(seed, s);
    while let Some(&(deg, v)) = s.list.first() {
        s.list.remove(&(deg, v));
        let infl = s.influence[v as usize];
        if infl > 0 && infl as f64 >= alpha * deg as f64 {
            s.active[v as usize] = true;
            active_count += 1;
            s.order.push(v);
            feed(v, s);
        }
        // a rejected candidate re-enters the list when a predecessor
        // activates later (feed re-inserts it)
    }
    active_count
}

/// Runs the linear-threshold cascade from `seed`.
pub fn cascade(g: &Graph, seed: NodeId, alpha: &HurdleCoefficient) -> Result<CascadeResult> {
    let n = g.node_count();
    if seed as usize >= n {
        return Err(Error::NodeOutOfRange { id: seed as usize, n });
    }
    let mut scratch = Scratch::new(n);
    let active_count = run_cascade(g, seed, alpha.value(), &mut scratch);
    Ok(CascadeResult {
        seed,
        active: std::mem::take(&mut scratch.active),
        active_count,
        activation_order: std::mem::take(&mut scratch.order),
    })
}

/// Brute-force reference: repeatedly sweeps every inactive node with
/// [`activation_test`] until a full sweep adds nothing. Structurally
/// unrelated to the worklist; used to verify it.
pub fn fixpoint_oracle(g: &Graph, seed: NodeId, alpha: &HurdleCoefficient) -> Result<Vec<bool>> {
    let n = g.node_count();
    if seed as usize >= n {
        return Err(Error::NodeOutOfRange { id: seed as usize, n });
    }
    let mut active = vec![false; n];
    active[seed as usize] = true;
    loop {
        let mut changed = false;
        for v in 0..n as NodeId {
            if !active[v as usize] && activation_test(g, &active, v, alpha) {
                active[v as usize] = true;
                changed = true;
            }
        }
        if !changed {
            return Ok(active);
        }
    }
}

/// Per-node ILP and ITP values for one `(graph, alpha)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexTable {
    alpha: HurdleCoefficient,
    /// `ilp_raw[i]`: nodes activated when `i` seeds a message.
    pub ilp_raw: Vec<u32>,
    /// `itp_raw[v]`: seeds (other than `v`) whose cascade activates `v`.
    pub itp_raw: Vec<u32>,
    /// `ilp_raw / (n - 1)`.
    pub ilp: Vec<f64>,
    /// `itp_raw / (n - 1)`.
    pub itp: Vec<f64>,
}

impl IndexTable {
    /// Runs one cascade per seed and aggregates both indices.
    ///
    /// Seeds are processed in fixed-size chunks; with the `parallel` feature
    /// the chunks fan out to worker threads. All accumulation is integral and
    /// chunk results merge in chunk order, so the table is bit-identical
    /// regardless of worker count.
    pub fn compute(g: &Graph, alpha: &HurdleCoefficient) -> Result<IndexTable> {
        let n = g.node_count();
        if n < 2 {
            return Err(Error::DegenerateGraph { n });
        }
        let a = alpha.value();

        struct ChunkOut {
            start: usize,
            ilp: Vec<u32>,
            itp: Vec<u32>,
        }

        let chunks = par::map_chunks(n, |range| {
            let mut scratch = Scratch::new(n);
            let mut out = ChunkOut {
                start: range.start,
                ilp: Vec::with_capacity(range.len()),
                itp: vec![0u32; n],
            };
            for seed in range {
                let count = run_cascade(g, seed as NodeId, a, &mut scratch);
                out.ilp.push((count - 1) as u32);
                for &v in &scratch.order {
                    out.itp[v as usize] += 1;
                }
            }
            out
        });

        let mut ilp_raw = vec![0u32; n];
        let mut itp_raw = vec![0u32; n];
        for chunk in chunks {
            ilp_raw[chunk.start..chunk.start + chunk.ilp.len()].copy_from_slice(&chunk.ilp);
            for (acc, part) in itp_raw.iter_mut().zip(&chunk.itp) {
                *acc += part;
            }
        }

        let norm = (n - 1) as f64;
        Ok(IndexTable {
            alpha: alpha.clone(),
            ilp: ilp_raw.iter().map(|&c| c as f64 / norm).collect(),
            itp: itp_raw.iter().map(|&c| c as f64 / norm).collect(),
            ilp_raw,
            itp_raw,
        })
    }

    pub fn alpha(&self) -> &HurdleCoefficient {
        &self.alpha
    }

    pub fn node_count(&self) -> usize {
        self.ilp_raw.len()
    }

    /// Assembles a table from raw counts; test support for classifier code.
    #[cfg(test)]
    pub(crate) fn from_raw_parts(
        alpha: HurdleCoefficient,
        ilp_raw: Vec<u32>,
        itp_raw: Vec<u32>,
    ) -> IndexTable {
        let norm = (ilp_raw.len() - 1).max(1) as f64;
        IndexTable {
            alpha,
            ilp: ilp_raw.iter().map(|&c| c as f64 / norm).collect(),
            itp: itp_raw.iter().map(|&c| c as f64 / norm).collect(),
            ilp_raw,
            itp_raw,
        }
    }
}
