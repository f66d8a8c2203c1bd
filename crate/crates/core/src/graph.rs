//! Immutable directed graph with predecessor/successor adjacency in CSR form.
//!
//! Arc `(i, j)` means "i influences j". Undirected inputs are stored expanded,
//! one arc per direction. The structure is read-only after construction and
//! safe to share across threads without synchronization.

use crate::error::{Error, Result};

/// Dense internal node identifier, `0..n`.
pub type NodeId = u32;

/// Whether the arc relation is a plain directed graph or the symmetric
/// expansion of an undirected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Directed,
    UndirectedExpanded,
}

impl GraphKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphKind::Directed => "directed",
            GraphKind::UndirectedExpanded => "undirected-expanded",
        }
    }
}

/// Immutable simple directed graph.
///
/// Invariants established by [`Graph::build`]:
/// - no self-loops,
/// - successor lists strictly increasing (no duplicate arcs),
/// - predecessor lists are the exact transpose of the successor lists,
/// - for [`GraphKind::UndirectedExpanded`] the arc relation is symmetric.
///
/// Equality compares structure and effective labels, so a graph with the
/// implicit identity labelling equals one carrying it explicitly.
#[derive(Debug, Clone)]
pub struct Graph {
    kind: GraphKind,
    succ_off: Vec<usize>,
    succ: Vec<NodeId>,
    pred_off: Vec<usize>,
    pred: Vec<NodeId>,
    /// External labels, indexed by internal id. `None` means identity
    /// (node `i` is labelled `i`).
    labels: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph from an arc list.
    ///
    /// Self-loops are dropped and duplicate arcs collapse. With `symmetrize`
    /// every arc's reverse is also stored and the result is marked
    /// [`GraphKind::UndirectedExpanded`].
    pub fn build(n: usize, arcs: &[(NodeId, NodeId)], symmetrize: bool) -> Result<Graph> {
        Self::build_labeled(n, arcs, symmetrize, None)
    }

    /// Like [`Graph::build`] but attaches external node labels
    /// (`labels[internal_id] = external label`).
    pub fn build_labeled(
        n: usize,
        arcs: &[(NodeId, NodeId)],
        symmetrize: bool,
        labels: Option<Vec<u64>>,
    ) -> Result<Graph> {
        if let Some(ref l) = labels {
            assert_eq!(l.len(), n, "label table must cover every node");
        }
        for &(a, b) in arcs {
            if (a as usize) >= n || (b as usize) >= n {
                return Err(Error::ArcOutOfRange {
                    from: a as u64,
                    to: b as u64,
                    n,
                    line: None,
                });
            }
        }

        let mut list: Vec<(NodeId, NodeId)> = Vec::with_capacity(if symmetrize {
            arcs.len() * 2
        } else {
            arcs.len()
        });
        for &(a, b) in arcs {
            if a == b {
                continue;
            }
            list.push((a, b));
            if symmetrize {
                list.push((b, a));
            }
        }
        list.sort_unstable();
        list.dedup();

        // successor CSR
        let mut succ_off = vec![0usize; n + 1];
        for &(a, _) in &list {
            succ_off[a as usize + 1] += 1;
        }
        for i in 0..n {
            succ_off[i + 1] += succ_off[i];
        }
        let succ: Vec<NodeId> = list.iter().map(|&(_, b)| b).collect();

        // transpose; iterating arcs in (src, dst) order keeps each
        // predecessor list sorted
        let mut pred_off = vec![0usize; n + 1];
        for &(_, b) in &list {
            pred_off[b as usize + 1] += 1;
        }
        for i in 0..n {
            pred_off[i + 1] += pred_off[i];
        }
        let mut pred = vec![0 as NodeId; list.len()];
        let mut cursor = pred_off.clone();
        for &(a, b) in &list {
            pred[cursor[b as usize]] = a;
            cursor[b as usize] += 1;
        }

        Ok(Graph {
            kind: if symmetrize {
                GraphKind::UndirectedExpanded
            } else {
                GraphKind::Directed
            },
            succ_off,
            succ,
            pred_off,
            pred,
            labels,
        })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        self.succ_off.len() - 1
    }

    /// Number of stored arcs (an undirected edge counts as two).
    pub fn arc_count(&self) -> usize {
        self.succ.len()
    }

    /// Number of undirected edges, if this is an undirected-expanded graph.
    pub fn edge_count(&self) -> Option<usize> {
        match self.kind {
            GraphKind::UndirectedExpanded => Some(self.succ.len() / 2),
            GraphKind::Directed => None,
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        0..self.node_count() as NodeId
    }

    /// Successors of `i` (nodes that `i` influences), strictly increasing.
    pub fn successors(&self, i: NodeId) -> &[NodeId] {
        &self.succ[self.succ_off[i as usize]..self.succ_off[i as usize + 1]]
    }

    /// Predecessors of `i` (nodes that influence `i`), strictly increasing.
    pub fn predecessors(&self, i: NodeId) -> &[NodeId] {
        &self.pred[self.pred_off[i as usize]..self.pred_off[i as usize + 1]]
    }

    /// Cached out-degree `g+(i)`. On undirected-expanded graphs this equals
    /// the plain undirected degree.
    #[inline]
    pub fn out_degree(&self, i: NodeId) -> usize {
        self.succ_off[i as usize + 1] - self.succ_off[i as usize]
    }

    #[inline]
    pub fn in_degree(&self, i: NodeId) -> usize {
        self.pred_off[i as usize + 1] - self.pred_off[i as usize]
    }

    /// External label of node `i`.
    pub fn label(&self, i: NodeId) -> u64 {
        match &self.labels {
            Some(l) => l[i as usize],
            None => i as u64,
        }
    }

    /// All arcs as internal id pairs, ordered by (source, target).
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count() as NodeId)
            .flat_map(move |i| self.successors(i).iter().map(move |&j| (i, j)))
    }

    /// Undirected edges as internal id pairs with `i < j`; only meaningful
    /// for undirected-expanded graphs.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.arcs().filter(|&(i, j)| i < j)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.succ_off == other.succ_off
            && self.succ == other.succ
            && (0..self.node_count() as NodeId).all(|i| self.label(i) == other.label(i))
    }
}

impl Eq for Graph {}
