//! Watts-Strogatz small-world generator and partial orientation.
//!
//! Generation starts from a ring lattice where every node is joined to its
//! `k/2` nearest neighbours on each side. Each original edge is visited once
//! and, with probability `p`, its far endpoint is reattached to a node drawn
//! uniformly at random; draws that would create a self-loop or duplicate edge
//! are resampled, so the edge count is always exactly `n*k/2`.
//!
//! [`orient`] then turns an undirected graph into a partially oriented one:
//! a fraction `o` of the edges (rounded) stays bidirected, every other edge
//! becomes a single arc whose direction is a fair coin flip.
//!
//! All randomness comes from a seeded ChaCha8 stream; the same parameters and
//! seed reproduce the same graph arc-for-arc.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, NodeId};

/// Parameters for [`watts_strogatz`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WsParams {
    /// Node count.
    pub n: usize,
    /// Ring-lattice degree; must be even, `2 <= k < n`.
    pub k: usize,
    /// Rewiring probability in `[0, 1]`.
    pub p: f64,
    /// RNG seed; part of every report's metadata.
    pub rng_seed: u64,
}

impl WsParams {
    pub fn validate(&self) -> Result<()> {
        if !self.k.is_multiple_of(2) {
            return Err(Error::InvalidParams {
                msg: format!("k = {} must be even", self.k),
            });
        }
        if self.k < 2 || self.k >= self.n {
            return Err(Error::InvalidParams {
                msg: format!("need 2 <= k < n, got k = {}, n = {}", self.k, self.n),
            });
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParams {
                msg: format!("rewiring probability p = {} outside [0, 1]", self.p),
            });
        }
        Ok(())
    }
}

#[inline]
fn edge_key(a: NodeId, b: NodeId) -> u64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    (lo as u64) << 32 | hi as u64
}

/// Generates an undirected-expanded small-world graph with exactly `n*k/2`
/// edges.
pub fn watts_strogatz(params: &WsParams) -> Result<Graph> {
    params.validate()?;
    let (n, k, p) = (params.n, params.k, params.p);
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);

    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(n * k / 2);
    let mut present: HashSet<u64> = HashSet::with_capacity(n * k);
    let mut degree = vec![0u32; n];
    for j in 1..=k / 2 {
        for u in 0..n {
            let v = ((u + j) % n) as NodeId;
            let u = u as NodeId;
            edges.push((u, v));
            present.insert(edge_key(u, v));
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
    }

    for edge in edges.iter_mut() {
        if !rng.gen_bool(p) {
            continue;
        }
        let (u, v) = *edge;
        // a saturated near endpoint has nowhere new to attach; keep the edge
        if degree[u as usize] as usize >= n - 1 {
            continue;
        }
        let w = loop {
            let w = rng.gen_range(0..n) as NodeId;
            if w != u && !present.contains(&edge_key(u, w)) {
                break w;
            }
        };
        present.remove(&edge_key(u, v));
        present.insert(edge_key(u, w));
        degree[v as usize] -= 1;
        degree[w as usize] += 1;
        *edge = (u, w);
    }

    Graph::build(n, &edges, true)
}

/// Partially orients an undirected-expanded graph.
///
/// `round(o * m)` edges stay bidirected; the remaining edges are chosen
/// uniformly at random and replaced by a single arc in a fair random
/// direction. `o = 1` is the identity. Total stored arcs:
/// `2 * round(o*m) + (m - round(o*m))`.
pub fn orient(g: &Graph, o: f64, rng_seed: u64) -> Result<Graph> {
    if g.kind() != GraphKind::UndirectedExpanded {
        return Err(Error::NotUndirected);
    }
    if !(0.0..=1.0).contains(&o) {
        return Err(Error::InvalidParams {
            msg: format!("bidirected fraction o = {o} outside [0, 1]"),
        });
    }
    if o == 1.0 {
        return Ok(g.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    let m = edges.len();
    let bidirected = ((o * m as f64).round() as usize).min(m);
    let single = m - bidirected;

    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);

    let mut arcs: Vec<(NodeId, NodeId)> = Vec::with_capacity(2 * bidirected + single);
    for (pos, &e) in order.iter().enumerate() {
        let (u, v) = edges[e];
        if pos < single {
            if rng.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        } else {
            arcs.push((u, v));
            arcs.push((v, u));
        }
    }

    let labels = (0..g.node_count() as NodeId).map(|i| g.label(i)).collect();
    Graph::build_labeled(g.node_count(), &arcs, false, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_validation() {
        assert!(WsParams { n: 10, k: 3, p: 0.3, rng_seed: 1 }.validate().is_err());
        assert!(WsParams { n: 10, k: 10, p: 0.3, rng_seed: 1 }.validate().is_err());
        assert!(WsParams { n: 10, k: 4, p: 1.5, rng_seed: 1 }.validate().is_err());
        assert!(WsParams { n: 10, k: 4, p: 0.3, rng_seed: 1 }.validate().is_ok());
    }

    #[test]
    fn p_zero_is_exact_ring_lattice() {
        let g = watts_strogatz(&WsParams { n: 12, k: 4, p: 0.0, rng_seed: 9 }).unwrap();
        assert_eq!(g.edge_count(), Some(24));
        for i in 0..12u32 {
            assert_eq!(g.out_degree(i), 4);
            let expect: Vec<NodeId> = [10, 11, 1, 2]
                .iter()
                .map(|&d| ((i as usize + d) % 12) as NodeId)
                .collect();
            let mut expect = expect;
            expect.sort_unstable();
            assert_eq!(g.successors(i), &expect[..]);
        }
    }

    #[test]
    fn p_one_preserves_edge_count_and_simplicity() {
        let g = watts_strogatz(&WsParams { n: 100, k: 4, p: 1.0, rng_seed: 1234 }).unwrap();
        assert_eq!(g.edge_count(), Some(200));
        assert_eq!(g.arc_count(), 400);
        for i in 0..100u32 {
            let s = g.successors(i);
            assert!(!s.contains(&i), "self-loop at {i}");
            assert!(s.windows(2).all(|w| w[0] < w[1]), "duplicate arc at {i}");
        }
    }

    #[test]
    fn reproducible_per_seed() {
        let p = WsParams { n: 200, k: 6, p: 0.3, rng_seed: 77 };
        assert_eq!(watts_strogatz(&p).unwrap(), watts_strogatz(&p).unwrap());
        let other = WsParams { rng_seed: 78, ..p };
        assert_ne!(watts_strogatz(&p).unwrap(), watts_strogatz(&other).unwrap());
    }

    #[test]
    fn orient_identity_at_o_one() {
        let g = watts_strogatz(&WsParams { n: 50, k: 4, p: 0.3, rng_seed: 3 }).unwrap();
        let o = orient(&g, 1.0, 999).unwrap();
        assert_eq!(g, o);
        assert_eq!(o.kind(), GraphKind::UndirectedExpanded);
    }

    #[test]
    fn orient_arc_counts() {
        let g = watts_strogatz(&WsParams { n: 100, k: 10, p: 0.3, rng_seed: 11 }).unwrap();
        let m = g.edge_count().unwrap();
        assert_eq!(m, 500);
        for (o, expect) in [(0.33, 2 * 165 + 335), (0.66, 2 * 330 + 170), (0.0, 500)] {
            let d = orient(&g, o, 42).unwrap();
            assert_eq!(d.kind(), GraphKind::Directed);
            assert_eq!(d.arc_count(), expect, "o = {o}");
        }
    }

    #[test]
    fn orient_requires_undirected() {
        let g = Graph::build(3, &[(0, 1)], false).unwrap();
        assert!(matches!(orient(&g, 0.5, 1).unwrap_err(), Error::NotUndirected));
    }

    #[test]
    fn orient_preserves_symmetric_pairs_and_simplicity() {
        let g = watts_strogatz(&WsParams { n: 80, k: 6, p: 0.2, rng_seed: 5 }).unwrap();
        let d = orient(&g, 0.5, 6).unwrap();
        // every arc of the oriented graph is an edge of the source graph
        for (u, v) in d.arcs() {
            assert!(g.successors(u).contains(&v));
        }
        // no duplicates by construction of Graph::build
        assert_eq!(d.arc_count(), 2 * 120 + 120);
    }
}
