//! The seven baseline centrality metrics: degree, eccentricity, closeness,
//! betweenness, eigenvector, PageRank and HITS.
//!
//! Conventions, chosen for comparability with Gephi-style output:
//! - eccentricity and closeness are computed over the set reachable from each
//!   node; closeness uses `(r - 1) / sum(d)` with `r` the reachable-set size,
//!   and a node reaching nobody scores 0 on both;
//! - betweenness counts each unordered pair once on undirected-expanded
//!   graphs and each ordered pair once on directed graphs;
//! - eigenvector iterates the predecessor sum and reports the vector scaled
//!   to max 1; components starved of any cycle decay to 0;
//! - PageRank redistributes the rank mass of out-degree-0 nodes uniformly,
//!   so the vector keeps summing to 1;
//! - HITS normalizes both score vectors to unit L2 length every round and
//!   stops once no score moves by more than epsilon.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, NodeId};
use crate::par;

/// Distance marker for unreachable nodes.
pub const UNREACHABLE: u32 = u32::MAX;

/// Default damping factor for PageRank.
pub const DEFAULT_PAGERANK_BETA: f64 = 0.85;
/// Default stop tolerance for the power iterations.
pub const DEFAULT_POWER_TOL: f64 = 1e-9;
/// Default iteration cap for the power iterations.
pub const DEFAULT_MAX_ITERS: usize = 500;
/// Default stop threshold for HITS.
pub const DEFAULT_HITS_EPSILON: f64 = 1e-4;

/// BFS hop counts from `source` following successor arcs.
pub fn shortest_path_lengths(g: &Graph, source: NodeId) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.node_count()];
    let mut queue = std::collections::VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize] + 1;
        for &w in g.successors(v) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = d;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Per-node eccentricity: the maximum finite BFS distance over the reachable
/// set. Nodes reaching nobody get 0.
pub fn eccentricity(g: &Graph) -> Vec<u32> {
    ecc_closeness(g).0
}

/// Per-node closeness centrality over the reachable set.
pub fn closeness(g: &Graph) -> Vec<f64> {
    ecc_closeness(g).1
}

fn ecc_closeness(g: &Graph) -> (Vec<u32>, Vec<f64>) {
    let n = g.node_count();
    let chunks = par::map_chunks(n, |range| {
        let mut ecc = Vec::with_capacity(range.len());
        let mut clo = Vec::with_capacity(range.len());
        for source in range {
            let dist = shortest_path_lengths(g, source as NodeId);
            let mut max = 0u32;
            let mut sum = 0u64;
            let mut reachable = 0u64;
            for &d in &dist {
                if d != UNREACHABLE {
                    reachable += 1;
                    sum += d as u64;
                    max = max.max(d);
                }
            }
            ecc.push(max);
            clo.push(if sum > 0 {
                (reachable - 1) as f64 / sum as f64
            } else {
                0.0
            });
        }
        (ecc, clo)
    });
    let mut ecc = Vec::with_capacity(n);
    let mut clo = Vec::with_capacity(n);
    for (e, c) in chunks {
        ecc.extend(e);
        clo.extend(c);
    }
    (ecc, clo)
}

/// Betweenness centrality via Brandes' accumulation.
///
/// Undirected-expanded graphs count each unordered pair once; directed graphs
/// count ordered pairs. Chunked per-source partial sums merge in fixed chunk
/// order so results do not depend on the worker count.
pub fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let partials = par::map_chunks(n, |range| {
        let mut acc = vec![0.0f64; n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![UNREACHABLE; n];
        let mut preds: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        let mut stack: Vec<NodeId> = Vec::with_capacity(n);
        let mut delta = vec![0.0f64; n];
        let mut queue = std::collections::VecDeque::new();

        for s in range {
            let s = s as NodeId;
            sigma.fill(0.0);
            dist.fill(UNREACHABLE);
            delta.fill(0.0);
            for p in preds.iter_mut() {
                p.clear();
            }
            stack.clear();

            sigma[s as usize] = 1.0;
            dist[s as usize] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                stack.push(v);
                let dv = dist[v as usize];
                for &w in g.successors(v) {
                    if dist[w as usize] == UNREACHABLE {
                        dist[w as usize] = dv + 1;
                        queue.push_back(w);
                    }
                    if dist[w as usize] == dv + 1 {
                        sigma[w as usize] += sigma[v as usize];
                        preds[w as usize].push(v);
                    }
                }
            }
            while let Some(w) = stack.pop() {
                for &v in &preds[w as usize] {
                    delta[v as usize] +=
                        sigma[v as usize] / sigma[w as usize] * (1.0 + delta[w as usize]);
                }
                if w != s {
                    acc[w as usize] += delta[w as usize];
                }
            }
        }
        acc
    });

    let mut bc = vec![0.0f64; n];
    for part in partials {
        for (b, p) in bc.iter_mut().zip(&part) {
            *b += p;
        }
    }
    if g.kind() == GraphKind::UndirectedExpanded {
        for b in bc.iter_mut() {
            *b /= 2.0;
        }
    }
    bc
}

/// Eigenvector centrality by power iteration on the predecessor sum, scaled
/// so the maximum entry is 1.
pub fn eigenvector_centrality(g: &Graph, max_iters: usize, tol: f64) -> Result<Vec<f64>> {
    let n = g.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut x = vec![1.0f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..max_iters {
        let mut next = vec![0.0f64; n];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut sum = 0.0;
            for &j in g.predecessors(i as NodeId) {
                sum += x[j as usize];
            }
            *slot = sum;
        }
        let max = next.iter().cloned().fold(0.0f64, f64::max);
        if max == 0.0 {
            // no feeding cycle anywhere; the iteration died out entirely
            return Ok(next);
        }
        for v in next.iter_mut() {
            *v /= max;
        }
        residual = next
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        x = next;
        if residual < tol {
            return Ok(x);
        }
    }
    Err(Error::NoConvergence {
        metric: "eigenvector centrality",
        iterations: max_iters,
        residual,
    })
}

/// PageRank with uniform teleport and uniform redistribution of dangling
/// mass, iterated from the uniform vector. The result sums to 1.
pub fn pagerank(g: &Graph, beta: f64, max_iters: usize, tol: f64) -> Result<Vec<f64>> {
    let n = g.node_count();
    pagerank_with_start(g, beta, max_iters, tol, &vec![1.0 / n.max(1) as f64; n])
}

/// PageRank from an explicit start vector. The fixpoint is unique, so any
/// positive start converges to the same ranking; exposed for exactly that
/// cross-check.
pub fn pagerank_with_start(
    g: &Graph,
    beta: f64,
    max_iters: usize,
    tol: f64,
    start: &[f64],
) -> Result<Vec<f64>> {
    assert!(beta > 0.0 && beta < 1.0, "beta must lie in (0, 1)");
    let n = g.node_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    assert_eq!(start.len(), n, "start vector must cover every node");
    let dangling: Vec<NodeId> = (0..n as NodeId).filter(|&i| g.out_degree(i) == 0).collect();
    let nf = n as f64;
    let mut pr = start.to_vec();
    let mut residual = f64::INFINITY;
    for _ in 0..max_iters {
        let dangling_mass: f64 = dangling.iter().map(|&i| pr[i as usize]).sum();
        let base = (1.0 - beta) / nf + beta * dangling_mass / nf;
        let mut next = vec![base; n];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut sum = 0.0;
            for &j in g.predecessors(i as NodeId) {
                sum += pr[j as usize] / g.out_degree(j) as f64;
            }
            *slot += beta * sum;
        }
        residual = next
            .iter()
            .zip(&pr)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        pr = next;
        if residual < tol {
            return Ok(pr);
        }
    }
    Err(Error::NoConvergence {
        metric: "pagerank",
        iterations: max_iters,
        residual,
    })
}

/// HITS authority and hub scores, both L2-normalized.
///
/// Each round recomputes both vectors from the previous round's normalized
/// scores and stops once no entry of either vector moved by `epsilon` or
/// more. On symmetric (undirected-expanded) adjacency the two vectors are
/// identical at every round.
pub fn hits(g: &Graph, epsilon: f64, max_iters: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = g.node_count();
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut au = vec![1.0f64; n];
    let mut hu = vec![1.0f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..max_iters {
        let mut au_next = vec![0.0f64; n];
        let mut hu_next = vec![0.0f64; n];
        for i in 0..n {
            let mut a = 0.0;
            for &j in g.predecessors(i as NodeId) {
                a += hu[j as usize];
            }
            au_next[i] = a;
            let mut h = 0.0;
            for &j in g.successors(i as NodeId) {
                h += au[j as usize];
            }
            hu_next[i] = h;
        }
        normalize_l2(&mut au_next);
        normalize_l2(&mut hu_next);
        residual = au_next
            .iter()
            .zip(&au)
            .chain(hu_next.iter().zip(&hu))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        au = au_next;
        hu = hu_next;
        if residual < epsilon {
            return Ok((au, hu));
        }
    }
    Err(Error::NoConvergence {
        metric: "hits",
        iterations: max_iters,
        residual,
    })
}

fn normalize_l2(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

/// All seven metrics for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTable {
    pub degree: Vec<usize>,
    pub eccentricity: Vec<u32>,
    pub closeness: Vec<f64>,
    pub betweenness: Vec<f64>,
    pub eigenvector: Vec<f64>,
    pub pagerank: Vec<f64>,
    pub authority: Vec<f64>,
    pub hub: Vec<f64>,
}

impl MetricTable {
    /// Computes every metric with the default tolerances.
    pub fn compute(g: &Graph) -> Result<MetricTable> {
        let (eccentricity, closeness) = ecc_closeness(g);
        let (authority, hub) = hits(g, DEFAULT_HITS_EPSILON, DEFAULT_MAX_ITERS)?;
        Ok(MetricTable {
            degree: (0..g.node_count() as NodeId).map(|i| g.out_degree(i)).collect(),
            eccentricity,
            closeness,
            betweenness: betweenness(g),
            eigenvector: eigenvector_centrality(g, DEFAULT_MAX_ITERS, DEFAULT_POWER_TOL)?,
            pagerank: pagerank(g, DEFAULT_PAGERANK_BETA, DEFAULT_MAX_ITERS, DEFAULT_POWER_TOL)?,
            authority,
            hub,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::build(3, &[(0, 1), (1, 2)], false).unwrap()
    }

    #[test]
    fn bfs_on_a_path() {
        let g = path3();
        assert_eq!(shortest_path_lengths(&g, 0), vec![0, 1, 2]);
        assert_eq!(shortest_path_lengths(&g, 2), vec![UNREACHABLE, UNREACHABLE, 0]);
    }

    #[test]
    fn eccentricity_complete_graph() {
        let g = Graph::build(3, &[(0, 1), (0, 2), (1, 2)], true).unwrap();
        assert_eq!(eccentricity(&g), vec![1, 1, 1]);
    }

    #[test]
    fn sink_has_zero_reach_metrics() {
        let g = path3();
        let ec = eccentricity(&g);
        let cc = closeness(&g);
        assert_eq!(ec[2], 0);
        assert_eq!(cc[2], 0.0);
        assert_eq!(ec[0], 2);
        assert!((cc[0] - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn star_center_closeness_is_one() {
        let k = 6u32;
        let arcs: Vec<(NodeId, NodeId)> = (1..=k).map(|l| (0, l)).collect();
        let g = Graph::build(k as usize + 1, &arcs, true).unwrap();
        assert_eq!(closeness(&g)[0], 1.0);
    }

    #[test]
    fn path_betweenness_middle_vertex() {
        let g = Graph::build(3, &[(0, 1), (1, 2)], true).unwrap();
        let bc = betweenness(&g);
        assert_eq!(bc, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn cycle_eigenvector_is_uniform() {
        let n = 6;
        let arcs: Vec<(NodeId, NodeId)> =
            (0..n as NodeId).map(|i| (i, (i + 1) % n as NodeId)).collect();
        let g = Graph::build(n, &arcs, true).unwrap();
        let ev = eigenvector_centrality(&g, 500, 1e-9).unwrap();
        for v in ev {
            assert!((v - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn acyclic_eigenvector_dies_out() {
        let g = path3();
        let ev = eigenvector_centrality(&g, 500, 1e-9).unwrap();
        assert_eq!(ev, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn cycle_pagerank_is_uniform() {
        let n = 5;
        let arcs: Vec<(NodeId, NodeId)> =
            (0..n as NodeId).map(|i| (i, (i + 1) % n as NodeId)).collect();
        let g = Graph::build(n, &arcs, false).unwrap();
        let pr = pagerank(&g, 0.85, 500, 1e-12).unwrap();
        for v in pr {
            assert!((v - 0.2).abs() < 1e-9);
        }
    }

    #[test]
    fn two_node_pagerank_closed_form() {
        // single arc 0 -> 1; node 1 dangles. Solving the fixpoint by hand
        // gives pr = (20/57, 37/57).
        let g = Graph::build(2, &[(0, 1)], false).unwrap();
        let pr = pagerank(&g, 0.85, 500, 1e-14).unwrap();
        assert!(pr[1] > pr[0]);
        assert!((pr[0] - 20.0 / 57.0).abs() < 1e-9, "pr0 = {}", pr[0]);
        assert!((pr[1] - 37.0 / 57.0).abs() < 1e-9, "pr1 = {}", pr[1]);
        assert!((pr[0] + pr[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pagerank_sums_to_one_with_dangling() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (2, 3)], false).unwrap();
        let pr = pagerank(&g, 0.85, 500, 1e-12).unwrap();
        let sum: f64 = pr.iter().sum();
        assert!((sum - 1.0).abs() < 1e-9, "sum = {sum}");
    }

    #[test]
    fn hits_equal_on_undirected() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], true).unwrap();
        let (au, hu) = hits(&g, 1e-4, 500).unwrap();
        for (a, h) in au.iter().zip(&hu) {
            assert!((a - h).abs() < 1e-12);
        }
        let norm: f64 = au.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-9);
    }

    #[test]
    fn hits_hub_authority_split() {
        // 0 and 1 point at 2 and 3: pure hubs vs pure authorities.
        let g = Graph::build(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], false).unwrap();
        let (au, hu) = hits(&g, 1e-6, 500).unwrap();
        assert!(hu[0] > au[0]);
        assert!(au[2] > hu[2]);
        assert!(au[0] < 1e-9);
        assert!(hu[2] < 1e-9);
    }
}
