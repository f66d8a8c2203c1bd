//! Browser bindings for the spreadnet demo page.
//!
//! A [`Demo`] wraps one immutable graph. The page generates a small-world
//! instance (or loads a pasted edge list), then explores it: single-seed
//! cascades at a chosen hurdle coefficient, or the full ILP/ITP index batch
//! with launcher/target classification. Every operation returns a JSON
//! string; rendering stays on the JavaScript side.
//!
//! Build for the web with:
//! `cargo build --release --target wasm32-unknown-unknown -p spreadnet-wasm`
//! followed by `wasm-bindgen --target web` (or `wasm-pack build`).

use serde::Serialize;
use wasm_bindgen::prelude::*;

use spreadnet::{
    cascade, classify, strong_influencer_pct, ClassifyMethod, Graph, HurdleCoefficient,
    IndexTable, IngestOptions, NodeId, WsParams,
};

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    kind: &'static str,
    arc_count: usize,
    labels: Vec<u64>,
    out_degree: Vec<usize>,
    arcs: Vec<(NodeId, NodeId)>,
}

#[derive(Serialize)]
struct CascadeJson {
    seed: NodeId,
    alpha: f64,
    reached: usize,
    coverage: f64,
    active: Vec<NodeId>,
    order: Vec<NodeId>,
}

#[derive(Serialize)]
struct SideJson {
    members: Vec<NodeId>,
    pct: f64,
    breaking_point: Option<f64>,
    diagnostic: Option<String>,
}

#[derive(Serialize)]
struct IndicesJson {
    alpha: f64,
    ilp: Vec<f64>,
    itp: Vec<f64>,
    ilp_raw: Vec<u32>,
    itp_raw: Vec<u32>,
    launchers: SideJson,
    targets: SideJson,
    strong_pct: f64,
}

/// One loaded graph plus the operations the page exposes.
#[wasm_bindgen]
pub struct Demo {
    graph: Graph,
}

#[wasm_bindgen]
impl Demo {
    /// Generates a Watts-Strogatz graph; `orient < 1` replaces a fraction of
    /// the edges by single random-direction arcs.
    #[wasm_bindgen(js_name = wattsStrogatz)]
    pub fn watts_strogatz(n: u32, k: u32, p: f64, orient: f64, seed: u32) -> Result<Demo, JsError> {
        Ok(Demo {
            graph: build_ws(n as usize, k as usize, p, orient, seed as u64)?,
        })
    }

    /// Parses an edge-list text (same format as the CLI input files).
    #[wasm_bindgen(js_name = fromEdgeList)]
    pub fn from_edge_list(text: &str, undirected: bool, flip: bool) -> Result<Demo, JsError> {
        Ok(Demo {
            graph: parse_text(text, undirected, flip)?,
        })
    }

    #[wasm_bindgen(js_name = graphJson)]
    pub fn graph_json(&self) -> String {
        graph_json(&self.graph)
    }

    /// Runs one cascade; the activation order drives the page animation.
    #[wasm_bindgen(js_name = cascadeJson)]
    pub fn cascade_json(&self, seed: u32, alpha: f64) -> Result<String, JsError> {
        Ok(cascade_json(&self.graph, seed, alpha)?)
    }

    /// Runs the full index batch and the gap classification.
    #[wasm_bindgen(js_name = indicesJson)]
    pub fn indices_json(&self, alpha: f64) -> Result<String, JsError> {
        Ok(indices_json(&self.graph, alpha)?)
    }

    #[wasm_bindgen(js_name = nodeCount)]
    pub fn node_count(&self) -> u32 {
        self.graph.node_count() as u32
    }
}

fn build_ws(n: usize, k: usize, p: f64, orient: f64, seed: u64) -> spreadnet::Result<Graph> {
    let g = spreadnet::watts_strogatz(&WsParams {
        n,
        k,
        p,
        rng_seed: seed,
    })?;
    spreadnet::orient(&g, orient, seed)
}

fn parse_text(text: &str, undirected: bool, flip: bool) -> spreadnet::Result<Graph> {
    let opts = IngestOptions {
        treat_as_undirected: undirected,
        flip_orientation: flip,
        ..IngestOptions::default()
    };
    let (graph, _) = spreadnet::parse_edge_list(std::io::Cursor::new(text), &opts)?;
    Ok(graph)
}

fn graph_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.node_count(),
        kind: g.kind().as_str(),
        arc_count: g.arc_count(),
        labels: (0..g.node_count() as NodeId).map(|i| g.label(i)).collect(),
        out_degree: (0..g.node_count() as NodeId).map(|i| g.out_degree(i)).collect(),
        arcs: g.arcs().collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

fn cascade_json(g: &Graph, seed: u32, alpha: f64) -> spreadnet::Result<String> {
    let alpha = HurdleCoefficient::new(alpha)?;
    let result = cascade(g, seed, &alpha)?;
    let n = g.node_count();
    let doc = CascadeJson {
        seed,
        alpha: alpha.value(),
        reached: result.reached(),
        coverage: if n > 1 {
            result.reached() as f64 / (n - 1) as f64
        } else {
            0.0
        },
        active: result.active_nodes(),
        order: result.activation_order.clone(),
    };
    Ok(serde_json::to_string(&doc).expect("serializable"))
}

fn indices_json(g: &Graph, alpha: f64) -> spreadnet::Result<String> {
    let alpha = HurdleCoefficient::new(alpha)?;
    let t = IndexTable::compute(g, &alpha)?;
    let r = classify(&t, &ClassifyMethod::gap());
    let strong = strong_influencer_pct(&t, 0.99)?;
    let side = |p: &spreadnet::report::Partition| SideJson {
        members: p.members.clone(),
        pct: p.pct,
        breaking_point: p.breaking_point,
        diagnostic: p.diagnostic.clone(),
    };
    let doc = IndicesJson {
        alpha: alpha.value(),
        ilp: t.ilp.clone(),
        itp: t.itp.clone(),
        ilp_raw: t.ilp_raw.clone(),
        itp_raw: t.itp_raw.clone(),
        launchers: side(&r.launchers),
        targets: side(&r.targets),
        strong_pct: strong,
    };
    Ok(serde_json::to_string(&doc).expect("serializable"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "0 1\n1 2\n2 0\n";

    #[test]
    fn ws_demo_builds_and_reports() {
        let g = build_ws(60, 4, 0.3, 0.66, 9).unwrap();
        let json = graph_json(&g);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["n"], 60);
        assert_eq!(doc["kind"], "directed");
        assert_eq!(doc["arcs"].as_array().unwrap().len(), doc["arc_count"].as_u64().unwrap() as usize);
    }

    #[test]
    fn cascade_payload_is_complete() {
        let g = parse_text(TRIANGLE, false, false).unwrap();
        let json = cascade_json(&g, 0, 1.0).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["reached"], 2);
        assert_eq!(doc["active"].as_array().unwrap().len(), 3);
        assert_eq!(doc["order"].as_array().unwrap().len(), 2);
        assert!((doc["coverage"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn indices_payload_classifies() {
        let g = parse_text(TRIANGLE, true, false).unwrap();
        let json = indices_json(&g, 1.0).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["ilp"].as_array().unwrap().len(), 3);
        // complete symmetric triangle: every seed covers everything, the
        // all-equal distribution yields an empty class with a diagnostic
        assert!(doc["launchers"]["members"].as_array().unwrap().is_empty());
        assert!(doc["launchers"]["diagnostic"].is_string());
        assert!((doc["strong_pct"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn errors_surface_for_bad_parameters() {
        let g = parse_text(TRIANGLE, false, false).unwrap();
        assert!(cascade_json(&g, 0, 0.0).is_err());
        assert!(cascade_json(&g, 99, 1.0).is_err());
        assert!(build_ws(10, 3, 0.3, 1.0, 1).is_err());
        assert!(parse_text("", false, false).is_err());
    }
}
