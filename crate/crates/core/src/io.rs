//! Graph file formats.
//!
//! JSON: `{"vertices": [labels], "edges": [{"u": 0, "v": 1, "w": [re, im]}]}`.
//!
//! Line format: one edge per line as `u v re im` (or `u v re`), vertices
//! numbered `0..=max` and inferred from the edges, `#` starts a comment.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<EdgeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeRecord {
    u: usize,
    v: usize,
    w: [f64; 2],
}

pub fn graph_from_json(text: &str) -> Result<WeightedGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    WeightedGraph::new(
        file.vertices,
        file.edges
            .into_iter()
            .map(|e| (e.u, e.v, Complex64::new(e.w[0], e.w[1]))),
    )
}

pub fn graph_to_json(g: &WeightedGraph) -> String {
    graph_to_value(g).to_string()
}

/// The JSON form as a value, for embedding in larger documents.
pub fn graph_to_value(g: &WeightedGraph) -> serde_json::Value {
    let file = GraphFile {
        vertices: g.labels().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                u: e.u,
                v: e.v,
                w: [e.w.re, e.w.im],
            })
            .collect(),
    };
    serde_json::to_value(&file).expect("graph serializes")
}

pub fn graph_from_lines(text: &str) -> Result<WeightedGraph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(Error::Parse(format!(
                "line {}: expected `u v re [im]`, found {} fields",
                lineno + 1,
                fields.len()
            )));
        }
        let bad = |what: &str| Error::Parse(format!("line {}: bad {what}", lineno + 1));
        let u: usize = fields[0].parse().map_err(|_| bad("endpoint"))?;
        let v: usize = fields[1].parse().map_err(|_| bad("endpoint"))?;
        let re: f64 = fields[2].parse().map_err(|_| bad("real part"))?;
        let im: f64 = match fields.get(3) {
            Some(s) => s.parse().map_err(|_| bad("imaginary part"))?,
            None => 0.0,
        };
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v, Complex64::new(re, im)));
    }
    WeightedGraph::from_edges(n, edges)
}

/// Parses either format, choosing JSON when the text starts with `{`.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        graph_from_lines(text)
    }
}
