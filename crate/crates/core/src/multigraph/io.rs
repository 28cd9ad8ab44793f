//! Text formats: edge lists, graph6 and the canonical JSON form.

use super::{Edge, EdgeId, GraphError, Multigraph, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("sparse6 input is not supported; graph6 encodes simple graphs only")]
    Sparse6,
    #[error("graph6 cannot encode loops or parallel edges (edge {0})")]
    NotSimple(EdgeId),
    #[error("graph has {vertices} vertices and {edges} edges; the cap is {max_vertices} / {max_edges}")]
    TooLarge {
        vertices: usize,
        edges: usize,
        max_vertices: usize,
        max_edges: usize,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Size cap applied to externally supplied graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCap {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for GraphCap {
    fn default() -> Self {
        GraphCap {
            max_vertices: 64,
            max_edges: 256,
        }
    }
}

impl GraphCap {
    pub fn check(&self, g: &Multigraph) -> Result<(), FormatError> {
        if g.vertex_count() > self.max_vertices || g.edge_count() > self.max_edges {
            return Err(FormatError::TooLarge {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            });
        }
        Ok(())
    }
}

/// Parses "u v" lines. `#` starts a comment; a line with a single token
/// declares an isolated vertex. Edge ids follow line order from 0.
pub fn parse_edge_list(text: &str, cap: GraphCap) -> Result<Multigraph, FormatError> {
    let mut vertices = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse = |tok: &str| {
            tok.parse::<u32>().map_err(|_| FormatError::EdgeList {
                line: lineno + 1,
                msg: format!("`{tok}` is not a vertex number"),
            })
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [a] => {
                vertices.insert(VertexId(parse(a)?));
            }
            [a, b] => {
                let (u, v) = (parse(a)?, parse(b)?);
                vertices.insert(VertexId(u));
                vertices.insert(VertexId(v));
                edges.push(Edge::new(edges.len() as u32, u, v));
            }
            _ => {
                return Err(FormatError::EdgeList {
                    line: lineno + 1,
                    msg: format!("expected `u v`, found {} tokens", toks.len()),
                })
            }
        }
    }
    let g = Multigraph::new(vertices, edges)?;
    cap.check(&g)?;
    Ok(g)
}

pub fn to_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    for &v in g.vertices() {
        if g.incident_edges(v).map(|x| x.is_empty()).unwrap_or(false) {
            out.push_str(&format!("{}\n", v.0));
        }
    }
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u.0, e.v.0));
    }
    out
}

/// Parses one graph6 line. Vertices are `0..n`; edges are numbered in the
/// order of the upper-triangle bit stream (column-major, as in the format).
pub fn parse_graph6(text: &str, cap: GraphCap) -> Result<Multigraph, FormatError> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    if line.starts_with(':') || line.starts_with(">>sparse6<<") {
        return Err(FormatError::Sparse6);
    }
    let bytes: Vec<u8> = line.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6("byte outside the printable range 63..=126".into()));
    }
    let (n, body) = match bytes.as_slice() {
        [] => return Err(FormatError::Graph6("empty input".into())),
        [126, 126, ..] => return Err(FormatError::Graph6("graphs above 258047 vertices are not supported".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(FormatError::Graph6("truncated size header".into())),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    if body.len() != bits_needed.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits_needed.div_ceil(6),
            body.len()
        )));
    }
    if n > cap.max_vertices {
        return Err(FormatError::TooLarge {
            vertices: n,
            edges: 0,
            max_vertices: cap.max_vertices,
            max_edges: cap.max_edges,
        });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push(Edge::new(edges.len() as u32, i as u32, j as u32));
            }
            k += 1;
        }
    }
    let g = Multigraph::new((0..n as u32).map(VertexId), edges)?;
    cap.check(&g)?;
    Ok(g)
}

/// Encodes a simple graph; vertices are renumbered `0..n` in sorted order.
pub fn to_graph6(g: &Multigraph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (k, e) in g.edges().iter().enumerate() {
        let (a, b) = g.endpoint_indices(k);
        if a == b || adj[a][b] {
            return Err(FormatError::NotSimple(e.id));
        }
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    } else {
        return Err(FormatError::Graph6("too many vertices".into()));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in adj.iter().take(j) {
            acc = (acc << 1) | row[j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Canonical JSON shape of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

impl From<&Multigraph> for GraphJson {
    fn from(g: &Multigraph) -> Self {
        GraphJson {
            vertices: g.vertices().to_vec(),
            edges: g.edges().to_vec(),
        }
    }
}

impl TryFrom<GraphJson> for Multigraph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        Multigraph::new(j.vertices, j.edges)
    }
}

pub fn to_json(g: &Multigraph) -> serde_json::Value {
    serde_json::to_value(GraphJson::from(g)).expect("graph serializes")
}

pub fn from_json_value(value: serde_json::Value, cap: GraphCap) -> Result<Multigraph, FormatError> {
    let j: GraphJson = serde_json::from_value(value)?;
    let g = Multigraph::try_from(j)?;
    cap.check(&g)?;
    Ok(g)
}

pub fn parse_json(text: &str, cap: GraphCap) -> Result<Multigraph, FormatError> {
    from_json_value(serde_json::from_str(text)?, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;

    #[test]
    fn edge_list_round_trip() {
        let text = "# triangle plus isolated vertex\n0 1\n1 2\n2 0 # closing edge\n\n7\n";
        let g = parse_edge_list(text, GraphCap::default()).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let again = parse_edge_list(&to_edge_list(&g), GraphCap::default()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("0 1 2\n", GraphCap::default()),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 x\n", GraphCap::default()),
            Err(FormatError::EdgeList { .. })
        ));
        let cap = GraphCap { max_vertices: 2, max_edges: 10 };
        assert!(matches!(
            parse_edge_list("0 1\n1 2\n", cap),
            Err(FormatError::TooLarge { .. })
        ));
    }

    #[test]
    fn graph6_known_strings() {
        // Petersen graph as printed by nauty's geng/showg.
        let p = parse_graph6("IheA@GUAo", GraphCap::default()).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!(p.is_cubic());
        assert_eq!(p.edge_connectivity().unwrap(), 3);
        let k4 = parse_graph6("C~", GraphCap::default()).unwrap();
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn graph6_round_trip_on_simple_corpus() {
        for name in ["petersen", "k4", "k5", "k33", "cube", "heawood", "dodecahedron"] {
            let g = named_graph(name).unwrap();
            let s = to_graph6(&g).unwrap();
            let h = parse_graph6(&s, GraphCap::default()).unwrap();
            assert_eq!(h.vertex_count(), g.vertex_count(), "{name}");
            let pairs = |x: &Multigraph| {
                let mut v: Vec<(u32, u32)> = x
                    .edges()
                    .iter()
                    .map(|e| (e.u.0.min(e.v.0), e.u.0.max(e.v.0)))
                    .collect();
                v.sort();
                v
            };
            assert_eq!(pairs(&g), pairs(&h), "{name}");
        }
    }

    #[test]
    fn graph6_rejects_multigraphs_and_sparse6() {
        let theta = named_graph("theta").unwrap();
        assert!(matches!(to_graph6(&theta), Err(FormatError::NotSimple(_))));
        assert!(matches!(
            parse_graph6(":Fa@x^", GraphCap::default()),
            Err(FormatError::Sparse6)
        ));
        assert!(matches!(
            parse_graph6("C", GraphCap::default()),
            Err(FormatError::Graph6(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = named_graph("fat_triangle").unwrap();
        let v = to_json(&g);
        assert_eq!(v["edges"][0], serde_json::json!({"id": 0, "u": 0, "v": 1}));
        let h = from_json_value(v, GraphCap::default()).unwrap();
        assert_eq!(g, h);
        assert!(parse_json("{\"vertices\":[0],\"edges\":[{\"id\":0,\"u\":0,\"v\":3}]}", GraphCap::default()).is_err());
    }
}
