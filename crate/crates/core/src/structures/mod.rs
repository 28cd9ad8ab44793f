//! Matchings, colorings, T-joins, spanning tree pairs, cycle packings and
//! the other combinatorial pieces the certifying pipelines are built from.

mod circuit;
mod extension;
mod matching;
mod packing;
mod tjoin;

pub use circuit::{find_deletable_arc_on_circuit, paths_to_two_matchings};
pub use extension::{cubic_extension, CubicExtension};
pub use matching::{
    berge_fulkerson_cover, enumerate_perfect_matchings, perfect_matching, proper_3_edge_coloring, BfOutcome,
};
pub use packing::{seven_cycle_packings, special_set, SevenPackings, PACKING_COUNT};
pub use tjoin::{partition_into_three_tjoins, t_join, two_edge_disjoint_spanning_trees};

use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};
use crate::orientation::OrientationError;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not {0}-edge-connected")]
    NotKEdgeConnected(usize),
    #[error("vertex {0} has degree below 3")]
    DegreeTooSmall(VertexId),
    #[error("no perfect matching exists")]
    NoPerfectMatching,
    #[error("not a cycle packing: {0}")]
    NotAPacking(String),
    #[error("not a disjoint union of paths: {0}")]
    NotPaths(String),
    #[error("not a circuit of the orientation: {0}")]
    NotACircuit(String),
    #[error("search limit reached: {0}")]
    Budget(String),
    #[error("internal check failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

/// A cycle given by its cyclic vertex sequence; `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`. A loop is a cycle of length 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    /// Tails that orient the cycle as a circuit following the vertex order.
    pub fn circuit_tails(&self) -> BTreeMap<EdgeId, VertexId> {
        self.edges
            .iter()
            .zip(&self.vertices)
            .map(|(&e, &v)| (e, v))
            .collect()
    }
}

/// Vertex-disjoint cycles of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CyclePacking {
    pub cycles: Vec<Cycle>,
}

impl CyclePacking {
    pub fn empty() -> Self {
        CyclePacking::default()
    }

    /// Splits an edge set whose every vertex has degree 0 or 2 into cycles.
    /// Cycles are listed by smallest vertex and start there, continuing along
    /// the smaller-id edge.
    pub fn from_edge_set(g: &Multigraph, edges: &BTreeSet<EdgeId>) -> Result<Self, StructureError> {
        let sub = g.edge_subgraph(edges);
        if sub.edge_count() != edges.len() {
            let missing = edges.iter().find(|e| !g.contains_edge(**e)).unwrap();
            return Err(GraphError::UnknownEdge(*missing).into());
        }
        for &v in sub.vertices() {
            let d = sub.degree(v)?;
            if d != 0 && d != 2 {
                return Err(StructureError::NotAPacking(format!("{v} has degree {d}")));
            }
        }
        let mut used = BTreeSet::new();
        let mut cycles = Vec::new();
        for &start in sub.vertices() {
            let inc = sub.incident_edges(start)?;
            let Some(first) = inc.iter().find(|e| !used.contains(&e.id)) else {
                continue;
            };
            let mut vertices = vec![start];
            let mut cyc_edges = vec![first.id];
            used.insert(first.id);
            let mut cur = first.other(start).unwrap();
            while cur != start {
                vertices.push(cur);
                let next = sub
                    .incident_edges(cur)?
                    .into_iter()
                    .find(|e| !used.contains(&e.id))
                    .expect("degree-2 vertex continues the cycle");
                used.insert(next.id);
                cyc_edges.push(next.id);
                cur = next.other(cur).unwrap();
            }
            cycles.push(Cycle {
                vertices,
                edges: cyc_edges,
            });
        }
        Ok(CyclePacking { cycles })
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.cycles.iter().flat_map(|c| c.edges.iter().copied()).collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.cycles.iter().flat_map(|c| c.vertices.iter().copied()).collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.cycles.iter().any(|c| c.vertices.contains(&v))
    }

    /// Tails orienting every cycle as a circuit.
    pub fn circuit_tails(&self) -> BTreeMap<EdgeId, VertexId> {
        self.cycles.iter().flat_map(|c| c.circuit_tails()).collect()
    }

    /// Checks vertex-disjointness and that every listed edge closes the cycle in `g`.
    pub fn validate(&self, g: &Multigraph) -> Result<(), StructureError> {
        let mut seen = BTreeSet::new();
        for c in &self.cycles {
            if c.vertices.is_empty() || c.vertices.len() != c.edges.len() {
                return Err(StructureError::NotAPacking("malformed cycle".into()));
            }
            for &v in &c.vertices {
                if !seen.insert(v) {
                    return Err(StructureError::NotAPacking(format!("{v} is on two cycles")));
                }
            }
            let len = c.vertices.len();
            for (i, &e) in c.edges.iter().enumerate() {
                let edge = g.edge(e).ok_or(GraphError::UnknownEdge(e))?;
                let (a, b) = (c.vertices[i], c.vertices[(i + 1) % len]);
                if !((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)) {
                    return Err(StructureError::NotAPacking(format!("{e} does not join {a} and {b}")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;

    #[test]
    fn packing_from_petersen_cycles() {
        let p = named_graph("petersen").unwrap();
        let spokes: BTreeSet<EdgeId> = (5..10).map(EdgeId).collect();
        let rest: BTreeSet<EdgeId> = p.edge_ids().filter(|e| !spokes.contains(e)).collect();
        let pack = CyclePacking::from_edge_set(&p, &rest).unwrap();
        assert_eq!(pack.cycles.len(), 2);
        assert_eq!(pack.cycles[0].vertices, (0..5).map(VertexId).collect::<Vec<_>>());
        pack.validate(&p).unwrap();
        assert_eq!(pack.edge_set(), rest);
        assert!(CyclePacking::from_edge_set(&p, &spokes.iter().copied().chain([EdgeId(0)]).collect()).is_err());
    }

    #[test]
    fn two_cycles_from_parallel_edges() {
        let g = named_graph("theta").unwrap();
        let pack = CyclePacking::from_edge_set(&g, &BTreeSet::from([EdgeId(0), EdgeId(2)])).unwrap();
        assert_eq!(pack.cycles.len(), 1);
        assert_eq!(pack.cycles[0].edges, vec![EdgeId(0), EdgeId(2)]);
        pack.validate(&g).unwrap();
    }
}
