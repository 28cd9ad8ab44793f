use super::StructureError;
use crate::multigraph::{Edge, EdgeId, Multigraph, VertexId};
use crate::orientation::{Orientation, OrientationError};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A cubic graph `H` with `H / ∪C_v = G`: every vertex `v` of degree `d >= 4`
/// is blown up into a cycle `C_v` of length `d`, one edge end per cycle vertex.
#[derive(Debug, Clone)]
pub struct CubicExtension {
    pub host: Multigraph,
    /// Host vertices standing for each original vertex, in cycle order.
    pub classes: BTreeMap<VertexId, Vec<VertexId>>,
    /// Edges of `C_v` for every blown-up vertex; `cycles[v][i]` joins
    /// `classes[v][i]` and `classes[v][i + 1]`.
    pub cycles: BTreeMap<VertexId, Vec<EdgeId>>,
    /// Host vertex -> original vertex.
    pub original_of: BTreeMap<VertexId, VertexId>,
}

/// Builds the cubic extension. Original edges keep their ids; the ends at a
/// blown-up vertex are attached around its cycle in (edge id, end) order, and
/// cycle edges get fresh ids above every original one.
pub fn cubic_extension(g: &Multigraph) -> Result<CubicExtension, StructureError> {
    for &v in g.vertices() {
        if g.degree(v)? < 3 {
            return Err(StructureError::DegreeTooSmall(v));
        }
    }
    let mut next_vertex = 0u32;
    let mut classes = BTreeMap::new();
    let mut original_of = BTreeMap::new();
    // slot[(v, edge, end)] -> host vertex
    let mut slot: BTreeMap<(VertexId, EdgeId, u8), VertexId> = BTreeMap::new();
    for &v in g.vertices() {
        let mut ends: Vec<(EdgeId, u8)> = Vec::new();
        for e in g.incident_edges(v)? {
            if e.u == v {
                ends.push((e.id, 0));
            }
            if e.v == v {
                ends.push((e.id, 1));
            }
        }
        ends.sort();
        let host_vertices: Vec<VertexId> = if ends.len() == 3 {
            vec![VertexId(next_vertex)]
        } else {
            (0..ends.len() as u32).map(|i| VertexId(next_vertex + i)).collect()
        };
        next_vertex += host_vertices.len() as u32;
        for (i, &(e, end)) in ends.iter().enumerate() {
            let h = host_vertices[if host_vertices.len() == 1 { 0 } else { i }];
            slot.insert((v, e, end), h);
        }
        for &h in &host_vertices {
            original_of.insert(h, v);
        }
        classes.insert(v, host_vertices);
    }
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| Edge {
            id: e.id,
            u: slot[&(e.u, e.id, 0)],
            v: slot[&(e.v, e.id, 1)],
        })
        .collect();
    let mut next_edge = g.next_edge_id().0;
    let mut cycles = BTreeMap::new();
    for (&v, hs) in &classes {
        if hs.len() == 1 {
            continue;
        }
        let mut ids = Vec::with_capacity(hs.len());
        for i in 0..hs.len() {
            let id = EdgeId(next_edge);
            next_edge += 1;
            edges.push(Edge {
                id,
                u: hs[i],
                v: hs[(i + 1) % hs.len()],
            });
            ids.push(id);
        }
        cycles.insert(v, ids);
    }
    let host = Multigraph::new((0..next_vertex).map(VertexId), edges)?;
    debug_assert!(host.is_cubic());
    Ok(CubicExtension {
        host,
        classes,
        cycles,
        original_of,
    })
}

impl CubicExtension {
    pub fn is_cycle_edge(&self, e: EdgeId) -> bool {
        self.cycles.values().any(|c| c.contains(&e))
    }

    /// `D / ∪C_v`: the orientation of `g` induced by a host orientation.
    pub fn contract_back(&self, g: Arc<Multigraph>, d: &Orientation) -> Result<Orientation, OrientationError> {
        let mut tails = BTreeMap::new();
        for e in g.edges() {
            if e.is_loop() {
                continue;
            }
            let t = d.tail(e.id).ok_or(crate::multigraph::GraphError::UnknownEdge(e.id))?;
            tails.insert(e.id, self.original_of[&t]);
        }
        Orientation::from_tails(g, &tails)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;
    use std::collections::BTreeSet;

    #[test]
    fn k5_extension() {
        let k5 = named_graph("k5").unwrap();
        let ext = cubic_extension(&k5).unwrap();
        assert!(ext.host.is_cubic());
        assert_eq!(ext.host.vertex_count(), 20);
        assert_eq!(ext.host.edge_count(), 30);
        assert!(ext.host.is_k_edge_connected(3));
        assert!(ext.host.is_essentially_4ec());
        let cyc: BTreeSet<EdgeId> = ext.cycles.values().flatten().copied().collect();
        let back = ext.host.contract(&cyc).unwrap();
        assert_eq!(back.quotient.vertex_count(), 5);
        assert_eq!(back.quotient.edge_id_set(), k5.edge_id_set());
        for e in k5.edges() {
            let q = back.quotient.edge(e.id).unwrap();
            let (a, b) = (ext.original_of[&q.u], ext.original_of[&q.v]);
            assert!((a, b) == (e.u, e.v) || (a, b) == (e.v, e.u));
        }
    }

    #[test]
    fn cubic_graph_is_unchanged_up_to_names() {
        let p = named_graph("petersen").unwrap();
        let ext = cubic_extension(&p).unwrap();
        assert!(ext.cycles.is_empty());
        assert_eq!(ext.host, p);
    }

    #[test]
    fn loops_and_low_degree() {
        let g = Multigraph::from_pairs(2, &[(0, 0), (0, 1), (0, 1), (0, 1), (1, 1)]).unwrap();
        let ext = cubic_extension(&g).unwrap();
        assert!(ext.host.is_cubic());
        // the loop becomes a chord of the 5-cycle at vertex 0
        let e0 = ext.host.edge(EdgeId(0)).unwrap();
        assert!(!e0.is_loop());
        let c4 = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(cubic_extension(&c4).unwrap_err(), StructureError::DegreeTooSmall(VertexId(0)));
    }

    #[test]
    fn orientation_contracts_back() {
        let w = Arc::new(named_graph("wheel4").unwrap());
        let ext = cubic_extension(&w).unwrap();
        let d = crate::orientation::strong_orientation(Arc::new(ext.host.clone())).unwrap();
        let back = ext.contract_back(w.clone(), &d).unwrap();
        assert!(back.is_strongly_connected());
    }
}
