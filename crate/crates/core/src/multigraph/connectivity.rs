//! Edge-connectivity queries backed by unit-capacity max-flow.

use super::{FlowNetwork, GraphError, Multigraph, VertexId};
use std::collections::BTreeSet;

impl Multigraph {
    /// Undirected flow network on vertex indices, one unit per non-loop edge.
    pub(crate) fn flow_network(&self) -> FlowNetwork {
        self.flow_network_mapped(|i| i, self.vertex_count())
    }

    /// Same as [`Multigraph::flow_network`] with vertex indices merged by `node_of`.
    pub(crate) fn flow_network_mapped(
        &self,
        node_of: impl Fn(usize) -> usize,
        nodes: usize,
    ) -> FlowNetwork {
        let mut net = FlowNetwork::new(nodes);
        for k in 0..self.edge_count() {
            let (a, b) = self.endpoint_indices(k);
            net.add_undirected(node_of(a), node_of(b));
        }
        net
    }

    /// `λ(u, v)`: the maximum number of edge-disjoint `u`–`v` paths.
    pub fn local_edge_connectivity(&self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        self.local_edge_connectivity_capped(u, v, usize::MAX)
    }

    /// `min(λ(u, v), cap)`, stopping the flow computation at `cap`.
    pub fn local_edge_connectivity_capped(
        &self,
        u: VertexId,
        v: VertexId,
        cap: usize,
    ) -> Result<usize, GraphError> {
        let iu = self.vertex_index(u).ok_or(GraphError::UnknownVertex(u))?;
        let iv = self.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        if iu == iv {
            return Err(GraphError::SameEndpoints(u));
        }
        Ok(self.flow_network().max_flow(iu, iv, cap).value)
    }

    /// Global edge-connectivity: the minimum of `λ(s, v)` over all `v` for a fixed `s`.
    pub fn edge_connectivity(&self) -> Result<usize, GraphError> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(GraphError::TooFewVertices(n));
        }
        if !self.is_connected() {
            return Ok(0);
        }
        let net = self.flow_network();
        let mut best = usize::MAX;
        for t in 1..n {
            best = best.min(net.max_flow(0, t, best).value);
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    /// `d(X) >= k` for every nonempty proper `X`; vacuous on fewer than two vertices.
    pub fn is_k_edge_connected(&self, k: usize) -> bool {
        if self.vertex_count() < 2 {
            return true;
        }
        if k == 0 {
            return true;
        }
        if !self.is_connected() {
            return false;
        }
        let net = self.flow_network();
        (1..self.vertex_count()).all(|t| net.max_flow(0, t, k).value >= k)
    }

    /// 3-edge-connected, and every 3-edge-cut has a single vertex on one side.
    pub fn is_essentially_4ec(&self) -> bool {
        self.is_k_edge_connected(3) && self.find_nontrivial_3_cut().is_none()
    }

    /// A side `X` with `d(X) = 3` and `|X|, |V - X| >= 2`, if one exists.
    ///
    /// Both sides of such a cut contain a non-loop edge, so the cut separates
    /// some pair of vertex-disjoint edges `e`, `f`. For each such pair the
    /// endpoints of `e` and of `f` are merged and one max-flow decides whether
    /// they are separated by three edges. Assumes the graph is 3-edge-connected.
    pub fn find_nontrivial_3_cut(&self) -> Option<BTreeSet<VertexId>> {
        let n = self.vertex_count();
        if n < 4 {
            return None;
        }
        let mut pairs: Vec<(usize, usize)> = (0..self.edge_count())
            .map(|k| self.endpoint_indices(k))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort();
        pairs.dedup();
        for (x, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[x + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                // Node layout: merged {a, b} -> a, merged {c, d} -> c.
                let node_of = |i: usize| {
                    if i == b {
                        a
                    } else if i == d {
                        c
                    } else {
                        i
                    }
                };
                let net = self.flow_network_mapped(node_of, n);
                let r = net.max_flow(a, c, 4);
                if r.value <= 3 {
                    if r.value < 3 {
                        // not 3-edge-connected; caller broke the precondition
                        return None;
                    }
                    let side: BTreeSet<VertexId> = (0..n)
                        .filter(|&i| r.source_side[node_of(i)])
                        .map(|i| self.vertices()[i])
                        .collect();
                    return Some(side);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use crate::multigraph::named_graph;
    use crate::multigraph::{Multigraph, VertexId};
    use std::collections::BTreeSet;

    #[test]
    fn local_connectivity_examples() {
        let p = named_graph("petersen").unwrap();
        for &u in p.vertices() {
            for &v in p.vertices() {
                if u < v {
                    assert_eq!(p.local_edge_connectivity(u, v).unwrap(), 3);
                }
            }
        }
        let fat = Multigraph::from_pairs(2, &[(0, 1); 5]).unwrap();
        assert_eq!(fat.local_edge_connectivity(VertexId(0), VertexId(1)).unwrap(), 5);
        let path = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.local_edge_connectivity(VertexId(0), VertexId(3)).unwrap(), 1);
        assert!(path.local_edge_connectivity(VertexId(1), VertexId(1)).is_err());
    }

    #[test]
    fn global_connectivity_examples() {
        assert_eq!(named_graph("petersen").unwrap().edge_connectivity().unwrap(), 3);
        assert_eq!(named_graph("k5").unwrap().edge_connectivity().unwrap(), 4);
        let split = Multigraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.edge_connectivity().unwrap(), 0);
        let single = Multigraph::from_pairs(1, &[]).unwrap();
        assert!(single.edge_connectivity().is_err());
    }

    #[test]
    fn essential_four_edge_connectivity() {
        assert!(named_graph("petersen").unwrap().is_essentially_4ec());
        assert!(named_graph("k4").unwrap().is_essentially_4ec());
        assert!(named_graph("wheel4").unwrap().is_essentially_4ec());
        let prism = named_graph("prism3").unwrap();
        assert!(!prism.is_essentially_4ec());
        let side = prism.find_nontrivial_3_cut().unwrap();
        assert_eq!(side.len(), 3);
        assert_eq!(prism.edge_cut(&side).unwrap().len(), 3);
        assert!(!named_graph("truncated_k4").unwrap().is_essentially_4ec());
        // not even 3-edge-connected
        let c4 = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_essentially_4ec());
    }

    #[test]
    fn nontrivial_cut_sides_are_nontrivial() {
        let g = named_graph("truncated_k4").unwrap();
        let side = g.find_nontrivial_3_cut().unwrap();
        assert!(side.len() >= 2 && g.vertex_count() - side.len() >= 2);
        assert_eq!(g.edge_cut(&side).unwrap().len(), 3);
        let _: BTreeSet<VertexId> = side;
    }
}
