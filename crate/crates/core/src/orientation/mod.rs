//! Orientations of a multigraph and the connectivity questions asked of them.

pub(crate) mod balanced;
mod euler;

pub use balanced::{is_well_balanced, well_balanced_orientation, BalanceLimits};
pub use euler::{eulerian_orientation, eulerian_orientation_constrained};

use crate::multigraph::{ContractionResult, EdgeId, FlowNetwork, GraphError, Multigraph, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use thiserror::Error;

/// Largest vertex count accepted by [`Orientation::cut_characterization_check`].
pub const CUT_ENUMERATION_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("orientation is not strongly connected")]
    NotStronglyConnected,
    #[error("no direction given for edge {0}")]
    MissingDirection(EdgeId),
    #[error("edge {edge} has no endpoint {vertex}")]
    BadTail { edge: EdgeId, vertex: VertexId },
    #[error("direction bits reference {given} edges, graph has {expected}")]
    BitCount { given: usize, expected: usize },
    #[error("{vertices} vertices exceed the subset-enumeration cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("vertex {0} has odd degree")]
    NotEulerian(VertexId),
    #[error("bad constraint at {vertex}: {reason}")]
    BadConstraint { vertex: VertexId, reason: String },
    #[error("graph is not connected")]
    NotConnected,
    #[error("no well-balanced orientation found within the search limits")]
    SearchExhausted,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A direction for every non-loop edge of a reference graph.
///
/// `reversed[k]` is false when the edge at index `k` runs from its `u`
/// endpoint to its `v` endpoint. Loops are stored with `false` and ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: Arc<Multigraph>,
    reversed: Vec<bool>,
}

/// `δ⁻(X)` and `δ⁺(X)` of an orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcCut {
    pub x: BTreeSet<VertexId>,
    pub in_arcs: BTreeSet<EdgeId>,
    pub out_arcs: BTreeSet<EdgeId>,
}

/// JSON shape of an orientation without its graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailsJson {
    pub tails: BTreeMap<EdgeId, VertexId>,
}

impl Orientation {
    pub fn new(graph: Arc<Multigraph>, reversed: Vec<bool>) -> Result<Self, OrientationError> {
        if reversed.len() != graph.edge_count() {
            return Err(OrientationError::BitCount {
                given: reversed.len(),
                expected: graph.edge_count(),
            });
        }
        let mut reversed = reversed;
        for (k, bit) in reversed.iter_mut().enumerate() {
            if graph.edge_at(k).is_loop() {
                *bit = false;
            }
        }
        Ok(Orientation { graph, reversed })
    }

    /// Every edge from `u` to `v`.
    pub fn forward(graph: Arc<Multigraph>) -> Self {
        let m = graph.edge_count();
        Orientation {
            graph,
            reversed: vec![false; m],
        }
    }

    /// Orientation from an explicit tail per edge; loops may be omitted.
    pub fn from_tails(
        graph: Arc<Multigraph>,
        tails: &BTreeMap<EdgeId, VertexId>,
    ) -> Result<Self, OrientationError> {
        for e in tails.keys() {
            if !graph.contains_edge(*e) {
                return Err(GraphError::UnknownEdge(*e).into());
            }
        }
        let mut reversed = Vec::with_capacity(graph.edge_count());
        for e in graph.edges() {
            if e.is_loop() {
                reversed.push(false);
                continue;
            }
            match tails.get(&e.id) {
                None => return Err(OrientationError::MissingDirection(e.id)),
                Some(&t) if t == e.u => reversed.push(false),
                Some(&t) if t == e.v => reversed.push(true),
                Some(&t) => return Err(OrientationError::BadTail { edge: e.id, vertex: t }),
            }
        }
        Ok(Orientation { graph, reversed })
    }

    /// Orientation choosing each tail with `tail_of`, which must return an endpoint.
    pub fn from_fn(
        graph: Arc<Multigraph>,
        tail_of: impl Fn(&crate::multigraph::Edge) -> VertexId,
    ) -> Result<Self, OrientationError> {
        let tails = graph
            .edges()
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| (e.id, tail_of(e)))
            .collect();
        Orientation::from_tails(graph, &tails)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Multigraph> {
        &self.graph
    }

    pub fn reversed_bits(&self) -> &[bool] {
        &self.reversed
    }

    /// `(tail, head)` vertex indices of the edge at index `k`.
    pub(crate) fn arc_at(&self, k: usize) -> (usize, usize) {
        let (a, b) = self.graph.endpoint_indices(k);
        if self.reversed[k] {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// `(tail, head)` of edge `e`; both equal the vertex for a loop.
    pub fn arc(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        let k = self.graph.edge_index(e)?;
        let (t, h) = self.arc_at(k);
        Some((self.graph.vertices()[t], self.graph.vertices()[h]))
    }

    pub fn tail(&self, e: EdgeId) -> Option<VertexId> {
        self.arc(e).map(|(t, _)| t)
    }

    pub fn head(&self, e: EdgeId) -> Option<VertexId> {
        self.arc(e).map(|(_, h)| h)
    }

    /// Tails of all non-loop edges.
    pub fn tails(&self) -> BTreeMap<EdgeId, VertexId> {
        (0..self.graph.edge_count())
            .filter(|&k| !self.graph.edge_at(k).is_loop())
            .map(|k| (self.graph.edge_at(k).id, self.graph.vertices()[self.arc_at(k).0]))
            .collect()
    }

    pub fn to_tails_json(&self) -> TailsJson {
        TailsJson { tails: self.tails() }
    }

    pub fn in_degree(&self, v: VertexId) -> Result<usize, GraphError> {
        let i = self.graph.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.graph.incidence_at(i).iter().filter(|&&k| !self.graph.edge_at(k).is_loop() && self.arc_at(k).1 == i).count())
    }

    pub fn out_degree(&self, v: VertexId) -> Result<usize, GraphError> {
        let i = self.graph.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.graph.incidence_at(i).iter().filter(|&&k| !self.graph.edge_at(k).is_loop() && self.arc_at(k).0 == i).count())
    }

    /// Vertex indices reachable from `start` (or reaching it when `backward`),
    /// ignoring the edge at index `skip`.
    pub(crate) fn reach(&self, start: usize, backward: bool, skip: Option<usize>) -> Vec<bool> {
        let n = self.graph.vertex_count();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &k in self.graph.incidence_at(x) {
                if Some(k) == skip {
                    continue;
                }
                let (t, h) = self.arc_at(k);
                let y = match (backward, t == x, h == x) {
                    (false, true, _) => h,
                    (true, _, true) => t,
                    _ => continue,
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    fn strongly_connected_without(&self, skip: Option<usize>) -> bool {
        if self.graph.vertex_count() <= 1 {
            return true;
        }
        self.reach(0, false, skip).iter().all(|&b| b) && self.reach(0, true, skip).iter().all(|&b| b)
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_without(None)
    }

    /// Whether the edge at index `k` is a deletable arc of a strongly connected orientation.
    pub(crate) fn deletable_at(&self, k: usize) -> bool {
        let (t, h) = self.arc_at(k);
        t == h || self.reach(t, false, Some(k))[h]
    }

    /// All arcs whose deletion leaves the orientation strongly connected.
    pub fn deletable_arcs(&self) -> Result<BTreeSet<EdgeId>, OrientationError> {
        if !self.is_strongly_connected() {
            return Err(OrientationError::NotStronglyConnected);
        }
        Ok((0..self.graph.edge_count())
            .filter(|&k| self.deletable_at(k))
            .map(|k| self.graph.edge_at(k).id)
            .collect())
    }

    /// `D - f` strongly connected for every `f` in `f`. Requires `D` itself to
    /// be strongly connected, so the empty set is deletable exactly when `D` is.
    pub fn is_deletable_set(&self, f: &BTreeSet<EdgeId>) -> bool {
        if !self.is_strongly_connected() {
            return false;
        }
        f.iter().all(|&e| match self.graph.edge_index(e) {
            Some(k) => self.deletable_at(k),
            None => false,
        })
    }

    /// Checks deletability of `f` cut by cut: every `δ⁻(X)` must contain an
    /// arc outside `f` or at least two arcs.
    pub fn cut_characterization_check(&self, f: &BTreeSet<EdgeId>) -> Result<bool, OrientationError> {
        let n = self.graph.vertex_count();
        if n > CUT_ENUMERATION_CAP {
            return Err(OrientationError::TooLarge {
                vertices: n,
                cap: CUT_ENUMERATION_CAP,
            });
        }
        if f.iter().any(|e| !self.graph.contains_edge(*e)) {
            return Ok(false);
        }
        let arcs: Vec<(u32, u32, bool)> = (0..self.graph.edge_count())
            .filter(|&k| !self.graph.edge_at(k).is_loop())
            .map(|k| {
                let (t, h) = self.arc_at(k);
                (1u32 << t, 1u32 << h, f.contains(&self.graph.edge_at(k).id))
            })
            .collect();
        let full = if n == 0 { 0 } else { (1u64 << n) - 1 } as u32;
        for x in 1..full {
            let mut count = 0;
            let mut outside = false;
            for &(t, h, in_f) in &arcs {
                if h & x != 0 && t & x == 0 {
                    count += 1;
                    outside |= !in_f;
                }
            }
            if !(outside || count >= 2) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn arc_cut(&self, x: &BTreeSet<VertexId>) -> Result<ArcCut, GraphError> {
        let cut = self.graph.edge_cut(x)?;
        let (mut in_arcs, mut out_arcs) = (BTreeSet::new(), BTreeSet::new());
        for e in cut {
            let (t, _) = self.arc(e).expect("cut edge exists");
            if x.contains(&t) {
                out_arcs.insert(e);
            } else {
                in_arcs.insert(e);
            }
        }
        Ok(ArcCut {
            x: x.clone(),
            in_arcs,
            out_arcs,
        })
    }

    pub(crate) fn flow_network(&self) -> FlowNetwork {
        let mut net = FlowNetwork::new(self.graph.vertex_count());
        for k in 0..self.graph.edge_count() {
            let (t, h) = self.arc_at(k);
            net.add_directed(t, h);
        }
        net
    }

    /// Maximum number of arc-disjoint directed paths from `u` to `v`.
    pub fn directed_local_connectivity(&self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        let iu = self.graph.vertex_index(u).ok_or(GraphError::UnknownVertex(u))?;
        let iv = self.graph.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?;
        if iu == iv {
            return Err(GraphError::SameEndpoints(u));
        }
        Ok(self.flow_network().max_flow(iu, iv, usize::MAX).value)
    }

    /// `|δ⁺(X)| >= k` for every nonempty proper `X`.
    pub fn is_k_arc_connected(&self, k: usize) -> bool {
        let n = self.graph.vertex_count();
        if n <= 1 || k == 0 {
            return true;
        }
        let net = self.flow_network();
        (1..n).all(|v| net.max_flow(0, v, k).value >= k && net.max_flow(v, 0, k).value >= k)
    }

    /// Every arc turned around.
    pub fn reverse(&self) -> Orientation {
        let reversed = (0..self.graph.edge_count())
            .map(|k| !self.graph.edge_at(k).is_loop() && !self.reversed[k])
            .collect();
        Orientation {
            graph: self.graph.clone(),
            reversed,
        }
    }

    /// The arcs of `edges` turned around; other arcs unchanged.
    pub fn reverse_edges(&self, edges: &BTreeSet<EdgeId>) -> Orientation {
        let mut out = self.clone();
        for k in 0..self.graph.edge_count() {
            let e = self.graph.edge_at(k);
            if edges.contains(&e.id) && !e.is_loop() {
                out.reversed[k] = !out.reversed[k];
            }
        }
        out
    }

    /// `D/F`: the orientation inherited by the quotient `G/F`.
    pub fn contract(&self, f: &BTreeSet<EdgeId>) -> Result<(Orientation, ContractionResult), OrientationError> {
        let res = self.graph.contract(f)?;
        let q = Arc::new(res.quotient.clone());
        let d = self.transfer(q, |v| res.vertex_map[&v])?;
        Ok((d, res))
    }

    /// Copies directions onto `target`, whose edges must be a subset of ours
    /// with endpoints renamed by `map`.
    pub fn transfer(
        &self,
        target: Arc<Multigraph>,
        map: impl Fn(VertexId) -> VertexId,
    ) -> Result<Orientation, OrientationError> {
        let mut tails = BTreeMap::new();
        for e in target.edges() {
            if e.is_loop() {
                continue;
            }
            let t = self.tail(e.id).ok_or(GraphError::UnknownEdge(e.id))?;
            tails.insert(e.id, map(t));
        }
        Orientation::from_tails(target, &tails)
    }

    /// Orientation of the subgraph `sub` (same vertex names) with inherited directions.
    pub fn restrict(&self, sub: Arc<Multigraph>) -> Result<Orientation, OrientationError> {
        self.transfer(sub, |v| v)
    }
}

/// Directs every edge of a 2-edge-connected graph so the result is strongly
/// connected: DFS tree edges point away from the root, back edges toward it.
pub fn strong_orientation(g: Arc<Multigraph>) -> Result<Orientation, OrientationError> {
    if !g.bridges().is_empty() || !g.is_connected() {
        return Err(OrientationError::NotStronglyConnected);
    }
    let n = g.vertex_count();
    let mut reversed = vec![false; g.edge_count()];
    let mut used = vec![false; g.edge_count()];
    let mut seen = vec![false; n];
    if n > 0 {
        seen[0] = true;
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        while let Some(&mut (x, ref mut pos)) = stack.last_mut() {
            if let Some(&k) = g.incidence_at(x).get(*pos) {
                *pos += 1;
                if used[k] {
                    continue;
                }
                used[k] = true;
                let (a, b) = g.endpoint_indices(k);
                let y = if a == x { b } else { a };
                // direct x -> y
                reversed[k] = a != x;
                if !seen[y] {
                    seen[y] = true;
                    stack.push((y, 0));
                }
            } else {
                stack.pop();
            }
        }
    }
    let d = Orientation::new(g, reversed)?;
    debug_assert!(d.is_strongly_connected());
    Ok(d)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;

    fn cycle(n: u32) -> Arc<Multigraph> {
        let pairs: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Arc::new(Multigraph::from_pairs(n, &pairs).unwrap())
    }

    fn ids(xs: &[u32]) -> BTreeSet<EdgeId> {
        xs.iter().map(|&x| EdgeId(x)).collect()
    }

    #[test]
    fn circuit_is_strong_but_has_no_deletable_arc() {
        let d = Orientation::forward(cycle(5));
        assert!(d.is_strongly_connected());
        assert!(d.is_k_arc_connected(1));
        assert!(!d.is_k_arc_connected(2));
        assert!(d.deletable_arcs().unwrap().is_empty());
        assert!(d.is_deletable_set(&BTreeSet::new()));
        let bent = d.reverse_edges(&ids(&[2]));
        assert!(!bent.is_strongly_connected());
        assert_eq!(bent.deletable_arcs(), Err(OrientationError::NotStronglyConnected));
        assert!(!bent.is_deletable_set(&BTreeSet::new()));
        assert!(!bent.cut_characterization_check(&BTreeSet::new()).unwrap());
    }

    #[test]
    fn parallel_triple() {
        let g = Arc::new(named_graph("theta").unwrap());
        // e0, e1: 0 -> 1; e2: 1 -> 0
        let d = Orientation::new(g, vec![false, false, true]).unwrap();
        assert_eq!(d.deletable_arcs().unwrap(), ids(&[0, 1]));
        assert!(d.cut_characterization_check(&ids(&[0, 1])).unwrap());
        assert!(!d.cut_characterization_check(&ids(&[2])).unwrap());
        assert!(!d.is_deletable_set(&ids(&[2])));
    }

    #[test]
    fn source_vertex_breaks_strong_connectivity() {
        let k4 = Arc::new(named_graph("k4").unwrap());
        let d = Orientation::from_fn(k4, |e| if e.touches(VertexId(0)) { VertexId(0) } else { e.u }).unwrap();
        assert_eq!(d.in_degree(VertexId(0)).unwrap(), 0);
        assert!(!d.is_strongly_connected());
    }

    #[test]
    fn reverse_twice_is_identity() {
        let g = Arc::new(named_graph("petersen").unwrap());
        let d = strong_orientation(g).unwrap();
        assert_eq!(d.reverse().reverse(), d);
        assert_eq!(d.reverse().deletable_arcs().unwrap(), d.deletable_arcs().unwrap());
        assert_eq!(d.reverse().graph(), d.graph());
    }

    #[test]
    fn loops_carry_no_direction() {
        let g = Arc::new(Multigraph::from_pairs(2, &[(0, 0), (0, 1), (1, 0)]).unwrap());
        let d = Orientation::new(g, vec![true, false, false]).unwrap();
        assert_eq!(d.reversed_bits()[0], false);
        assert!(d.is_strongly_connected());
        assert!(d.deletable_arcs().unwrap().contains(&EdgeId(0)));
        assert!(!d.tails().contains_key(&EdgeId(0)));
    }

    #[test]
    fn tails_round_trip_and_errors() {
        let g = Arc::new(named_graph("k4").unwrap());
        let d = strong_orientation(g.clone()).unwrap();
        let again = Orientation::from_tails(g.clone(), &d.tails()).unwrap();
        assert_eq!(d, again);
        let mut bad = d.tails();
        bad.remove(&EdgeId(3));
        assert_eq!(
            Orientation::from_tails(g.clone(), &bad),
            Err(OrientationError::MissingDirection(EdgeId(3)))
        );
        let mut wrong = d.tails();
        wrong.insert(EdgeId(0), VertexId(3));
        assert!(matches!(
            Orientation::from_tails(g, &wrong),
            Err(OrientationError::BadTail { .. })
        ));
    }

    #[test]
    fn contracting_a_circuit_keeps_strong_connectivity() {
        let g = Arc::new(named_graph("prism3").unwrap());
        // triangle 0-1-2 as a circuit, triangle 3-4-5 as a circuit, matching alternating
        let d = Orientation::new(g, vec![false, false, false, false, false, false, false, true, false]).unwrap();
        assert!(d.is_strongly_connected());
        let (q, res) = d.contract(&ids(&[0, 1, 2])).unwrap();
        assert!(q.is_strongly_connected());
        assert_eq!(res.quotient.vertex_count(), 4);
        let (same, _) = d.contract(&BTreeSet::new()).unwrap();
        assert_eq!(same.tails(), d.tails());
    }

    #[test]
    fn arc_cut_partitions_edge_cut() {
        let g = Arc::new(named_graph("petersen").unwrap());
        let d = strong_orientation(g.clone()).unwrap();
        let x: BTreeSet<VertexId> = (0..5).map(VertexId).collect();
        let c = d.arc_cut(&x).unwrap();
        let union: BTreeSet<EdgeId> = c.in_arcs.union(&c.out_arcs).copied().collect();
        assert_eq!(union, g.edge_cut(&x).unwrap());
        assert!(c.in_arcs.is_disjoint(&c.out_arcs));
    }

    #[test]
    fn strong_orientation_requires_bridgeless() {
        let path = Arc::new(Multigraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap());
        assert!(strong_orientation(path).is_err());
        for (name, _) in crate::multigraph::CORPUS {
            let g = Arc::new(named_graph(name).unwrap());
            assert!(strong_orientation(g).unwrap().is_strongly_connected(), "{name}");
        }
    }
}
