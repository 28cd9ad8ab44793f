//! Undirected multigraphs with stable edge identifiers.
//!
//! Loops and parallel edges are first-class. Every edge carries an [`EdgeId`]
//! that survives contraction and subgraph operations, so structures computed on
//! a quotient can be mapped back onto the graph they came from.

mod connectivity;
mod corpus;
mod flow;
pub mod io;

pub use corpus::{named_graph, CORPUS};
pub(crate) use flow::FlowNetwork;

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An undirected edge. `u == v` marks a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(id: u32, u: u32, v: u32) -> Self {
        Edge {
            id: EdgeId(id),
            u: VertexId(u),
            v: VertexId(v),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `x`, or `None` when `x` is not an endpoint.
    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(VertexId),
    #[error("edge id {0} used twice")]
    DuplicateEdge(EdgeId),
    #[error("cut side must be a nonempty proper subset of the vertices")]
    ImproperCut,
    #[error("source and sink are the same vertex {0}")]
    SameEndpoints(VertexId),
    #[error("graph has {0} vertices, at least 2 are required")]
    TooFewVertices(usize),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
}

/// A labeled undirected multigraph.
///
/// Vertices are kept sorted by id and edges sorted by id, which fixes the
/// iteration order of every algorithm in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    index: BTreeMap<VertexId, usize>,
    // Edge indices incident to each vertex index; a loop is listed once.
    incidence: Vec<Vec<usize>>,
    ends: Vec<(usize, usize)>,
}

/// What happened to an edge under [`Multigraph::contract`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeStatus {
    Kept,
    BecameLoop,
    ContractedAway,
}

#[derive(Debug, Clone)]
pub struct ContractionResult {
    pub quotient: Multigraph,
    /// Original vertex -> quotient vertex. A class is named after its smallest member.
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub edge_status: BTreeMap<EdgeId, EdgeStatus>,
}

impl ContractionResult {
    /// Original vertices collapsed into quotient vertex `q`.
    pub fn class_of(&self, q: VertexId) -> BTreeSet<VertexId> {
        self.vertex_map
            .iter()
            .filter(|(_, &image)| image == q)
            .map(|(&v, _)| v)
            .collect()
    }
}

impl Multigraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        let index: BTreeMap<VertexId, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateEdge(w[0].id));
            }
        }
        let mut incidence = vec![Vec::new(); vertices.len()];
        let mut ends = Vec::with_capacity(edges.len());
        for (k, e) in edges.iter().enumerate() {
            let iu = *index.get(&e.u).ok_or(GraphError::UnknownVertex(e.u))?;
            let iv = *index.get(&e.v).ok_or(GraphError::UnknownVertex(e.v))?;
            ends.push((iu, iv));
            incidence[iu].push(k);
            if iv != iu {
                incidence[iv].push(k);
            }
        }
        Ok(Multigraph {
            vertices,
            edges,
            index,
            incidence,
            ends,
        })
    }

    /// Vertices `0..n`, edge `k` joining `pairs[k]`.
    pub fn from_pairs(n: u32, pairs: &[(u32, u32)]) -> Result<Self, GraphError> {
        Multigraph::new(
            (0..n).map(VertexId),
            pairs
                .iter()
                .enumerate()
                .map(|(k, &(u, v))| Edge::new(k as u32, u, v)),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn edge_id_set(&self) -> BTreeSet<EdgeId> {
        self.edge_ids().collect()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.index.contains_key(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_index(e).is_some()
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search_by_key(&e, |x| x.id).ok()
    }

    pub fn edge(&self, e: EdgeId) -> Option<&Edge> {
        self.edge_index(e).map(|k| &self.edges[k])
    }

    pub(crate) fn edge_at(&self, k: usize) -> &Edge {
        &self.edges[k]
    }

    pub(crate) fn incidence_at(&self, i: usize) -> &[usize] {
        &self.incidence[i]
    }

    /// Vertex indices of an edge's endpoints.
    pub(crate) fn endpoint_indices(&self, k: usize) -> (usize, usize) {
        self.ends[k]
    }

    fn require_vertex(&self, v: VertexId) -> Result<usize, GraphError> {
        self.vertex_index(v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn incident_edges(&self, v: VertexId) -> Result<Vec<&Edge>, GraphError> {
        let i = self.require_vertex(v)?;
        Ok(self.incidence[i].iter().map(|&k| &self.edges[k]).collect())
    }

    /// Number of edge endpoints at `v`; a loop counts twice.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        let i = self.require_vertex(v)?;
        Ok(self.degree_at(i))
    }

    pub(crate) fn degree_at(&self, i: usize) -> usize {
        self.incidence[i]
            .iter()
            .map(|&k| if self.edges[k].is_loop() { 2 } else { 1 })
            .sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.vertex_count()).map(|i| self.degree_at(i)).min()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count()).all(|i| self.degree_at(i) == 3)
    }

    pub fn is_eulerian(&self) -> bool {
        (0..self.vertex_count()).all(|i| self.degree_at(i) % 2 == 0)
    }

    pub fn odd_vertices(&self) -> Vec<VertexId> {
        (0..self.vertex_count())
            .filter(|&i| self.degree_at(i) % 2 == 1)
            .map(|i| self.vertices[i])
            .collect()
    }

    pub fn next_vertex_id(&self) -> VertexId {
        VertexId(self.vertices.last().map_or(0, |v| v.0 + 1))
    }

    pub fn next_edge_id(&self) -> EdgeId {
        EdgeId(self.edges.last().map_or(0, |e| e.id.0 + 1))
    }

    /// `δ(X)`: non-loop edges with exactly one endpoint in `x`.
    pub fn edge_cut(&self, x: &BTreeSet<VertexId>) -> Result<BTreeSet<EdgeId>, GraphError> {
        for &v in x {
            self.require_vertex(v)?;
        }
        if x.is_empty() || x.len() == self.vertex_count() {
            return Err(GraphError::ImproperCut);
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| x.contains(&e.u) != x.contains(&e.v))
            .map(|e| e.id)
            .collect())
    }

    /// Spanning subgraph keeping the edges accepted by `keep`.
    pub fn spanning_subgraph(&self, keep: impl Fn(&Edge) -> bool) -> Multigraph {
        Multigraph::new(
            self.vertices.iter().copied(),
            self.edges.iter().filter(|e| keep(e)).copied(),
        )
        .expect("subgraph of a valid graph is valid")
    }

    pub fn without_edges(&self, removed: &BTreeSet<EdgeId>) -> Multigraph {
        self.spanning_subgraph(|e| !removed.contains(&e.id))
    }

    pub fn edge_subgraph(&self, kept: &BTreeSet<EdgeId>) -> Multigraph {
        self.spanning_subgraph(|e| kept.contains(&e.id))
    }

    /// `G[X]`: the vertices of `x` with every edge having both endpoints in `x`.
    pub fn induced_subgraph(&self, x: &BTreeSet<VertexId>) -> Multigraph {
        Multigraph::new(
            self.vertices.iter().copied().filter(|v| x.contains(v)),
            self.edges
                .iter()
                .filter(|e| x.contains(&e.u) && x.contains(&e.v))
                .copied(),
        )
        .expect("induced subgraph of a valid graph is valid")
    }

    pub fn without_vertex(&self, v: VertexId) -> Multigraph {
        let keep: BTreeSet<VertexId> = self.vertices.iter().copied().filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Adds fresh edges (ids above every existing id) and returns their ids.
    pub fn with_extra_edges(&self, pairs: &[(VertexId, VertexId)]) -> (Multigraph, Vec<EdgeId>) {
        let first = self.next_edge_id().0;
        let ids: Vec<EdgeId> = (0..pairs.len() as u32).map(|k| EdgeId(first + k)).collect();
        let extra = pairs.iter().zip(&ids).map(|(&(u, v), &id)| Edge { id, u, v });
        let g = Multigraph::new(
            self.vertices.iter().copied(),
            self.edges.iter().copied().chain(extra),
        )
        .expect("endpoints of extra edges must exist");
        (g, ids)
    }

    /// `G/F`: delete each edge of `f` and identify its endpoints.
    ///
    /// Edges outside `f` keep their ids; those whose endpoints merge become loops.
    pub fn contract(&self, f: &BTreeSet<EdgeId>) -> Result<ContractionResult, GraphError> {
        let n = self.vertex_count();
        let mut dsu = Dsu::new(n);
        for &id in f {
            let k = self.edge_index(id).ok_or(GraphError::UnknownEdge(id))?;
            let (a, b) = self.endpoint_indices(k);
            dsu.union(a, b);
        }
        // Name every class after its smallest member; vertices are sorted so
        // the first index seen in a class is the smallest.
        let mut rep_name = vec![None; n];
        let mut vertex_map = BTreeMap::new();
        for i in 0..n {
            let r = dsu.find(i);
            let name = *rep_name[r].get_or_insert(self.vertices[i]);
            vertex_map.insert(self.vertices[i], name);
        }
        let mut qv: Vec<VertexId> = vertex_map.values().copied().collect();
        qv.dedup();
        let mut edge_status = BTreeMap::new();
        let mut qe = Vec::new();
        for e in &self.edges {
            if f.contains(&e.id) {
                edge_status.insert(e.id, EdgeStatus::ContractedAway);
                continue;
            }
            let (u, v) = (vertex_map[&e.u], vertex_map[&e.v]);
            let status = if u == v && !e.is_loop() {
                EdgeStatus::BecameLoop
            } else {
                EdgeStatus::Kept
            };
            edge_status.insert(e.id, status);
            qe.push(Edge { id: e.id, u, v });
        }
        qv.sort();
        qv.dedup();
        Ok(ContractionResult {
            quotient: Multigraph::new(qv, qe)?,
            vertex_map,
            edge_status,
        })
    }

    /// Identify all vertices of each class (every edge inside a class is contracted away).
    pub fn contract_vertex_sets(
        &self,
        classes: &[BTreeSet<VertexId>],
    ) -> Result<ContractionResult, GraphError> {
        let mut inside = BTreeSet::new();
        for class in classes {
            for &v in class {
                self.require_vertex(v)?;
            }
            for e in &self.edges {
                if class.contains(&e.u) && class.contains(&e.v) {
                    inside.insert(e.id);
                }
            }
        }
        // A class that is disconnected in G[class] would not collapse to one vertex.
        let mut res = self.contract(&inside)?;
        for class in classes {
            let images: BTreeSet<VertexId> = class.iter().map(|v| res.vertex_map[v]).collect();
            if images.len() > 1 {
                let target = *images.iter().next().unwrap();
                let remap: BTreeMap<VertexId, VertexId> =
                    images.iter().map(|&q| (q, target)).collect();
                res = relabel_quotient(self, res, &remap);
            }
        }
        Ok(res)
    }

    /// Connected components (loops ignored), sorted by smallest member.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let comp = self.component_labels();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut out = vec![BTreeSet::new(); count];
        for (i, &c) in comp.iter().enumerate() {
            out[c].insert(self.vertices[i]);
        }
        out
    }

    /// Component label per vertex index, labels numbered in order of first appearance.
    pub(crate) fn component_labels(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &k in &self.incidence[x] {
                    let (a, b) = self.endpoint_indices(k);
                    let y = if a == x { b } else { a };
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Edges whose removal increases the number of components.
    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = BTreeSet::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, edge used to enter it, next incidence position)
            let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (x, via, ref mut pos)) = stack.last_mut() {
                if *pos < self.incidence[x].len() {
                    let k = self.incidence[x][*pos];
                    *pos += 1;
                    if Some(k) == via || self.edges[k].is_loop() {
                        continue;
                    }
                    let (a, b) = self.endpoint_indices(k);
                    let y = if a == x { b } else { a };
                    if disc[y] == usize::MAX {
                        disc[y] = timer;
                        low[y] = timer;
                        timer += 1;
                        stack.push((y, Some(k), 0));
                    } else {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[x]);
                        if low[x] > disc[parent] {
                            out.insert(self.edges[via.unwrap()].id);
                        }
                    }
                }
            }
        }
        out
    }

    /// Vertex sets of the maximal 2-edge-connected subgraphs: the components
    /// left after deleting every bridge. Singletons are included.
    pub fn maximal_2ec_subgraphs(&self) -> Vec<BTreeSet<VertexId>> {
        self.without_edges(&self.bridges()).connected_components()
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        let base = self.connected_components().len();
        self.vertices
            .iter()
            .copied()
            .filter(|&v| self.without_vertex(v).connected_components().len() > base)
            .collect()
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

fn relabel_quotient(
    original: &Multigraph,
    res: ContractionResult,
    remap: &BTreeMap<VertexId, VertexId>,
) -> ContractionResult {
    let vertex_map: BTreeMap<VertexId, VertexId> = res
        .vertex_map
        .iter()
        .map(|(&v, &q)| (v, *remap.get(&q).unwrap_or(&q)))
        .collect();
    let mut edge_status = res.edge_status;
    let mut qe = Vec::new();
    for e in original.edges() {
        if edge_status[&e.id] == EdgeStatus::ContractedAway {
            continue;
        }
        let (u, v) = (vertex_map[&e.u], vertex_map[&e.v]);
        if u == v && !e.is_loop() {
            edge_status.insert(e.id, EdgeStatus::BecameLoop);
        }
        qe.push(Edge { id: e.id, u, v });
    }
    let qv: BTreeSet<VertexId> = vertex_map.values().copied().collect();
    ContractionResult {
        quotient: Multigraph::new(qv, qe).expect("relabeled quotient is valid"),
        vertex_map,
        edge_status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set<T: Ord + Copy>(xs: &[T]) -> BTreeSet<T> {
        xs.iter().copied().collect()
    }

    #[test]
    fn degree_counts_loops_twice() {
        let g = Multigraph::from_pairs(1, &[(0, 0)]).unwrap();
        assert_eq!(g.degree(VertexId(0)).unwrap(), 2);
        let p = named_graph("petersen").unwrap();
        for &v in p.vertices() {
            assert_eq!(p.degree(v).unwrap(), 3);
        }
        let k5 = named_graph("k5").unwrap();
        assert!(k5.vertices().iter().all(|&v| k5.degree(v).unwrap() == 4));
        assert_eq!(
            p.degree(VertexId(99)),
            Err(GraphError::UnknownVertex(VertexId(99)))
        );
    }

    #[test]
    fn edge_cut_examples() {
        let p = named_graph("petersen").unwrap();
        let outer = set(&[0, 1, 2, 3, 4].map(VertexId));
        let cut = p.edge_cut(&outer).unwrap();
        assert_eq!(cut, set(&[5, 6, 7, 8, 9].map(EdgeId)));

        let c4 = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_cut(&set(&[VertexId(0), VertexId(1)])).unwrap().len(), 2);

        let looped = Multigraph::from_pairs(2, &[(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(
            looped.edge_cut(&set(&[VertexId(0)])).unwrap(),
            set(&[EdgeId(1), EdgeId(2)])
        );
        assert_eq!(c4.edge_cut(&BTreeSet::new()), Err(GraphError::ImproperCut));
        let all: BTreeSet<VertexId> = c4.vertices().iter().copied().collect();
        assert_eq!(c4.edge_cut(&all), Err(GraphError::ImproperCut));
    }

    #[test]
    fn contract_single_edge_of_k4() {
        let k4 = named_graph("k4").unwrap();
        let res = k4.contract(&set(&[EdgeId(0)])).unwrap();
        assert_eq!(res.quotient.vertex_count(), 3);
        assert_eq!(res.quotient.edge_count(), 5);
        assert_eq!(res.edge_status[&EdgeId(0)], EdgeStatus::ContractedAway);
        // 0-2 and 0-3 are both doubled; 2-3 stays single
        let mut pairs: Vec<(VertexId, VertexId)> = res
            .quotient
            .edges()
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        pairs.sort();
        let before = pairs.len();
        pairs.dedup();
        assert_eq!(before - pairs.len(), 2);
    }

    #[test]
    fn contract_empty_is_identity() {
        let p = named_graph("petersen").unwrap();
        let res = p.contract(&BTreeSet::new()).unwrap();
        assert_eq!(res.quotient, p);
        assert!(res.vertex_map.iter().all(|(a, b)| a == b));
        assert!(res.edge_status.values().all(|&s| s == EdgeStatus::Kept));
    }

    #[test]
    fn contract_unknown_edge_fails() {
        let k4 = named_graph("k4").unwrap();
        assert_eq!(
            k4.contract(&set(&[EdgeId(77)])).unwrap_err(),
            GraphError::UnknownEdge(EdgeId(77))
        );
    }

    #[test]
    fn contracting_petersen_cycles_gives_five_parallel_edges() {
        let p = named_graph("petersen").unwrap();
        let spokes = set(&[5, 6, 7, 8, 9].map(EdgeId));
        let cycles: BTreeSet<EdgeId> = p.edge_ids().filter(|e| !spokes.contains(e)).collect();
        let res = p.contract(&cycles).unwrap();
        assert_eq!(res.quotient.vertex_count(), 2);
        assert_eq!(res.quotient.edge_count(), 5);
        assert_eq!(res.quotient.edge_id_set(), spokes);
    }

    #[test]
    fn loops_from_parallel_edges_are_flagged() {
        let g = Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let res = g.contract(&set(&[EdgeId(0)])).unwrap();
        assert_eq!(res.edge_status[&EdgeId(1)], EdgeStatus::BecameLoop);
        assert!(res.quotient.edge(EdgeId(1)).unwrap().is_loop());
        assert_eq!(res.edge_status[&EdgeId(2)], EdgeStatus::Kept);
    }

    #[test]
    fn components_and_bridges() {
        let p = named_graph("petersen").unwrap();
        assert_eq!(p.connected_components().len(), 1);
        let empty = Multigraph::new(Vec::new(), Vec::new()).unwrap();
        assert!(empty.connected_components().is_empty());

        let path = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.bridges().len(), 3);
        assert_eq!(path.maximal_2ec_subgraphs().len(), 4);

        let cycle = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(cycle.bridges().is_empty());
        assert_eq!(cycle.maximal_2ec_subgraphs().len(), 1);

        // a parallel pair is not a bridge
        let pair = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(pair.bridges().is_empty());
    }

    #[test]
    fn petersen_minus_spokes_has_two_classes() {
        let p = named_graph("petersen").unwrap();
        let spokes = set(&[5, 6, 7, 8, 9].map(EdgeId));
        let classes = p.without_edges(&spokes).maximal_2ec_subgraphs();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0], set(&[0, 1, 2, 3, 4].map(VertexId)));
        assert_eq!(classes[1], set(&[5, 6, 7, 8, 9].map(VertexId)));
    }

    #[test]
    fn cut_vertex_detection() {
        let g = named_graph("two_k4_shared_vertex").unwrap();
        assert_eq!(g.cut_vertices(), vec![VertexId(0)]);
        assert!(g.without_vertex(VertexId(0)).connected_components().len() >= 2);
        assert!(named_graph("petersen").unwrap().cut_vertices().is_empty());
    }

    #[test]
    fn contract_vertex_sets_collapses_each_class() {
        let g = named_graph("prism3").unwrap();
        let tri = set(&[3, 4, 5].map(VertexId));
        let res = g.contract_vertex_sets(&[tri]).unwrap();
        assert_eq!(res.quotient.vertex_count(), 4);
        assert!(res.quotient.is_cubic());
    }
}
