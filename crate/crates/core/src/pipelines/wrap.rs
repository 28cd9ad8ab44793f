//! Reductions from general graphs to smaller or cubic ones, and the merges
//! that carry orientations back.

use super::{PipelineError, Result};
use crate::multigraph::{EdgeId, Multigraph, VertexId};
use crate::orientation::Orientation;
use crate::structures::cubic_extension;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

pub(super) type Solver = dyn Fn(&Arc<Multigraph>) -> Result<(Vec<Orientation>, Vec<String>)> + Sync;

/// One side of a split: the vertices kept as they are, the graph with
/// everything else shrunk to a single vertex, and its orientations.
pub(super) struct Side {
    pub kept: BTreeSet<VertexId>,
    pub graph: Arc<Multigraph>,
    pub orientations: Vec<Orientation>,
    pub provenance: Vec<String>,
}

impl Side {
    pub fn solve(g: &Multigraph, kept: BTreeSet<VertexId>, solve: &Solver) -> Result<Side> {
        let shrink: BTreeSet<VertexId> = g.vertices().iter().copied().filter(|v| !kept.contains(v)).collect();
        let graph = Arc::new(g.contract_vertex_sets(&[shrink])?.quotient);
        let (orientations, provenance) = solve(&graph)?;
        if orientations.is_empty() {
            return Err(PipelineError::Internal("side produced no orientation".into()));
        }
        Ok(Side {
            kept,
            graph,
            orientations,
            provenance,
        })
    }

    /// Repeats the last orientation until there are `n`.
    pub fn pad(&mut self, n: usize) {
        while self.orientations.len() < n {
            self.orientations.push(self.orientations.last().unwrap().clone());
            self.provenance.push(self.provenance.last().unwrap().clone());
        }
    }

    /// Tail of `e` in orientation `j`, named in the original graph.
    pub fn real_tail(&self, g: &Multigraph, j: usize, e: EdgeId) -> Option<VertexId> {
        let t = self.orientations[j].tail(e)?;
        if self.graph.edge(e)?.is_loop() {
            return None;
        }
        if self.kept.contains(&t) {
            return Some(t);
        }
        let orig = g.edge(e)?;
        Some(if self.kept.contains(&orig.u) { orig.v } else { orig.u })
    }
}

/// Orientation `j` of `g` assembled from orientation `j` of every side.
pub(super) fn merge(g: &Arc<Multigraph>, sides: &[Side], j: usize) -> Result<Orientation> {
    let mut tails: BTreeMap<EdgeId, VertexId> = BTreeMap::new();
    for side in sides {
        for e in side.graph.edges() {
            let Some(t) = side.real_tail(g, j, e.id) else {
                continue;
            };
            if let Some(&prev) = tails.get(&e.id) {
                if prev != t {
                    return Err(PipelineError::Internal(format!("sides disagree on {}", e.id)));
                }
            }
            tails.insert(e.id, t);
        }
    }
    // Loops at the split vertex fall inside the shrunk part on every side.
    for e in g.edges() {
        tails.entry(e.id).or_insert(e.u);
    }
    Ok(Orientation::from_tails(g.clone(), &tails)?)
}

/// Splits at cut vertex `v`: one component of `G - v` against the rest,
/// each solved with the other part shrunk to a vertex, merged per index.
pub(super) fn split_at_cut_vertex(
    g: &Arc<Multigraph>,
    v: VertexId,
    solve: &Solver,
    bound: usize,
) -> Result<(Vec<Orientation>, Vec<String>)> {
    let comps = g.without_vertex(v).connected_components();
    if comps.len() < 2 {
        return Err(PipelineError::Internal(format!("{v} is not a cut vertex")));
    }
    let first = comps[0].clone();
    let second: BTreeSet<VertexId> = g
        .vertices()
        .iter()
        .copied()
        .filter(|w| *w != v && !first.contains(w))
        .collect();
    let (a, b) = rayon::join(|| Side::solve(g, first, solve), || Side::solve(g, second, solve));
    let mut sides = [a?, b?];
    let n = sides.iter().map(|s| s.orientations.len()).max().unwrap();
    if n > bound {
        return Err(PipelineError::Internal(format!("a side used {n} orientations")));
    }
    for s in &mut sides {
        s.pad(n);
    }
    let orientations = (0..n).map(|j| merge(g, &sides, j)).collect::<Result<Vec<_>>>()?;
    let provenance = (0..n)
        .map(|j| {
            format!(
                "merged at cut vertex {v}: [{}] with [{}]",
                sides[0].provenance[j], sides[1].provenance[j]
            )
        })
        .collect();
    Ok((orientations, provenance))
}

/// Solves the cubic extension and contracts every blown-up cycle back.
/// With `essential`, the host must be essentially 4-edge-connected.
pub(super) fn through_cubic_extension(
    g: &Arc<Multigraph>,
    essential: bool,
    solve: &Solver,
) -> Result<(Vec<Orientation>, Vec<String>)> {
    let ext = cubic_extension(g)?;
    let host = Arc::new(ext.host.clone());
    if !host.is_k_edge_connected(3) || (essential && !host.is_essentially_4ec()) {
        return Err(PipelineError::Internal(
            "cubic extension lost the connectivity the reduction needs".into(),
        ));
    }
    let (host_orientations, host_provenance) = solve(&host)?;
    let mut orientations = Vec::with_capacity(host_orientations.len());
    for dh in &host_orientations {
        let d = ext.contract_back(g.clone(), dh)?;
        let kept = dh.deletable_arcs()?;
        let now = d.deletable_arcs()?;
        for e in g.edge_ids() {
            if kept.contains(&e) && !now.contains(&e) {
                return Err(PipelineError::Internal(format!("{e} stopped being deletable after contraction")));
            }
        }
        orientations.push(d);
    }
    let provenance = host_provenance
        .into_iter()
        .map(|p| format!("contracted from the cubic extension: {p}"))
        .collect();
    Ok((orientations, provenance))
}
