use super::matching::orient_matching_deletable;
use super::wrap::{merge, split_at_cut_vertex, through_cubic_extension, Side};
use super::{PipelineError, PipelineReport, Result};
use crate::multigraph::{EdgeId, Multigraph, VertexId};
use crate::orientation::Orientation;
use crate::structures::{find_deletable_arc_on_circuit, paths_to_two_matchings, perfect_matching, CyclePacking};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Three orientations for an essentially 4-edge-connected graph.
pub fn certify_esse4(g: &Arc<Multigraph>) -> Result<PipelineReport> {
    if g.vertex_count() < 2 || !g.is_essentially_4ec() {
        return Err(PipelineError::Precondition("graph is not essentially 4-edge-connected".into()));
    }
    let (orientations, provenance) = esse4_orientations(g)?;
    PipelineReport::checked(
        g,
        "esse4",
        vec!["essentially 4-edge-connected".into()],
        orientations,
        provenance,
        3,
    )
}

fn esse4_orientations(g: &Arc<Multigraph>) -> Result<(Vec<Orientation>, Vec<String>)> {
    if g.is_cubic() {
        return cubic(g);
    }
    for &v in g.vertices() {
        let h = g.without_vertex(v);
        if !h.is_connected() {
            return split_at_cut_vertex(g, v, &esse4_orientations, 3);
        }
        if let Some(&e0) = h.bridges().first() {
            return split_at_bridge(g, v, &h, e0);
        }
    }
    through_cubic_extension(g, true, &esse4_orientations)
}

/// `M1` deletable with the cycles of `G - M1` as circuits; one deletable arc
/// per cycle; the leftover paths split into matchings `M2`, `M3`, each made
/// deletable on its own.
fn cubic(g: &Arc<Multigraph>) -> Result<(Vec<Orientation>, Vec<String>)> {
    let m1 = perfect_matching(g).ok_or_else(|| PipelineError::Internal("no perfect matching".into()))?;
    let rest: BTreeSet<EdgeId> = g.edge_ids().filter(|e| !m1.contains(e)).collect();
    let cycles = CyclePacking::from_edge_set(g, &rest)?;
    let d1 = orient_matching_deletable(g, &m1, &cycles)?;
    let mut picked = BTreeSet::new();
    for c in &cycles.cycles {
        let mut arcs = c.edges.clone();
        if d1.tail(arcs[0]) != Some(c.vertices[0]) {
            arcs.reverse();
        }
        let e = find_deletable_arc_on_circuit(&d1, &arcs)?;
        picked.insert(e);
    }
    let paths: BTreeSet<EdgeId> = rest.difference(&picked).copied().collect();
    let (m2, m3) = paths_to_two_matchings(g, &paths)?;
    let (d2, d3) = rayon::join(
        || orient_matching_deletable(g, &m2, &CyclePacking::empty()),
        || orient_matching_deletable(g, &m3, &CyclePacking::empty()),
    );
    Ok((
        vec![d1, d2?, d3?],
        vec![
            "perfect matching deletable, its complement cycles as circuits".into(),
            "first path matching deletable".into(),
            "second path matching deletable".into(),
        ],
    ))
}

/// `G - v` has the bridge `e0` between `A1` and `A2`. Each side keeps its
/// `A_i` and shrinks the rest; the orientation where `e0` is deletable goes
/// first on both sides, and sides are reversed as needed so `e0` points the
/// same way at every index.
fn split_at_bridge(g: &Arc<Multigraph>, v: VertexId, h: &Multigraph, e0: EdgeId) -> Result<(Vec<Orientation>, Vec<String>)> {
    let start = h.edge(e0).unwrap().u;
    let without = h.without_edges(&BTreeSet::from([e0]));
    let a1 = without
        .connected_components()
        .into_iter()
        .find(|c| c.contains(&start))
        .unwrap();
    let a2: BTreeSet<VertexId> = h.vertices().iter().copied().filter(|w| !a1.contains(w)).collect();
    let (s1, s2) = rayon::join(
        || Side::solve(g, a1, &esse4_orientations),
        || Side::solve(g, a2, &esse4_orientations),
    );
    let mut sides = [s1?, s2?];
    for s in &mut sides {
        if s.orientations.len() > 3 {
            return Err(PipelineError::Internal("a side used more than 3 orientations".into()));
        }
        s.pad(3);
        let first = s
            .orientations
            .iter()
            .position(|d| d.is_deletable_set(&BTreeSet::from([e0])))
            .ok_or_else(|| PipelineError::Internal(format!("{e0} is deletable nowhere on a side")))?;
        s.orientations.swap(0, first);
        s.provenance.swap(0, first);
    }
    for j in 0..3 {
        if sides[0].real_tail(g, j, e0) != sides[1].real_tail(g, j, e0) {
            sides[1].orientations[j] = sides[1].orientations[j].reverse();
        }
    }
    let orientations = (0..3).map(|j| merge(g, &sides, j)).collect::<Result<Vec<_>>>()?;
    let provenance = (0..3)
        .map(|j| {
            format!(
                "merged across bridge {e0} of G - {v}: [{}] with [{}]",
                sides[0].provenance[j], sides[1].provenance[j]
            )
        })
        .collect();
    Ok((orientations, provenance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;

    #[test]
    fn corpus_graphs() {
        for name in ["petersen", "k4", "wheel4", "k5", "k33", "cube", "theta", "fat_triangle", "k4_pair_hub"] {
            let g = Arc::new(named_graph(name).unwrap());
            let r = certify_esse4(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(r.len() <= 3, "{name}");
        }
    }

    #[test]
    fn prism_is_rejected() {
        let g = Arc::new(named_graph("prism3").unwrap());
        assert!(matches!(certify_esse4(&g), Err(PipelineError::Precondition(_))));
    }
}
