use super::wrap::{split_at_cut_vertex, through_cubic_extension};
use super::{lift_tails, require_3ec, require_deletable, PipelineError, PipelineReport, Result};
use crate::exact::SolveLimits;
use crate::multigraph::{EdgeId, Multigraph};
use crate::orientation::{well_balanced_orientation, BalanceLimits, Orientation};
use crate::structures::{
    berge_fulkerson_cover, proper_3_edge_coloring, seven_cycle_packings, special_set, BfOutcome, CyclePacking,
};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::sync::Arc;

/// An orientation in which every cycle of `p` is a circuit and the special
/// set of `p` is deletable: a well-balanced orientation of `G / E(p)` with
/// the cycles put back as circuits.
pub fn orient_special_set_deletable(g: &Arc<Multigraph>, p: &CyclePacking) -> Result<Orientation> {
    require_3ec(g)?;
    let special = special_set(g, p)?;
    let res = g.contract(&p.edge_set())?;
    let dq = well_balanced_orientation(Arc::new(res.quotient.clone()), BalanceLimits::default())?;
    let mut tails = p.circuit_tails();
    lift_tails(g, &res.vertex_map, &dq, &mut tails);
    // Chords of a cycle land as loops; the circuit already spans their ends.
    for e in g.edges() {
        tails.entry(e.id).or_insert(e.u);
    }
    let d = Orientation::from_tails(g.clone(), &tails)?;
    require_deletable(&d, &special, "special set")?;
    Ok(d)
}

/// At most 7 orientations. Cubic graphs use seven cycle packings whose
/// special sets cover the edges; other graphs are split at cut vertices and
/// reduced to a cubic extension.
pub fn certify_upper7(g: &Arc<Multigraph>) -> Result<PipelineReport> {
    require_3ec(g)?;
    let (orientations, provenance) = upper7_orientations(g)?;
    PipelineReport::checked(
        g,
        "upper7",
        vec!["3-edge-connected".into()],
        orientations,
        provenance,
        7,
    )
}

fn upper7_orientations(g: &Arc<Multigraph>) -> Result<(Vec<Orientation>, Vec<String>)> {
    if g.is_cubic() {
        let sp = seven_cycle_packings(g)?;
        let orientations = sp
            .packings
            .par_iter()
            .map(|p| orient_special_set_deletable(g, p))
            .collect::<Result<Vec<_>>>()?;
        let provenance = (0..orientations.len())
            .map(|i| format!("special set of cycle packing {i} made deletable"))
            .collect();
        return Ok((orientations, provenance));
    }
    if let Some(v) = g.cut_vertices().first().copied() {
        return split_at_cut_vertex(g, v, &upper7_orientations, 7);
    }
    through_cubic_extension(g, false, &upper7_orientations)
}

/// Orientations making each matching deletable, where every 3-edge-cut
/// meets each matching exactly once.
fn orient_perfect_matchings(g: &Arc<Multigraph>, matchings: &[BTreeSet<EdgeId>]) -> Result<Vec<Orientation>> {
    matchings
        .par_iter()
        .map(|m| {
            let rest: BTreeSet<EdgeId> = g.edge_ids().filter(|e| !m.contains(e)).collect();
            let p = CyclePacking::from_edge_set(g, &rest)?;
            let d = orient_special_set_deletable(g, &p)?;
            require_deletable(&d, m, "perfect matching")?;
            Ok(d)
        })
        .collect()
}

fn require_cubic_3ec(g: &Multigraph) -> Result<()> {
    if !g.is_cubic() {
        return Err(PipelineError::Precondition("graph is not cubic".into()));
    }
    require_3ec(g)
}

/// Three orientations from the color classes of a proper 3-edge-coloring.
pub fn certify_color3(g: &Arc<Multigraph>) -> Result<PipelineReport> {
    require_cubic_3ec(g)?;
    let classes = proper_3_edge_coloring(g)?.ok_or(PipelineError::NotColorable)?;
    let orientations = orient_perfect_matchings(g, &classes)?;
    let provenance = (0..3)
        .map(|i| format!("color class {i} made deletable"))
        .collect();
    PipelineReport::checked(
        g,
        "color3",
        vec!["cubic".into(), "3-edge-connected".into(), "3-edge-colorable".into()],
        orientations,
        provenance,
        3,
    )
}

/// Five orientations from five matchings of a Berge–Fulkerson cover.
pub fn certify_bf5(g: &Arc<Multigraph>, limits: &SolveLimits) -> Result<PipelineReport> {
    require_cubic_3ec(g)?;
    let matchings = match berge_fulkerson_cover(g, limits)? {
        BfOutcome::Found(ms) => ms,
        BfOutcome::NotFound => return Err(PipelineError::NoDoubleCover),
        BfOutcome::Indeterminate(why) => return Err(PipelineError::Indeterminate(why)),
    };
    // Each edge lies in two of the six, so any five cover everything.
    let orientations = orient_perfect_matchings(g, &matchings[..5])?;
    let provenance = (0..5)
        .map(|i| format!("double-cover matching {i} made deletable"))
        .collect();
    PipelineReport::checked(
        g,
        "bf5",
        vec![
            "cubic".into(),
            "3-edge-connected".into(),
            "Berge-Fulkerson cover found".into(),
        ],
        orientations,
        provenance,
        5,
    )
}
