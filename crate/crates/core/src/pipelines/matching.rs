use super::{lift_tails, require_deletable, PipelineError, Result};
use crate::exact::{deletability_decide_linked, DecideOutcome, LinkedArcs, SolveLimits};
use crate::multigraph::{EdgeId, Multigraph, VertexId};
use crate::orientation::balanced::{balanced_with, enumerate_pairings, greedy_pairing, lambda_matrix};
use crate::orientation::{eulerian_orientation_constrained, strong_orientation, Orientation};
use crate::structures::CyclePacking;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Pairings tried before falling back to the exact search.
const PAIRING_BUDGET: usize = 2_000;

/// An orientation of an essentially 4-edge-connected graph in which the
/// matching `m` is deletable and every cycle of `p` (a packing of `G - m`)
/// is a circuit.
///
/// The maximal 2-edge-connected pieces of `G - m` are contracted, which
/// leaves a forest plus `m`. That quotient is oriented Eulerian after adding
/// a pairing, with one forest edge entering and one leaving every degree-3
/// vertex, and accepted once the result is well-balanced. The pieces are
/// oriented strongly with the cycles of `p` as circuits.
pub fn orient_matching_deletable(g: &Arc<Multigraph>, m: &BTreeSet<EdgeId>, p: &CyclePacking) -> Result<Orientation> {
    if g.vertex_count() < 2 || !g.is_essentially_4ec() {
        return Err(PipelineError::Precondition("graph is not essentially 4-edge-connected".into()));
    }
    check_matching(g, m)?;
    p.validate(g)?;
    if p.edge_set().iter().any(|e| m.contains(e)) {
        return Err(PipelineError::Precondition("packing uses a matching edge".into()));
    }
    if let Some(d) = construct(g, m, p)? {
        return Ok(d);
    }
    fallback(g, m, p)
}

fn check_matching(g: &Multigraph, m: &BTreeSet<EdgeId>) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &e in m {
        let edge = g.edge(e).ok_or(crate::multigraph::GraphError::UnknownEdge(e))?;
        if edge.is_loop() || !seen.insert(edge.u) || !seen.insert(edge.v) {
            return Err(PipelineError::Precondition(format!("{e} breaks the matching")));
        }
    }
    Ok(())
}

fn construct(g: &Arc<Multigraph>, m: &BTreeSet<EdgeId>, p: &CyclePacking) -> Result<Option<Orientation>> {
    let rest = g.without_edges(m);
    let classes = rest.maximal_2ec_subgraphs();
    let mut class_of = BTreeMap::new();
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of.insert(v, i);
        }
    }
    let inner: BTreeSet<EdgeId> = rest
        .edges()
        .iter()
        .filter(|e| class_of[&e.u] == class_of[&e.v])
        .map(|e| e.id)
        .collect();

    let mut tails = p.circuit_tails();
    for class in classes.iter().filter(|c| c.len() > 1) {
        orient_piece(g, &rest.induced_subgraph(class), p, &mut tails)?;
    }

    let res = g.contract(&inner)?;
    let q = Arc::new(res.quotient);
    let mut constraints = BTreeMap::new();
    for &x in q.vertices() {
        if q.degree(x)? != 3 {
            continue;
        }
        let forest: Vec<EdgeId> = q
            .incident_edges(x)?
            .iter()
            .filter(|e| !e.is_loop() && !m.contains(&e.id))
            .map(|e| e.id)
            .collect();
        if forest.len() >= 2 {
            constraints.insert(x, (forest[0], forest[1]));
        }
    }
    let lam = lambda_matrix(&q);
    let odd: Vec<usize> = (0..q.vertex_count()).filter(|&i| q.degree_at(i) % 2 == 1).collect();

    let attempt = |pairing: &[(usize, usize)]| -> Result<Option<Orientation>> {
        let vs = q.vertices();
        let extra: Vec<(VertexId, VertexId)> = pairing.iter().map(|&(a, b)| (vs[a], vs[b])).collect();
        let (qp, _) = q.with_extra_edges(&extra);
        let dqp = eulerian_orientation_constrained(Arc::new(qp), &constraints)?;
        let dq = dqp.restrict(q.clone())?;
        if !balanced_with(&dq, &lam) {
            return Ok(None);
        }
        let mut all = tails.clone();
        lift_tails(g, &res.vertex_map, &dq, &mut all);
        for e in g.edges() {
            all.entry(e.id).or_insert(e.u);
        }
        let d = Orientation::from_tails(g.clone(), &all)?;
        Ok((d.is_strongly_connected() && d.is_deletable_set(m)).then_some(d))
    };

    if let Some(d) = attempt(&greedy_pairing(&odd, &lam))? {
        return Ok(Some(d));
    }
    let mut found = None;
    let mut failure = None;
    let mut budget = PAIRING_BUDGET;
    enumerate_pairings(&mut odd.clone(), &mut Vec::new(), &mut |pairing| {
        if budget == 0 {
            return true;
        }
        budget -= 1;
        match attempt(pairing) {
            Ok(Some(d)) => {
                found = Some(d);
                true
            }
            Ok(None) => false,
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(found)
}

/// Strong orientation of one 2-edge-connected piece with the packing cycles
/// inside it as circuits: contract the cycles, orient the rest strongly.
fn orient_piece(
    g: &Multigraph,
    piece: &Multigraph,
    p: &CyclePacking,
    tails: &mut BTreeMap<EdgeId, VertexId>,
) -> Result<()> {
    let cycle_edges: BTreeSet<EdgeId> = p
        .cycles
        .iter()
        .filter(|c| piece.contains_vertex(c.vertices[0]))
        .flat_map(|c| c.edges.iter().copied())
        .collect();
    let res = piece.contract(&cycle_edges)?;
    let dq = strong_orientation(Arc::new(res.quotient))?;
    lift_tails(g, &res.vertex_map, &dq, tails);
    Ok(())
}

/// Exact search over orientations that keep each cycle a circuit.
fn fallback(g: &Arc<Multigraph>, m: &BTreeSet<EdgeId>, p: &CyclePacking) -> Result<Orientation> {
    let linked: Vec<LinkedArcs> = p
        .cycles
        .iter()
        .map(|c| LinkedArcs {
            tails: c.circuit_tails(),
        })
        .collect();
    match deletability_decide_linked(g, m, &linked, &SolveLimits::default())? {
        DecideOutcome::Yes(d) => {
            require_deletable(&d, m, "matching")?;
            Ok(d)
        }
        DecideOutcome::No => Err(PipelineError::Internal("matching reported not deletable".into())),
        DecideOutcome::Indeterminate(why) => Err(PipelineError::Indeterminate(why)),
    }
}
