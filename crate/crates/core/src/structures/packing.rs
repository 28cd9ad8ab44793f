use super::matching::first_perfect_matchings;
use super::tjoin::{partition_into_three_tjoins, t_join};
use super::{CyclePacking, StructureError};
use crate::multigraph::{EdgeId, Multigraph, VertexId};
use std::collections::{BTreeMap, BTreeSet};

pub const PACKING_COUNT: usize = 7;

/// Edges outside the packing that lie on no 3-edge-cut of `G / E(C)`.
/// Assumes `g` is 3-edge-connected; a loop of the quotient is always special.
pub fn special_set(g: &Multigraph, packing: &CyclePacking) -> Result<BTreeSet<EdgeId>, StructureError> {
    packing.validate(g)?;
    let inside = packing.edge_set();
    let res = g.contract(&inside)?;
    let q = &res.quotient;
    let mut out = BTreeSet::new();
    let mut cache: BTreeMap<(VertexId, VertexId), bool> = BTreeMap::new();
    for e in g.edges() {
        if inside.contains(&e.id) {
            continue;
        }
        let (a, b) = (res.vertex_map[&e.u], res.vertex_map[&e.v]);
        let key = (a.min(b), a.max(b));
        let special = a == b
            || *cache
                .entry(key)
                .or_insert_with(|| q.local_edge_connectivity_capped(a, b, 4).expect("quotient vertices") >= 4);
        if special {
            out.insert(e.id);
        }
    }
    Ok(out)
}

/// Seven cycle packings of a cubic graph such that every edge is in exactly
/// four of them and in the special set of at least one.
#[derive(Debug, Clone)]
pub struct SevenPackings {
    pub packings: Vec<CyclePacking>,
    pub special: Vec<BTreeSet<EdgeId>>,
    /// For each edge, the first packing whose special set contains it.
    pub witness: BTreeMap<EdgeId, usize>,
}

impl SevenPackings {
    pub fn membership(&self, e: EdgeId) -> [bool; PACKING_COUNT] {
        let mut out = [false; PACKING_COUNT];
        for (i, p) in self.packings.iter().enumerate() {
            out[i] = p.cycles.iter().any(|c| c.edges.contains(&e));
        }
        out
    }

    fn from_edge_sets(g: &Multigraph, sets: Vec<BTreeSet<EdgeId>>) -> Result<Self, StructureError> {
        let packings = sets
            .iter()
            .map(|s| CyclePacking::from_edge_set(g, s))
            .collect::<Result<Vec<_>, _>>()?;
        let special = packings
            .iter()
            .map(|p| special_set(g, p))
            .collect::<Result<Vec<_>, _>>()?;
        let mut witness = BTreeMap::new();
        for e in g.edge_ids() {
            if let Some(i) = special.iter().position(|s| s.contains(&e)) {
                witness.insert(e, i);
            }
        }
        Ok(SevenPackings {
            packings,
            special,
            witness,
        })
    }

    /// Every edge in exactly four packings and special in at least one.
    pub fn check(&self, g: &Multigraph) -> Result<(), StructureError> {
        if self.packings.len() != PACKING_COUNT {
            return Err(StructureError::Postcondition("wrong number of packings".into()));
        }
        for p in &self.packings {
            p.validate(g)?;
        }
        let sets: Vec<BTreeSet<EdgeId>> = self.packings.iter().map(|p| p.edge_set()).collect();
        for e in g.edge_ids() {
            let count = sets.iter().filter(|s| s.contains(&e)).count();
            if count != 4 {
                return Err(StructureError::Postcondition(format!("{e} lies in {count} packings")));
            }
            if !self.witness.contains_key(&e) {
                return Err(StructureError::Postcondition(format!("{e} is special nowhere")));
            }
        }
        Ok(())
    }
}

/// Builds seven packings for a 3-edge-connected cubic graph, recursing on
/// nontrivial 3-edge-cuts and using a perfect matching and three `T`-joins
/// when none is left.
pub fn seven_cycle_packings(g: &Multigraph) -> Result<SevenPackings, StructureError> {
    if !g.is_cubic() {
        return Err(StructureError::NotCubic);
    }
    if !g.is_k_edge_connected(3) {
        return Err(StructureError::NotKEdgeConnected(3));
    }
    let sets = packing_sets(g)?;
    let out = SevenPackings::from_edge_sets(g, sets)?;
    out.check(g)?;
    Ok(out)
}

fn packing_sets(g: &Multigraph) -> Result<Vec<BTreeSet<EdgeId>>, StructureError> {
    match g.find_nontrivial_3_cut() {
        Some(side) => split_at_cut(g, &side),
        None => base_case(g),
    }
}

/// Number of perfect matchings tried before giving up on the base case.
const MATCHING_TRIALS: usize = 64;

fn base_case(g: &Multigraph) -> Result<Vec<BTreeSet<EdgeId>>, StructureError> {
    let matchings = first_perfect_matchings(g, MATCHING_TRIALS);
    if matchings.is_empty() {
        return Err(StructureError::NoPerfectMatching);
    }
    let mut last = None;
    for m in &matchings {
        match base_case_with(g, m) {
            Ok(sets) => return Ok(sets),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap())
}

fn base_case_with(g: &Multigraph, m: &BTreeSet<EdgeId>) -> Result<Vec<BTreeSet<EdgeId>>, StructureError> {
    let rest: BTreeSet<EdgeId> = g.edge_ids().filter(|e| !m.contains(e)).collect();
    // G - M is 2-regular; contracting its cycles leaves exactly the M-edges.
    let quotient = g.contract(&rest)?.quotient;
    let [f1, f2, f3] = partition_into_three_tjoins(&quotient)?;
    let g_minus_m = g.edge_subgraph(&rest);
    let mut sets = vec![rest.clone()];
    for f in [&f1, &f2, &f3] {
        let covered: BTreeSet<VertexId> = f
            .iter()
            .flat_map(|&e| {
                let edge = g.edge(e).unwrap();
                [edge.u, edge.v]
            })
            .collect();
        let t: BTreeSet<VertexId> = g.vertices().iter().copied().filter(|v| !covered.contains(v)).collect();
        let n = t_join(&g_minus_m, &t)?
            .ok_or_else(|| StructureError::Postcondition("no T-join in the complement of the matching".into()))?;
        for s in [
            f.union(&n).copied().collect::<BTreeSet<_>>(),
            f.iter().chain(rest.difference(&n)).copied().collect(),
        ] {
            sets.push(g.edge_ids().filter(|e| !s.contains(e)).collect());
        }
    }
    let out = SevenPackings::from_edge_sets(g, sets.clone())?;
    out.check(g)?;
    Ok(sets)
}

fn split_at_cut(g: &Multigraph, side: &BTreeSet<VertexId>) -> Result<Vec<BTreeSet<EdgeId>>, StructureError> {
    let other: BTreeSet<VertexId> = g.vertices().iter().copied().filter(|v| !side.contains(v)).collect();
    let cut: Vec<EdgeId> = g.edge_cut(side)?.into_iter().collect();
    debug_assert_eq!(cut.len(), 3);
    let mut halves = Vec::with_capacity(2);
    for shrink in [&other, side] {
        let res = g.contract_vertex_sets(&[shrink.clone()])?;
        let hub = res.vertex_map[shrink.iter().next().unwrap()];
        let sets = packing_sets(&res.quotient)?;
        halves.push(relabel(&res.quotient, sets, hub, &cut)?);
    }
    Ok((0..PACKING_COUNT)
        .map(|i| halves[0][i].union(&halves[1][i]).copied().collect())
        .collect())
}

/// Reorders the packings of one side so that packing 0 avoids `hub`, and
/// packings `2j - 1`, `2j` use the two cut edges other than `cut[j - 1]`,
/// with `cut[j - 1]` special in packing `2j - 1`.
fn relabel(
    h: &Multigraph,
    sets: Vec<BTreeSet<EdgeId>>,
    hub: VertexId,
    cut: &[EdgeId],
) -> Result<Vec<BTreeSet<EdgeId>>, StructureError> {
    let bad = |msg: &str| StructureError::Postcondition(format!("cut relabeling: {msg}"));
    let packs = SevenPackings::from_edge_sets(h, sets.clone())?;
    let avoid: Vec<usize> = (0..PACKING_COUNT).filter(|&i| !packs.packings[i].contains_vertex(hub)).collect();
    if avoid.len() != 1 {
        return Err(bad("hub is not avoided by exactly one packing"));
    }
    let mut order = vec![avoid[0]];
    for &missing in cut {
        let mut pair: Vec<usize> = (0..PACKING_COUNT)
            .filter(|&i| i != avoid[0] && !sets[i].contains(&missing))
            .collect();
        if pair.len() != 2 {
            return Err(bad("cut edge pair not used by exactly two packings"));
        }
        // Lowest index where the missing cut edge is special goes first.
        if !packs.special[pair[0]].contains(&missing) {
            pair.swap(0, 1);
        }
        if !packs.special[pair[0]].contains(&missing) {
            return Err(bad("cut edge is special in neither packing that skips it"));
        }
        order.extend(pair);
    }
    Ok(order.into_iter().map(|i| sets[i].clone()).collect())
}
