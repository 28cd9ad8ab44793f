//! Well-balanced orientations: directed `u`-`v` connectivity at least
//! `⌊λ(u, v) / 2⌋` for every ordered pair.
//!
//! Existence is guaranteed but no construction is cheap, so this searches.
//! Candidates come from odd-vertex pairings `P`: orient `G + P` Eulerian and
//! drop `P`. The greedy pairing is repaired by uncrossing pairs over cuts
//! that violate `d_P(X) <= d_G(X) - 2⌊R(X)/2⌋`, then all pairings are tried,
//! then all orientations of small graphs. Every candidate is verified.

use super::{eulerian_orientation, Orientation, OrientationError};
use crate::multigraph::{Multigraph, VertexId};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalanceLimits {
    /// Pairings tried in the enumeration phase.
    pub max_pairings: usize,
    /// Graphs with at most this many vertices get the uncrossing repair.
    pub repair_vertex_cap: usize,
    /// Graphs with at most this many non-loop edges get the exhaustive fallback.
    pub max_exhaustive_edges: usize,
}

impl Default for BalanceLimits {
    fn default() -> Self {
        BalanceLimits {
            max_pairings: 20_000,
            repair_vertex_cap: 16,
            max_exhaustive_edges: 20,
        }
    }
}

/// `λ(u, v)` for all vertex-index pairs; the diagonal is 0.
pub(crate) fn lambda_matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let net = g.flow_network();
    let mut lam = vec![vec![0; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let x = net.max_flow(u, v, usize::MAX).value;
            lam[u][v] = x;
            lam[v][u] = x;
        }
    }
    lam
}

pub(crate) fn balanced_with(d: &Orientation, lam: &[Vec<usize>]) -> bool {
    let n = lam.len();
    let net = d.flow_network();
    for u in 0..n {
        for v in u + 1..n {
            let need = lam[u][v] / 2;
            if need == 0 {
                continue;
            }
            if net.max_flow(u, v, need).value < need || net.max_flow(v, u, need).value < need {
                return false;
            }
        }
    }
    true
}

pub fn is_well_balanced(d: &Orientation) -> bool {
    balanced_with(d, &lambda_matrix(d.graph()))
}

pub fn well_balanced_orientation(
    g: Arc<Multigraph>,
    limits: BalanceLimits,
) -> Result<Orientation, OrientationError> {
    if !g.is_connected() {
        return Err(OrientationError::NotConnected);
    }
    if g.is_eulerian() {
        let d = eulerian_orientation(g)?;
        debug_assert!(is_well_balanced(&d));
        return Ok(d);
    }
    let lam = lambda_matrix(&g);
    // With every λ at most 3 the condition is plain strong connectivity.
    if lam.iter().flatten().all(|&l| l <= 3) && g.bridges().is_empty() {
        let d = super::strong_orientation(g.clone())?;
        debug_assert!(balanced_with(&d, &lam));
        return Ok(d);
    }
    let odd: Vec<usize> = (0..g.vertex_count()).filter(|&i| g.degree_at(i) % 2 == 1).collect();

    let mut tried = BTreeSet::new();
    let mut attempt = |pairing: &[(usize, usize)]| -> Option<Orientation> {
        let mut key: Vec<(usize, usize)> = pairing.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        key.sort();
        if !tried.insert(key) {
            return None;
        }
        let d = orient_via_pairing(&g, pairing);
        balanced_with(&d, &lam).then_some(d)
    };

    let mut pairing = greedy_pairing(&odd, &lam);
    if let Some(d) = attempt(&pairing) {
        return Ok(d);
    }
    if g.vertex_count() <= limits.repair_vertex_cap {
        let mut seen = BTreeSet::new();
        while let Some(x) = violated_cut(&g, &pairing, &lam) {
            if !seen.insert(canonical(&pairing)) {
                break;
            }
            uncross(&mut pairing, x);
            if let Some(d) = attempt(&pairing) {
                return Ok(d);
            }
        }
    }
    let mut found = None;
    let mut budget = limits.max_pairings;
    enumerate_pairings(&mut odd.clone(), &mut Vec::new(), &mut |p| {
        if budget == 0 {
            return true;
        }
        budget -= 1;
        found = attempt(p);
        found.is_some()
    });
    if let Some(d) = found {
        return Ok(d);
    }
    exhaustive(&g, &lam, limits.max_exhaustive_edges).ok_or(OrientationError::SearchExhausted)
}

fn canonical(p: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut key: Vec<(usize, usize)> = p.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    key.sort();
    key
}

/// Pairs each unmatched odd vertex, in index order, with the unmatched
/// partner of largest `λ` (lowest index on ties).
pub(crate) fn greedy_pairing(odd: &[usize], lam: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut free: Vec<usize> = odd.to_vec();
    let mut out = Vec::new();
    while let Some(u) = free.first().copied() {
        free.remove(0);
        let (pos, _) = free
            .iter()
            .enumerate()
            .max_by_key(|&(p, &v)| (lam[u][v], std::cmp::Reverse(p)))
            .expect("odd vertices come in pairs");
        out.push((u, free.remove(pos)));
    }
    out
}

fn orient_via_pairing(g: &Arc<Multigraph>, pairing: &[(usize, usize)]) -> Orientation {
    let vs = g.vertices();
    let extra: Vec<(VertexId, VertexId)> = pairing.iter().map(|&(a, b)| (vs[a], vs[b])).collect();
    let (gp, _) = g.with_extra_edges(&extra);
    let dp = eulerian_orientation(Arc::new(gp)).expect("adding a pairing makes every degree even");
    dp.restrict(g.clone()).expect("original edges survive")
}

/// Smallest vertex mask `X` (containing vertex 0) breaking admissibility.
fn violated_cut(g: &Multigraph, pairing: &[(usize, usize)], lam: &[Vec<usize>]) -> Option<u64> {
    let n = g.vertex_count();
    if n < 2 || n > 63 {
        return None;
    }
    let ends: Vec<(usize, usize)> = (0..g.edge_count()).map(|k| g.endpoint_indices(k)).collect();
    let full = (1u64 << n) - 1;
    let inside = |x: u64, i: usize| x >> i & 1 == 1;
    let mut x = 1u64;
    while x < full {
        let dg = ends.iter().filter(|&&(a, b)| inside(x, a) != inside(x, b)).count();
        let dp = pairing.iter().filter(|&&(a, b)| inside(x, a) != inside(x, b)).count();
        let mut r = 0;
        for u in (0..n).filter(|&u| inside(x, u)) {
            for v in (0..n).filter(|&v| !inside(x, v)) {
                r = r.max(lam[u][v]);
            }
        }
        if dp + 2 * (r / 2) > dg {
            return Some(x);
        }
        x += 2;
    }
    None
}

/// Replaces two pairs crossing `x` by one pair inside and one outside.
fn uncross(pairing: &mut Vec<(usize, usize)>, x: u64) {
    let inside = |i: usize| x >> i & 1 == 1;
    let crossing: Vec<usize> = (0..pairing.len())
        .filter(|&p| inside(pairing[p].0) != inside(pairing[p].1))
        .take(2)
        .collect();
    let [p, q] = crossing[..] else {
        return;
    };
    let split = |(a, b): (usize, usize)| if inside(a) { (a, b) } else { (b, a) };
    let (a1, b1) = split(pairing[p]);
    let (a2, b2) = split(pairing[q]);
    pairing[p] = (a1, a2);
    pairing[q] = (b1, b2);
}

/// Calls `visit` on every perfect pairing of `free`; stops when it returns true.
pub(crate) fn enumerate_pairings(
    free: &mut Vec<usize>,
    cur: &mut Vec<(usize, usize)>,
    visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if free.is_empty() {
        return visit(cur);
    }
    let u = free.remove(0);
    for i in 0..free.len() {
        let v = free.remove(i);
        cur.push((u, v));
        let stop = enumerate_pairings(free, cur, visit);
        cur.pop();
        free.insert(i, v);
        if stop {
            free.insert(0, u);
            return true;
        }
    }
    free.insert(0, u);
    false
}

fn exhaustive(g: &Arc<Multigraph>, lam: &[Vec<usize>], cap: usize) -> Option<Orientation> {
    let free: Vec<usize> = (0..g.edge_count()).filter(|&k| !g.edge_at(k).is_loop()).collect();
    if free.len() > cap || free.is_empty() {
        return None;
    }
    // Reversal preserves well-balancedness, so the first free edge stays forward.
    for mask in 0u64..1 << (free.len() - 1) {
        let mut bits = vec![false; g.edge_count()];
        for (j, &k) in free.iter().enumerate().skip(1) {
            bits[k] = mask >> (j - 1) & 1 == 1;
        }
        let d = Orientation::new(g.clone(), bits).expect("bit count matches");
        if balanced_with(&d, lam) {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{named_graph, CORPUS};

    #[test]
    fn k5_eulerian_case_is_two_arc_connected() {
        let d = well_balanced_orientation(Arc::new(named_graph("k5").unwrap()), BalanceLimits::default()).unwrap();
        assert!(is_well_balanced(&d));
        assert!(d.is_k_arc_connected(2));
    }

    #[test]
    fn single_edge() {
        let g = Arc::new(Multigraph::from_pairs(2, &[(0, 1)]).unwrap());
        let d = well_balanced_orientation(g, BalanceLimits::default()).unwrap();
        assert!(is_well_balanced(&d));
    }

    #[test]
    fn corpus_graphs() {
        for (name, _) in CORPUS {
            let g = Arc::new(named_graph(name).unwrap());
            let d = well_balanced_orientation(g.clone(), BalanceLimits::default()).unwrap();
            assert!(is_well_balanced(&d), "{name}");
            assert!(d.is_strongly_connected(), "{name}");
            if g.is_k_edge_connected(4) {
                assert!(d.is_k_arc_connected(2), "{name}");
            }
        }
    }

    #[test]
    fn mixed_connectivity_multigraph() {
        // Five parallel edges 0-1 hang off a triangle 1-2-3: λ(0,1) = 5.
        let g = Arc::new(
            Multigraph::from_pairs(4, &[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 2), (2, 3), (3, 1)]).unwrap(),
        );
        let d = well_balanced_orientation(g, BalanceLimits::default()).unwrap();
        assert!(d.directed_local_connectivity(VertexId(0), VertexId(1)).unwrap() >= 2);
        assert!(d.directed_local_connectivity(VertexId(1), VertexId(0)).unwrap() >= 2);
        assert!(is_well_balanced(&d));
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Arc::new(Multigraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(
            well_balanced_orientation(g, BalanceLimits::default()),
            Err(OrientationError::NotConnected)
        );
    }

    #[test]
    fn pairing_enumeration_counts() {
        let mut count = 0;
        enumerate_pairings(&mut (0..6).collect(), &mut Vec::new(), &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 15);
    }
}
