use super::StructureError;
use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};
use crate::orientation::Orientation;
use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

/// A deletable arc on the circuit `circuit` (arcs in cyclic order) of a
/// strongly connected orientation of a 3-edge-connected graph.
///
/// An edge leaving the circuit is extended to a directed path between two
/// circuit vertices, closed up with a stretch of the circuit, and the
/// resulting closed walk is contracted. The circuit shrinks to the part not
/// absorbed, and the loop that eventually appears on it is the answer.
pub fn find_deletable_arc_on_circuit(d: &Orientation, circuit: &[EdgeId]) -> Result<EdgeId, StructureError> {
    if !d.is_strongly_connected() {
        return Err(crate::orientation::OrientationError::NotStronglyConnected.into());
    }
    check_circuit(d, circuit)?;
    let mut cur = d.clone();
    let mut circ = circuit.to_vec();
    loop {
        let g = cur.graph_arc().clone();
        if let Some(&e) = circ.iter().find(|&&e| g.edge(e).unwrap().is_loop()) {
            if d.is_deletable_set(&BTreeSet::from([e])) {
                return Ok(e);
            }
            return Err(StructureError::Postcondition(format!("{e} came out non-deletable")));
        }
        let on_c: BTreeSet<VertexId> = circ.iter().map(|&e| cur.tail(e).unwrap()).collect();
        let in_c: BTreeSet<EdgeId> = circ.iter().copied().collect();
        let leaving = g
            .edges()
            .iter()
            .find(|e| !e.is_loop() && !in_c.contains(&e.id) && (on_c.contains(&e.u) || on_c.contains(&e.v)))
            .ok_or_else(|| StructureError::NotACircuit("no edge leaves the circuit; graph is not 3-edge-connected".into()))?;
        let (x, y) = cur.arc(leaving.id).unwrap();
        let mut path = vec![leaving.id];
        let (a, b) = if on_c.contains(&x) && on_c.contains(&y) {
            (x, y)
        } else if on_c.contains(&x) {
            let (rest, end) = walk_off_circuit(&cur, y, &on_c, false);
            path.extend(rest);
            (x, end)
        } else {
            let (rest, start) = walk_off_circuit(&cur, x, &on_c, true);
            path.extend(rest);
            (start, y)
        };
        // Circuit stretch from b back to a closes the path into a closed walk.
        let pos_b = circ.iter().position(|&e| cur.tail(e) == Some(b)).unwrap();
        let len = circ.len();
        let mut stretch = Vec::new();
        let mut i = pos_b;
        while cur.tail(circ[i]) != Some(a) {
            stretch.push(circ[i]);
            i = (i + 1) % len;
        }
        let kept: Vec<EdgeId> = (0..len - stretch.len()).map(|k| circ[(i + k) % len]).collect();
        let closed: BTreeSet<EdgeId> = path.iter().chain(&stretch).copied().collect();
        let (next, _) = cur.contract(&closed)?;
        cur = next;
        circ = kept;
    }
}

/// Shortest directed path from `from` (off the circuit) to the circuit,
/// forward or backward, through vertices off the circuit. Returns its edges
/// and the circuit vertex reached.
fn walk_off_circuit(d: &Orientation, from: VertexId, on_c: &BTreeSet<VertexId>, backward: bool) -> (Vec<EdgeId>, VertexId) {
    let g = d.graph();
    let mut pred: std::collections::BTreeMap<VertexId, EdgeId> = Default::default();
    let mut seen = BTreeSet::from([from]);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if on_c.contains(&x) {
            let mut edges = Vec::new();
            let mut v = x;
            while v != from {
                let e = pred[&v];
                edges.push(e);
                let (t, h) = d.arc(e).unwrap();
                v = if backward { h } else { t };
            }
            if !backward {
                edges.reverse();
            }
            return (edges, x);
        }
        for e in g.incident_edges(x).unwrap() {
            let (t, h) = d.arc(e.id).unwrap();
            let (near, far) = if backward { (h, t) } else { (t, h) };
            if near == x && far != x && seen.insert(far) {
                pred.insert(far, e.id);
                queue.push_back(far);
            }
        }
    }
    unreachable!("strong connectivity gives a path back to the circuit")
}

fn check_circuit(d: &Orientation, circuit: &[EdgeId]) -> Result<(), StructureError> {
    if circuit.is_empty() {
        return Err(StructureError::NotACircuit("empty".into()));
    }
    let mut tails = BTreeSet::new();
    for (i, &e) in circuit.iter().enumerate() {
        let (t, h) = d.arc(e).ok_or(GraphError::UnknownEdge(e))?;
        let next = circuit[(i + 1) % circuit.len()];
        if d.tail(next) != Some(h) {
            return Err(StructureError::NotACircuit(format!("{e} is not followed by an arc leaving its head")));
        }
        if !tails.insert(t) {
            return Err(StructureError::NotACircuit(format!("{t} repeats")));
        }
    }
    Ok(())
}

/// Splits a vertex-disjoint union of paths into two matchings by
/// alternating along each path from its smaller end vertex.
pub fn paths_to_two_matchings(
    g: &Multigraph,
    paths: &BTreeSet<EdgeId>,
) -> Result<(BTreeSet<EdgeId>, BTreeSet<EdgeId>), StructureError> {
    let sub = Arc::new(g.edge_subgraph(paths));
    if sub.edge_count() != paths.len() {
        let missing = paths.iter().find(|e| !g.contains_edge(**e)).unwrap();
        return Err(GraphError::UnknownEdge(*missing).into());
    }
    for &v in sub.vertices() {
        if sub.degree(v)? > 2 {
            return Err(StructureError::NotPaths(format!("{v} has degree above 2")));
        }
    }
    let mut first = BTreeSet::new();
    let mut second = BTreeSet::new();
    let mut used = BTreeSet::new();
    for &start in sub.vertices() {
        if sub.degree(start)? != 1 {
            continue;
        }
        let mut cur = start;
        let mut parity = false;
        while let Some(e) = sub.incident_edges(cur)?.into_iter().find(|e| !used.contains(&e.id)) {
            used.insert(e.id);
            if parity { &mut second } else { &mut first }.insert(e.id);
            parity = !parity;
            cur = e.other(cur).unwrap();
        }
    }
    if used.len() != paths.len() {
        return Err(StructureError::NotPaths("contains a cycle".into()));
    }
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;
    use crate::orientation::strong_orientation;

    fn circuits(d: &Orientation) -> Vec<Vec<EdgeId>> {
        // Every directed cycle through each start arc, found by DFS (small graphs only).
        let g = d.graph();
        let mut out = Vec::new();
        for e in g.edges() {
            let (t, h) = d.arc(e.id).unwrap();
            let mut stack = vec![(h, vec![e.id], BTreeSet::from([t, h]))];
            while let Some((x, path, seen)) = stack.pop() {
                for f in g.incident_edges(x).unwrap() {
                    let (ft, fh) = d.arc(f.id).unwrap();
                    if ft != x || path.contains(&f.id) {
                        continue;
                    }
                    if fh == t {
                        let mut p = path.clone();
                        p.push(f.id);
                        if p.iter().all(|&a| a >= e.id) {
                            out.push(p);
                        }
                    } else if !seen.contains(&fh) {
                        let mut p = path.clone();
                        p.push(f.id);
                        let mut s = seen.clone();
                        s.insert(fh);
                        stack.push((fh, p, s));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn every_circuit_has_a_deletable_arc() {
        for name in ["k4", "petersen", "prism3", "k5", "wheel4"] {
            let g = Arc::new(named_graph(name).unwrap());
            let d = strong_orientation(g).unwrap();
            let cs = circuits(&d);
            assert!(!cs.is_empty());
            for c in cs {
                let e = find_deletable_arc_on_circuit(&d, &c).unwrap();
                assert!(c.contains(&e));
                assert!(d.is_deletable_set(&BTreeSet::from([e])), "{name}");
            }
        }
    }

    #[test]
    fn rejects_non_circuits() {
        let g = Arc::new(named_graph("k4").unwrap());
        let d = strong_orientation(g).unwrap();
        assert!(matches!(
            find_deletable_arc_on_circuit(&d, &[]),
            Err(StructureError::NotACircuit(_))
        ));
        let c = circuits(&d).remove(0);
        assert!(find_deletable_arc_on_circuit(&d, &c[..c.len() - 1]).is_err());
    }

    #[test]
    fn single_path_alternates() {
        let g = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (a, b) = paths_to_two_matchings(&g, &g.edge_id_set()).unwrap();
        assert_eq!(a, BTreeSet::from([EdgeId(0), EdgeId(2)]));
        assert_eq!(b, BTreeSet::from([EdgeId(1)]));
        let c3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(paths_to_two_matchings(&c3, &c3.edge_id_set()).is_err());
        let star = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(paths_to_two_matchings(&star, &star.edge_id_set()).is_err());
    }
}
