use super::{Orientation, OrientationError};
use crate::multigraph::{EdgeId, Multigraph, VertexId};
use std::collections::BTreeMap;
use std::sync::Arc;

/// An orientation with in-degree equal to out-degree at every vertex.
pub fn eulerian_orientation(g: Arc<Multigraph>) -> Result<Orientation, OrientationError> {
    eulerian_orientation_constrained(g, &BTreeMap::new())
}

/// Eulerian orientation in which, for every constrained `v -> (e, f)`,
/// exactly one of `e` and `f` enters `v`.
///
/// Each constrained vertex is detached into a degree-2 vertex carrying `e`
/// and `f` and a vertex carrying the rest. Both have even degree, so closed
/// trails cover the detached graph; a trail through the degree-2 vertex
/// enters on one of `e`, `f` and leaves on the other.
pub fn eulerian_orientation_constrained(
    g: Arc<Multigraph>,
    constraints: &BTreeMap<VertexId, (EdgeId, EdgeId)>,
) -> Result<Orientation, OrientationError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    for i in 0..n {
        if g.degree_at(i) % 2 == 1 {
            return Err(OrientationError::NotEulerian(g.vertices()[i]));
        }
    }
    let mut node_ends: Vec<(usize, usize)> = (0..m).map(|k| g.endpoint_indices(k)).collect();
    let mut nodes = n;
    for (&v, &(e, f)) in constraints {
        let bad = |reason: &str| OrientationError::BadConstraint {
            vertex: v,
            reason: reason.to_string(),
        };
        let i = g.vertex_index(v).ok_or_else(|| bad("unknown vertex"))?;
        if e == f {
            return Err(bad("the two constrained edges must differ"));
        }
        let split = nodes;
        nodes += 1;
        for id in [e, f] {
            let k = g.edge_index(id).ok_or_else(|| bad("unknown edge"))?;
            let (a, b) = g.endpoint_indices(k);
            if a == b {
                return Err(bad("a loop cannot be constrained"));
            }
            if a == i {
                node_ends[k].0 = split;
            } else if b == i {
                node_ends[k].1 = split;
            } else {
                return Err(bad("edge is not incident to the vertex"));
            }
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for (k, &(p, q)) in node_ends.iter().enumerate() {
        adj[p].push(k);
        if q != p {
            adj[q].push(k);
        }
    }
    let mut used = vec![false; m];
    let mut ptr = vec![0usize; nodes];
    let mut reversed = vec![false; m];
    for s in 0..nodes {
        let mut cur = s;
        loop {
            while ptr[cur] < adj[cur].len() && used[adj[cur][ptr[cur]]] {
                ptr[cur] += 1;
            }
            let Some(&k) = adj[cur].get(ptr[cur]) else {
                if cur == s {
                    break;
                }
                unreachable!("a trail in an even graph can only get stuck where it started");
            };
            used[k] = true;
            let (p, q) = node_ends[k];
            if p == cur {
                reversed[k] = false;
                cur = q;
            } else {
                reversed[k] = true;
                cur = p;
            }
        }
    }
    Orientation::new(g, reversed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;

    fn balanced(d: &Orientation) -> bool {
        d.graph()
            .vertices()
            .iter()
            .all(|&v| d.in_degree(v).unwrap() == d.out_degree(v).unwrap())
    }

    fn exactly_one_enters(d: &Orientation, v: VertexId, e: EdgeId, f: EdgeId) -> bool {
        (d.head(e) == Some(v)) != (d.head(f) == Some(v))
    }

    #[test]
    fn four_cycle_with_constraint() {
        let g = Arc::new(Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap());
        let c = BTreeMap::from([(VertexId(0), (EdgeId(0), EdgeId(3)))]);
        let d = eulerian_orientation_constrained(g, &c).unwrap();
        assert!(balanced(&d));
        assert!(d.is_strongly_connected());
        assert!(exactly_one_enters(&d, VertexId(0), EdgeId(0), EdgeId(3)));
    }

    #[test]
    fn bowtie_unconstrained() {
        let g = Arc::new(
            Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap(),
        );
        assert!(balanced(&eulerian_orientation(g).unwrap()));
    }

    #[test]
    fn k5_with_two_constraints() {
        let g = Arc::new(named_graph("k5").unwrap());
        // K5 edge order: 01 02 03 04 12 13 14 23 24 34
        let c = BTreeMap::from([
            (VertexId(0), (EdgeId(0), EdgeId(1))),
            (VertexId(4), (EdgeId(3), EdgeId(9))),
        ]);
        let d = eulerian_orientation_constrained(g, &c).unwrap();
        assert!(balanced(&d));
        for (v, (e, f)) in c {
            assert!(exactly_one_enters(&d, v, e, f));
        }
        assert!(d.is_k_arc_connected(2));
    }

    #[test]
    fn loops_and_parallel_edges() {
        let g = Arc::new(Multigraph::from_pairs(2, &[(0, 0), (0, 1), (0, 1), (1, 1)]).unwrap());
        let c = BTreeMap::from([(VertexId(1), (EdgeId(1), EdgeId(2)))]);
        let d = eulerian_orientation_constrained(g, &c).unwrap();
        assert!(balanced(&d));
        assert!(exactly_one_enters(&d, VertexId(1), EdgeId(1), EdgeId(2)));
    }

    #[test]
    fn rejects_bad_input() {
        let k4 = Arc::new(named_graph("k4").unwrap());
        assert!(matches!(
            eulerian_orientation(k4),
            Err(OrientationError::NotEulerian(_))
        ));
        let k5 = Arc::new(named_graph("k5").unwrap());
        let not_incident = BTreeMap::from([(VertexId(0), (EdgeId(0), EdgeId(9)))]);
        assert!(matches!(
            eulerian_orientation_constrained(k5.clone(), &not_incident),
            Err(OrientationError::BadConstraint { .. })
        ));
        let same = BTreeMap::from([(VertexId(0), (EdgeId(0), EdgeId(0)))]);
        assert!(eulerian_orientation_constrained(k5, &same).is_err());
    }
}
