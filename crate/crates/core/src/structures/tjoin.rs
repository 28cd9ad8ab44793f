use super::StructureError;
use crate::multigraph::{Dsu, EdgeId, GraphError, Multigraph, VertexId};
use std::collections::{BTreeSet, VecDeque};

/// An edge set whose odd-degree vertices are exactly `t`, built inside a
/// BFS spanning forest. `None` when some component holds an odd number of
/// `t`-vertices.
pub fn t_join(g: &Multigraph, t: &BTreeSet<VertexId>) -> Result<Option<BTreeSet<EdgeId>>, GraphError> {
    let n = g.vertex_count();
    let mut odd = vec![false; n];
    for &v in t {
        odd[g.vertex_index(v).ok_or(GraphError::UnknownVertex(v))?] = true;
    }
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &k in g.incidence_at(x) {
                let (a, b) = g.endpoint_indices(k);
                let y = if a == x { b } else { a };
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(k);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut join = BTreeSet::new();
    for &x in order.iter().rev() {
        if !odd[x] {
            continue;
        }
        let Some(k) = parent[x] else {
            return Ok(None);
        };
        let (a, b) = g.endpoint_indices(k);
        let up = if a == x { b } else { a };
        join.insert(g.edge_at(k).id);
        odd[x] = false;
        odd[up] = !odd[up];
    }
    Ok(Some(join))
}

/// Two edge-disjoint spanning trees by matroid partition: each unused edge
/// is inserted along a shortest exchange chain through the two forests.
pub fn two_edge_disjoint_spanning_trees(g: &Multigraph) -> Option<(BTreeSet<EdgeId>, BTreeSet<EdgeId>)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 || !g.is_connected() {
        return None;
    }
    // owner[k]: 0 unused, 1 or 2 the forest holding edge k.
    let mut owner = vec![0u8; m];
    let ends: Vec<(usize, usize)> = (0..m).map(|k| g.endpoint_indices(k)).collect();
    let mut sizes = [0usize; 2];
    for x in 0..m {
        if ends[x].0 == ends[x].1 {
            continue;
        }
        if sizes == [n - 1, n - 1] {
            break;
        }
        // BFS over edges; label[y] = (edge that displaces y, forest it enters).
        let mut label: Vec<Option<(usize, u8)>> = vec![None; m];
        let mut visited = vec![false; m];
        visited[x] = true;
        let mut queue = VecDeque::from([x]);
        let mut finish = None;
        'bfs: while let Some(y) = queue.pop_front() {
            for f in [1u8, 2] {
                if owner[y] == f {
                    continue;
                }
                match forest_path(n, &ends, &owner, f, ends[y].0, ends[y].1) {
                    None => {
                        finish = Some((y, f));
                        break 'bfs;
                    }
                    Some(path) => {
                        for z in path {
                            if !visited[z] {
                                visited[z] = true;
                                label[z] = Some((y, f));
                                queue.push_back(z);
                            }
                        }
                    }
                }
            }
        }
        let Some((mut y, mut f)) = finish else {
            continue;
        };
        loop {
            let prev = owner[y];
            if prev != 0 {
                sizes[prev as usize - 1] -= 1;
            }
            owner[y] = f;
            sizes[f as usize - 1] += 1;
            match label[y] {
                Some((from, into)) => {
                    y = from;
                    f = into;
                }
                None => break,
            }
        }
        debug_assert!(forests_are_acyclic(n, &ends, &owner));
    }
    if sizes != [n - 1, n - 1] || !forests_are_acyclic(n, &ends, &owner) {
        return None;
    }
    let tree = |f: u8| (0..m).filter(|&k| owner[k] == f).map(|k| g.edge_at(k).id).collect();
    Some((tree(1), tree(2)))
}

/// Edge indices on the path between `s` and `t` in forest `f`, `None` if
/// they lie in different trees.
fn forest_path(n: usize, ends: &[(usize, usize)], owner: &[u8], f: u8, s: usize, t: usize) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (k, &(a, b)) in ends.iter().enumerate() {
        if owner[k] == f {
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
    }
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &(y, k) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                pred[y] = Some((x, k));
                queue.push_back(y);
            }
        }
    }
    if !seen[t] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = t;
    while let Some((p, k)) = pred[cur] {
        path.push(k);
        cur = p;
    }
    Some(path)
}

fn forests_are_acyclic(n: usize, ends: &[(usize, usize)], owner: &[u8]) -> bool {
    [1u8, 2].iter().all(|&f| {
        let mut dsu = Dsu::new(n);
        ends.iter()
            .zip(owner)
            .filter(|(_, &o)| o == f)
            .all(|(&(a, b), _)| dsu.union(a, b))
    })
}

/// Splits the edges of a 4-edge-connected graph into three `T`-joins, `T`
/// the odd-degree vertices: `F1` and `F2` inside two disjoint spanning trees,
/// `F3` everything else. Loops always land in `F3`. A single vertex is allowed.
pub fn partition_into_three_tjoins(g: &Multigraph) -> Result<[BTreeSet<EdgeId>; 3], StructureError> {
    let t: BTreeSet<VertexId> = g.odd_vertices().into_iter().collect();
    if g.vertex_count() <= 1 {
        return Ok([BTreeSet::new(), BTreeSet::new(), g.edge_id_set()]);
    }
    if !g.is_k_edge_connected(4) {
        return Err(StructureError::NotKEdgeConnected(4));
    }
    let (t1, t2) = two_edge_disjoint_spanning_trees(g).ok_or_else(|| {
        StructureError::Postcondition("no two disjoint spanning trees in a 4-edge-connected graph".into())
    })?;
    let f1 = t_join(&g.edge_subgraph(&t1), &t)?.expect("a spanning tree carries every even T-join");
    let f2 = t_join(&g.edge_subgraph(&t2), &t)?.expect("a spanning tree carries every even T-join");
    let f3: BTreeSet<EdgeId> = g
        .edge_ids()
        .filter(|e| !f1.contains(e) && !f2.contains(e))
        .collect();
    for f in [&f1, &f2, &f3] {
        if odd_set(g, f) != t {
            return Err(StructureError::Postcondition("partition class is not a T-join".into()));
        }
    }
    Ok([f1, f2, f3])
}

pub(crate) fn odd_set(g: &Multigraph, f: &BTreeSet<EdgeId>) -> BTreeSet<VertexId> {
    g.edge_subgraph(f).odd_vertices().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;
    use proptest::prelude::*;

    #[test]
    fn tjoin_parity() {
        let c4 = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let all: BTreeSet<VertexId> = c4.vertices().iter().copied().collect();
        let j = t_join(&c4, &all).unwrap().unwrap();
        assert_eq!(j.len(), 2);
        assert_eq!(odd_set(&c4, &j), all);
        let three: BTreeSet<VertexId> = [0, 1, 2].map(VertexId).into();
        assert_eq!(t_join(&c4, &three).unwrap(), None);
        assert_eq!(t_join(&c4, &BTreeSet::new()).unwrap(), Some(BTreeSet::new()));
    }

    #[test]
    fn trees_in_k5_and_petersen() {
        let k5 = named_graph("k5").unwrap();
        let (a, b) = two_edge_disjoint_spanning_trees(&k5).unwrap();
        assert_eq!((a.len(), b.len()), (4, 4));
        assert!(a.is_disjoint(&b));
        assert!(k5.edge_subgraph(&a).is_connected() && k5.edge_subgraph(&b).is_connected());
        // 15 edges but 2 * 9 = 18 are needed.
        assert!(two_edge_disjoint_spanning_trees(&named_graph("petersen").unwrap()).is_none());
    }

    #[test]
    fn three_tjoins_of_k5() {
        let k5 = named_graph("k5").unwrap();
        let [f1, f2, f3] = partition_into_three_tjoins(&k5).unwrap();
        assert_eq!(f1.len() + f2.len() + f3.len(), 10);
        for f in [&f1, &f2, &f3] {
            assert!(odd_set(&k5, f).is_empty());
        }
        let single = Multigraph::new([VertexId(0)], [crate::multigraph::Edge::new(0, 0, 0)]).unwrap();
        let [a, b, c] = partition_into_three_tjoins(&single).unwrap();
        assert!(a.is_empty() && b.is_empty());
        assert_eq!(c, BTreeSet::from([EdgeId(0)]));
        assert!(partition_into_three_tjoins(&named_graph("k4").unwrap()).is_err());
    }

    /// Oracle: whether two disjoint spanning trees exist, by trying every
    /// pair of disjoint (n-1)-edge subsets.
    fn brute_two_trees(g: &Multigraph) -> bool {
        let n = g.vertex_count();
        let m = g.edge_count();
        let spanning = |mask: u32| {
            let mut dsu = Dsu::new(n);
            let mut joins = 0;
            for k in 0..m {
                if mask >> k & 1 == 1 {
                    let (a, b) = g.endpoint_indices(k);
                    if !dsu.union(a, b) {
                        return false;
                    }
                    joins += 1;
                }
            }
            joins == n - 1
        };
        let trees: Vec<u32> = (0u32..1 << m).filter(|&s| spanning(s)).collect();
        trees.iter().any(|&a| trees.iter().any(|&b| a & b == 0))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn trees_match_oracle(pairs in prop::collection::vec((0u32..5, 0u32..5), 4..12)) {
            let g = Multigraph::from_pairs(5, &pairs).unwrap();
            let got = two_edge_disjoint_spanning_trees(&g);
            prop_assert_eq!(got.is_some(), brute_two_trees(&g));
            if let Some((a, b)) = got {
                prop_assert!(a.is_disjoint(&b));
                prop_assert!(g.edge_subgraph(&a).is_connected());
                prop_assert!(g.edge_subgraph(&b).is_connected());
            }
        }

        #[test]
        fn tjoin_has_requested_odd_set(
            pairs in prop::collection::vec((0u32..6, 0u32..6), 0..12),
            mask in 0u32..64,
        ) {
            let g = Multigraph::from_pairs(6, &pairs).unwrap();
            let t: BTreeSet<VertexId> = (0..6).filter(|i| mask >> i & 1 == 1).map(VertexId).collect();
            let even_everywhere = g.connected_components().iter().all(|c| c.intersection(&t).count() % 2 == 0);
            match t_join(&g, &t).unwrap() {
                Some(j) => prop_assert_eq!(odd_set(&g, &j), t),
                None => prop_assert!(!even_everywhere),
            }
        }
    }
}
