use super::StructureError;
use crate::exact::SolveLimits;
use crate::multigraph::{EdgeId, Multigraph};
use std::collections::BTreeSet;

/// Result of a budgeted Berge–Fulkerson search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BfOutcome {
    /// Six perfect matchings (repeats allowed) covering every edge exactly twice.
    Found(Vec<BTreeSet<EdgeId>>),
    NotFound,
    Indeterminate(String),
}

struct MatchSearch<'a> {
    g: &'a Multigraph,
    matched: Vec<bool>,
    chosen: Vec<usize>,
    all: bool,
    out: Vec<Vec<usize>>,
    limit: usize,
}

impl MatchSearch<'_> {
    /// Unmatched vertices must split into even components over usable edges.
    fn parity_ok(&self) -> bool {
        let n = self.g.vertex_count();
        let mut seen = vec![false; n];
        for s in 0..n {
            if self.matched[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut size = 1;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &k in self.g.incidence_at(x) {
                    let (a, b) = self.g.endpoint_indices(k);
                    let y = if a == x { b } else { a };
                    if !self.matched[y] && !seen[y] {
                        seen[y] = true;
                        size += 1;
                        stack.push(y);
                    }
                }
            }
            if size % 2 == 1 {
                return false;
            }
        }
        true
    }

    /// Returns true once the search should stop.
    fn run(&mut self) -> bool {
        let n = self.g.vertex_count();
        // Most constrained unmatched vertex first.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for x in 0..n {
            if self.matched[x] {
                continue;
            }
            let opts: Vec<usize> = self
                .g
                .incidence_at(x)
                .iter()
                .copied()
                .filter(|&k| {
                    let (a, b) = self.g.endpoint_indices(k);
                    a != b && !self.matched[if a == x { b } else { a }]
                })
                .collect();
            if best.as_ref().is_none_or(|(_, o)| opts.len() < o.len()) {
                best = Some((x, opts));
            }
        }
        let Some((x, opts)) = best else {
            self.out.push(self.chosen.clone());
            return !self.all || self.out.len() >= self.limit;
        };
        if opts.is_empty() || !self.parity_ok() {
            return false;
        }
        let mut tried_neighbors = BTreeSet::new();
        for k in opts {
            let (a, b) = self.g.endpoint_indices(k);
            let y = if a == x { b } else { a };
            // A parallel edge leads to the same subproblem when only one matching is wanted.
            if !self.all && !tried_neighbors.insert(y) {
                continue;
            }
            self.matched[x] = true;
            self.matched[y] = true;
            self.chosen.push(k);
            let stop = self.run();
            self.chosen.pop();
            self.matched[x] = false;
            self.matched[y] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

fn to_ids(g: &Multigraph, ks: &[usize]) -> BTreeSet<EdgeId> {
    ks.iter().map(|&k| g.edge_at(k).id).collect()
}

/// Some perfect matching, found by backtracking with a parity cut-off.
pub fn perfect_matching(g: &Multigraph) -> Option<BTreeSet<EdgeId>> {
    if g.vertex_count() % 2 == 1 {
        return None;
    }
    let mut s = MatchSearch {
        g,
        matched: vec![false; g.vertex_count()],
        chosen: Vec::new(),
        all: false,
        out: Vec::new(),
        limit: 1,
    };
    s.run();
    s.out.first().map(|ks| to_ids(g, ks))
}

/// Up to `count` perfect matchings in search order.
pub(crate) fn first_perfect_matchings(g: &Multigraph, count: usize) -> Vec<BTreeSet<EdgeId>> {
    if g.vertex_count() % 2 == 1 || count == 0 {
        return Vec::new();
    }
    let mut s = MatchSearch {
        g,
        matched: vec![false; g.vertex_count()],
        chosen: Vec::new(),
        all: true,
        out: Vec::new(),
        limit: count,
    };
    s.run();
    s.out.iter().map(|ks| to_ids(g, ks)).collect()
}

/// All perfect matchings, sorted. Fails once more than `limit` exist.
pub fn enumerate_perfect_matchings(g: &Multigraph, limit: usize) -> Result<Vec<BTreeSet<EdgeId>>, StructureError> {
    let mut out = first_perfect_matchings(g, limit.saturating_add(1));
    if out.len() > limit {
        return Err(StructureError::Budget(format!("more than {limit} perfect matchings")));
    }
    out.sort();
    Ok(out)
}

/// A proper 3-edge-coloring of a cubic graph as three perfect matchings, or
/// `None` if the graph is not 3-edge-colorable.
pub fn proper_3_edge_coloring(g: &Multigraph) -> Result<Option<[BTreeSet<EdgeId>; 3]>, StructureError> {
    if !g.is_cubic() {
        return Err(StructureError::NotCubic);
    }
    let m = g.edge_count();
    if (0..m).any(|k| g.edge_at(k).is_loop()) {
        return Ok(None);
    }
    // Order edges so each one after the first touches an earlier one.
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    for start in 0..m {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let k = order[head];
            head += 1;
            let (a, b) = g.endpoint_indices(k);
            for x in [a, b] {
                for &j in g.incidence_at(x) {
                    if !placed[j] {
                        placed[j] = true;
                        order.push(j);
                    }
                }
            }
        }
    }
    let mut color = vec![u8::MAX; m];
    fn go(g: &Multigraph, order: &[usize], pos: usize, color: &mut [u8]) -> bool {
        let Some(&k) = order.get(pos) else {
            return true;
        };
        let (a, b) = g.endpoint_indices(k);
        let mut banned = 0u8;
        for x in [a, b] {
            for &j in g.incidence_at(x) {
                if color[j] != u8::MAX {
                    banned |= 1 << color[j];
                }
            }
        }
        // The first edge of a component may take color 0 without loss.
        let top = if color.iter().all(|&c| c == u8::MAX) { 1 } else { 3 };
        for c in 0..top {
            if banned >> c & 1 == 0 {
                color[k] = c;
                if go(g, order, pos + 1, color) {
                    return true;
                }
                color[k] = u8::MAX;
            }
        }
        false
    }
    if !go(g, &order, 0, &mut color) {
        return Ok(None);
    }
    let class = |c: u8| (0..m).filter(|&k| color[k] == c).map(|k| g.edge_at(k).id).collect();
    Ok(Some([class(0), class(1), class(2)]))
}

/// Six perfect matchings covering every edge exactly twice, searched over
/// the enumerated perfect matchings within `limits.node_budget`.
pub fn berge_fulkerson_cover(g: &Multigraph, limits: &SolveLimits) -> Result<BfOutcome, StructureError> {
    if !g.is_cubic() {
        return Err(StructureError::NotCubic);
    }
    if limits.node_budget == 0 {
        return Ok(BfOutcome::Indeterminate("node budget is zero".into()));
    }
    let cap = usize::try_from(limits.node_budget).unwrap_or(usize::MAX).min(1 << 20);
    let matchings = match enumerate_perfect_matchings(g, cap) {
        Ok(ms) => ms,
        Err(StructureError::Budget(msg)) => return Ok(BfOutcome::Indeterminate(msg)),
        Err(e) => return Err(e),
    };
    let m = g.edge_count();
    let sets: Vec<Vec<usize>> = matchings
        .iter()
        .map(|ms| ms.iter().map(|&e| g.edge_index(e).unwrap()).collect())
        .collect();
    let mut holders = vec![Vec::new(); m];
    for (i, s) in sets.iter().enumerate() {
        for &k in s {
            holders[k].push(i);
        }
    }
    struct Cover<'a> {
        sets: &'a [Vec<usize>],
        holders: &'a [Vec<usize>],
        count: Vec<u8>,
        chosen: Vec<usize>,
        nodes: u64,
        budget: u64,
    }
    impl Cover<'_> {
        fn fits(&self, i: usize) -> bool {
            self.sets[i].iter().all(|&k| self.count[k] < 2)
        }
        fn go(&mut self) -> Option<bool> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            // Edge still short of two covers with the fewest usable matchings.
            let mut pick: Option<(usize, Vec<usize>)> = None;
            for k in 0..self.count.len() {
                if self.count[k] == 2 {
                    continue;
                }
                let opts: Vec<usize> = self.holders[k].iter().copied().filter(|&i| self.fits(i)).collect();
                if pick.as_ref().is_none_or(|(_, o)| opts.len() < o.len()) {
                    pick = Some((k, opts));
                }
            }
            let Some((_, opts)) = pick else {
                return Some(true);
            };
            for i in opts {
                for &k in &self.sets[i] {
                    self.count[k] += 1;
                }
                self.chosen.push(i);
                match self.go() {
                    Some(false) => {}
                    other => return other,
                }
                self.chosen.pop();
                for &k in &self.sets[i] {
                    self.count[k] -= 1;
                }
            }
            Some(false)
        }
    }
    let mut c = Cover {
        sets: &sets,
        holders: &holders,
        count: vec![0; m],
        chosen: Vec::new(),
        nodes: 0,
        budget: limits.node_budget,
    };
    Ok(match c.go() {
        None => BfOutcome::Indeterminate(format!("node budget {} exhausted", limits.node_budget)),
        Some(false) => BfOutcome::NotFound,
        Some(true) => {
            let mut chosen = c.chosen.clone();
            chosen.sort();
            debug_assert_eq!(chosen.len(), 6);
            BfOutcome::Found(chosen.into_iter().map(|i| matchings[i].clone()).collect())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;

    fn is_perfect_matching(g: &Multigraph, m: &BTreeSet<EdgeId>) -> bool {
        let mut hit = vec![0; g.vertex_count()];
        for &e in m {
            let k = g.edge_index(e).unwrap();
            let (a, b) = g.endpoint_indices(k);
            if a == b {
                return false;
            }
            hit[a] += 1;
            hit[b] += 1;
        }
        hit.iter().all(|&h| h == 1)
    }

    /// Every edge subset that is a perfect matching.
    fn brute_matchings(g: &Multigraph) -> Vec<BTreeSet<EdgeId>> {
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        let mut out: Vec<BTreeSet<EdgeId>> = (0u32..1 << ids.len())
            .map(|mask| (0..ids.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]).collect())
            .filter(|m| is_perfect_matching(g, m))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for name in ["petersen", "k4", "k33", "prism3", "cube", "theta", "wheel4", "fat_triangle"] {
            let g = named_graph(name).unwrap();
            let got = enumerate_perfect_matchings(&g, 10_000).unwrap();
            assert_eq!(got, brute_matchings(&g), "{name}");
            match perfect_matching(&g) {
                Some(m) => assert!(is_perfect_matching(&g, &m)),
                None => assert!(got.is_empty(), "{name}"),
            }
        }
        assert_eq!(enumerate_perfect_matchings(&named_graph("petersen").unwrap(), 100).unwrap().len(), 6);
        assert!(enumerate_perfect_matchings(&named_graph("petersen").unwrap(), 5).is_err());
    }

    #[test]
    fn petersen_is_not_colorable() {
        let p = named_graph("petersen").unwrap();
        assert_eq!(proper_3_edge_coloring(&p).unwrap(), None);
        for name in ["k4", "k33", "prism3", "cube", "heawood", "dodecahedron", "theta"] {
            let g = named_graph(name).unwrap();
            let [a, b, c] = proper_3_edge_coloring(&g).unwrap().expect(name);
            for m in [&a, &b, &c] {
                assert!(is_perfect_matching(&g, m), "{name}");
            }
            assert_eq!(a.len() + b.len() + c.len(), g.edge_count());
        }
        assert_eq!(proper_3_edge_coloring(&named_graph("k5").unwrap()), Err(StructureError::NotCubic));
    }

    #[test]
    fn petersen_double_cover() {
        let p = named_graph("petersen").unwrap();
        let BfOutcome::Found(ms) = berge_fulkerson_cover(&p, &SolveLimits::default()).unwrap() else {
            panic!("Petersen has a Berge-Fulkerson cover");
        };
        assert_eq!(ms.len(), 6);
        for e in p.edge_ids() {
            assert_eq!(ms.iter().filter(|m| m.contains(&e)).count(), 2);
        }
        let zero = SolveLimits {
            node_budget: 0,
            ..SolveLimits::default()
        };
        assert!(matches!(berge_fulkerson_cover(&p, &zero).unwrap(), BfOutcome::Indeterminate(_)));
    }
}
