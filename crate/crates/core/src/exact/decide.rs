//! DELETABILITY: is there an orientation in which every arc of `S` is deletable?
//!
//! Small instances are enumerated. Larger ones are searched by backtracking
//! over edge directions. A partial assignment is pruned when
//!
//! * the graph with undecided edges usable both ways is not strongly connected,
//! * a decided arc of `S` has no detour in that relaxed graph, or
//! * some precomputed edge cut of size at most four can no longer satisfy the
//!   cut rule: `δ⁻(X)` needs an arc outside `S` or at least two arcs, and
//!   likewise `δ⁺(X)`.
//!
//! The first two rules imply the vertex-local version of the cut rule.

use super::kernel::{reach, Kernel};
use super::{orientation_from_mask, require_kernel, DecideOutcome, ExactError, SolveLimits};
use crate::multigraph::{Dsu, EdgeId, Multigraph, VertexId};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Instant;

/// Edges whose directions are tied: either every tail is as listed or every
/// edge is reversed. Used to keep a cycle oriented as a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkedArcs {
    pub tails: BTreeMap<EdgeId, VertexId>,
}

/// A group of arcs flipped together: `(arc, bit when the group is unflipped)`.
type Group = Vec<(usize, bool)>;

pub fn deletability_decide(
    g: &Arc<Multigraph>,
    s: &BTreeSet<EdgeId>,
    limits: &SolveLimits,
) -> Result<DecideOutcome, ExactError> {
    deletability_decide_linked(g, s, &[], limits)
}

/// Deletability of `s` among orientations respecting every linked group.
pub fn deletability_decide_linked(
    g: &Arc<Multigraph>,
    s: &BTreeSet<EdgeId>,
    linked: &[LinkedArcs],
    limits: &SolveLimits,
) -> Result<DecideOutcome, ExactError> {
    if !g.is_connected() {
        return Err(ExactError::NotConnected);
    }
    for &e in s {
        if !g.contains_edge(e) {
            return Err(crate::multigraph::GraphError::UnknownEdge(e).into());
        }
    }
    let k = require_kernel(g)?;
    if k.arcs() > 64 {
        return Err(ExactError::TooLarge { arcs: k.arcs(), cap: 64 });
    }
    let groups = build_groups(g, &k, linked)?;
    let s_mask = (0..k.arcs())
        .filter(|&j| s.contains(&g.edge_at(k.edge_index[j]).id))
        .fold(0u64, |m, j| m | 1 << j);

    if !g.bridges().is_empty() {
        return Ok(DecideOutcome::No);
    }
    if groups.is_empty() {
        // Single vertex or loops only.
        let d = orientation_from_mask(g, &k, 0);
        return Ok(if d.is_deletable_set(s) { DecideOutcome::Yes(d) } else { DecideOutcome::No });
    }

    let found = if groups.len() <= limits.max_enum_edges.min(40) {
        enumerate(&k, &groups, s_mask)
    } else {
        match Search::new(&k, groups, s_mask, limits).run() {
            SearchEnd::Found(dir) => Some(dir),
            SearchEnd::Exhausted => None,
            SearchEnd::OutOfBudget(why) => return Ok(DecideOutcome::Indeterminate(why)),
        }
    };
    Ok(match found {
        Some(dir) => {
            let d = orientation_from_mask(g, &k, dir);
            assert!(d.is_deletable_set(s), "deletability witness failed verification");
            DecideOutcome::Yes(d)
        }
        None => DecideOutcome::No,
    })
}

fn build_groups(g: &Multigraph, k: &Kernel, linked: &[LinkedArcs]) -> Result<Vec<Group>, ExactError> {
    let arc_of: BTreeMap<EdgeId, usize> =
        (0..k.arcs()).map(|j| (g.edge_at(k.edge_index[j]).id, j)).collect();
    let mut taken = vec![false; k.arcs()];
    let mut groups = Vec::new();
    for l in linked {
        let mut group = Vec::new();
        for (&e, &t) in &l.tails {
            let &j = arc_of
                .get(&e)
                .ok_or_else(|| ExactError::BadLinkedGroup(format!("{e} is unknown or a loop")))?;
            if taken[j] {
                return Err(ExactError::BadLinkedGroup(format!("{e} is in two groups")));
            }
            taken[j] = true;
            let edge = g.edge_at(k.edge_index[j]);
            let bit = if t == edge.u {
                false
            } else if t == edge.v {
                true
            } else {
                return Err(ExactError::BadLinkedGroup(format!("{t} is not an endpoint of {e}")));
            };
            group.push((j, bit));
        }
        if !group.is_empty() {
            groups.push(group);
        }
    }
    for j in 0..k.arcs() {
        if !taken[j] {
            groups.push(vec![(j, false)]);
        }
    }
    Ok(groups)
}

fn apply(group: &Group, flip: bool) -> u64 {
    group
        .iter()
        .filter(|&&(_, bit)| bit != flip)
        .fold(0u64, |m, &(j, _)| m | 1 << j)
}

fn satisfies(k: &Kernel, dir: u64, s_mask: u64) -> bool {
    matches!(k.deletable(dir), Some(del) if del & s_mask == s_mask)
}

fn enumerate(k: &Kernel, groups: &[Group], s_mask: u64) -> Option<u64> {
    // Reversal maps the choice vector to its complement, so group 0 stays unflipped.
    let base = apply(&groups[0], false);
    let rest = &groups[1..];
    let total: u64 = 1 << rest.len();
    (0..total).into_par_iter().find_first(|&choice| {
        let dir = rest
            .iter()
            .enumerate()
            .fold(base, |m, (i, gr)| m | apply(gr, choice >> i & 1 == 1));
        satisfies(k, dir, s_mask)
    })
    .map(|choice| {
        rest.iter()
            .enumerate()
            .fold(base, |m, (i, gr)| m | apply(gr, choice >> i & 1 == 1))
    })
}

/// A cut `δ(X)` of at most four edges, as arcs with their orientation relative to `X`.
struct SmallCut {
    /// `(arc, x_side_endpoint_is_u)`
    arcs: Vec<(usize, bool)>,
}

/// Every edge cut with at most `max` edges whose removal leaves exactly two
/// components, each edge joining them.
fn small_cuts(k: &Kernel, max: usize) -> Vec<SmallCut> {
    let m = k.arcs();
    let mut out = Vec::new();
    let mut pick: Vec<usize> = Vec::new();
    fn rec(k: &Kernel, start: usize, max: usize, pick: &mut Vec<usize>, out: &mut Vec<SmallCut>) {
        if !pick.is_empty() {
            if let Some(cut) = as_cut(k, pick) {
                out.push(cut);
                // A minimal cut plus more edges is not a minimal cut.
                return;
            }
        }
        if pick.len() == max {
            return;
        }
        for j in start..k.arcs() {
            pick.push(j);
            rec(k, j + 1, max, pick, out);
            pick.pop();
        }
    }
    if m > 0 {
        rec(k, 0, max, &mut pick, &mut out);
    }
    out
}

fn as_cut(k: &Kernel, pick: &[usize]) -> Option<SmallCut> {
    let mut dsu = Dsu::new(k.n);
    for j in 0..k.arcs() {
        if !pick.contains(&j) {
            dsu.union(k.ends[j].0, k.ends[j].1);
        }
    }
    let r0 = dsu.find(0);
    let side: Vec<bool> = (0..k.n).map(|v| dsu.find(v) == r0).collect();
    let other = (0..k.n).find(|&v| !side[v])?;
    let r1 = dsu.find(other);
    if (0..k.n).any(|v| !side[v] && dsu.find(v) != r1) {
        return None;
    }
    let mut arcs = Vec::new();
    for &j in pick {
        let (a, b) = k.ends[j];
        if side[a] == side[b] {
            return None;
        }
        arcs.push((j, side[a]));
    }
    Some(SmallCut { arcs })
}

enum SearchEnd {
    Found(u64),
    Exhausted,
    OutOfBudget(String),
}

struct Search<'a> {
    k: &'a Kernel,
    groups: Vec<Group>,
    s_mask: u64,
    cuts: Vec<SmallCut>,
    /// Cuts touched by each group.
    cuts_of_group: Vec<Vec<usize>>,
    nodes: u64,
    limits: &'a SolveLimits,
    started: Instant,
}

impl<'a> Search<'a> {
    fn new(k: &'a Kernel, groups: Vec<Group>, s_mask: u64, limits: &'a SolveLimits) -> Self {
        let max_cut = if k.arcs() <= 48 { 4 } else { 3 };
        let cuts = small_cuts(k, max_cut);
        let mut on_cut = vec![usize::MAX; k.arcs()];
        for c in &cuts {
            for &(j, _) in &c.arcs {
                on_cut[j] = on_cut[j].min(c.arcs.len());
            }
        }
        // Edges on the smallest cuts first, then edges of S, then by BFS rank.
        let rank = bfs_rank(k);
        let mut groups = groups;
        let key = |gr: &Group| {
            let cut = gr.iter().map(|&(j, _)| on_cut[j]).min().unwrap_or(usize::MAX);
            let in_s = gr.iter().any(|&(j, _)| s_mask >> j & 1 == 1);
            let r = gr.iter().map(|&(j, _)| rank[j]).min().unwrap_or(usize::MAX);
            (cut, !in_s, r)
        };
        groups.sort_by_key(|g| key(g));
        let mut group_of = vec![0; k.arcs()];
        for (i, gr) in groups.iter().enumerate() {
            for &(j, _) in gr {
                group_of[j] = i;
            }
        }
        let mut cuts_of_group = vec![Vec::new(); groups.len()];
        for (c, cut) in cuts.iter().enumerate() {
            let mut gs: Vec<usize> = cut.arcs.iter().map(|&(j, _)| group_of[j]).collect();
            gs.sort();
            gs.dedup();
            for gi in gs {
                cuts_of_group[gi].push(c);
            }
        }
        Search {
            k,
            groups,
            s_mask,
            cuts,
            cuts_of_group,
            nodes: 0,
            limits,
            started: Instant::now(),
        }
    }

    fn run(mut self) -> SearchEnd {
        // Statically hopeless cuts: nothing is decided yet.
        for c in &self.cuts {
            if !cut_feasible(c, 0, 0, self.s_mask) {
                return SearchEnd::Exhausted;
            }
        }
        let first = apply(&self.groups[0], false);
        let decided = self.groups[0].iter().fold(0u64, |m, &(j, _)| m | 1 << j);
        match self.descend(1, first, decided) {
            Ok(Some(dir)) => SearchEnd::Found(dir),
            Ok(None) => SearchEnd::Exhausted,
            Err(why) => SearchEnd::OutOfBudget(why),
        }
    }

    fn descend(&mut self, depth: usize, dir: u64, decided: u64) -> Result<Option<u64>, String> {
        self.nodes += 1;
        if self.nodes > self.limits.node_budget {
            return Err(format!("node budget of {} exhausted", self.limits.node_budget));
        }
        if self.nodes % 4096 == 0 {
            if let Some(t) = self.limits.time_budget {
                if self.started.elapsed() > t {
                    return Err(format!("time budget of {t:?} exhausted"));
                }
            }
        }
        if !self.consistent(depth, dir, decided) {
            return Ok(None);
        }
        if depth == self.groups.len() {
            return Ok(satisfies(self.k, dir, self.s_mask).then_some(dir));
        }
        let span = self.groups[depth].iter().fold(0u64, |m, &(j, _)| m | 1 << j);
        for flip in [false, true] {
            let next = dir | apply(&self.groups[depth], flip);
            if let Some(found) = self.descend(depth + 1, next, decided | span)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    fn consistent(&self, depth: usize, dir: u64, decided: u64) -> bool {
        let k = self.k;
        let (out, inn) = k.adjacency(dir, decided);
        if !k.strongly_connected(&out, &inn) {
            return false;
        }
        let mut pending = decided & self.s_mask;
        while pending != 0 {
            let j = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            let (t, h) = k.arc(dir, j);
            if k.co_directed(dir, decided, j) == 0 && reach(&out, t, Some((t, h))) >> h & 1 == 0 {
                return false;
            }
        }
        if depth > 0 {
            for &c in &self.cuts_of_group[depth - 1] {
                if !cut_feasible(&self.cuts[c], dir, decided, self.s_mask) {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether some completion of the cut's undecided arcs gives both directions
/// an arc outside `S` or at least two arcs.
fn cut_feasible(c: &SmallCut, dir: u64, decided: u64, s_mask: u64) -> bool {
    let free: Vec<usize> = (0..c.arcs.len()).filter(|&i| decided >> c.arcs[i].0 & 1 == 0).collect();
    'choice: for choice in 0u32..1 << free.len() {
        let (mut n_in, mut n_out, mut plain_in, mut plain_out) = (0, 0, false, false);
        for (i, &(j, x_is_u)) in c.arcs.iter().enumerate() {
            let reversed = match free.iter().position(|&f| f == i) {
                Some(p) => choice >> p & 1 == 1,
                None => dir >> j & 1 == 1,
            };
            // Tail is u unless reversed; the arc leaves X when its tail is on the X side.
            let leaves = x_is_u != reversed;
            let plain = s_mask >> j & 1 == 0;
            if leaves {
                n_out += 1;
                plain_out |= plain;
            } else {
                n_in += 1;
                plain_in |= plain;
            }
        }
        for (n, plain) in [(n_in, plain_in), (n_out, plain_out)] {
            if !(plain && n >= 1 || n >= 2) {
                continue 'choice;
            }
        }
        return true;
    }
    false
}

fn bfs_rank(k: &Kernel) -> Vec<usize> {
    let mut rank = vec![usize::MAX; k.arcs()];
    let mut seen = vec![false; k.n];
    let mut next = 0;
    for s in 0..k.n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for j in 0..k.arcs() {
                let (a, b) = k.ends[j];
                if (a == x || b == x) && rank[j] == usize::MAX {
                    rank[j] = next;
                    next += 1;
                    let y = if a == x { b } else { a };
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    rank
}
