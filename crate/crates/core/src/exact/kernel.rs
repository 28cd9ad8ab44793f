//! Bitset kernels for graphs with at most 64 vertices.
//!
//! Arc `j` is the `j`-th non-loop edge of the graph. Bit `j` of a direction
//! mask set means the arc runs from the edge's `v` endpoint to its `u` endpoint.

use crate::multigraph::Multigraph;

pub(crate) const MAX_KERNEL_VERTICES: usize = 64;

#[derive(Debug, Clone)]
pub(crate) struct Kernel {
    pub n: usize,
    /// `(u, v)` vertex indices of each non-loop edge.
    pub ends: Vec<(usize, usize)>,
    /// Graph edge index of each arc.
    pub edge_index: Vec<usize>,
    /// Other arcs with the same endpoint pair.
    pub parallel: Vec<Vec<usize>>,
}

impl Kernel {
    pub fn new(g: &Multigraph) -> Option<Kernel> {
        let n = g.vertex_count();
        if n > MAX_KERNEL_VERTICES {
            return None;
        }
        let mut ends = Vec::new();
        let mut edge_index = Vec::new();
        for k in 0..g.edge_count() {
            let (a, b) = g.endpoint_indices(k);
            if a != b {
                ends.push((a, b));
                edge_index.push(k);
            }
        }
        let key = |(a, b): (usize, usize)| (a.min(b), a.max(b));
        let parallel = (0..ends.len())
            .map(|j| {
                (0..ends.len())
                    .filter(|&i| i != j && key(ends[i]) == key(ends[j]))
                    .collect()
            })
            .collect();
        Some(Kernel {
            n,
            ends,
            edge_index,
            parallel,
        })
    }

    pub fn arcs(&self) -> usize {
        self.ends.len()
    }

    /// `(tail, head)` of arc `j` under direction mask `dir`.
    #[inline]
    pub fn arc(&self, dir: u64, j: usize) -> (usize, usize) {
        let (a, b) = self.ends[j];
        if dir >> j & 1 == 1 {
            (b, a)
        } else {
            (a, b)
        }
    }

    pub fn full_vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Out- and in-neighbour masks. Arcs not in `decided` are usable both ways.
    pub fn adjacency(&self, dir: u64, decided: u64) -> (Vec<u64>, Vec<u64>) {
        let mut out = vec![0u64; self.n];
        let mut inn = vec![0u64; self.n];
        for j in 0..self.arcs() {
            if decided >> j & 1 == 1 {
                let (t, h) = self.arc(dir, j);
                out[t] |= 1 << h;
                inn[h] |= 1 << t;
            } else {
                let (a, b) = self.ends[j];
                out[a] |= 1 << b;
                out[b] |= 1 << a;
                inn[a] |= 1 << b;
                inn[b] |= 1 << a;
            }
        }
        (out, inn)
    }

    pub fn strongly_connected(&self, out: &[u64], inn: &[u64]) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = self.full_vertex_mask();
        reach(out, 0, None) == full && reach(inn, 0, None) == full
    }

    /// Whether `h` stays reachable from `t` once one `t -> h` arc is removed.
    /// Only called when no other `t -> h` arc exists.
    #[inline]
    pub fn detour(&self, out: &[u64], t: usize, h: usize) -> bool {
        reach(out, t, Some((t, h))) >> h & 1 == 1
    }

    /// Number of arcs `t -> h` besides `j`, given the decided set.
    pub fn co_directed(&self, dir: u64, decided: u64, j: usize) -> usize {
        let me = self.arc(dir, j);
        self.parallel[j]
            .iter()
            .filter(|&&i| decided >> i & 1 == 0 || self.arc(dir, i) == me)
            .count()
    }

    /// Mask of deletable arcs of a fully decided orientation, or `None` when
    /// it is not strongly connected.
    pub fn deletable(&self, dir: u64) -> Option<u64> {
        let all = self.all_arcs();
        let (out, inn) = self.adjacency(dir, all);
        if !self.strongly_connected(&out, &inn) {
            return None;
        }
        let mut del = 0u64;
        for j in 0..self.arcs() {
            let (t, h) = self.arc(dir, j);
            if self.co_directed(dir, all, j) > 0 || self.detour(&out, t, h) {
                del |= 1 << j;
            }
        }
        Some(del)
    }

    pub fn all_arcs(&self) -> u64 {
        if self.arcs() == 64 {
            u64::MAX
        } else {
            (1u64 << self.arcs()) - 1
        }
    }
}

/// Vertices reachable from `start`, ignoring the single neighbour bit `skip`.
#[inline]
pub(crate) fn reach(out: &[u64], start: usize, skip: Option<(usize, usize)>) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            let mut nb = out[v];
            if let Some((t, h)) = skip {
                if t == v {
                    nb &= !(1u64 << h);
                }
            }
            next |= nb;
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;
    use crate::orientation::Orientation;
    use std::sync::Arc;

    #[test]
    fn kernel_agrees_with_orientation_type() {
        for name in ["k4", "theta", "prism3", "fat_triangle", "wheel4"] {
            let g = Arc::new(named_graph(name).unwrap());
            let k = Kernel::new(&g).unwrap();
            for dir in 0..1u64 << k.arcs() {
                let mut bits = vec![false; g.edge_count()];
                for j in 0..k.arcs() {
                    bits[k.edge_index[j]] = dir >> j & 1 == 1;
                }
                let d = Orientation::new(g.clone(), bits).unwrap();
                match k.deletable(dir) {
                    None => assert!(!d.is_strongly_connected()),
                    Some(mask) => {
                        let del = d.deletable_arcs().unwrap();
                        for j in 0..k.arcs() {
                            let id = g.edge_at(k.edge_index[j]).id;
                            assert_eq!(mask >> j & 1 == 1, del.contains(&id), "{name} {dir}");
                        }
                    }
                }
            }
        }
    }
}
