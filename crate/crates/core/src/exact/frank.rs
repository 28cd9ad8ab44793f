use super::cover::{maximal_sets, min_set_cover};
use super::kernel::Kernel;
use super::{orientation_from_mask, require_kernel, verify_certificate, ExactError, FrankCertificate, SolveLimits};
use crate::multigraph::Multigraph;
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct FrankResult {
    pub value: usize,
    pub certificate: FrankCertificate,
    /// Strongly connected orientations seen, counting one per reversal pair.
    pub strong_orientations: u64,
    /// Distinct deletable-arc sets among them.
    pub distinct_sets: usize,
    /// Distinct sets not strictly contained in another.
    pub maximal_sets: usize,
}

fn require_three_edge_connected(g: &Multigraph) -> Result<(), ExactError> {
    if g.vertex_count() < 2 {
        return Err(ExactError::NotThreeEdgeConnected(0));
    }
    let lambda = g.edge_connectivity()?;
    if lambda < 3 {
        return Err(ExactError::NotThreeEdgeConnected(lambda));
    }
    Ok(())
}

/// 2 when the graph has a 3-edge-cut, else 1.
pub fn frank_lower_bound(g: &Multigraph) -> Result<usize, ExactError> {
    require_three_edge_connected(g)?;
    Ok(if g.edge_connectivity()? == 3 { 2 } else { 1 })
}

const BLOCK_BITS: u32 = 12;

/// Distinct deletable sets of all strongly connected orientations, each with
/// its smallest direction mask. Arc 0 is kept forward: reversal preserves
/// deletable sets.
fn deletable_sets(k: &Kernel) -> (HashMap<u64, u64>, u64) {
    let free = k.arcs() - 1;
    let total: u64 = 1 << free;
    let blocks = total.div_ceil(1 << BLOCK_BITS);
    (0..blocks)
        .into_par_iter()
        .map(|b| {
            let lo = b << BLOCK_BITS;
            let hi = (lo + (1 << BLOCK_BITS)).min(total);
            let mut sets: HashMap<u64, u64> = HashMap::new();
            let mut strong = 0u64;
            for mask in lo..hi {
                let dir = mask << 1;
                if let Some(del) = k.deletable(dir) {
                    strong += 1;
                    sets.entry(del).or_insert(dir);
                }
            }
            (sets, strong)
        })
        .reduce(
            || (HashMap::new(), 0),
            |(mut a, sa), (b, sb)| {
                for (del, dir) in b {
                    a.entry(del).and_modify(|d| *d = (*d).min(dir)).or_insert(dir);
                }
                (a, sa + sb)
            },
        )
}

/// `f(G)` by enumerating every orientation and solving set cover exactly.
pub fn frank_number_exact(g: &Arc<Multigraph>, limits: &SolveLimits) -> Result<FrankResult, ExactError> {
    require_three_edge_connected(g)?;
    let k = require_kernel(g)?;
    if k.arcs() > limits.max_enum_edges || k.arcs() > 63 {
        return Err(ExactError::TooLarge {
            arcs: k.arcs(),
            cap: limits.max_enum_edges,
        });
    }
    let (found, strong) = deletable_sets(&k);
    let mut entries: Vec<(u64, u64)> = found.into_iter().map(|(del, dir)| (dir, del)).collect();
    entries.sort();
    let sets: Vec<u64> = entries.iter().map(|&(_, del)| del).collect();
    let keep = maximal_sets(&sets);
    let kept: Vec<u64> = keep.iter().map(|&i| sets[i]).collect();
    let chosen = min_set_cover(&kept, k.all_arcs())
        .expect("a 3-edge-connected graph has a strongly connected orientation with every arc deletable somewhere");
    let mut dirs: Vec<u64> = chosen.iter().map(|&c| entries[keep[c]].0).collect();
    dirs.sort();
    let orientations = dirs.iter().map(|&d| orientation_from_mask(g, &k, d)).collect();
    let certificate = FrankCertificate::from_orientations(orientations);
    let check = verify_certificate(g, &certificate)?;
    assert!(check.ok, "exact solver produced an invalid certificate: {:?}", check.uncovered);
    Ok(FrankResult {
        value: certificate.len(),
        certificate,
        strong_orientations: strong,
        distinct_sets: sets.len(),
        maximal_sets: kept.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named_graph;

    fn exact(name: &str) -> usize {
        frank_number_exact(&Arc::new(named_graph(name).unwrap()), &SolveLimits::default())
            .unwrap()
            .value
    }

    #[test]
    fn small_values() {
        assert_eq!(exact("k4"), 2);
        assert_eq!(exact("k5"), 1);
        assert_eq!(exact("theta"), 2);
        assert_eq!(exact("prism3"), 2);
        assert_eq!(exact("fat_triangle"), 1);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(frank_lower_bound(&named_graph("petersen").unwrap()).unwrap(), 2);
        assert_eq!(frank_lower_bound(&named_graph("k5").unwrap()).unwrap(), 1);
        assert_eq!(frank_lower_bound(&named_graph("prism3").unwrap()).unwrap(), 2);
        let c4 = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(frank_lower_bound(&c4), Err(ExactError::NotThreeEdgeConnected(2)));
    }

    #[test]
    fn size_cap() {
        let limits = SolveLimits {
            max_enum_edges: 10,
            ..SolveLimits::default()
        };
        let p = Arc::new(named_graph("petersen").unwrap());
        assert!(matches!(
            frank_number_exact(&p, &limits),
            Err(ExactError::TooLarge { arcs: 15, cap: 10 })
        ));
    }
}
