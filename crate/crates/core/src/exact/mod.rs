//! Exact solvers: deletability decisions, exact Frank numbers, and the
//! certificate format every construction in the crate is checked against.

mod cover;
mod decide;
mod frank;
pub(crate) mod kernel;

pub use decide::{deletability_decide, deletability_decide_linked, LinkedArcs};
pub use frank::{frank_lower_bound, frank_number_exact, FrankResult};

use crate::multigraph::{EdgeId, GraphError, Multigraph};
use crate::orientation::{Orientation, OrientationError, TailsJson};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Duration;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph is not 3-edge-connected (edge-connectivity {0})")]
    NotThreeEdgeConnected(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("{arcs} non-loop edges exceed the enumeration limit of {cap}")]
    TooLarge { arcs: usize, cap: usize },
    #[error("{0} vertices exceed the 64-vertex kernel limit")]
    TooManyVertices(usize),
    #[error("certificate orientation {0} belongs to a different graph")]
    MismatchedGraph(usize),
    #[error("invalid linked arc group: {0}")]
    BadLinkedGroup(String),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveLimits {
    /// Largest number of non-loop edges (or linked groups) enumerated exhaustively.
    pub max_enum_edges: usize,
    /// Search nodes the backtracking solver may visit.
    pub node_budget: u64,
    /// Wall-clock limit for backtracking; `None` keeps runs deterministic.
    pub time_budget: Option<Duration>,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_enum_edges: 22,
            node_budget: 20_000_000,
            time_budget: None,
        }
    }
}

/// Answer of a deletability query. `Indeterminate` means the budget ran out
/// and says nothing about the true answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecideOutcome {
    Yes(Orientation),
    No,
    Indeterminate(String),
}

/// Orientations plus, per edge, the index of one in which it is deletable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrankCertificate {
    pub orientations: Vec<Orientation>,
    pub cover: BTreeMap<EdgeId, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub orientations: Vec<TailsJson>,
    pub cover: BTreeMap<EdgeId, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub ok: bool,
    pub uncovered: BTreeSet<EdgeId>,
}

impl FrankCertificate {
    /// Covers each edge by the first orientation in which it is deletable.
    /// Edges deletable nowhere are left out of the cover map.
    pub fn from_orientations(orientations: Vec<Orientation>) -> Self {
        let mut cover = BTreeMap::new();
        for (i, d) in orientations.iter().enumerate() {
            if let Ok(del) = d.deletable_arcs() {
                for e in del {
                    cover.entry(e).or_insert(i);
                }
            }
        }
        FrankCertificate {
            orientations,
            cover,
        }
    }

    pub fn len(&self) -> usize {
        self.orientations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orientations.is_empty()
    }

    /// Removes duplicate and unreferenced orientations, keeping first-use order.
    pub fn compact(&self) -> FrankCertificate {
        let mut kept: Vec<Orientation> = Vec::new();
        let mut remap = BTreeMap::new();
        let mut order: Vec<usize> = self.cover.values().copied().collect();
        order.sort();
        order.dedup();
        for i in order {
            let d = &self.orientations[i];
            let j = match kept.iter().position(|k| k == d) {
                Some(j) => j,
                None => {
                    kept.push(d.clone());
                    kept.len() - 1
                }
            };
            remap.insert(i, j);
        }
        let cover = self.cover.iter().map(|(&e, i)| (e, remap[i])).collect();
        FrankCertificate {
            orientations: kept,
            cover,
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            orientations: self.orientations.iter().map(|d| d.to_tails_json()).collect(),
            cover: self.cover.clone(),
        }
    }

    pub fn from_json(graph: Arc<Multigraph>, j: &CertificateJson) -> Result<Self, ExactError> {
        let orientations = j
            .orientations
            .iter()
            .map(|t| Orientation::from_tails(graph.clone(), &t.tails))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FrankCertificate {
            orientations,
            cover: j.cover.clone(),
        })
    }
}

/// Re-checks every cover entry by direct deletion tests.
pub fn verify_certificate(g: &Multigraph, cert: &FrankCertificate) -> Result<CertificateCheck, ExactError> {
    for (i, d) in cert.orientations.iter().enumerate() {
        if d.graph() != g {
            return Err(ExactError::MismatchedGraph(i));
        }
    }
    let strong: Vec<bool> = cert.orientations.iter().map(|d| d.is_strongly_connected()).collect();
    let mut uncovered = BTreeSet::new();
    for e in g.edge_ids() {
        let good = match cert.cover.get(&e) {
            Some(&i) if i < cert.orientations.len() && strong[i] => {
                cert.orientations[i].is_deletable_set(&BTreeSet::from([e]))
            }
            _ => false,
        };
        if !good {
            uncovered.insert(e);
        }
    }
    let stray = cert.cover.keys().any(|e| !g.contains_edge(*e));
    Ok(CertificateCheck {
        ok: uncovered.is_empty() && !stray,
        uncovered,
    })
}

/// Builds an orientation from a kernel direction mask.
pub(crate) fn orientation_from_mask(g: &Arc<Multigraph>, k: &kernel::Kernel, dir: u64) -> Orientation {
    let mut bits = vec![false; g.edge_count()];
    for j in 0..k.arcs() {
        bits[k.edge_index[j]] = dir >> j & 1 == 1;
    }
    Orientation::new(g.clone(), bits).expect("bit count matches")
}

pub(crate) fn require_kernel(g: &Multigraph) -> Result<kernel::Kernel, ExactError> {
    kernel::Kernel::new(g).ok_or(ExactError::TooManyVertices(g.vertex_count()))
}
