//! Certifying constructions of few orientations covering every edge by a
//! deletable arc. Every report carries a certificate that has been re-checked
//! edge by edge before it is returned.

mod esse4;
mod matching;
mod special;
mod wrap;

pub use esse4::certify_esse4;
pub use matching::orient_matching_deletable;
pub use special::{certify_bf5, certify_color3, certify_upper7, orient_special_set_deletable};

use crate::exact::{verify_certificate, CertificateJson, ExactError, FrankCertificate};
use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};
use crate::orientation::{Orientation, OrientationError};
use crate::structures::StructureError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph is not 3-edge-colorable")]
    NotColorable,
    #[error("no Berge-Fulkerson cover exists")]
    NoDoubleCover,
    #[error("undecided within limits: {0}")]
    Indeterminate(String),
    #[error("construction failed its own check: {0}")]
    Internal(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, PipelineError>;

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub pipeline: String,
    pub preconditions: Vec<String>,
    pub certificate: FrankCertificate,
    /// How each orientation of the certificate was built.
    pub provenance: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub pipeline: String,
    pub preconditions: Vec<String>,
    pub certificate: CertificateJson,
    pub provenance: Vec<String>,
}

impl PipelineReport {
    /// Builds the report after checking that the orientations cover `g`.
    fn checked(
        g: &Multigraph,
        pipeline: &str,
        preconditions: Vec<String>,
        orientations: Vec<Orientation>,
        provenance: Vec<String>,
        bound: usize,
    ) -> Result<Self> {
        if orientations.len() > bound {
            return Err(PipelineError::Internal(format!(
                "{} orientations exceed the bound {bound}",
                orientations.len()
            )));
        }
        let certificate = FrankCertificate::from_orientations(orientations);
        let check = verify_certificate(g, &certificate)?;
        if !check.ok {
            return Err(PipelineError::Internal(format!(
                "edges covered by no deletable arc: {:?}",
                check.uncovered
            )));
        }
        Ok(PipelineReport {
            pipeline: pipeline.to_string(),
            preconditions,
            certificate,
            provenance,
        })
    }

    pub fn len(&self) -> usize {
        self.certificate.len()
    }

    pub fn is_empty(&self) -> bool {
        self.certificate.is_empty()
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            pipeline: self.pipeline.clone(),
            preconditions: self.preconditions.clone(),
            certificate: self.certificate.to_json(),
            provenance: self.provenance.clone(),
        }
    }
}

fn require_3ec(g: &Multigraph) -> Result<()> {
    if g.vertex_count() < 2 || !g.is_k_edge_connected(3) {
        return Err(PipelineError::Precondition("graph is not 3-edge-connected".into()));
    }
    Ok(())
}

/// Copies the directions of a quotient orientation onto the edges of `g`
/// that survive as non-loops, naming tails by their original endpoints.
fn lift_tails(
    g: &Multigraph,
    vertex_map: &BTreeMap<VertexId, VertexId>,
    dq: &Orientation,
    tails: &mut BTreeMap<EdgeId, VertexId>,
) {
    for e in dq.graph().edges() {
        if e.is_loop() {
            continue;
        }
        let orig = g.edge(e.id).expect("quotient edges come from g");
        let t = dq.tail(e.id).unwrap();
        let real = if vertex_map[&orig.u] == t { orig.u } else { orig.v };
        tails.insert(e.id, real);
    }
}

/// Checks that `f` is deletable in `d`.
fn require_deletable(d: &Orientation, f: &std::collections::BTreeSet<EdgeId>, what: &str) -> Result<()> {
    if !d.is_deletable_set(f) {
        return Err(PipelineError::Internal(format!("{what} is not deletable")));
    }
    Ok(())
}
