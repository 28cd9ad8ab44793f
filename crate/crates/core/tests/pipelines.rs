use frankcert_core::exact::{frank_number_exact, verify_certificate, SolveLimits};
use frankcert_core::multigraph::{named_graph, Multigraph, CORPUS};
use frankcert_core::pipelines::{certify_bf5, certify_color3, certify_esse4, certify_upper7, PipelineError};
use std::sync::Arc;

fn all_corpus() -> Vec<(&'static str, Arc<Multigraph>)> {
    CORPUS
        .iter()
        .map(|(name, _)| (*name, Arc::new(named_graph(name).unwrap())))
        .collect()
}

#[test]
fn upper7_covers_every_corpus_graph() {
    for (name, g) in all_corpus() {
        if !g.is_k_edge_connected(3) {
            continue;
        }
        let r = certify_upper7(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(r.len() <= 7, "{name}");
        assert!(verify_certificate(&g, &r.certificate).unwrap().ok, "{name}");
        assert_eq!(r.provenance.len(), r.len(), "{name}");
    }
}

#[test]
fn esse4_on_every_eligible_graph() {
    for (name, g) in all_corpus() {
        match certify_esse4(&g) {
            Ok(r) => {
                assert!(g.is_essentially_4ec(), "{name} accepted without the precondition");
                assert!(r.len() <= 3, "{name}");
                assert!(verify_certificate(&g, &r.certificate).unwrap().ok, "{name}");
            }
            Err(PipelineError::Precondition(_)) => assert!(!g.is_essentially_4ec(), "{name}"),
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

#[test]
fn cubic_pipelines_agree_with_preconditions() {
    for (name, g) in all_corpus() {
        if !g.is_cubic() || !g.is_k_edge_connected(3) {
            continue;
        }
        match certify_color3(&g) {
            Ok(r) => assert!(r.len() <= 3, "{name}"),
            Err(PipelineError::NotColorable) => assert_eq!(name, "petersen"),
            Err(e) => panic!("{name}: {e}"),
        }
        if g.vertex_count() <= 16 {
            let r = certify_bf5(&g, &SolveLimits::default()).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(r.len() <= 5, "{name}");
        }
    }
}

#[test]
fn pipelines_never_beat_the_exact_value() {
    let limits = SolveLimits::default();
    for (name, g) in all_corpus() {
        if !g.is_k_edge_connected(3) || g.edge_count() > 18 {
            continue;
        }
        let exact = frank_number_exact(&g, &limits).unwrap().value;
        if let Ok(r) = certify_esse4(&g) {
            assert!(exact <= r.certificate.compact().len(), "{name}");
        }
        let r = certify_upper7(&g).unwrap();
        assert!(exact <= r.certificate.compact().len(), "{name}");
    }
}

#[test]
fn reports_serialize_deterministically() {
    let g = Arc::new(named_graph("petersen").unwrap());
    let a = serde_json::to_string(&certify_esse4(&g).unwrap().to_json()).unwrap();
    let b = serde_json::to_string(&certify_esse4(&g).unwrap().to_json()).unwrap();
    assert_eq!(a, b);
}
