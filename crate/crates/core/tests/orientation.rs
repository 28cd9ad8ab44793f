use frankcert_core::multigraph::{named_graph, CORPUS};
use frankcert_core::orientation::{is_well_balanced, strong_orientation, well_balanced_orientation, BalanceLimits};
use frankcert_core::structures::{cubic_extension, partition_into_three_tjoins};
use std::collections::BTreeSet;
use std::sync::Arc;

#[test]
fn well_balanced_on_corpus() {
    for (name, _) in CORPUS {
        let g = Arc::new(named_graph(name).unwrap());
        if g.vertex_count() > 16 {
            continue;
        }
        let d = well_balanced_orientation(g.clone(), BalanceLimits::default()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(is_well_balanced(&d), "{name}");
        assert!(d.is_strongly_connected(), "{name}");
        if g.is_k_edge_connected(4) {
            assert!(d.is_k_arc_connected(2), "{name}");
            assert_eq!(d.deletable_arcs().unwrap(), g.edge_id_set(), "{name}");
        }
    }
}

#[test]
fn strong_orientation_and_reversal() {
    for (name, _) in CORPUS {
        let g = Arc::new(named_graph(name).unwrap());
        let d = strong_orientation(g.clone()).unwrap();
        assert!(d.is_strongly_connected(), "{name}");
        assert_eq!(d.deletable_arcs().unwrap(), d.reverse().deletable_arcs().unwrap(), "{name}");
    }
}

#[test]
fn three_tjoins_on_four_edge_connected() {
    for (name, _) in CORPUS {
        let g = named_graph(name).unwrap();
        if !g.is_k_edge_connected(4) {
            continue;
        }
        let parts = partition_into_three_tjoins(&g).unwrap();
        let all: BTreeSet<_> = parts.iter().flatten().copied().collect();
        assert_eq!(all, g.edge_id_set(), "{name}");
        assert_eq!(parts.iter().map(BTreeSet::len).sum::<usize>(), g.edge_count(), "{name}");
    }
}

#[test]
fn cubic_extensions_are_cubic() {
    for (name, _) in CORPUS {
        let g = named_graph(name).unwrap();
        let ext = cubic_extension(&g).unwrap();
        assert!(ext.host.is_cubic(), "{name}");
        // 3-edge-connectivity carries over when no vertex deletion disconnects
        if g.is_k_edge_connected(3) && g.cut_vertices().is_empty() {
            assert!(ext.host.is_k_edge_connected(3), "{name}");
        }
        for e in g.edge_ids() {
            assert!(ext.host.contains_edge(e), "{name}: {e}");
        }
    }
}
