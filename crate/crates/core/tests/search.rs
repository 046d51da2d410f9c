use estrada_core::families::JoinSplit;
use estrada_core::invariants::ClassKind;
use estrada_core::search::{class_values, find_maximizers, ClassStatus, SearchConfig};

fn failing(kind: ClassKind, split: JoinSplit) -> Vec<String> {
    let config = SearchConfig { split, threads: 2, ..SearchConfig::default() };
    let mut out = Vec::new();
    for n in 2..=8 {
        for r in find_maximizers(kind, n, &class_values(kind, n), &config).unwrap() {
            if !r.verified() {
                out.push(r.class.to_string());
            }
        }
    }
    out
}

#[test]
fn ceiling_first_join_is_the_connectivity_maximizer() {
    for kind in [ClassKind::VertexConnectivity, ClassKind::EdgeConnectivity] {
        assert!(failing(kind, JoinSplit::CeilFirst).is_empty(), "{kind:?}");
    }
}

#[test]
fn floor_first_join_misses_even_orders() {
    assert_eq!(
        failing(ClassKind::VertexConnectivity, JoinSplit::FloorFirst),
        ["C(4,1)", "C(6,1)", "C(6,2)", "C(8,1)", "C(8,2)", "C(8,3)"]
    );
}

#[test]
fn complete_bipartite_maximizes_matching_classes() {
    assert!(failing(ClassKind::Matching, JoinSplit::FloorFirst).is_empty());
}

#[test]
fn classes_above_half_the_order_are_empty() {
    let config = SearchConfig::default();
    let reports = find_maximizers(ClassKind::VertexConnectivity, 7, &class_values(ClassKind::VertexConnectivity, 7), &config)
        .unwrap();
    for r in &reports {
        assert_eq!(r.status == ClassStatus::Empty, r.class.value > 3, "{}", r.class);
        assert!(r.verified());
    }
}
