use std::time::Instant;

use rtam_analysis::fixtures::periodic_suite;
use rtam_analysis::{periodic_structure, validate, ComponentKind};

#[test]
fn predictions_match_runs_on_triple_window() {
    for (name, sys) in periodic_suite() {
        let t = Instant::now();
        let s = periodic_structure(&sys).unwrap();
        let c = validate(&sys, &s).unwrap();
        let kinds: Vec<ComponentKind> = s.components.iter().map(|c| c.kind()).collect();
        println!("{name}: {kinds:?} missing={} extra={} {:?}", c.missing.len(), c.extra.len(), t.elapsed());
        assert!(c.exact(), "{name}: missing {:?} extra {:?}", c.missing.iter().take(5).collect::<Vec<_>>(), c.extra.iter().take(5).collect::<Vec<_>>());
    }
}

use proptest::prelude::*;
use rtam_analysis::fixtures::{system, tile};
use rtam_analysis::{sdp_contains, AnalysisError, SemiDoublyPeriodicSet};
use rtam_core::{OrientedTile, Point, Reflection, TileSystem};

#[test]
fn non_directed_and_cooperative_systems_are_rejected() {
    // The seed can be capped by either of two types.
    let caps = system(vec![tile("s", ["a", "", "", ""]), tile("x", ["", "", "a'", ""]), tile("y", ["", "", "a'", ""])]);
    assert!(matches!(periodic_structure(&caps), Err(AnalysisError::Precondition(_))));
    let col = system(vec![tile("s", ["a", "", "", ""]), tile("c", ["a", "", "a'", ""])]);
    let hot = TileSystem::singly_seeded(col.tiles.clone(), OrientedTile::new(0, Reflection::D), Point::ORIGIN, 2).unwrap();
    assert!(matches!(periodic_structure(&hot), Err(AnalysisError::Precondition(_))));
}

#[test]
fn seed_only_has_empty_components() {
    let s = periodic_structure(&system(vec![tile("s", ["", "", "", ""])])).unwrap();
    assert_eq!(s.core.len(), 1);
    assert!(s.components.iter().all(|c| c.kind() == ComponentKind::Empty));
    assert_eq!(s.radius, 5);
}

fn small() -> impl Strategy<Value = Point> {
    (-3i64..=3, -3i64..=3).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #[test]
    fn sdp_membership_matches_brute_force(b in small(), u in small(), v in small()) {
        let s = SemiDoublyPeriodicSet::new(b, u, v);
        let mut reach = std::collections::HashSet::new();
        for n in 0..=50i64 {
            for m in 0..=50i64 {
                reach.insert(b + u * n + v * m);
            }
        }
        // Points with small coordinates need n, m far below 50 when reachable.
        for x in -8..=8 {
            for y in -8..=8 {
                let p = b + Point::new(x, y);
                prop_assert_eq!(sdp_contains(&s, p), reach.contains(&p), "{:?} {:?}", s, p);
            }
        }
    }
}
