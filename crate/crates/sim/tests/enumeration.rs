use std::collections::BTreeSet;
use std::ops::ControlFlow;

use proptest::prelude::*;
use rtam_core::*;
use rtam_sim::*;

fn g(l: &str, p: bool, s: u8) -> Glue {
    Glue::new(l, p, s).unwrap()
}

fn n() -> Glue {
    Glue::null()
}

fn seeded(tiles: Vec<TileType>, tau: u32) -> TileSystem {
    TileSystem::singly_seeded(TileSet::new(tiles).unwrap(), OrientedTile::new(0, Reflection::D), Point::ORIGIN, tau).unwrap()
}

fn column() -> TileSystem {
    seeded(vec![TileType::new("c", g("a", false, 1), n(), g("a", true, 1), n())], 1)
}

fn random_system(seed: u64) -> TileSystem {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let tau = rng.gen_range(1..=2);
    let count = rng.gen_range(1..=3);
    let tiles = (0..count)
        .map(|i| {
            let glues = [(); 4].map(|_| match rng.gen_range(0..4) {
                0 => n(),
                k => g(if k == 1 { "a" } else { "b" }, rng.gen_bool(0.5), rng.gen_range(1..=tau as u8)),
            });
            TileType { name: format!("t{i}"), glues }
        })
        .collect();
    seeded(tiles, tau as u32)
}

fn keys(ts: &TileSet, v: &[Assembly]) -> BTreeSet<CanonicalKey> {
    v.iter().map(|a| canonical_key_assembly(ts, a)).collect()
}

#[test]
fn blank_seed_is_its_own_terminal() {
    let sys = seeded(vec![TileType::new("s", n(), n(), n(), n())], 1);
    let r = enumerate(&sys, Window::around(Point::ORIGIN, 2), 100).unwrap();
    assert_eq!(r.producible_count, 1);
    assert_eq!(r.terminal.len(), 1);
    assert!(!r.escaped);
}

#[test]
fn column_escapes() {
    let r = enumerate(&column(), Window::around(Point::ORIGIN, 3), 1000).unwrap();
    assert!(r.escaped);
    assert!(r.terminal.is_empty());
    assert!(!r.leaves.is_empty());
    let d = is_directed(&column(), Window::around(Point::ORIGIN, 3), 1000).unwrap();
    assert!(matches!(d, Verdict::Inconclusive(_)));
}

#[test]
fn truncation_is_reported() {
    let sys = column();
    let r = enumerate(&sys, Window::around(Point::ORIGIN, 20), 5).unwrap();
    assert!(r.truncated);
}

#[test]
fn independent_attachments_commute() {
    // Seed with caps on north and east.
    let sys = seeded(
        vec![
            TileType::new("s", g("a", false, 1), g("b", false, 1), n(), n()),
            TileType::new("p", n(), n(), g("a", true, 1), n()),
            TileType::new("q", n(), n(), n(), g("b", true, 1)),
        ],
        1,
    );
    let f = frontier(&sys, &sys.seed);
    assert_eq!(f.len(), 2);
    let ab = step(&step(&sys.seed, &f[0]).unwrap(), &f[1]).unwrap();
    let ba = step(&step(&sys.seed, &f[1]).unwrap(), &f[0]).unwrap();
    assert_eq!(ab, ba);
}

#[test]
fn nondeterministic_caps_are_not_directed() {
    let sys = seeded(
        vec![
            TileType::new("s", g("a", false, 1), n(), n(), n()),
            TileType::new("p", n(), n(), g("a", true, 1), n()),
            TileType::new("q", g("z", false, 1), n(), g("a", true, 1), n()),
        ],
        1,
    );
    let w = Window::around(Point::ORIGIN, 2);
    let d = is_directed(&sys, w, 1000).unwrap();
    assert!(d.refuted());
    assert!(is_mismatch_free(&sys, w, 1000).unwrap().holds());
}

#[test]
fn mismatch_found() {
    // A flipped tile can abut with a lone glue facing a null side.
    let sys = seeded(
        vec![
            TileType::new("s", g("a", false, 1), n(), n(), n()),
            TileType::new("p", n(), g("c", false, 1), g("a", true, 1), n()),
        ],
        1,
    );
    let w = Window::around(Point::ORIGIN, 2);
    assert!(is_mismatch_free(&sys, w, 1000).unwrap().holds());
    let sys2 = seeded(
        vec![
            TileType::new("s", g("a", false, 1), g("a", false, 1), n(), n()),
            TileType::new("p", n(), g("c", false, 1), g("a", true, 1), g("a", true, 1)),
        ],
        1,
    );
    let v = is_mismatch_free(&sys2, w, 1000).unwrap();
    assert!(v.refuted(), "{v:?}");
}

#[test]
fn weak_with_no_black_fails() {
    let sys = column();
    let shape = Shape::rect(1, 1).unwrap();
    let v = verify_weak(&sys, &shape, &BTreeSet::new(), Window::around(Point::ORIGIN, 2), 100).unwrap();
    assert!(v.refuted() || matches!(v, Verdict::Inconclusive(_)));
    let blank = seeded(vec![TileType::new("s", n(), n(), n(), n())], 1);
    let v = verify_weak(&blank, &shape, &BTreeSet::new(), Window::around(Point::ORIGIN, 2), 100).unwrap();
    assert!(v.refuted());
}

#[test]
fn multi_tile_seed_rejected_by_predicates() {
    let mut sys = column();
    sys.seed.insert(Point::new(5, 5), OrientedTile::new(0, Reflection::D)).unwrap();
    let e = is_directed(&sys, Window::around(Point::ORIGIN, 6), 10).unwrap_err();
    assert_eq!(e, SimError::MultiTileSeed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_preserves_terminals(seed in any::<u64>()) {
        let sys = random_system(seed);
        let w = Window::around(Point::ORIGIN, 1);
        let full = explore(&sys, &EnumOptions::new(w).full().state_limit(4_000), |_| ControlFlow::Continue(())).unwrap();
        prop_assume!(!full.truncated);
        let red = explore(&sys, &EnumOptions::new(w), |_| ControlFlow::Continue(())).unwrap();
        prop_assert_eq!(keys(&sys.tiles, &full.leaves), keys(&sys.tiles, &red.leaves));
        prop_assert_eq!(keys(&sys.tiles, &full.terminal), keys(&sys.tiles, &red.terminal));
        prop_assert_eq!(full.escaped, red.escaped);
    }

    #[test]
    fn visited_states_are_stable_and_leaves_are_stuck(seed in any::<u64>()) {
        let sys = random_system(seed);
        let w = Window::around(Point::ORIGIN, 1);
        let r = explore(&sys, &EnumOptions::new(w).full().collect().state_limit(2_000), |_| ControlFlow::Continue(())).unwrap();
        for a in &r.producible {
            prop_assert!(a.is_tau_stable(&sys.tiles, sys.temperature));
            let inside = frontier(&sys, a).into_iter().filter(|t| w.contains(t.location)).count();
            let is_leaf = r.leaves.contains(a);
            prop_assert_eq!(inside == 0, is_leaf);
        }
        for t in &r.terminal {
            prop_assert!(frontier(&sys, t).is_empty());
        }
    }

    #[test]
    fn expansion_order_does_not_matter(seed in any::<u64>(), shuffle in any::<u64>()) {
        let sys = random_system(seed);
        let w = Window::around(Point::ORIGIN, 1);
        let mut o = EnumOptions::new(w).collect().state_limit(20_000);
        let a = explore(&sys, &o, |_| ControlFlow::Continue(())).unwrap();
        o.shuffle_seed = Some(shuffle);
        let b = explore(&sys, &o, |_| ControlFlow::Continue(())).unwrap();
        prop_assert_eq!(a.producible, b.producible);
        prop_assert_eq!(a.terminal, b.terminal);
        prop_assert_eq!((a.escaped, a.truncated), (b.escaped, b.truncated));
    }

    #[test]
    fn strict_implies_weak(seed in any::<u64>()) {
        let sys = random_system(seed);
        let w = Window::around(Point::ORIGIN, 3);
        let r = enumerate(&sys, w, 20_000).unwrap();
        prop_assume!(r.complete() && !r.terminal.is_empty());
        let shape = Shape::new(r.terminal[0].domain()).unwrap();
        let all: BTreeSet<String> = sys.tiles.iter().map(|t| t.name.clone()).collect();
        if verify_strict(&sys, &shape, w, 20_000).unwrap().holds() {
            prop_assert!(verify_weak(&sys, &shape, &all, w, 20_000).unwrap().holds());
        }
    }

    #[test]
    fn tau1_terminals_replay_from_seed(seed in any::<u64>()) {
        let sys = random_system(seed);
        prop_assume!(sys.temperature == 1);
        let w = Window::around(Point::ORIGIN, 2);
        let r = enumerate(&sys, w, 20_000).unwrap();
        prop_assume!(r.complete());
        for t in &r.terminal {
            // Grow along a breadth-first order of the binding graph.
            let graph = t.binding_graph(&sys.tiles);
            prop_assert!(graph.is_connected());
            let mut order = vec![Point::ORIGIN];
            let mut seen = BTreeSet::from([Point::ORIGIN]);
            let mut i = 0;
            while i < order.len() {
                let p = order[i];
                for &(a, b, _) in &graph.edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if graph.vertices[x] == p && seen.insert(graph.vertices[y]) {
                            order.push(graph.vertices[y]);
                        }
                    }
                }
                i += 1;
            }
            let steps = order[1..]
                .iter()
                .map(|&p| {
                    let ot = t.get(p).unwrap();
                    Attachment { location: p, tile: ot.tile, reflection: ot.reflection, bound_strength: 1 }
                })
                .collect();
            let seq = AssemblySequence { seed: vec![], steps };
            prop_assert_eq!(&replay(&sys, &seq).unwrap(), t);
        }
    }
}
