use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rtam_core::*;

/// Random tile set over a two-label alphabet and a random connected placement of up to `max` tiles.
fn random_case(seed: u64, max: usize) -> (TileSet, Assembly) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ntiles = rng.gen_range(1..=3);
    let mut tiles = Vec::new();
    for i in 0..ntiles {
        let glues = [(); 4].map(|_| match rng.gen_range(0..5) {
            0 => Glue::null(),
            k => Glue::new(if k % 2 == 0 { "a" } else { "b" }, rng.gen_bool(0.5), rng.gen_range(1..=2)).unwrap(),
        });
        tiles.push(TileType { name: format!("t{i}"), glues });
    }
    let ts = TileSet::new(tiles).unwrap();
    let size = rng.gen_range(1..=max);
    let mut cells = BTreeSet::from([Point::ORIGIN]);
    while cells.len() < size {
        let v: Vec<_> = cells.iter().copied().collect();
        let p = v[rng.gen_range(0..v.len())];
        cells.insert(p.step(Side::ALL[rng.gen_range(0..4)]));
    }
    let a = Assembly::from_placements(cells.into_iter().map(|p| {
        (p, OrientedTile::new(rng.gen_range(0..ntiles), Reflection::from_bits(rng.gen_range(0..4))))
    }))
    .unwrap();
    (ts, a)
}

/// Glue on world side `s` computed from the flip flags directly.
fn seen(ts: &TileSet, ot: OrientedTile, s: Side) -> Glue {
    let (v, h) = (ot.reflection.flips_vertical(), ot.reflection.flips_horizontal());
    let default = match s {
        Side::N if v => Side::S,
        Side::S if v => Side::N,
        Side::E if h => Side::W,
        Side::W if h => Side::E,
        other => other,
    };
    ts.get(ot.tile).glues[default.index()].clone()
}

fn brute_min_cut(ts: &TileSet, a: &Assembly) -> Option<u64> {
    let pts: Vec<(Point, OrientedTile)> = a.iter().collect();
    if pts.len() < 2 {
        return None;
    }
    let mut best = u64::MAX;
    for mask in 1u32..(1 << pts.len()) - 1 {
        let mut cut = 0u64;
        for (i, &(p, ot)) in pts.iter().enumerate() {
            for (j, &(q, ou)) in pts.iter().enumerate() {
                let crosses = (mask >> i & 1) == 1 && (mask >> j & 1) == 0;
                if !crosses {
                    continue;
                }
                if let Some(s) = p.side_towards(q) {
                    let (g, h) = (seen(ts, ot, s), seen(ts, ou, s.opposite()));
                    if !g.is_null() && g.label() == h.label() && g.primed() != h.primed() && g.strength() == h.strength() {
                        cut += g.strength() as u64;
                    }
                }
            }
        }
        best = best.min(cut);
    }
    Some(best)
}

#[test]
fn stability_matches_brute_force_cuts() {
    for seed in 0..300u64 {
        let (ts, a) = random_case(seed, 8);
        let oracle = brute_min_cut(&ts, &a);
        for tau in 1..=3 {
            let expect = oracle.map_or(true, |c| c >= tau as u64);
            assert_eq!(a.is_tau_stable(&ts, tau), expect, "seed {seed} tau {tau}");
        }
    }
}

proptest! {
    #[test]
    fn canonical_keys_invariant(seed in any::<u64>(), r in 0u8..4, dx in -20i64..20, dy in -20i64..20) {
        let (ts, a) = random_case(seed, 8);
        let b = a.transformed(Reflection::from_bits(r), Point::new(dx, dy));
        prop_assert_eq!(canonical_key(&a.configuration()), canonical_key(&b.configuration()));
        prop_assert_eq!(canonical_key_assembly(&ts, &a), canonical_key_assembly(&ts, &b));
    }

    #[test]
    fn side_map_is_involution(r in 0u8..4, s in 0usize..4) {
        let r = Reflection::from_bits(r);
        prop_assert_eq!(side_map(r, side_map(r, Side::ALL[s])), Side::ALL[s]);
    }

    #[test]
    fn equal_configurations_have_equal_keys(seed in any::<u64>()) {
        let (_, a) = random_case(seed, 6);
        let c = a.configuration();
        prop_assert_eq!(canonical_key(&c), canonical_key(&c.clone()));
    }
}
