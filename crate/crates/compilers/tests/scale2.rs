mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rtam_compilers::{compile_scale2, shape_to_tree_atam};
use rtam_core::{Point, Window};
use rtam_sim::{is_mismatch_free, verify_strict};

use common::{polyominoes, shape};

#[test]
fn random_shapes_scale_strictly_without_mismatches() {
    let all = polyominoes(8);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for cells in all.choose_multiple(&mut rng, 20) {
        let s = shape(cells);
        let sys = compile_scale2(&s).unwrap_or_else(|e| panic!("{cells:?}: {e}"));
        assert_eq!(sys.temperature, 2);
        assert_eq!(sys.tile_count(), 4 * s.len());
        let seed = sys.single_seed().unwrap().0;
        let w = Window::around(seed, 2 * 8 + 2);
        assert!(verify_strict(&sys, &s.scaled(2), w, 500_000).unwrap().holds(), "{cells:?}");
        assert!(is_mismatch_free(&sys, w, 500_000).unwrap().holds(), "{cells:?}");
    }
}

/// Number of tree edges, degrees and connectivity from the glues alone.
fn glue_graph(a: &rtam_compilers::ATamSystem, at: &BTreeMap<Point, usize>) -> (usize, BTreeMap<Point, usize>, bool) {
    let mut deg: BTreeMap<Point, usize> = at.keys().map(|&p| (p, 0)).collect();
    let mut adj: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    let mut edges = 0;
    for (&p, &t) in at {
        for (side, q) in p.neighbors() {
            let Some(&u) = at.get(&q) else { continue };
            let (g, h) = (a.tiles[t].glue(side), a.tiles[u].glue(side.opposite()));
            if !g.is_null() && g == h {
                *deg.get_mut(&p).unwrap() += 1;
                adj.entry(p).or_default().push(q);
                if p < q {
                    edges += 1;
                }
            }
        }
    }
    let start = *at.keys().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(p) = stack.pop() {
        for &q in adj.get(&p).into_iter().flatten() {
            if seen.insert(q) {
                stack.push(q);
            }
        }
    }
    (edges, deg, seen.len() == at.len())
}

static SHAPES: OnceLock<Vec<Vec<Point>>> = OnceLock::new();

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tree_system_grows_the_shape_along_a_tree(i in 0usize..3792) {
        let all = SHAPES.get_or_init(|| polyominoes(8));
        prop_assert_eq!(all.len(), 3792);
        let cells = &all[i];
        let s = shape(cells);
        let a = shape_to_tree_atam(&s);
        prop_assert_eq!(a.temperature, 1);
        prop_assert_eq!(a.tiles.len(), s.len());
        let run = a.run(1_000);
        prop_assert!(run.terminal);
        let domain: BTreeSet<Point> = run.placements.keys().copied().collect();
        prop_assert_eq!(&domain, s.cells());
        let names: BTreeSet<&str> = run.placements.values().map(|&t| a.tiles[t].name.as_str()).collect();
        prop_assert_eq!(names.len(), s.len());
        let (edges, deg, connected) = glue_graph(&a, &run.placements);
        prop_assert_eq!(edges, s.len() - 1);
        prop_assert!(connected);
        if s.len() > 1 {
            prop_assert_eq!(deg[&a.seed.1], 1);
        }
    }
}
