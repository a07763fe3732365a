//! Global minimum cut of small weighted undirected graphs.

/// Weighted undirected edge `(u, v, w)`.
pub type Edge = (usize, usize, u64);

pub const EXHAUSTIVE_LIMIT: usize = 16;

/// Minimum total weight over all bipartitions; `None` for fewer than two vertices.
pub fn global_min_cut(n: usize, edges: &[Edge]) -> Option<u64> {
    if n <= EXHAUSTIVE_LIMIT {
        min_cut_exhaustive(n, edges)
    } else {
        stoer_wagner(n, edges)
    }
}

/// Tries every bipartition with vertex 0 on the left.
pub fn min_cut_exhaustive(n: usize, edges: &[Edge]) -> Option<u64> {
    if n < 2 {
        return None;
    }
    assert!(n <= 30, "exhaustive min cut only for tiny graphs");
    let mut best = u64::MAX;
    // Bit i set means vertex i+1 is on the right.
    for mask in 1u32..(1u32 << (n - 1)) {
        let side = |v: usize| v > 0 && mask & (1 << (v - 1)) != 0;
        let w: u64 = edges.iter().filter(|&&(a, b, _)| side(a) != side(b)).map(|e| e.2).sum();
        best = best.min(w);
    }
    Some(best)
}

pub fn stoer_wagner(n: usize, edges: &[Edge]) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut w = vec![vec![0u64; n]; n];
    for &(a, b, c) in edges {
        if a != b {
            w[a][b] += c;
            w[b][a] += c;
        }
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    while active.len() > 1 {
        let mut weight = vec![0u64; n];
        let mut added = vec![false; n];
        let mut prev = active[0];
        let mut last = active[0];
        for k in 0..active.len() {
            let next = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by_key(|&&v| (weight[v], std::cmp::Reverse(v)))
                .expect("an unadded vertex remains");
            added[next] = true;
            if k == active.len() - 1 {
                best = best.min(weight[next]);
                prev = last;
                last = next;
            } else {
                last = next;
                for &v in &active {
                    if !added[v] {
                        weight[v] += w[next][v];
                    }
                }
            }
        }
        // Merge `last` into `prev`.
        for &v in &active {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        active.retain(|&v| v != last);
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_graphs() {
        assert_eq!(global_min_cut(1, &[]), None);
        assert_eq!(global_min_cut(2, &[]), Some(0));
        assert_eq!(global_min_cut(2, &[(0, 1, 3)]), Some(3));
        let cycle = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)];
        assert_eq!(min_cut_exhaustive(4, &cycle), Some(2));
        assert_eq!(stoer_wagner(4, &cycle), Some(2));
    }

    fn arb_graph() -> impl Strategy<Value = (usize, Vec<Edge>)> {
        (2usize..10).prop_flat_map(|n| {
            let e = (0..n, 0..n, 0u64..4);
            (Just(n), proptest::collection::vec(e, 0..20))
        })
    }

    proptest! {
        #[test]
        fn stoer_wagner_matches_exhaustive((n, edges) in arb_graph()) {
            prop_assert_eq!(stoer_wagner(n, &edges), min_cut_exhaustive(n, &edges));
        }
    }
}
