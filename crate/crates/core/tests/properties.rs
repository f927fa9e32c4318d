use std::collections::BTreeMap;

use bdom_core::families::zigzag;
use bdom_core::interval::{domination_interval, flip_walk};
use bdom_core::{
    gamma, gamma_bruteforce, gamma_undirected, greedy_upper_bound, is_dominating, reception,
    reception_undirected, Bits, Digraph, Graph, Params, TowerSet,
};
use proptest::prelude::*;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| {
        let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
        Graph::new(n, &edges).unwrap()
    })
}

fn oriented_strategy(max_n: usize) -> impl Strategy<Value = (Graph, Bits)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), prop::collection::vec(any::<bool>(), m).prop_map(|b| Bits::from_bools(&b)))
    })
}

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, fwd, back)| {
        let mut arcs = Vec::new();
        for (i, (u, v)) in pairs(n).into_iter().enumerate() {
            if fwd >> i & 1 == 1 {
                arcs.push((u, v));
            }
            if back >> i & 1 == 1 {
                arcs.push((v, u));
            }
        }
        Digraph::from_arcs(n, &arcs).unwrap()
    })
}

fn params_strategy() -> impl Strategy<Value = Params> {
    (1u32..=5).prop_flat_map(|t| (Just(t), 1..=t)).prop_map(|(t, r)| Params::feasible(t, r).unwrap())
}

fn full_distances(d: &Digraph, source: usize) -> BTreeMap<usize, u32> {
    d.distances_from(source, u32::MAX).into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reception_monotone_in_towers(d in digraph_strategy(8), t in 1u32..6, extra in any::<u64>(), base in any::<u64>()) {
        let n = d.n();
        let small = TowerSet::from_members(n, (0..n).filter(|&i| base >> i & 1 == 1)).unwrap();
        let mut big = small.clone();
        for i in (0..n).filter(|&i| extra >> i & 1 == 1) {
            big.insert(i);
        }
        let a = reception(&d, &small, t);
        let b = reception(&d, &big, t);
        for v in 0..n {
            prop_assert!(a.get(v) <= b.get(v));
        }
    }

    #[test]
    fn tower_receives_t_from_itself((g, bits) in oriented_strategy(7), t in 1u32..6) {
        let d = g.orient(&bits).unwrap();
        for v in 0..d.n() {
            let one = TowerSet::from_members(d.n(), [v]).unwrap();
            prop_assert_eq!(reception(&d, &one, t).get(v), t);
        }
    }

    #[test]
    fn directed_reception_at_most_undirected((g, bits) in oriented_strategy(8), t in 1u32..6, mask in any::<u64>()) {
        let d = g.orient(&bits).unwrap();
        let n = g.n();
        let towers = TowerSet::from_members(n, (0..n).filter(|&i| mask >> i & 1 == 1)).unwrap();
        let dir = reception(&d, &towers, t);
        let und = reception_undirected(&g, &towers, t);
        for v in 0..n {
            prop_assert!(dir.get(v) <= und.get(v));
        }
    }

    #[test]
    fn transpose_reverses_distances(d in digraph_strategy(8), h in 0u32..6) {
        let tr = d.transpose();
        prop_assert_eq!(&tr.transpose(), &d);
        for v in 0..d.n() {
            let mut from: Vec<_> = d.distances_from(v, h);
            let mut to: Vec<_> = tr.distances_to(v, h);
            from.sort();
            to.sort();
            prop_assert_eq!(from, to);
        }
    }

    #[test]
    fn truncation_is_a_prefix_of_full_bfs(d in digraph_strategy(8), h in 0u32..6) {
        for v in 0..d.n() {
            let full = full_distances(&d, v);
            let cut: BTreeMap<_, _> = d.distances_from(v, h).into_iter().collect();
            let expected: BTreeMap<_, _> = full.into_iter().filter(|&(_, k)| k < h).collect();
            prop_assert_eq!(cut, expected);
        }
    }

    #[test]
    fn solver_matches_bruteforce(d in digraph_strategy(8), p in params_strategy()) {
        let exact = gamma(&d, p).unwrap();
        let brute = gamma_bruteforce(&d, p).unwrap();
        prop_assert_eq!(exact.gamma, brute.gamma);
        prop_assert_eq!(exact.witness.size(), exact.gamma);
        prop_assert!(is_dominating(&d, &exact.witness, p));
        let greedy = greedy_upper_bound(&d, p).unwrap();
        prop_assert!(is_dominating(&d, &greedy, p));
        prop_assert!(greedy.size() >= exact.gamma);
    }

    #[test]
    fn orientation_never_beats_undirected((g, bits) in oriented_strategy(8), p in params_strategy()) {
        let directed = gamma(&g.orient(&bits).unwrap(), p).unwrap().gamma;
        prop_assert!(directed >= gamma_undirected(&g, p).unwrap().gamma);
    }

    #[test]
    fn gamma_monotone_in_r_and_t(d in digraph_strategy(7), t in 2u32..5, r in 1u32..4) {
        prop_assume!(r < t);
        let g = |t, r| gamma(&d, Params::feasible(t, r).unwrap()).unwrap().gamma;
        prop_assert!(g(t, r) <= g(t, r + 1));
        prop_assert!(g(t + 1, r) <= g(t, r));
    }

    #[test]
    fn complement_bits_orient_the_transpose((g, bits) in oriented_strategy(7)) {
        let mut comp = bits.clone();
        for i in 0..comp.len() {
            comp.flip(i);
        }
        prop_assert_eq!(g.orient(&comp).unwrap(), g.orient(&bits).unwrap().transpose());
    }

    #[test]
    fn walk_endpoints_match_solver((g, from) in oriented_strategy(6), to_seed in any::<u64>(), p in params_strategy()) {
        let m = g.edge_count();
        let to = Bits::from_bools(&(0..m).map(|i| to_seed >> (i % 64) & 1 == 1).collect::<Vec<_>>());
        let trace = flip_walk(&g, &from, &to, p).unwrap();
        prop_assert_eq!(trace.flip_sequence.len(), from.diff_positions(&to).len());
        prop_assert_eq!(trace.gamma_sequence.len(), trace.flip_sequence.len() + 1);
        prop_assert_eq!(trace.gamma_sequence[0], gamma(&g.orient(&from).unwrap(), p).unwrap().gamma);
        prop_assert_eq!(*trace.gamma_sequence.last().unwrap(), gamma(&g.orient(&to).unwrap(), p).unwrap().gamma);
    }

    #[test]
    fn towers_all_vertices_always_dominate(d in digraph_strategy(8), p in params_strategy()) {
        prop_assert!(is_dominating(&d, &TowerSet::all(d.n()), p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // The attained set is closed under transposition: complementing the bits
    // of any orientation gives another orientation.
    #[test]
    fn interval_is_transpose_closed(g in graph_strategy(5), p in params_strategy()) {
        let iv = domination_interval(&g, p, true).unwrap();
        for (&value, bits) in &iv.witnesses {
            let tr = g.orient(bits).unwrap().transpose();
            let back = gamma(&tr, p).unwrap().gamma;
            prop_assert!(iv.contains(back), "value {} transposed to {}", value, back);
        }
    }
}

fn alternating(k: usize) -> u64 {
    fn go(last: Option<usize>, up: bool, used: u32, k: usize) -> u64 {
        if used.count_ones() as usize == k {
            return 1;
        }
        (0..k)
            .filter(|&v| used >> v & 1 == 0)
            .filter(|&v| match last {
                None => true,
                Some(l) => if up { v > l } else { v < l },
            })
            .map(|v| go(Some(v), !up, used | 1 << v, k))
            .sum()
    }
    go(None, false, 0, k)
}

#[test]
fn zigzag_counts_alternating_permutations() {
    for k in 0..=8 {
        assert_eq!(zigzag(k), alternating(k).into(), "k = {k}");
    }
    assert_eq!(zigzag(10), 50521u32.into());
}
