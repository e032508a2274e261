use proptest::prelude::*;

use unavoid::detect::{find_unavoidable_colouring, find_unavoidable_tournament};
use unavoid::extremal::bipartite_half;
use unavoid::farness::{
    backward_count, colour_farness, min_backward_edges_exact, min_backward_edges_heuristic,
};
use unavoid::generate::{random_colouring, random_graph, random_tournament};
use unavoid::io;
use unavoid::proofsim::dependent_random_choice;
use unavoid::{BipartiteGraph, Ordering};

fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_formats_round_trip(n in 0usize..20, seed: u64, p in 0.0f64..1.0) {
        let t = random_tournament(n, seed);
        prop_assert_eq!(io::decode_tournament(&io::encode_tournament(&t)).unwrap(), t);
        let c = random_colouring(n, p, seed);
        prop_assert_eq!(io::decode_colouring(&io::encode_colouring(&c)).unwrap(), c);
        let g = random_graph(n, p, seed);
        prop_assert_eq!(io::decode_graph(&io::encode_graph(&g)).unwrap(), g);
    }

    #[test]
    fn bipartite_round_trip(a in 0usize..8, b in 0usize..8, bits: u64) {
        let h = BipartiteGraph::from_fn(a, b, |i, j| bits >> ((i * 8 + j) % 64) & 1 == 1);
        prop_assert_eq!(io::decode_bipartite(&io::encode_bipartite(&h)).unwrap(), h);
    }

    #[test]
    fn colour_swap_preserves_detection(n in 4usize..11, seed: u64, p in 0.0f64..1.0, t in 2usize..4) {
        prop_assume!(n >= 2 * t);
        let c = random_colouring(n, p, seed);
        let s = c.swapped();
        prop_assert_eq!(
            find_unavoidable_colouring(&c, t).unwrap().is_some(),
            find_unavoidable_colouring(&s, t).unwrap().is_some()
        );
        prop_assert_eq!(colour_farness(&c).numerator, colour_farness(&s).numerator);
    }

    #[test]
    fn relabelling_preserves_everything((n, perm) in (6usize..12).prop_flat_map(|n| (Just(n), perm_strategy(n))), seed: u64) {
        let t = random_tournament(n, seed);
        let u = t.permuted(&perm);
        prop_assert_eq!(
            find_unavoidable_tournament(&t, 2).unwrap().is_some(),
            find_unavoidable_tournament(&u, 2).unwrap().is_some()
        );
        prop_assert_eq!(
            min_backward_edges_exact(&t).unwrap().numerator,
            min_backward_edges_exact(&u).unwrap().numerator
        );
        let c = random_colouring(n, 0.5, seed);
        prop_assert_eq!(
            find_unavoidable_colouring(&c, 2).unwrap().is_some(),
            find_unavoidable_colouring(&c.permuted(&perm), 2).unwrap().is_some()
        );
    }

    #[test]
    fn reversal_duality(n in 1usize..14, seed: u64) {
        let t = random_tournament(n, seed);
        let r = t.reversed();
        let exact = min_backward_edges_exact(&t).unwrap();
        prop_assert_eq!(exact.numerator, min_backward_edges_exact(&r).unwrap().numerator);
        // The reversed ordering is optimal for the reversed tournament.
        let sigma = exact.ordering().unwrap().reversed();
        prop_assert_eq!(backward_count(&r, &sigma), exact.numerator);
        if n >= 6 {
            prop_assert_eq!(
                find_unavoidable_tournament(&t, 2).unwrap().is_some(),
                find_unavoidable_tournament(&r, 2).unwrap().is_some()
            );
        }
    }

    #[test]
    fn heuristic_is_an_upper_bound(n in 2usize..16, seed: u64, restarts in 1usize..4) {
        let t = random_tournament(n, seed);
        let h = min_backward_edges_heuristic(&t, seed, restarts);
        prop_assert!(h.numerator >= min_backward_edges_exact(&t).unwrap().numerator);
        let sigma: Ordering = h.ordering().unwrap();
        prop_assert_eq!(backward_count(&t, &sigma), h.numerator);
    }

    #[test]
    fn bipartite_half_keeps_half_the_edges(n in 1usize..30, seed: u64, p in 0.0f64..1.0) {
        let g = random_graph(n, p, seed);
        let half = bipartite_half(&g, seed);
        let h = half.to_graph();
        prop_assert!(2 * h.edge_count() >= g.edge_count());
        prop_assert!(h.edges().all(|(u, v)| g.has_edge(u, v)));
        prop_assert!(h.two_colour().is_some());
    }

    #[test]
    fn drc_sets_have_large_common_neighbourhoods(n in 5usize..40, seed: u64, p in 0.2f64..1.0, t in 1usize..4, extra in 0usize..4) {
        let g = random_graph(n, p, seed);
        let k = t + extra;
        if let Some(cert) = dependent_random_choice(&g, k, t, seed, 10).unwrap() {
            prop_assert_eq!(cert.set.len(), k);
            let nb = |v: usize| (0..n).filter(|&w| g.has_edge(v, w)).collect::<std::collections::BTreeSet<_>>();
            for xs in itertools::Itertools::combinations(cert.set.iter().copied(), t) {
                let common = xs.iter().map(|&x| nb(x)).reduce(|a, b| &a & &b).unwrap();
                prop_assert!(common.len() >= k);
            }
        }
    }
}
