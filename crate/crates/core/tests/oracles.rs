use itertools::Itertools;

use unavoid::canon::SmallDigraph;
use unavoid::detect::{
    find_biclique, find_transitive_subtournament, find_unavoidable_colouring,
    find_unavoidable_tournament,
};
use unavoid::extremal::{contains_biclique, polarity_graph, zarankiewicz_extremal};
use unavoid::farness::{min_backward_edges_exact, min_backward_edges_heuristic};
use unavoid::generate::{
    cyclic_blowup, random_colouring, random_graph, random_tournament, transitive_tournament,
};
use unavoid::search::{graph_classes, ramsey_table, tournament_classes, RamseyKind};
use unavoid::{BipartiteGraph, Colour, Graph, Tournament, TwoColouring};

fn colour_pattern_brute(c: &TwoColouring, t: usize) -> bool {
    let n = c.n();
    (0..n).combinations(2 * t).any(|s| {
        [Colour::Red, Colour::Blue].into_iter().any(|col| {
            let pairs: Vec<(usize, usize)> = s
                .iter()
                .copied()
                .tuple_combinations()
                .filter(|&(u, v)| c.colour(u, v) == col)
                .collect();
            s.iter().copied().combinations(t).any(|q| {
                let rest: Vec<usize> = s.iter().copied().filter(|v| !q.contains(v)).collect();
                let inside =
                    |set: &[usize], (u, v): (usize, usize)| set.contains(&u) && set.contains(&v);
                let clique: Vec<(usize, usize)> = q.iter().copied().tuple_combinations().collect();
                let two: Vec<(usize, usize)> = clique
                    .iter()
                    .copied()
                    .chain(rest.iter().copied().tuple_combinations())
                    .sorted()
                    .collect();
                (pairs.len() == clique.len() && pairs.iter().all(|&p| inside(&q, p)))
                    || (pairs.len() == two.len()
                        && pairs.iter().all(|&p| inside(&q, p) || inside(&rest, p)))
            })
        })
    })
}

fn transitive_brute(tour: &Tournament, k: usize) -> bool {
    (0..tour.n()).combinations(k).any(|s| {
        let degs: Vec<usize> = s
            .iter()
            .map(|&u| s.iter().filter(|&&v| v != u && tour.beats(u, v)).count())
            .sorted()
            .collect();
        degs == (0..k).collect::<Vec<_>>()
    })
}

fn blowup_brute(tour: &Tournament, t: usize) -> bool {
    (0..tour.n()).combinations(3 * t).any(|s| {
        s.iter().copied().permutations(3 * t).any(|p| {
            let class = |i: usize| i / t;
            (0..3 * t).all(|i| {
                (i + 1..3 * t).all(|j| {
                    let (a, b) = (p[i], p[j]);
                    let want_ab = if class(i) == class(j) {
                        true
                    } else {
                        (class(i) + 1) % 3 == class(j)
                    };
                    tour.beats(a, b) == want_ab
                })
            })
        })
    })
}

fn fas_brute(tour: &Tournament) -> u64 {
    let n = tour.n();
    (0..n)
        .permutations(n)
        .map(|p| {
            p.iter()
                .tuple_combinations()
                .filter(|&(&a, &b)| tour.beats(b, a))
                .count() as u64
        })
        .min()
        .unwrap_or(0)
}

fn ex_brute(n: usize, a: usize, b: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len())
        .filter_map(|code| {
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| code >> k & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .unwrap();
            let free = !(0..n).combinations(a).any(|xs| {
                (0..n)
                    .filter(|v| !xs.contains(v) && xs.iter().all(|&x| g.has_edge(x, *v)))
                    .count()
                    >= b
            });
            free.then_some(code.count_ones() as usize)
        })
        .max()
        .unwrap()
}

#[test]
fn colouring_detector_matches_brute_force() {
    for seed in 0..150 {
        let n = 4 + (seed as usize % 6);
        let p = [0.1, 0.5, 0.9][seed as usize % 3];
        let c = random_colouring(n, p, seed);
        for t in [2, 3] {
            if n < 2 * t {
                continue;
            }
            let got = find_unavoidable_colouring(&c, t).unwrap();
            assert_eq!(
                got.is_some(),
                colour_pattern_brute(&c, t),
                "seed {seed}, t {t}"
            );
            if let Some(w) = got {
                assert!(w.verify_colouring(&c, t));
            }
        }
    }
}

#[test]
fn tournament_detectors_match_brute_force() {
    for seed in 0..60 {
        let tour = random_tournament(6 + seed as usize % 3, seed);
        let got = find_unavoidable_tournament(&tour, 2).unwrap();
        assert_eq!(got.is_some(), blowup_brute(&tour, 2), "seed {seed}");
        for k in 3..=5 {
            assert_eq!(
                find_transitive_subtournament(&tour, k).unwrap().is_some(),
                transitive_brute(&tour, k),
                "seed {seed}, k {k}"
            );
        }
    }
    assert!(blowup_brute(&cyclic_blowup(2), 2));
    assert!(!blowup_brute(&transitive_tournament(6), 2));
}

#[test]
fn exact_fas_matches_permutations() {
    for seed in 0..40 {
        let tour = random_tournament(3 + seed as usize % 5, seed);
        let exact = min_backward_edges_exact(&tour).unwrap().numerator;
        assert_eq!(exact, fas_brute(&tour), "seed {seed}");
        assert!(min_backward_edges_heuristic(&tour, seed, 2).numerator >= exact);
    }
}

#[test]
fn isomorphism_class_counts() {
    // Unlabelled graphs and tournaments on n vertices.
    let graphs = [1, 2, 4, 11, 34, 156];
    let tours = [1, 1, 2, 4, 12, 56];
    for n in 1..=6 {
        assert_eq!(
            graph_classes(n).unwrap().len(),
            graphs[n - 1],
            "graphs on {n}"
        );
        assert_eq!(
            tournament_classes(n).unwrap().len(),
            tours[n - 1],
            "tournaments on {n}"
        );
    }
}

#[test]
fn canonical_form_ignores_labels() {
    for seed in 0..30 {
        let g = random_graph(8, 0.4, seed);
        let mut small = SmallDigraph::new(8);
        for (u, v) in g.edges() {
            small.add_edge(u, v);
        }
        let order: Vec<usize> = (0..8).rev().collect();
        assert_eq!(
            small.canonical_form(),
            small.relabel(&order).canonical_form()
        );
    }
}

#[test]
fn zarankiewicz_matches_brute_force() {
    for n in 2..=6 {
        for (a, b) in [(2, 2), (2, 3), (1, 2)] {
            let record = zarankiewicz_extremal(n, a, b, None).unwrap();
            assert!(record.exhaustive);
            assert_eq!(record.edge_count, ex_brute(n, a, b), "ex({n}, K_{a},{b})");
            assert!(!contains_biclique(&record.graph, a, b).unwrap());
        }
    }
}

#[test]
fn biclique_search_matches_brute_force() {
    for seed in 0..40 {
        let g = random_graph(9, 0.5, seed);
        let brute = (0..9).combinations(2).any(|xs| {
            (0..9)
                .filter(|v| !xs.contains(v) && xs.iter().all(|&x| g.has_edge(x, *v)))
                .count()
                >= 3
        });
        assert_eq!(contains_biclique(&g, 2, 3).unwrap(), brute, "seed {seed}");
    }
    let h = BipartiteGraph::from_edges(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)]).unwrap();
    assert_eq!(
        find_biclique(&h, 2, 2).unwrap(),
        Some((vec![0, 1], vec![0, 1]))
    );
    assert_eq!(find_biclique(&h, 2, 3).unwrap(), None);
}

#[test]
fn polarity_graphs_are_c4_free() {
    for q in [2, 3, 5, 7] {
        let g = polarity_graph(q).unwrap();
        assert_eq!(g.n() as u64, q * q + q + 1);
        assert!(!contains_biclique(&g, 2, 2).unwrap());
    }
}

#[test]
fn small_ramsey_rows() {
    let d = ramsey_table(RamseyKind::D, 2, &[6, 7]).unwrap();
    let values: Vec<u64> = d.rows.iter().map(|r| r.m_star).collect();
    assert_eq!(values, [4, 7]);
    for row in &d.rows {
        let tour = unavoid::io::decode_tournament(&row.witness).unwrap();
        assert!(find_unavoidable_tournament(&tour, 2).unwrap().is_none());
        assert_eq!(fas_brute(&tour), row.m_star);
    }
}
