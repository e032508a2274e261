//! Generators for the basic objects.

use crate::colouring::TwoColouring;
use crate::graph::Graph;
use crate::rng::SeededRng;
use crate::tournament::Tournament;

/// All edges `i -> j` for `i < j`.
pub fn transitive_tournament(n: usize) -> Tournament {
    Tournament::from_fn(n, |_, _| true)
}

/// The cyclic-triangle blow-up on `3t` vertices: classes `{0..t}`,
/// `{t..2t}`, `{2t..3t}`, each transitive by increasing id, with all edges
/// from class `i` to class `i + 1 (mod 3)`.
pub fn cyclic_blowup(t: usize) -> Tournament {
    Tournament::from_fn(3 * t, |u, v| {
        let (cu, cv) = (u / t, v / t);
        if cu == cv {
            true
        } else {
            (cu + 1) % 3 == cv
        }
    })
}

/// Uniform random tournament. Pairs `u < v` are visited in lexicographic
/// order, each consuming one `SeededRng::bit()`; a set bit orients `u -> v`.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut rng = SeededRng::new(seed);
    Tournament::from_fn(n, |_, _| rng.bit())
}

/// Random colouring with each pair red independently with probability `p`
/// (pairs in lexicographic order, one `SeededRng::unit()` each).
pub fn random_colouring(n: usize, p: f64, seed: u64) -> TwoColouring {
    TwoColouring::from_red_graph(random_graph(n, p, seed))
}

/// `G(n, p)` with pairs visited in lexicographic order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = SeededRng::new(seed);
    Graph::from_fn(n, |_, _| rng.chance(p))
}

/// A transitive tournament on a random vertex order with every edge
/// reversed independently with probability `p`.
pub fn perturbed_transitive(n: usize, p: f64, seed: u64) -> Tournament {
    let mut rng = SeededRng::new(seed);
    let order = rng.permutation(n);
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    Tournament::from_fn(n, |u, v| (rank[u] < rank[v]) != rng.chance(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_small_cases() {
        let t1 = transitive_tournament(1);
        assert_eq!(t1.edges().count(), 0);
        let t3 = transitive_tournament(3);
        assert_eq!(t3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn blowup_of_one_is_cyclic_triangle() {
        let c = cyclic_blowup(1);
        assert!(c.beats(0, 1) && c.beats(1, 2) && c.beats(2, 0));
        let b2 = cyclic_blowup(2);
        assert_eq!(b2.n(), 6);
        assert_eq!(b2.edges().count(), 15);
        assert!(b2.beats(0, 1) && b2.beats(1, 2) && b2.beats(4, 0) && b2.beats(3, 5));
    }

    #[test]
    fn random_tournament_is_reproducible() {
        assert_eq!(random_tournament(5, 42), random_tournament(5, 42));
        assert_ne!(random_tournament(12, 42), random_tournament(12, 43));
        assert_eq!(random_tournament(1, 9).edges().count(), 0);
        let t = random_tournament(30, 7);
        for u in 0..30 {
            for v in 0..30 {
                if u != v {
                    assert!(t.beats(u, v) ^ t.beats(v, u));
                }
            }
            assert!(!t.beats(u, u));
        }
    }

    #[test]
    fn perturbed_with_zero_noise_is_transitive() {
        assert!(perturbed_transitive(20, 0.0, 3).is_transitive());
        assert_eq!(random_colouring(10, 1.0, 1).blue_count(), 0);
    }
}
