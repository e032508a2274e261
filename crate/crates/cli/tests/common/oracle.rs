//! Brute-force reference implementations, written independently of the
//! library algorithms.

use itertools::Itertools;

use unavoid::{Colour, Graph, Tournament, TwoColouring};

fn bit_set(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |acc, &v| acc | 1 << v)
}

/// Per-colour adjacency masks read pair by pair.
fn colour_masks(c: &TwoColouring, colour: Colour) -> Vec<u64> {
    let n = c.n();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && c.colour(u, v) == colour)
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

/// Whether some `2t` vertices carry an unavoidable `t`-colouring, by
/// trying every `2t`-set and every `t`-subset of it in both colours.
pub fn colouring_has_pattern(c: &TwoColouring, t: usize) -> bool {
    let n = c.n();
    if n < 2 * t {
        return false;
    }
    let masks = [colour_masks(c, Colour::Red), colour_masks(c, Colour::Blue)];
    (0..n).combinations(2 * t).any(|s| {
        let sm = bit_set(&s);
        s.iter().copied().combinations(t).any(|q| {
            let qm = bit_set(&q);
            masks.iter().any(|m| {
                let one_clique = s.iter().all(|&v| {
                    let want = if qm >> v & 1 == 1 { qm & !(1 << v) } else { 0 };
                    m[v] & sm == want
                });
                let two_cliques = s.iter().all(|&v| {
                    let side = if qm >> v & 1 == 1 { qm } else { sm & !qm };
                    m[v] & sm == side & !(1 << v)
                });
                one_clique || two_cliques
            })
        })
    })
}

fn out_masks(tour: &Tournament) -> Vec<u64> {
    let n = tour.n();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && tour.beats(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

fn is_transitive_set(out: &[u64], class: u64, members: &[usize]) -> bool {
    members
        .iter()
        .map(|&v| (out[v] & class).count_ones())
        .sorted()
        .eq(0..members.len() as u32)
}

fn all_arcs(out: &[u64], from: &[usize], to: u64) -> bool {
    from.iter().all(|&v| out[v] & to == to)
}

/// Whether the `3t` vertices of `s` induce the cyclic blow-up `U_t`.
fn is_blowup(out: &[u64], s: &[usize], t: usize) -> bool {
    let sm = bit_set(s);
    // In U_t each out-degree t..2t-1 occurs exactly three times.
    let degrees: Vec<u32> = s
        .iter()
        .map(|&v| (out[v] & sm).count_ones())
        .sorted()
        .collect();
    let expected: Vec<u32> = (t as u32..2 * t as u32).flat_map(|d| [d, d, d]).collect();
    if degrees != expected {
        return false;
    }
    s[1..].iter().copied().combinations(t - 1).any(|rest| {
        let v1: Vec<usize> = std::iter::once(s[0]).chain(rest).collect();
        let m1 = bit_set(&v1);
        let others: Vec<usize> = s.iter().copied().filter(|&v| m1 >> v & 1 == 0).collect();
        others.iter().copied().combinations(t).any(|v2| {
            let m2 = bit_set(&v2);
            let v3: Vec<usize> = others
                .iter()
                .copied()
                .filter(|&v| m2 >> v & 1 == 0)
                .collect();
            let m3 = bit_set(&v3);
            all_arcs(out, &v1, m2)
                && all_arcs(out, &v2, m3)
                && all_arcs(out, &v3, m1)
                && is_transitive_set(out, m1, &v1)
                && is_transitive_set(out, m2, &v2)
                && is_transitive_set(out, m3, &v3)
        })
    })
}

/// Whether `U_t` occurs on some `3t` vertices.
pub fn tournament_has_pattern(tour: &Tournament, t: usize) -> bool {
    let n = tour.n();
    if n < 3 * t {
        return false;
    }
    let out = out_masks(tour);
    (0..n).combinations(3 * t).any(|s| is_blowup(&out, &s, t))
}

/// Backward edges of the vertex sequence `order`.
pub fn backward_of(tour: &Tournament, order: &[usize]) -> u64 {
    let mut count = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if tour.beats(order[j], order[i]) {
                count += 1;
            }
        }
    }
    count
}

/// Minimum backward edges over all `n!` orderings.
pub fn fas_factorial(tour: &Tournament) -> u64 {
    let n = tour.n();
    if n < 2 {
        return 0;
    }
    (0..n)
        .permutations(n)
        .map(|p| backward_of(tour, &p))
        .min()
        .expect("non-empty")
}

/// Whether some `a` vertices have at least `b` common neighbours.
pub fn graph_has_biclique(g: &Graph, a: usize, b: usize) -> bool {
    let n = g.n();
    let nb: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect();
    (0..n)
        .combinations(a)
        .any(|xs| xs.iter().fold(u64::MAX, |m, &x| m & nb[x]).count_ones() as usize >= b)
}

/// Whether `r` vertices of one side of `H` (either side) have at least `t`
/// common neighbours.
pub fn bipartite_has_two_sided(h: &unavoid::BipartiteGraph, r: usize, t: usize) -> bool {
    let rows: Vec<u64> = (0..h.a_size())
        .map(|i| {
            (0..h.b_size())
                .filter(|&j| h.has_edge(i, j))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    let cols: Vec<u64> = (0..h.b_size())
        .map(|j| {
            (0..h.a_size())
                .filter(|&i| h.has_edge(i, j))
                .fold(0, |m, i| m | 1 << i)
        })
        .collect();
    let side = |masks: &[u64]| {
        (0..masks.len())
            .combinations(r)
            .any(|xs| xs.iter().fold(u64::MAX, |m, &x| m & masks[x]).count_ones() as usize >= t)
    };
    side(&rows) || side(&cols)
}

/// Maximum edges of a `C_4`-free graph on `n` vertices, over all `2^C(n,2)`
/// labelled graphs.
pub fn ex_c4_brute(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut best = 0;
    let mut nb = vec![0u64; n];
    for code in 0u64..1 << pairs.len() {
        let edges = code.count_ones() as usize;
        if edges <= best {
            continue;
        }
        nb.iter_mut().for_each(|m| *m = 0);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                nb[u] |= 1 << v;
                nb[v] |= 1 << u;
            }
        }
        let c4 = (0..n).any(|u| (u + 1..n).any(|v| (nb[u] & nb[v]).count_ones() >= 2));
        if !c4 {
            best = edges;
        }
    }
    best
}
