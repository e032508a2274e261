//! `K_{a,b}`-free graphs: exhaustive Zarankiewicz-type search at small `n`,
//! the polarity graph of the projective plane over a prime field, and
//! bipartite halving.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::{SmallDigraph, CANON_MAX};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EmbeddedBipartite, Graph};
use crate::rng::SeededRng;

/// Default node budget for [`zarankiewicz_extremal`]; enough to finish
/// `(2,2)` up to `n = 10` and `(2,3)`, `(3,3)` up to `n = 10`.
pub const DEFAULT_EXTREMAL_BUDGET: u64 = 200_000_000;

/// Randomised greedy restarts used for the starting lower bound.
const GREEDY_RESTARTS: u64 = 32;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub edge_count: usize,
    #[serde(skip)]
    pub graph: Graph,
    /// No `n`-vertex `K_{a,b}`-free graph has more edges.
    pub exhaustive: bool,
    pub nodes: u64,
}

/// Whether some `a` vertices have `b` common neighbours (a `K_{a,b}`
/// subgraph, the two sides being automatically disjoint). Rows are
/// neighbourhood masks.
pub(crate) fn masks_contain_biclique(rows: &[u64], a: usize, b: usize) -> bool {
    fn go(rows: &[u64], start: usize, left: usize, common: u64, b: usize) -> bool {
        if left == 0 {
            return common.count_ones() as usize >= b;
        }
        (start..rows.len()).any(|x| {
            let next = common & rows[x];
            (next.count_ones() as usize) >= b && go(rows, x + 1, left - 1, next, b)
        })
    }
    go(rows, 0, a, u64::MAX, b)
}

/// `K_{a,b}`-containment for a graph on at most 64 vertices.
pub fn contains_biclique(g: &Graph, a: usize, b: usize) -> Result<bool> {
    crate::detect::require_word_size(g.n())?;
    let rows: Vec<u64> = (0..g.n()).map(|u| g.mask(u)).collect();
    Ok(masks_contain_biclique(&rows, a, b))
}

fn greedy_free_graph(n: usize, a: usize, b: usize, seed: u64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    if seed > 0 {
        SeededRng::with_stream(seed, 1).shuffle(&mut pairs);
    }
    let mut rows = vec![0u64; n];
    for (u, v) in pairs {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        if masks_contain_biclique(&rows, a, b) {
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
        }
    }
    Graph::from_fn(n, |u, v| (rows[u] >> v) & 1 == 1)
}

fn graph_from_small(g: &SmallDigraph) -> Graph {
    Graph::from_fn(g.n(), |u, v| g.has_arc(u, v))
}

/// Whether adding vertex `k` with neighbourhood `nbrs` to `g` (on `0..k`)
/// keeps it `K_{a,b}`-free, assuming `g` itself is.
fn extension_is_free(g: &SmallDigraph, nbrs: u16, a: usize, b: usize) -> bool {
    let k = g.n();
    let rows = g.rows();
    // X = {new} ∪ X' with |X'| = a - 1; common neighbours lie inside nbrs.
    fn with_new(rows: &[u16], start: usize, left: usize, common: u16, b: usize) -> bool {
        if left == 0 {
            return common.count_ones() as usize >= b;
        }
        (start..rows.len()).any(|x| {
            let next = common & rows[x];
            (next.count_ones() as usize) >= b && with_new(rows, x + 1, left - 1, next, b)
        })
    }
    if with_new(rows, 0, a - 1, nbrs, b) {
        return false;
    }
    // X ⊆ nbrs, |X| = a: the new vertex is one more common neighbour.
    fn inside(rows: &[u16], nbrs: u16, start: usize, left: usize, common: u16, b: usize) -> bool {
        if left == 0 {
            return common.count_ones() as usize + 1 >= b;
        }
        (start..rows.len()).any(|x| {
            if (nbrs >> x) & 1 == 0 {
                return false;
            }
            let next = common & rows[x];
            (next.count_ones() as usize) + 1 >= b && inside(rows, nbrs, x + 1, left - 1, next, b)
        })
    }
    let all = if k >= 16 { u16::MAX } else { (1u16 << k) - 1 };
    !inside(rows, nbrs, 0, a, all, b)
}

struct Exhausted;

/// All `K_{a,b}`-free graphs on `n` vertices with at least `target` edges,
/// up to isomorphism, built by adding a minimum-degree vertex at each step.
///
/// Removing a minimum-degree vertex from an `m`-vertex graph with `e` edges
/// leaves at least `e - floor(2e/m)` edges, so level `k` only needs the
/// graphs with at least `threshold[k]` edges.
fn free_graphs_with_at_least(
    n: usize,
    a: usize,
    b: usize,
    target: usize,
    nodes: &mut u64,
    budget: u64,
) -> std::result::Result<BTreeSet<SmallDigraph>, Exhausted> {
    let mut threshold = vec![0usize; n + 1];
    threshold[n] = target;
    for k in (1..n).rev() {
        let e = threshold[k + 1];
        threshold[k] = e - 2 * e / (k + 1);
    }
    let mut level: BTreeSet<SmallDigraph> = BTreeSet::new();
    level.insert(SmallDigraph::new(1));
    for k in 1..n {
        let mut next = BTreeSet::new();
        for g in &level {
            let degrees: Vec<u32> = g.rows().iter().map(|r| r.count_ones()).collect();
            let edges = degrees.iter().sum::<u32>() as usize / 2;
            let min_deg = degrees.iter().copied().min().unwrap_or(0);
            for nbrs in 0u16..(1u16 << k) {
                *nodes += 1;
                if *nodes > budget {
                    return Err(Exhausted);
                }
                let d = nbrs.count_ones();
                if edges + (d as usize) < threshold[k + 1] || d > min_deg + 1 {
                    continue;
                }
                // The new vertex must have minimum degree in the new graph.
                if (0..k).any(|u| d > degrees[u] + ((nbrs >> u) & 1) as u32) {
                    continue;
                }
                if !extension_is_free(g, nbrs, a, b) {
                    continue;
                }
                next.insert(g.with_vertex(nbrs, nbrs).canonical_form());
            }
        }
        level = next;
    }
    Ok(level)
}

/// Maximum number of edges of an `n`-vertex `K_{a,b}`-free graph.
///
/// A randomised greedy pass gives a lower bound `lb`; then every
/// `K_{a,b}`-free graph with more than `lb` edges is enumerated up to
/// isomorphism by orderly minimum-degree vertex addition with canonical
/// forms from [`crate::canon`]. If that completes within `budget` nodes the
/// record is exhaustive and its witness is the least canonical form among
/// the maximum graphs; otherwise the greedy witness is returned with
/// `exhaustive = false`.
pub fn zarankiewicz_extremal(
    n: usize,
    a: usize,
    b: usize,
    budget: Option<u64>,
) -> Result<ExtremalRecord> {
    if a == 0 || a > b {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a <= b, got a = {a}, b = {b}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    crate::detect::require_word_size(n)?;
    let budget = budget.unwrap_or(DEFAULT_EXTREMAL_BUDGET);
    let mut best = (0..GREEDY_RESTARTS)
        .map(|seed| greedy_free_graph(n, a, b, seed))
        .max_by_key(|g| {
            (
                g.edge_count(),
                std::cmp::Reverse(g.edges().collect::<Vec<_>>()),
            )
        })
        .expect("restarts");
    let all_pairs = n * (n - 1) / 2;
    let mut nodes = 0u64;
    let mut exhaustive = best.edge_count() == all_pairs;
    if !exhaustive && n <= CANON_MAX {
        if let Ok(found) =
            free_graphs_with_at_least(n, a, b, best.edge_count() + 1, &mut nodes, budget)
        {
            exhaustive = true;
            let edges = |g: &SmallDigraph| g.rows().iter().map(|r| r.count_ones()).sum::<u32>();
            if let Some(top) = found.iter().map(edges).max() {
                let witness = found
                    .iter()
                    .find(|g| edges(g) == top)
                    .expect("maximum exists");
                best = graph_from_small(witness);
            }
        }
    }
    Ok(ExtremalRecord {
        n,
        a,
        b,
        edge_count: best.edge_count(),
        graph: best,
        exhaustive,
        nodes,
    })
}

fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Polarity graph of `PG(2, q)` for prime `q`.
///
/// Vertices are the `q² + q + 1` projective points written as triples whose
/// first non-zero coordinate is 1, listed in lexicographic order; `x ~ y`
/// iff `x · y ≡ 0 (mod q)` and `x ≠ y`. The graph is `C_4`-free with
/// `q(q + 1)² / 2` edges.
pub fn polarity_graph(q: u64) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::InvalidArgument(format!("q = {q} is not prime")));
    }
    let mut points: Vec<[u64; 3]> = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let p = [x, y, z];
                if p.iter().find(|&&c| c != 0) == Some(&1) {
                    points.push(p);
                }
            }
        }
    }
    let dot = |p: &[u64; 3], r: &[u64; 3]| (p[0] * r[0] + p[1] * r[1] + p[2] * r[2]) % q;
    Ok(Graph::from_fn(points.len(), |u, v| {
        dot(&points[u], &points[v]) == 0
    }))
}

/// Spanning bipartite subgraph keeping at least half the edges.
///
/// Sides start from one `SeededRng::bit()` per vertex (set bit: class `B`).
/// Then vertices are scanned in increasing order and any vertex with more
/// neighbours on its own side than across is moved; scans repeat until a
/// full scan moves nothing. At that point every vertex has at least half
/// its degree across the cut.
pub fn bipartite_half(g: &Graph, seed: u64) -> EmbeddedBipartite {
    let n = g.n();
    let mut rng = SeededRng::new(seed);
    let mut side: Vec<bool> = (0..n).map(|_| rng.bit()).collect();
    loop {
        let mut moved = false;
        for v in 0..n {
            let same = g.neighbours(v).filter(|&u| side[u] == side[v]).count();
            if 2 * same > g.degree(v) {
                side[v] = !side[v];
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let a_vertices: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    let b_vertices: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    let graph = BipartiteGraph::from_fn(a_vertices.len(), b_vertices.len(), |i, j| {
        g.has_edge(a_vertices[i], b_vertices[j])
    });
    EmbeddedBipartite {
        n,
        a_vertices,
        b_vertices,
        graph,
    }
}

/// Whether `h` has `r` vertices on either side with `t` common neighbours
/// on the other.
pub fn has_two_sided_biclique(h: &BipartiteGraph, r: usize, t: usize) -> Result<bool> {
    Ok(crate::detect::find_biclique(h, r, t)?.is_some()
        || crate::detect::find_biclique(&h.transpose(), r, t)?.is_some())
}

/// Maximal bipartite graph on `a_size x b_size` with no `r` vertices on
/// either side sharing `t` neighbours, by randomised greedy edge insertion.
///
/// Restart `k` inserts pairs in the order of a shuffle from stream `k + 1`
/// of `seed`; the result is the first restart with the most edges.
pub fn bipartite_free_greedy(
    a_size: usize,
    b_size: usize,
    r: usize,
    t: usize,
    seed: u64,
    restarts: usize,
) -> Result<BipartiteGraph> {
    if r == 0 || t == 0 {
        return Err(Error::InvalidArgument(
            "biclique sides must be at least 1".into(),
        ));
    }
    if a_size > 64 || b_size > 64 {
        return Err(Error::Size(
            "greedy bipartite construction supports classes of at most 64".into(),
        ));
    }
    let mut best: Option<BipartiteGraph> = None;
    for k in 0..restarts.max(1) {
        let mut pairs: Vec<(usize, usize)> = (0..a_size)
            .flat_map(|i| (0..b_size).map(move |j| (i, j)))
            .collect();
        SeededRng::with_stream(seed, k as u64 + 1).shuffle(&mut pairs);
        let mut left = vec![0u64; a_size];
        let mut right = vec![0u64; b_size];
        for (i, j) in pairs {
            left[i] |= 1 << j;
            right[j] |= 1 << i;
            if masks_contain_biclique(&left, r, t) || masks_contain_biclique(&right, r, t) {
                left[i] &= !(1 << j);
                right[j] &= !(1 << i);
            }
        }
        let h = BipartiteGraph::from_fn(a_size, b_size, |i, j| (left[i] >> j) & 1 == 1);
        if best
            .as_ref()
            .is_none_or(|b| h.edge_count() > b.edge_count())
        {
            best = Some(h);
        }
    }
    Ok(best.expect("at least one restart"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_are_complete() {
        let r = zarankiewicz_extremal(3, 2, 2, None).unwrap();
        assert_eq!(r.edge_count, 3);
        assert!(r.exhaustive);
        let r = zarankiewicz_extremal(5, 3, 3, None).unwrap();
        assert_eq!(r.edge_count, 10);
    }

    #[test]
    fn c4_free_small_values() {
        assert_eq!(zarankiewicz_extremal(4, 2, 2, None).unwrap().edge_count, 4);
        let r = zarankiewicz_extremal(7, 2, 2, None).unwrap();
        assert_eq!(r.edge_count, 9);
        assert!(r.exhaustive);
        assert!(!contains_biclique(&r.graph, 2, 2).unwrap());
    }

    #[test]
    fn bad_arguments() {
        assert!(zarankiewicz_extremal(5, 3, 2, None).is_err());
        assert!(zarankiewicz_extremal(0, 2, 2, None).is_err());
        assert!(polarity_graph(4).is_err());
        assert!(polarity_graph(1).is_err());
    }

    #[test]
    fn tiny_budget_is_not_exhaustive() {
        let r = zarankiewicz_extremal(9, 2, 2, Some(10)).unwrap();
        assert!(!r.exhaustive);
        assert!(!contains_biclique(&r.graph, 2, 2).unwrap());
    }

    #[test]
    fn polarity_sizes() {
        for (q, n, e) in [(2u64, 7usize, 9usize), (3, 13, 24), (5, 31, 90)] {
            let g = polarity_graph(q).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), e);
            assert!(!contains_biclique(&g, 2, 2).unwrap());
        }
    }

    #[test]
    fn halving_examples() {
        let star = Graph::from_fn(6, |u, _| u == 0);
        for seed in 0..5 {
            assert_eq!(bipartite_half(&star, seed).graph.edge_count(), 5);
            assert_eq!(
                bipartite_half(&Graph::complete(3), seed).graph.edge_count(),
                2
            );
        }
        let h = bipartite_half(&polarity_graph(3).unwrap(), 0);
        assert!(h.graph.edge_count() >= 12);
    }

    #[test]
    fn greedy_bipartite_is_free() {
        let h = bipartite_free_greedy(7, 7, 2, 3, 0, 8).unwrap();
        assert!(!has_two_sided_biclique(&h, 2, 3).unwrap());
        assert!(h.edge_count() >= 21);
    }
}
