//! Pattern-free constructions and their verification reports.

use serde::Serialize;

use crate::colouring::TwoColouring;
use crate::detect::{find_unavoidable_colouring, find_unavoidable_tournament};
use crate::error::{Error, Result};
use crate::extremal::{
    bipartite_half, has_two_sided_biclique, zarankiewicz_extremal, ExtremalRecord,
};
use crate::farness::{backward_count, colour_farness, min_backward_edges_exact, EXACT_CAP};
use crate::graph::{BipartiteGraph, EmbeddedBipartite, Graph};
use crate::ordering::Ordering;
use crate::tournament::Tournament;

/// Colours the edges of `h` red and everything else blue.
pub fn coltight_colouring(h: &EmbeddedBipartite) -> TwoColouring {
    TwoColouring::from_red_graph(h.to_graph())
}

/// Tournament on `A ∪ B` (`A = 0..a`, `B = a..a+b`) whose backward edges in
/// the ordering `A` then `B` are exactly the edges of `h`, directed from
/// `B` to `A`. All other pairs point forward, so `T[A]` and `T[B]` are
/// transitive. The returned ordering is the identity.
pub fn tourtight_tournament(h: &BipartiteGraph) -> (Tournament, Ordering) {
    let a = h.a_size();
    let n = a + h.b_size();
    let tour = Tournament::from_fn(n, |u, v| !(u < a && v >= a && h.has_edge(u, v - a)));
    (tour, Ordering::identity(n))
}

/// Red star at vertex 0, everything else blue.
pub fn star_colouring(n: usize) -> Result<TwoColouring> {
    if n < 2 {
        return Err(Error::InvalidArgument("star colouring needs n >= 2".into()));
    }
    Ok(TwoColouring::from_fn(n, |u, _| u == 0))
}

/// Number of vertices of [`d2_recursive`] at `depth`: `2^(depth+2) - 1`.
pub fn d2_order(depth: u32) -> usize {
    (1usize << (depth + 2)) - 1
}

/// `T_0` is the cyclic triangle; `T_{k+1}` has copies `A = 0..n` and
/// `B = n..2n` of `T_k` with all edges `A -> B`, and apex `z = 2n` with
/// `B -> z -> A`.
pub fn d2_recursive(depth: u32) -> Tournament {
    let mut tour = Tournament::from_edges(3, [(0, 1), (1, 2), (2, 0)]).expect("triangle");
    for _ in 0..depth {
        let n = tour.n();
        let prev = tour;
        tour = Tournament::from_fn(2 * n + 1, |u, v| {
            let z = 2 * n;
            match (u < n, v < n, v == z) {
                (_, _, true) => u >= n,
                (true, true, _) => prev.beats(u, v),
                (true, false, _) => true,
                (false, false, _) => prev.beats(u - n, v - n),
                (false, true, _) => unreachable!("u < v"),
            }
        });
    }
    tour
}

/// `ceil(n log2(n) / 5)`, computed exactly as the least `k` with
/// `2^(5k) >= n^n`.
pub fn log_fas_bound(n: u64) -> u64 {
    if n <= 1 {
        return 0;
    }
    // n^n as little-endian u64 limbs.
    let mut limbs: Vec<u64> = vec![1];
    for _ in 0..n {
        let mut carry = 0u128;
        for limb in limbs.iter_mut() {
            let x = *limb as u128 * n as u128 + carry;
            *limb = x as u64;
            carry = x >> 64;
        }
        if carry > 0 {
            limbs.push(carry as u64);
        }
    }
    let top = *limbs.last().expect("non-empty");
    let bits = 64 * (limbs.len() as u64 - 1) + (64 - top.leading_zeros() as u64);
    let power_of_two = top.is_power_of_two() && limbs[..limbs.len() - 1].iter().all(|&l| l == 0);
    let ceil_log2 = if power_of_two { bits - 1 } else { bits };
    ceil_log2.div_ceil(5)
}

/// Graph with `ex - 1` edges when the record is exhaustive (the last edge in
/// lexicographic order removed), else the record's witness unchanged.
pub fn witness_minus_one_edge(record: &ExtremalRecord) -> Graph {
    let mut g = record.graph.clone();
    if record.exhaustive {
        if let Some((u, v)) = g.edges().last() {
            g.remove_edge(u, v);
        }
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct ColtightReport {
    pub n: usize,
    pub t: usize,
    pub extremal_edges: usize,
    pub extremal_exhaustive: bool,
    pub host_edges: usize,
    pub red: usize,
    pub blue: usize,
    pub min_colour: usize,
    pub red_bipartite: bool,
    pub pattern_free: bool,
    /// `2 * min_colour >= extremal_edges - 1`.
    pub meets_bound: bool,
    pub delta: String,
}

impl ColtightReport {
    pub fn passed(&self) -> bool {
        self.red_bipartite && self.pattern_free && self.meets_bound
    }
}

pub struct Coltight {
    pub record: ExtremalRecord,
    pub half: EmbeddedBipartite,
    pub colouring: TwoColouring,
    pub report: ColtightReport,
}

/// Extremal `K_{t,t}`-free graph on `n` vertices, minus one edge, halved
/// to a bipartite subgraph and coloured red; verified with the detector.
pub fn coltight(n: usize, t: usize, seed: u64, budget: Option<u64>) -> Result<Coltight> {
    if t == 0 || n < 2 {
        return Err(Error::InvalidArgument("need t >= 1 and n >= 2".into()));
    }
    let record = zarankiewicz_extremal(n, t, t, budget)?;
    let host = witness_minus_one_edge(&record);
    let half = bipartite_half(&host, seed);
    let colouring = coltight_colouring(&half);
    let pattern_free = if n >= 2 * t {
        find_unavoidable_colouring(&colouring, t)?.is_none()
    } else {
        true
    };
    let farness = colour_farness(&colouring);
    let min_colour = farness.numerator as usize;
    let report = ColtightReport {
        n,
        t,
        extremal_edges: record.edge_count,
        extremal_exhaustive: record.exhaustive,
        host_edges: host.edge_count(),
        red: colouring.red_count(),
        blue: colouring.blue_count(),
        min_colour,
        red_bipartite: colouring.red_graph().two_colour().is_some(),
        pattern_free,
        meets_bound: 2 * min_colour + 1 >= record.edge_count,
        delta: farness.delta().to_string(),
    };
    Ok(Coltight {
        record,
        half,
        colouring,
        report,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TourtightReport {
    pub a_size: usize,
    pub b_size: usize,
    pub t: usize,
    pub r: usize,
    pub h_edges: usize,
    /// No `r` vertices on either side of `H` with `t` common neighbours.
    pub h_free: bool,
    pub backward: u64,
    pub backward_matches: bool,
    pub classes_transitive: bool,
    pub pattern_free: bool,
    /// Exact minimum backward count when `n` is within the exact cap.
    pub fas_exact: Option<u64>,
}

impl TourtightReport {
    pub fn passed(&self) -> bool {
        self.h_free && self.backward_matches && self.classes_transitive && self.pattern_free
    }
}

/// Builds [`tourtight_tournament`] from `h` and verifies it against `U_t`
/// with `r = ceil(t/2)`.
pub fn tourtight_report(
    h: &BipartiteGraph,
    t: usize,
) -> Result<(Tournament, Ordering, TourtightReport)> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    let r = t.div_ceil(2);
    let (tour, sigma) = tourtight_tournament(h);
    let a = h.a_size();
    let n = tour.n();
    let backward = backward_count(&tour, &sigma);
    let class_a: Vec<usize> = (0..a).collect();
    let class_b: Vec<usize> = (a..n).collect();
    let pattern_free = if n >= 3 * t {
        find_unavoidable_tournament(&tour, t)?.is_none()
    } else {
        true
    };
    let fas_exact = if n <= EXACT_CAP {
        Some(min_backward_edges_exact(&tour)?.numerator)
    } else {
        None
    };
    let report = TourtightReport {
        a_size: a,
        b_size: h.b_size(),
        t,
        r,
        h_edges: h.edge_count(),
        h_free: !has_two_sided_biclique(h, r, t)?,
        backward,
        backward_matches: backward == h.edge_count() as u64,
        classes_transitive: tour.induced(&class_a).is_transitive()
            && tour.induced(&class_b).is_transitive(),
        pattern_free,
        fas_exact,
    };
    Ok((tour, sigma, report))
}

#[derive(Clone, Debug, Serialize)]
pub struct D2Report {
    pub depth: u32,
    pub n: usize,
    pub strongly_connected: bool,
    pub u2_free: bool,
    pub fas_exact: Option<u64>,
    /// `ceil(n log2 n / 5)`.
    pub log_bound: u64,
    pub meets_log_bound: Option<bool>,
}

impl D2Report {
    pub fn passed(&self) -> bool {
        self.strongly_connected && self.u2_free && self.meets_log_bound != Some(false)
    }
}

pub fn d2_report(depth: u32) -> Result<(Tournament, D2Report)> {
    let tour = d2_recursive(depth);
    let n = tour.n();
    let fas_exact = if n <= EXACT_CAP {
        Some(min_backward_edges_exact(&tour)?.numerator)
    } else {
        None
    };
    let log_bound = log_fas_bound(n as u64);
    let report = D2Report {
        depth,
        n,
        strongly_connected: tour.is_strongly_connected(),
        u2_free: n < 6 || find_unavoidable_tournament(&tour, 2)?.is_none(),
        fas_exact,
        log_bound,
        meets_log_bound: fas_exact.map(|f| f >= log_bound),
    };
    Ok((tour, report))
}
