//! Distance from monochromatic and from transitive.
//!
//! A colouring of `K_n` is δ-far from monochromatic when both colours appear
//! on at least `δn²` edges; a tournament is δ-far from transitive when at
//! least `δn²` edges must be reversed to make it transitive, i.e. when every
//! vertex ordering has at least `δn²` backward edges. Values are reported as
//! exact rationals over the `n²` denominator.

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::TwoColouring;
use crate::error::{Error, Result};
use crate::ordering::Ordering;
use crate::rng::SeededRng;
use crate::tournament::Tournament;
use crate::Rational;

/// Default largest `n` accepted by [`min_backward_edges_exact`]
/// (`2^22` table entries of 2 bytes).
pub const EXACT_CAP: usize = 22;

/// Hard ceiling for a caller-raised cap.
pub const EXACT_CAP_MAX: usize = 30;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    HeuristicUpperBound,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum Certificate {
    Colours { red: u64, blue: u64 },
    Ordering { ordering: Vec<usize>, backward: u64 },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FarnessReport {
    pub numerator: u64,
    pub n: usize,
    pub kind: Exactness,
    pub certificate: Certificate,
}

impl FarnessReport {
    pub fn delta(&self) -> Rational {
        let n = self.n as i64;
        Rational::new(self.numerator as i64, (n * n).max(1))
    }

    pub fn ordering(&self) -> Option<Ordering> {
        match &self.certificate {
            Certificate::Ordering { ordering, .. } => Ordering::new(ordering.clone()).ok(),
            Certificate::Colours { .. } => None,
        }
    }
}

/// `min(|red|, |blue|) / n²`.
pub fn colour_farness(c: &TwoColouring) -> FarnessReport {
    let (red, blue) = (c.red_count() as u64, c.blue_count() as u64);
    FarnessReport {
        numerator: red.min(blue),
        n: c.n(),
        kind: Exactness::Exact,
        certificate: Certificate::Colours { red, blue },
    }
}

/// Edges `(from, to)` with `to` placed before `from` in `sigma`, sorted by
/// the positions of `(to, from)`.
pub fn backward_edges(tour: &Tournament, sigma: &Ordering) -> Vec<(usize, usize)> {
    let n = tour.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (sigma.vertex_at(i), sigma.vertex_at(j));
            if tour.beats(b, a) {
                out.push((b, a));
            }
        }
    }
    out
}

pub fn backward_count(tour: &Tournament, sigma: &Ordering) -> u64 {
    let n = tour.n();
    let mut count = 0;
    for i in 0..n {
        let a = sigma.vertex_at(i);
        for j in i + 1..n {
            if tour.beats(sigma.vertex_at(j), a) {
                count += 1;
            }
        }
    }
    count
}

/// Backward edges from positions `later` into positions `earlier`.
pub fn backward_between(
    tour: &Tournament,
    sigma: &Ordering,
    earlier: std::ops::Range<usize>,
    later: std::ops::Range<usize>,
) -> u64 {
    let mut count = 0;
    for i in earlier {
        let a = sigma.vertex_at(i);
        for j in later.clone() {
            if tour.beats(sigma.vertex_at(j), a) {
                count += 1;
            }
        }
    }
    count
}

/// Backward edges with both endpoints at positions in `range`.
pub fn backward_within(tour: &Tournament, sigma: &Ordering, range: std::ops::Range<usize>) -> u64 {
    let mut count = 0;
    for i in range.clone() {
        let a = sigma.vertex_at(i);
        for j in i + 1..range.end {
            if tour.beats(sigma.vertex_at(j), a) {
                count += 1;
            }
        }
    }
    count
}

/// Distance between the positions of `u` and `v`.
pub fn edge_length(sigma: &Ordering, u: usize, v: usize) -> usize {
    sigma.position(u).abs_diff(sigma.position(v))
}

/// `d(A, B)`: the least distance between a vertex of `a` and one of `b`.
pub fn set_distance(sigma: &Ordering, a: &[usize], b: &[usize]) -> Option<usize> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| edge_length(sigma, x, y)))
        .min()
}

/// Whether every vertex of `a` precedes every vertex of `b`.
pub fn precedes(sigma: &Ordering, a: &[usize], b: &[usize]) -> bool {
    match (
        a.iter().map(|&x| sigma.position(x)).max(),
        b.iter().map(|&y| sigma.position(y)).min(),
    ) {
        (Some(last), Some(first)) => last < first,
        _ => true,
    }
}

pub fn min_backward_edges_exact(tour: &Tournament) -> Result<FarnessReport> {
    min_backward_edges_exact_with_cap(tour, EXACT_CAP)
}

/// Minimum number of backward edges by dynamic programming over vertex
/// subsets:
///
/// `best(S) = min_{v in S} best(S - v) + |{u in S - v : v -> u}|`,
///
/// where `v` is the vertex placed last among `S`. The ordering is rebuilt
/// from the full set down, choosing the smallest id among equal-cost last
/// vertices.
pub fn min_backward_edges_exact_with_cap(tour: &Tournament, cap: usize) -> Result<FarnessReport> {
    let n = tour.n();
    let cap = cap.min(EXACT_CAP_MAX);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let out: Vec<u32> = (0..n).map(|u| tour.out_mask(u) as u32).collect();
    let size = 1usize << n;
    let mut best = vec![0u16; size];
    for s in 1..size {
        let set = s as u32;
        let mut value = u16::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = set & !(1 << v);
            let cost = best[without as usize] + (out[v] & without).count_ones() as u16;
            value = value.min(cost);
        }
        best[s] = value;
    }
    let mut perm = vec![0usize; n];
    let mut set = (size - 1) as u32;
    for slot in (0..n).rev() {
        let target = best[set as usize];
        let mut rest = set;
        loop {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = set & !(1 << v);
            if best[without as usize] + (out[v] & without).count_ones() as u16 == target {
                perm[slot] = v;
                set = without;
                break;
            }
        }
    }
    let numerator = best[size - 1] as u64;
    Ok(FarnessReport {
        numerator,
        n,
        kind: Exactness::Exact,
        certificate: Certificate::Ordering {
            ordering: perm,
            backward: numerator,
        },
    })
}

/// Improves `perm` by single-vertex relocations until none helps.
///
/// Scan order: positions `i = 0, 1, ...` of the current ordering; for the
/// vertex at `i` the best new position is found (largest decrease, ties to
/// the smallest target position) and applied if it strictly decreases the
/// backward count, after which the scan continues at `i + 1`. Passes repeat
/// until one makes no move. Returns the final backward count.
pub fn insertion_local_search(tour: &Tournament, perm: &mut [usize], mut backward: u64) -> u64 {
    let n = perm.len();
    loop {
        let mut moved = false;
        for i in 0..n {
            let v = perm[i];
            let mut best_delta = 0i64;
            let mut best_pos = i;
            // Moving left past perm[j..i]: those pairs flip from
            // "v later" to "v earlier".
            let mut delta = 0i64;
            for j in (0..i).rev() {
                let w = perm[j];
                delta += if tour.beats(w, v) { 1 } else { -1 };
                if delta < best_delta || (delta == best_delta && delta < 0) {
                    best_delta = delta;
                    best_pos = j;
                }
            }
            let mut delta = 0i64;
            for (j, &w) in perm.iter().enumerate().skip(i + 1) {
                delta += if tour.beats(v, w) { 1 } else { -1 };
                if delta < best_delta {
                    best_delta = delta;
                    best_pos = j;
                }
            }
            if best_delta < 0 {
                if best_pos < i {
                    perm[best_pos..=i].rotate_right(1);
                } else {
                    perm[i..=best_pos].rotate_left(1);
                }
                backward = (backward as i64 + best_delta) as u64;
                moved = true;
            }
        }
        if !moved {
            return backward;
        }
    }
}

/// Upper bound on the minimum number of backward edges.
///
/// Start orderings: decreasing out-degree (ties by smaller id) for restart
/// 0, and a Fisher–Yates shuffle from stream `k` of `seed` for restart `k`.
/// Each is driven to insertion optimality with [`insertion_local_search`];
/// the result is the least `(backward count, ordering)` over all restarts,
/// so it does not depend on how restarts are scheduled across threads.
pub fn min_backward_edges_heuristic(
    tour: &Tournament,
    seed: u64,
    restarts: usize,
) -> FarnessReport {
    let n = tour.n();
    let restarts = restarts.max(1);
    let (value, perm) = (0..restarts)
        .into_par_iter()
        .map(|k| {
            let mut perm: Vec<usize> = (0..n).collect();
            if k == 0 {
                perm.sort_by_key(|&v| (std::cmp::Reverse(tour.out_degree(v)), v));
            } else {
                SeededRng::with_stream(seed, k as u64).shuffle(&mut perm);
            }
            let start = backward_count(tour, &Ordering::new(perm.clone()).expect("permutation"));
            let value = insertion_local_search(tour, &mut perm, start);
            (value, perm)
        })
        .min()
        .expect("at least one restart");
    FarnessReport {
        numerator: value,
        n,
        kind: Exactness::HeuristicUpperBound,
        certificate: Certificate::Ordering {
            ordering: perm,
            backward: value,
        },
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    /// 0-based positions `i < j`.
    pub i: usize,
    pub j: usize,
    /// 1: too few out-neighbours of `v_i` in `(i, j]`;
    /// 2: too few in-neighbours of `v_j` in `[i, j)`.
    pub condition: u8,
}

/// Checks, for all positions `i < j`, that
/// `|N+(v_i) ∩ [i+1, j]| >= (j - i) / 2` and
/// `|N-(v_j) ∩ [i, j-1]| >= (j - i) / 2`, both of which hold for every
/// ordering minimising the number of backward edges.
pub fn verify_local_min(tour: &Tournament, sigma: &Ordering) -> Vec<Violation> {
    let n = tour.n();
    let mut violations = Vec::new();
    for i in 0..n {
        let v = sigma.vertex_at(i);
        let mut outs = 0;
        for j in i + 1..n {
            if tour.beats(v, sigma.vertex_at(j)) {
                outs += 1;
            }
            if 2 * outs < j - i {
                violations.push(Violation { i, j, condition: 1 });
            }
        }
    }
    for j in 0..n {
        let v = sigma.vertex_at(j);
        let mut ins = 0;
        for i in (0..j).rev() {
            if tour.beats(sigma.vertex_at(i), v) {
                ins += 1;
            }
            if 2 * ins < j - i {
                violations.push(Violation { i, j, condition: 2 });
            }
        }
    }
    violations.sort_by_key(|v| (v.i, v.j, v.condition));
    violations
}

/// Whether `sigma` restricted to positions `i..=j` minimises the backward
/// edges of the induced subtournament (checked by exact DP).
pub fn interval_is_minimal(
    tour: &Tournament,
    sigma: &Ordering,
    i: usize,
    j: usize,
    cap: usize,
) -> Result<bool> {
    if i > j || j >= tour.n() {
        return Err(Error::InvalidArgument(format!("bad interval [{i}, {j}]")));
    }
    let sub = tour.induced(sigma.interval(i, j + 1));
    let exact = min_backward_edges_exact_with_cap(&sub, cap)?;
    Ok(backward_count(&sub, &Ordering::identity(sub.n())) == exact.numerator)
}
