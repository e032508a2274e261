//! Small Ramsey-type tables: the largest farness of a pattern-free instance
//! on `n` vertices, exactly by enumeration up to isomorphism at tiny `n`,
//! and from below by simulated annealing.
//!
//! Farness numerators are `min(|red|, |blue|)` for colourings and the
//! minimum number of backward edges for tournaments; deltas divide by `n²`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::SmallDigraph;
use crate::colouring::TwoColouring;
use crate::detect::{find_unavoidable_colouring, find_unavoidable_tournament};
use crate::error::{Error, Result};
use crate::farness::{min_backward_edges_exact, min_backward_edges_heuristic};
use crate::io::{encode_colouring, encode_tournament};
use crate::rng::SeededRng;
use crate::tournament::Tournament;
use crate::Rational;

/// Largest `n` for exhaustive colouring rows (1044 graphs at `n = 7`).
pub const COLOURING_EXACT_CAP: usize = 7;
/// Largest `n` for exhaustive tournament rows (6880 classes at `n = 8`).
pub const TOURNAMENT_EXACT_CAP: usize = 8;
/// The tournament miner scores with the exact DP up to this size.
pub const MINER_EXACT_CAP: usize = 12;

const START_TEMPERATURE: f64 = 2.0;
const COOLING: f64 = 0.999;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RamseyKind {
    /// Colourings against unavoidable `t`-colourings.
    C,
    /// Tournaments against `U_t`.
    D,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct RamseyRow {
    pub kind: RamseyKind,
    pub t: usize,
    pub n: usize,
    /// Largest farness numerator of a pattern-free instance.
    pub m_star: u64,
    pub delta: String,
    pub exhaustive: bool,
    pub classes: usize,
    pub pattern_free_classes: usize,
    /// Witness attaining `m_star`, in the core text format.
    pub witness: String,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct RamseyTable {
    pub kind: RamseyKind,
    pub t: usize,
    pub rows: Vec<RamseyRow>,
    /// Least-squares slope of `log(m*(n)/n²)` against `log n` over rows
    /// with `m* > 0`; reported for inspection only.
    pub fitted_exponent: Option<f64>,
}

fn level_up(level: &BTreeSet<SmallDigraph>, k: usize, tournament: bool) -> BTreeSet<SmallDigraph> {
    let all = (1u32 << k) - 1;
    level
        .par_iter()
        .flat_map_iter(|g| {
            (0..=all).map(move |out| {
                let out = out as u16;
                let inn = if tournament { !out & all as u16 } else { out };
                g.with_vertex(out, inn).canonical_form()
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn classes(n: usize, tournament: bool) -> Vec<SmallDigraph> {
    let mut level = BTreeSet::new();
    level.insert(SmallDigraph::new(1));
    for k in 1..n {
        level = level_up(&level, k, tournament);
    }
    level.into_iter().collect()
}

/// Graphs on `n` vertices up to isomorphism, as canonical forms in
/// ascending order.
pub fn graph_classes(n: usize) -> Result<Vec<SmallDigraph>> {
    if n == 0 || n > COLOURING_EXACT_CAP + 1 {
        return Err(Error::CapExceeded {
            n,
            cap: COLOURING_EXACT_CAP + 1,
        });
    }
    Ok(classes(n, false))
}

/// Tournaments on `n` vertices up to isomorphism, as canonical forms in
/// ascending order.
pub fn tournament_classes(n: usize) -> Result<Vec<SmallDigraph>> {
    if n == 0 || n > TOURNAMENT_EXACT_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: TOURNAMENT_EXACT_CAP,
        });
    }
    Ok(classes(n, true))
}

pub fn colouring_of(g: &SmallDigraph) -> TwoColouring {
    TwoColouring::from_fn(g.n(), |u, v| g.has_arc(u, v))
}

pub fn tournament_of(g: &SmallDigraph) -> Tournament {
    Tournament::from_fn(g.n(), |u, v| g.has_arc(u, v))
}

fn delta_string(m: u64, n: usize) -> String {
    Rational::new(m as i64, (n * n).max(1) as i64).to_string()
}

/// Picks the class with the largest value among pattern-free ones (first in
/// canonical order on ties).
fn best_free(values: Vec<Option<u64>>) -> (usize, Option<(usize, u64)>) {
    let free = values.iter().filter(|v| v.is_some()).count();
    let best = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (i, v)))
        .fold(None, |best: Option<(usize, u64)>, cur| match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        });
    (free, best)
}

/// Exhaustive colouring row: red graphs range over all graphs on `n`
/// vertices up to isomorphism.
pub fn ramsey_colouring_exact(t: usize, n: usize) -> Result<RamseyRow> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    if n == 0 || n > COLOURING_EXACT_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: COLOURING_EXACT_CAP,
        });
    }
    let all = classes(n, false);
    let values: Vec<Option<u64>> = all
        .par_iter()
        .map(|g| {
            let c = colouring_of(g);
            let free = n < 2 * t
                || find_unavoidable_colouring(&c, t)
                    .expect("sizes checked")
                    .is_none();
            free.then(|| c.red_count().min(c.blue_count()) as u64)
        })
        .collect();
    let (pattern_free_classes, best) = best_free(values);
    let (m_star, witness) = match best {
        Some((i, m)) => (m, encode_colouring(&colouring_of(&all[i]))),
        None => (0, String::new()),
    };
    Ok(RamseyRow {
        kind: RamseyKind::C,
        t,
        n,
        m_star,
        delta: delta_string(m_star, n),
        exhaustive: true,
        classes: all.len(),
        pattern_free_classes,
        witness,
    })
}

/// Exhaustive tournament row over all tournaments on `n` vertices up to
/// isomorphism, scored by the exact minimum number of backward edges.
pub fn ramsey_tournament_exact(t: usize, n: usize) -> Result<RamseyRow> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    if n == 0 || n > TOURNAMENT_EXACT_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: TOURNAMENT_EXACT_CAP,
        });
    }
    let all = classes(n, true);
    let values: Vec<Option<u64>> = all
        .par_iter()
        .map(|g| {
            let tour = tournament_of(g);
            let free = n < 3 * t
                || find_unavoidable_tournament(&tour, t)
                    .expect("sizes checked")
                    .is_none();
            free.then(|| {
                min_backward_edges_exact(&tour)
                    .expect("within cap")
                    .numerator
            })
        })
        .collect();
    let (pattern_free_classes, best) = best_free(values);
    let (m_star, witness) = match best {
        Some((i, m)) => (m, encode_tournament(&tournament_of(&all[i]))),
        None => (0, String::new()),
    };
    Ok(RamseyRow {
        kind: RamseyKind::D,
        t,
        n,
        m_star,
        delta: delta_string(m_star, n),
        exhaustive: true,
        classes: all.len(),
        pattern_free_classes,
        witness,
    })
}

pub fn ramsey_table(kind: RamseyKind, t: usize, ns: &[usize]) -> Result<RamseyTable> {
    let rows = ns
        .iter()
        .map(|&n| match kind {
            RamseyKind::C => ramsey_colouring_exact(t, n),
            RamseyKind::D => ramsey_tournament_exact(t, n),
        })
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.m_star > 0)
        .map(|r| {
            let n = r.n as f64;
            (n.ln(), (r.m_star as f64 / (n * n)).ln())
        })
        .collect();
    Ok(RamseyTable {
        kind,
        t,
        rows,
        fitted_exponent: least_squares_slope(&points),
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Visits every `k`-subset of `0..n` (as ascending vertex lists) that
/// contains both `u` and `v`, or every `k`-subset when `pair` is `None`.
fn for_subsets(n: usize, k: usize, pair: Option<(usize, usize)>, f: &mut impl FnMut(&[usize])) {
    fn go(
        n: usize,
        k: usize,
        start: usize,
        pair: Option<(usize, usize)>,
        chosen: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if chosen.len() == k {
            if pair.is_none_or(|(u, v)| chosen.contains(&u) && chosen.contains(&v)) {
                f(chosen);
            }
            return;
        }
        let need_pair = pair.map_or(0, |(u, v)| {
            usize::from(!chosen.contains(&u)) + usize::from(!chosen.contains(&v))
        });
        if k - chosen.len() < need_pair {
            return;
        }
        for x in start..n {
            if n - x < k - chosen.len() {
                break;
            }
            chosen.push(x);
            go(n, k, x + 1, pair, chosen, f);
            chosen.pop();
        }
    }
    go(n, k, 0, pair, &mut Vec::with_capacity(k), f);
}

/// Visits the `t`-subsets of the low `m` bits as masks.
fn for_masks(m: usize, t: usize, mut f: impl FnMut(u32)) {
    if t == 0 || t > m {
        if t == 0 {
            f(0);
        }
        return;
    }
    let limit = 1u32 << m;
    let mut x: u32 = (1 << t) - 1;
    while x < limit {
        f(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

fn pairs_inside(adj: &[u32], q: u32) -> u32 {
    crate::bits::Ones(q as u64)
        .map(|v| (adj[v] & q).count_ones())
        .sum::<u32>()
        / 2
}

/// Fewest pair recolourings turning the colouring on `s` (`|s| = 2t`) into
/// an unavoidable `t`-colouring; 0 iff `s` carries the pattern.
fn colouring_distance(red: &[u64], s: &[usize], t: usize) -> u32 {
    let m = s.len();
    let adj: Vec<u32> = s
        .iter()
        .map(|&x| {
            s.iter()
                .enumerate()
                .fold(0u32, |acc, (j, &y)| acc | (((red[x] >> y) & 1) as u32) << j)
        })
        .collect();
    let full: u32 = (1u32 << m) - 1;
    let total_red = pairs_inside(&adj, full);
    let total_blue = (m * (m - 1) / 2) as u32 - total_red;
    let k2 = (t * (t.saturating_sub(1)) / 2) as u32;
    let mut best = u32::MAX;
    for_masks(m, t, |q| {
        let rq = pairs_inside(&adj, q);
        let rr = pairs_inside(&adj, full & !q);
        let (bq, br) = (k2 - rq, k2 - rr);
        best = best
            .min((k2 - rq) + (total_red - rq))
            .min((k2 - bq) + (total_blue - bq))
            .min((k2 - rq) + (k2 - rr) + (total_red - rq - rr))
            .min((k2 - bq) + (k2 - br) + (total_blue - bq - br));
    });
    best
}

/// Minimum number of reversals making the tournament on the vertices of
/// `mask` (local ids, `out` local masks) transitive.
fn local_fas(out: &[u32], mask: u32) -> u32 {
    let verts: Vec<usize> = crate::bits::Ones(mask as u64).collect();
    let k = verts.len();
    let mut best = vec![0u32; 1 << k];
    for s in 1usize..1 << k {
        best[s] = crate::bits::Ones(s as u64)
            .map(|i| {
                let without = s & !(1 << i);
                let beaten = crate::bits::Ones(without as u64)
                    .filter(|&j| (out[verts[i]] >> verts[j]) & 1 == 1)
                    .count() as u32;
                best[without] + beaten
            })
            .min()
            .expect("non-empty");
    }
    best[(1 << k) - 1]
}

/// Fewest reversals turning the tournament on `s` (`|s| = 3t`) into `U_t`;
/// 0 iff `s` carries the pattern.
fn tournament_distance(outs: &[u64], s: &[usize], t: usize) -> u32 {
    let m = s.len();
    let out: Vec<u32> = s
        .iter()
        .map(|&x| {
            s.iter().enumerate().fold(0u32, |acc, (j, &y)| {
                acc | (((outs[x] >> y) & 1) as u32) << j
            })
        })
        .collect();
    let full: u32 = (1u32 << m) - 1;
    let arcs = |from: u32, to: u32| -> u32 {
        crate::bits::Ones(from as u64)
            .map(|v| (out[v] & to).count_ones())
            .sum()
    };
    let mut best = u32::MAX;
    // Local vertex 0 is placed in V1, which fixes the cyclic rotation.
    for_masks(m - 1, t - 1, |rest1| {
        let v1 = (rest1 << 1) | 1;
        let others = full & !v1;
        let other_list: Vec<usize> = crate::bits::Ones(others as u64).collect();
        for_masks(other_list.len(), t, |pick| {
            let v2 = crate::bits::Ones(pick as u64).fold(0u32, |acc, i| acc | 1 << other_list[i]);
            let v3 = others & !v2;
            let wrong = arcs(v2, v1) + arcs(v3, v2) + arcs(v1, v3);
            if wrong >= best {
                return;
            }
            let inner = local_fas(&out, v1) + local_fas(&out, v2) + local_fas(&out, v3);
            best = best.min(wrong + inner);
        });
    });
    best
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MineResult {
    pub kind: RamseyKind,
    pub t: usize,
    pub n: usize,
    pub target: u64,
    /// Best farness numerator over pattern-free states visited.
    pub best_value: u64,
    /// Near misses of the best state: `2t`- (or `3t`-) subsets one change
    /// away from carrying the pattern.
    pub best_near_misses: u64,
    /// Whether the best state reaches `target` and passes the detector.
    pub found: bool,
    pub iterations: u64,
    /// Whether tournament values came from the exact DP.
    pub exact_values: bool,
    pub witness: String,
}

struct Annealer {
    rng: SeededRng,
    step: u64,
}

impl Annealer {
    fn new(seed: u64) -> Self {
        Annealer {
            rng: SeededRng::new(seed),
            step: 0,
        }
    }

    fn pair(&mut self, n: usize) -> (usize, usize) {
        let u = self.rng.index(n);
        let mut v = self.rng.index(n - 1);
        if v >= u {
            v += 1;
        }
        (u.min(v), u.max(v))
    }

    /// Metropolis rule with temperature `T0 * 0.999^step`; the schedule
    /// does not depend on the budget.
    fn accept(&mut self, gain: f64) -> bool {
        let temperature = START_TEMPERATURE * COOLING.powf(self.step as f64);
        self.step += 1;
        let draw = self.rng.unit();
        gain >= 0.0 || draw < (gain / temperature.max(1e-12)).exp()
    }
}

fn score(value: u64, near: u64, scale: u64) -> f64 {
    value as f64 - near as f64 / (scale as f64 + 1.0)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Simulated annealing over pattern-free colourings maximising
/// `min(|red|, |blue|)`, ties broken toward fewer near misses.
///
/// Starts from `initial` (which must be pattern-free) or the all-blue
/// colouring. Each of the `budget` iterations proposes recolouring a random
/// pair; proposals creating the pattern are rejected. The run stops early
/// once the best state reaches `target`.
pub fn ramsey_colouring_lower(
    t: usize,
    n: usize,
    target: u64,
    seed: u64,
    budget: u64,
    initial: Option<&TwoColouring>,
) -> Result<MineResult> {
    if t == 0 || 2 * t > 32 {
        return Err(Error::InvalidArgument("need 1 <= t <= 16".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    crate::detect::require_word_size(n)?;
    let mut c = match initial {
        Some(c) if c.n() != n => {
            return Err(Error::InvalidArgument(
                "initial colouring has the wrong size".into(),
            ))
        }
        Some(c) => c.clone(),
        None => TwoColouring::monochromatic(n, crate::colouring::Colour::Blue),
    };
    let k = 2 * t;
    let red_rows =
        |c: &TwoColouring| -> Vec<u64> { (0..n).map(|u| c.red_graph().mask(u)).collect() };
    let mut near = 0u64;
    let mut blocked = false;
    if k <= n {
        let rows = red_rows(&c);
        for_subsets(n, k, None, &mut |s| match colouring_distance(&rows, s, t) {
            0 => blocked = true,
            1 => near += 1,
            _ => {}
        });
    }
    if blocked {
        return Err(Error::InvalidArgument(
            "initial colouring contains the pattern".into(),
        ));
    }
    let scale = binomial(n, k);
    let value = |c: &TwoColouring| c.red_count().min(c.blue_count()) as u64;
    let mut current = (value(&c), near);
    let mut best = (current, c.clone());
    let mut annealer = Annealer::new(seed);
    let mut iterations = 0;
    while iterations < budget && best.0 .0 < target {
        iterations += 1;
        let (u, v) = annealer.pair(n);
        let mut before = 0u64;
        let mut after = 0u64;
        let mut creates = false;
        if k <= n {
            let rows = red_rows(&c);
            for_subsets(n, k, Some((u, v)), &mut |s| {
                if colouring_distance(&rows, s, t) == 1 {
                    before += 1;
                }
            });
        }
        c.flip(u, v);
        if k <= n {
            let rows = red_rows(&c);
            for_subsets(
                n,
                k,
                Some((u, v)),
                &mut |s| match colouring_distance(&rows, s, t) {
                    0 => creates = true,
                    1 => after += 1,
                    _ => {}
                },
            );
        }
        if creates {
            c.flip(u, v);
            annealer.step += 1;
            continue;
        }
        let proposal = (value(&c), current.1 + after - before);
        let gain = score(proposal.0, proposal.1, scale) - score(current.0, current.1, scale);
        if annealer.accept(gain) {
            current = proposal;
            if (current.0, std::cmp::Reverse(current.1)) > (best.0 .0, std::cmp::Reverse(best.0 .1))
            {
                best = (current, c.clone());
            }
        } else {
            c.flip(u, v);
        }
    }
    let ((best_value, best_near_misses), witness) = best;
    let verified = n < k || find_unavoidable_colouring(&witness, t)?.is_none();
    Ok(MineResult {
        kind: RamseyKind::C,
        t,
        n,
        target,
        best_value,
        best_near_misses,
        found: verified && best_value >= target,
        iterations,
        exact_values: true,
        witness: encode_colouring(&witness),
    })
}

fn tournament_from_rows(rows: &[u64]) -> Tournament {
    Tournament::from_fn(rows.len(), |u, v| (rows[u] >> v) & 1 == 1)
}

/// Simulated annealing over `U_t`-free tournaments maximising the minimum
/// number of backward edges (exact DP up to 12 vertices, otherwise the
/// insertion heuristic with 8 restarts from seed 0), ties broken toward
/// fewer near misses. Moves reverse one random edge. Starts from `initial`
/// or the transitive tournament.
pub fn ramsey_tournament_lower(
    t: usize,
    n: usize,
    target: u64,
    seed: u64,
    budget: u64,
    initial: Option<&Tournament>,
) -> Result<MineResult> {
    if t == 0 || 3 * t > 32 {
        return Err(Error::InvalidArgument("need 1 <= t <= 10".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    crate::detect::require_word_size(n)?;
    let mut rows: Vec<u64> = match initial {
        Some(tour) if tour.n() != n => {
            return Err(Error::InvalidArgument(
                "initial tournament has the wrong size".into(),
            ))
        }
        Some(tour) => (0..n).map(|u| tour.out_mask(u)).collect(),
        None => (0..n)
            .map(|u| crate::detect::above(u) & crate::bits::low_mask(n))
            .collect(),
    };
    let exact = n <= MINER_EXACT_CAP;
    let value = |rows: &[u64]| {
        let tour = tournament_from_rows(rows);
        if exact {
            min_backward_edges_exact(&tour)
                .expect("within cap")
                .numerator
        } else {
            min_backward_edges_heuristic(&tour, 0, 8).numerator
        }
    };
    let k = 3 * t;
    let mut near = 0u64;
    let mut blocked = false;
    if k <= n {
        for_subsets(
            n,
            k,
            None,
            &mut |s| match tournament_distance(&rows, s, t) {
                0 => blocked = true,
                1 => near += 1,
                _ => {}
            },
        );
    }
    if blocked {
        return Err(Error::InvalidArgument(
            "initial tournament contains the pattern".into(),
        ));
    }
    let scale = binomial(n, k);
    let mut current = (value(&rows), near);
    let mut best = (current, rows.clone());
    let mut annealer = Annealer::new(seed);
    let mut iterations = 0;
    let reverse = |rows: &mut [u64], u: usize, v: usize| {
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
    };
    while iterations < budget && best.0 .0 < target {
        iterations += 1;
        let (u, v) = annealer.pair(n);
        let mut before = 0u64;
        let mut after = 0u64;
        let mut creates = false;
        if k <= n {
            for_subsets(n, k, Some((u, v)), &mut |s| {
                if tournament_distance(&rows, s, t) == 1 {
                    before += 1;
                }
            });
        }
        reverse(&mut rows, u, v);
        if k <= n {
            for_subsets(
                n,
                k,
                Some((u, v)),
                &mut |s| match tournament_distance(&rows, s, t) {
                    0 => creates = true,
                    1 => after += 1,
                    _ => {}
                },
            );
        }
        if creates {
            reverse(&mut rows, u, v);
            annealer.step += 1;
            continue;
        }
        let proposal = (value(&rows), current.1 + after - before);
        let gain = score(proposal.0, proposal.1, scale) - score(current.0, current.1, scale);
        if annealer.accept(gain) {
            current = proposal;
            if (current.0, std::cmp::Reverse(current.1)) > (best.0 .0, std::cmp::Reverse(best.0 .1))
            {
                best = (current, rows.clone());
            }
        } else {
            reverse(&mut rows, u, v);
        }
    }
    let ((best_value, best_near_misses), best_rows) = best;
    let witness = tournament_from_rows(&best_rows);
    let verified = n < k || find_unavoidable_tournament(&witness, t)?.is_none();
    Ok(MineResult {
        kind: RamseyKind::D,
        t,
        n,
        target,
        best_value,
        best_near_misses,
        found: verified && best_value >= target,
        iterations,
        exact_values: exact,
        witness: encode_tournament(&witness),
    })
}
