use serde::Serialize;

use super::Interval;
use crate::error::{Error, Result};
use crate::farness::backward_between;
use crate::ordering::Ordering;
use crate::tournament::Tournament;
use crate::{ceil_rational_times, Rational};

/// Below this many backward edges the rounding in the thresholds dominates
/// and no certificate is attempted.
pub const DENSITY_MIN_EDGES: u64 = 100;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum DensityCertificate {
    /// `I = I1 I2`, `J = J1 J2` with at least `threshold` backward edges
    /// from `J1` to `I1` and from `J2` to `I2`.
    Split {
        i1: Interval,
        i2: Interval,
        j1: Interval,
        j2: Interval,
        count1: u64,
        count2: u64,
        total: u64,
        threshold: u64,
    },
    /// `I' ⊆ I`, `J' ⊆ J` with `|I'| + |J'| <= (|I| + |J|) / 2` and at least
    /// `threshold` backward edges from `J'` to `I'`.
    Shrink {
        i_sub: Interval,
        j_sub: Interval,
        count: u64,
        total: u64,
        threshold: u64,
    },
    NoCertificate {
        total: u64,
        reason: String,
    },
}

/// Splits the backward edges from `J` to `I` either into two interlaced
/// halves or into one much smaller pair of intervals.
///
/// `I1` is the shortest initial segment of `I` meeting at least half of the
/// `L` backward edges, `I2` the rest. For a cut `p` of `J`, let `b(p)` be
/// the edges from `J[..p]` to `I1` minus those from `J[p..]` to `I2`; the
/// cut minimising `|b(p)|` (smallest `p` on ties) gives `J1`, `J2`. If both
/// aligned pairs carry `ceil(εL)` edges the result is a split. Otherwise the
/// crossed pair with the smaller total length is returned if it carries
/// `ceil((1/2 - 3ε)L)` edges (on equal lengths, the one with more edges,
/// then `(I1, J2)`).
pub fn density_increment(
    tour: &Tournament,
    sigma: &Ordering,
    i: Interval,
    j: Interval,
    epsilon: Rational,
) -> Result<DensityCertificate> {
    if i.end > j.start || j.end > tour.n() || sigma.len() != tour.n() {
        return Err(Error::InvalidArgument(
            "need intervals I < J inside the ordering".into(),
        ));
    }
    if epsilon <= Rational::from_integer(0) || epsilon >= Rational::new(1, 6) {
        return Err(Error::InvalidArgument(format!(
            "epsilon = {epsilon} must lie in (0, 1/6)"
        )));
    }
    // Whether the vertex at position y (in J) beats the one at x (in I).
    let hits = |y: usize, x: usize| tour.beats(sigma.vertex_at(y), sigma.vertex_at(x));
    let total = backward_between(tour, sigma, i.range(), j.range());
    if total < DENSITY_MIN_EDGES {
        return Ok(DensityCertificate::NoCertificate {
            total,
            reason: format!("L = {total} is below the guard of {DENSITY_MIN_EDGES}"),
        });
    }
    let mut seen = 0u64;
    let mut split_i = i.end;
    for x in i.range() {
        seen += j.range().filter(|&y| hits(y, x)).count() as u64;
        if 2 * seen >= total {
            split_i = x + 1;
            break;
        }
    }
    let i1 = Interval::new(i.start, split_i);
    let i2 = Interval::new(split_i, i.end);
    // Edges from each position of J into I1 and into I2.
    let to_i1: Vec<i64> = j
        .range()
        .map(|y| i1.range().filter(|&x| hits(y, x)).count() as i64)
        .collect();
    let to_i2: Vec<i64> = j
        .range()
        .map(|y| i2.range().filter(|&x| hits(y, x)).count() as i64)
        .collect();
    let mut before: i64 = 0;
    let mut after: i64 = to_i2.iter().sum();
    let mut best = (before - after).abs();
    let mut cut = 0;
    for p in 1..=j.len() {
        before += to_i1[p - 1];
        after -= to_i2[p - 1];
        if (before - after).abs() < best {
            best = (before - after).abs();
            cut = p;
        }
    }
    let j1 = Interval::new(j.start, j.start + cut);
    let j2 = Interval::new(j.start + cut, j.end);
    let count1 = backward_between(tour, sigma, i1.range(), j1.range());
    let count2 = backward_between(tour, sigma, i2.range(), j2.range());
    let split_threshold = ceil_rational_times(epsilon, total as u128) as u64;
    if count1 >= split_threshold && count2 >= split_threshold {
        return Ok(DensityCertificate::Split {
            i1,
            i2,
            j1,
            j2,
            count1,
            count2,
            total,
            threshold: split_threshold,
        });
    }
    let shrink_threshold =
        ceil_rational_times(Rational::new(1, 2) - epsilon * 3, total as u128) as u64;
    let first = (
        i1,
        j2,
        backward_between(tour, sigma, i1.range(), j2.range()),
    );
    let second = (
        i2,
        j1,
        backward_between(tour, sigma, i2.range(), j1.range()),
    );
    let size = |c: &(Interval, Interval, u64)| c.0.len() + c.1.len();
    let chosen = match size(&first).cmp(&size(&second)) {
        std::cmp::Ordering::Less => first,
        std::cmp::Ordering::Greater => second,
        std::cmp::Ordering::Equal if second.2 > first.2 => second,
        std::cmp::Ordering::Equal => first,
    };
    if chosen.2 >= shrink_threshold {
        return Ok(DensityCertificate::Shrink {
            i_sub: chosen.0,
            j_sub: chosen.1,
            count: chosen.2,
            total,
            threshold: shrink_threshold,
        });
    }
    Ok(DensityCertificate::NoCertificate {
        total,
        reason: format!(
            "aligned counts {count1}, {count2} below {split_threshold} and smaller crossed pair has {} < {shrink_threshold}",
            chosen.2
        ),
    })
}
