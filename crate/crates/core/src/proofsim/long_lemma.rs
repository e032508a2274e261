use num_traits::CheckedMul;
use serde::Serialize;

use super::Interval;
use crate::error::{Error, Result};
use crate::farness::{
    backward_edges, backward_within, edge_length, min_backward_edges_exact,
    min_backward_edges_heuristic, verify_local_min, Exactness, EXACT_CAP,
};
use crate::ordering::Ordering;
use crate::tournament::Tournament;
use crate::{ceil_rational_times, Rational};

/// Intervals up to this size get an exact minimum in a `DenserSub`
/// certificate.
const EXACT_SUB_CAP: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Segment {
    Initial,
    Terminal,
    Sweep,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum LongStepCertificate {
    /// At least `threshold = ceil(αn²/1000)` backward edges `(from, to)`,
    /// each of length at least `min_length = ceil(n/50)`.
    LongEdges {
        edges: Vec<(usize, usize)>,
        min_length: usize,
        threshold: u64,
    },
    /// Positions `interval` (of length `ceil(n/20)`) span at least
    /// `threshold = ceil(6α|I|²)` backward edges of the induced ordering.
    /// When the input ordering is a true minimiser so is its restriction,
    /// and `T[I]` is then `6α`-far from transitive.
    DenserSub {
        interval: Interval,
        segment: Segment,
        backward: u64,
        threshold: u64,
        /// Exact minimum for `T[I]` when `|I|` is small.
        exact_minimum: Option<u64>,
    },
    NoCertificate {
        long_edges: u64,
        long_threshold: u64,
        best_interval: Interval,
        best_backward: u64,
        dense_threshold: u64,
    },
}

/// One application of the long-edge / denser-interval dichotomy.
///
/// If at least `ceil(αn²/1000)` backward edges have length `>= ceil(n/50)`
/// they are returned. Otherwise the initial segment of `s = ceil(n/20)`
/// positions, then the terminal one, then every window of `s` positions
/// (most backward edges, earliest start on ties) is tested against
/// `ceil(6αs²)`.
pub fn long_lemma_step(
    tour: &Tournament,
    sigma: &Ordering,
    alpha: Rational,
) -> Result<LongStepCertificate> {
    let n = tour.n();
    if sigma.len() != n {
        return Err(Error::InvalidArgument(
            "ordering size differs from tournament".into(),
        ));
    }
    if alpha <= Rational::from_integer(0) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} must be positive"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("empty tournament".into()));
    }
    if let Some(v) = verify_local_min(tour, sigma).first() {
        return Err(Error::Precondition(format!(
            "ordering fails the local minimality condition {} at positions ({}, {})",
            v.condition, v.i, v.j
        )));
    }
    let n2 = (n * n) as u128;
    let min_length = n.div_ceil(50);
    let long_threshold = ceil_rational_times(alpha / 1000, n2) as u64;
    let long: Vec<(usize, usize)> = backward_edges(tour, sigma)
        .into_iter()
        .filter(|&(u, v)| edge_length(sigma, u, v) >= min_length)
        .collect();
    if long.len() as u64 >= long_threshold {
        return Ok(LongStepCertificate::LongEdges {
            edges: long,
            min_length,
            threshold: long_threshold,
        });
    }
    let s = n.div_ceil(20);
    let dense_threshold = ceil_rational_times(alpha * 6, (s * s) as u128) as u64;
    let denser = |start: usize, segment: Segment| {
        let interval = Interval::new(start, start + s);
        let backward = backward_within(tour, sigma, interval.range());
        let exact_minimum = (s <= EXACT_SUB_CAP).then(|| {
            let sub = tour.induced(sigma.interval(interval.start, interval.end));
            min_backward_edges_exact(&sub)
                .expect("within cap")
                .numerator
        });
        LongStepCertificate::DenserSub {
            interval,
            segment,
            backward,
            threshold: dense_threshold,
            exact_minimum,
        }
    };
    if backward_within(tour, sigma, 0..s) >= dense_threshold {
        return Ok(denser(0, Segment::Initial));
    }
    if backward_within(tour, sigma, n - s..n) >= dense_threshold {
        return Ok(denser(n - s, Segment::Terminal));
    }
    let (best_start, best_backward) = (0..=n - s)
        .map(|start| (start, backward_within(tour, sigma, start..start + s)))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
    if best_backward >= dense_threshold {
        return Ok(denser(best_start, Segment::Sweep));
    }
    Ok(LongStepCertificate::NoCertificate {
        long_edges: long.len() as u64,
        long_threshold,
        best_interval: Interval::new(best_start, best_start + s),
        best_backward,
        dense_threshold,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IterateOutcome {
    LongEdges,
    NoCertificate,
    TooSmall,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceStep {
    pub n: usize,
    /// Exact rational `α_k` as `p/q`.
    pub alpha: String,
    pub ordering_kind: Exactness,
    pub backward: u64,
    pub certificate: LongStepCertificate,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IterateResult {
    /// Vertices of the final subtournament, as ids of the input, in the
    /// final ordering.
    pub vertices: Vec<usize>,
    pub outcome: IterateOutcome,
    /// Certificates refer to the subtournament of their step, whose vertex
    /// `i` is the `i`-th entry of that step's vertex list (ascending ids).
    pub trace: Vec<TraceStep>,
}

/// Repeats [`long_lemma_step`] on denser intervals.
///
/// `α_0` is the best `i64` rational approximation of `C n0^(-1/r)`; each
/// further step uses exactly `6α_k`. Orderings come from the exact DP when
/// `n <= 22` and from the insertion heuristic (`seed`, `restarts`)
/// otherwise. Iteration stops at long edges, at a step without a
/// certificate, or once fewer than `3r` vertices remain.
pub fn long_lemma_iterate(
    tour: &Tournament,
    c: Rational,
    r: u32,
    seed: u64,
    restarts: usize,
) -> Result<IterateResult> {
    if r < 2 {
        return Err(Error::InvalidArgument("r must be at least 2".into()));
    }
    if c <= Rational::from_integer(0) {
        return Err(Error::InvalidArgument("C must be positive".into()));
    }
    let n0 = tour.n();
    let c_float = *c.numer() as f64 / *c.denom() as f64;
    let alpha0 = c_float * (n0.max(1) as f64).powf(-1.0 / r as f64);
    let mut alpha = Rational::approximate_float(alpha0)
        .filter(|a| *a > Rational::from_integer(0))
        .ok_or_else(|| {
            Error::InvalidArgument(format!("alpha_0 = {alpha0} is not representable"))
        })?;
    let mut vertices: Vec<usize> = (0..n0).collect();
    let mut trace = Vec::new();
    loop {
        let n = vertices.len();
        if n < 3 * r as usize {
            return Ok(IterateResult {
                vertices,
                outcome: IterateOutcome::TooSmall,
                trace,
            });
        }
        let sub = tour.induced(&vertices);
        let report = if n <= EXACT_CAP {
            min_backward_edges_exact(&sub)?
        } else {
            min_backward_edges_heuristic(&sub, seed, restarts)
        };
        let sigma = report.ordering().expect("tournament certificate");
        let certificate = long_lemma_step(&sub, &sigma, alpha)?;
        let ordered: Vec<usize> = sigma.as_slice().iter().map(|&v| vertices[v]).collect();
        trace.push(TraceStep {
            n,
            alpha: alpha.to_string(),
            ordering_kind: report.kind,
            backward: report.numerator,
            certificate: certificate.clone(),
        });
        match certificate {
            LongStepCertificate::LongEdges { .. } => {
                return Ok(IterateResult {
                    vertices: ordered,
                    outcome: IterateOutcome::LongEdges,
                    trace,
                })
            }
            LongStepCertificate::NoCertificate { .. } => {
                return Ok(IterateResult {
                    vertices: ordered,
                    outcome: IterateOutcome::NoCertificate,
                    trace,
                })
            }
            LongStepCertificate::DenserSub { interval, .. } => {
                vertices = ordered[interval.range()].to_vec();
                vertices.sort_unstable();
                alpha = alpha
                    .checked_mul(&Rational::from_integer(6))
                    .ok_or_else(|| Error::InvalidArgument("alpha overflowed i64".into()))?;
            }
        }
    }
}
