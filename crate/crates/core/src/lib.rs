//! Unavoidable patterns in two-colourings and tournaments.
//!
//! The crate provides exact detectors for unavoidable colourings (one colour
//! forming a `K_t` or two disjoint `K_t` on `2t` vertices) and unavoidable
//! tournaments (the cyclic-triangle blow-up `U_t` with transitive classes),
//! exact and heuristic farness from monochromatic / transitive, extremal
//! `K_{a,b}`-free graphs, the extremal constructions, executable forms of
//! the ordering lemmas and dependent random choice, and brute-force Ramsey
//! tables at small sizes.
//!
//! Vertices are always the dense range `0..n`.

pub mod bits;
pub mod canon;
pub mod colouring;
pub mod construct;
pub mod detect;
pub mod error;
pub mod extremal;
pub mod farness;
pub mod generate;
pub mod graph;
pub mod io;
pub mod ordering;
pub mod proofsim;
pub mod rng;
pub mod search;
pub mod tournament;
pub mod witness;

pub use colouring::{Colour, TwoColouring};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, EmbeddedBipartite, Graph};
pub use ordering::Ordering;
pub use tournament::Tournament;
pub use witness::{PatternKind, PatternWitness};

/// Exact rational used for farness values and thresholds.
pub type Rational = num_rational::Ratio<i64>;

/// `ceil(num / den)` for positive `den`.
pub(crate) fn ceil_div(num: u128, den: u128) -> u128 {
    num.div_ceil(den)
}

/// `ceil(r * k)` for a non-negative rational `r`.
pub fn ceil_rational_times(r: Rational, k: u128) -> u128 {
    assert!(
        *r.numer() >= 0 && *r.denom() > 0,
        "non-negative rational expected"
    );
    ceil_div(*r.numer() as u128 * k, *r.denom() as u128)
}
