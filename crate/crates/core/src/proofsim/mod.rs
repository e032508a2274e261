//! Executable forms of the ordering lemmas and of dependent random choice.
//!
//! Every operation returns a self-contained certificate that can be
//! rechecked from the raw tournament or graph. When the inputs do not allow
//! a certificate (for instance a heuristic ordering that is not a true
//! minimiser) the outcome says so instead of inventing one.

mod density;
mod drc;
mod long_lemma;

pub use density::{density_increment, DensityCertificate, DENSITY_MIN_EDGES};
pub use drc::{dependent_random_choice, DrcCertificate};
pub use long_lemma::{
    long_lemma_iterate, long_lemma_step, IterateOutcome, IterateResult, LongStepCertificate,
    TraceStep,
};

use serde::Serialize;

/// Half-open range of positions `start..end` in an ordering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start <= end, "interval start after end");
        Interval { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.end
    }
}
