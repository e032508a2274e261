//! Exact detection of unavoidable patterns, bicliques and transitive
//! subtournaments.
//!
//! Every search is exhaustive: `Ok(None)` means the pattern is absent. A
//! search run under a [`Budget`] that runs out returns
//! [`Error::BudgetExhausted`] instead, never a false absence.
//!
//! Witnesses are deterministic: each detector returns the first witness in
//! the enumeration order documented on it.

mod biclique;
mod colouring;
mod tournament;

pub use biclique::{backward_relation, colour_relation, find_biclique, find_biclique_with};
pub use colouring::{
    find_unavoidable_colouring, find_unavoidable_colouring_of, find_unavoidable_colouring_with,
    COLOURING_SEARCH_ORDER,
};
pub use tournament::{
    find_transitive_subtournament, find_transitive_subtournament_with, find_unavoidable_tournament,
    find_unavoidable_tournament_with,
};

use crate::error::{Error, Result};

/// Callback receiving each candidate vertex list during a search.
pub(crate) type Visit<'a, R> = dyn FnMut(&[usize], &mut Budget) -> Result<Option<R>> + 'a;

/// Node counter with an optional cap.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_limit(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn new(limit: Option<u64>) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExhausted { nodes: self.used }),
            _ => Ok(()),
        }
    }
}

pub(crate) fn require_word_size(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::Size(format!(
            "exact detectors support at most 64 vertices, got {n}"
        )));
    }
    Ok(())
}

/// Mask of all vertices strictly above `v`.
#[inline]
pub(crate) fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}
