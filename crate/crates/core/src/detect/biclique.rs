use super::Budget;
use crate::bits;
use crate::colouring::{Colour, TwoColouring};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::ordering::Ordering;
use crate::tournament::Tournament;

/// Relation between `left` and `right` given by one colour class.
pub fn colour_relation(
    c: &TwoColouring,
    colour: Colour,
    left: &[usize],
    right: &[usize],
) -> BipartiteGraph {
    BipartiteGraph::from_fn(left.len(), right.len(), |i, j| {
        left[i] != right[j] && c.colour(left[i], right[j]) == colour
    })
}

/// Backward edges from the positions `later` to the positions `earlier` of
/// `sigma`: left index `i` is position `earlier.start + i`, right index `j`
/// is position `later.start + j`, related iff the later vertex beats the
/// earlier one.
pub fn backward_relation(
    tour: &Tournament,
    sigma: &Ordering,
    earlier: std::ops::Range<usize>,
    later: std::ops::Range<usize>,
) -> BipartiteGraph {
    BipartiteGraph::from_fn(earlier.len(), later.len(), |i, j| {
        tour.beats(
            sigma.vertex_at(later.start + j),
            sigma.vertex_at(earlier.start + i),
        )
    })
}

struct BicliqueSearch<'a> {
    h: &'a BipartiteGraph,
    a: usize,
    b: usize,
    chosen: Vec<usize>,
}

impl BicliqueSearch<'_> {
    fn run(
        &mut self,
        start: usize,
        common: &[u64],
        budget: &mut Budget,
    ) -> Result<Option<Vec<u64>>> {
        budget.tick()?;
        if self.chosen.len() == self.a {
            return Ok(Some(common.to_vec()));
        }
        let need = self.a - self.chosen.len();
        for x in start..self.h.a_size() {
            if self.h.a_size() - x < need {
                break;
            }
            let next: Vec<u64> = common
                .iter()
                .zip(self.h.row(x))
                .map(|(c, r)| c & r)
                .collect();
            if bits::count(&next) < self.b {
                continue;
            }
            self.chosen.push(x);
            let found = self.run(x + 1, &next, budget)?;
            if found.is_some() {
                return Ok(found);
            }
            self.chosen.pop();
        }
        Ok(None)
    }
}

/// Finds `X` (`a` left vertices) and `Y` (`b` right vertices) with every
/// pair related. `X` is the lexicographically first `a`-subset of the left
/// class with at least `b` common neighbours, and `Y` the first `b` of those.
pub fn find_biclique_with(
    h: &BipartiteGraph,
    a: usize,
    b: usize,
    budget: &mut Budget,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "biclique sides must be at least 1".into(),
        ));
    }
    if a > h.a_size() || b > h.b_size() {
        return Ok(None);
    }
    let mut full = vec![u64::MAX; bits::words_for(h.b_size())];
    if let Some(last) = full.last_mut() {
        let tail = h.b_size() % 64;
        if tail != 0 {
            *last = bits::low_mask(tail);
        }
    }
    let mut search = BicliqueSearch {
        h,
        a,
        b,
        chosen: Vec::new(),
    };
    Ok(search
        .run(0, &full, budget)?
        .map(|common| (search.chosen.clone(), bits::ones(&common).take(b).collect())))
}

pub fn find_biclique(
    h: &BipartiteGraph,
    a: usize,
    b: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    find_biclique_with(h, a, b, &mut Budget::unlimited())
}
