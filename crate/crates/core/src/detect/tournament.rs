use std::collections::HashSet;

use super::{require_word_size, Budget, Visit};
use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::witness::{PatternKind, PatternWitness};

/// Calls `visit` on every transitive `size`-subset of `cand`. Each set is
/// produced once, as its source-first sequence, in lexicographic order of
/// those sequences.
fn search_transitive<R>(
    out: &[u64],
    cand: u64,
    size: usize,
    chosen: &mut Vec<usize>,
    budget: &mut Budget,
    visit: &mut Visit<'_, R>,
) -> Result<Option<R>> {
    budget.tick()?;
    if size == 0 {
        return visit(chosen, budget);
    }
    if (cand.count_ones() as usize) < size {
        return Ok(None);
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let next = cand & out[v];
        if (next.count_ones() as usize) + 1 < size {
            continue;
        }
        chosen.push(v);
        let found = search_transitive(out, next, size - 1, chosen, budget, visit)?;
        chosen.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Finds a copy of the cyclic blow-up `U_t` in `tour`.
///
/// Enumeration order: transitive `t`-sets `V1` (source-first sequences in
/// lexicographic order), then transitive `V2` inside the common
/// out-neighbourhood of `V1`, then the first transitive `V3` inside the
/// common in-neighbourhood of `V1` that `V2` beats entirely. Classes are
/// reported as sorted vertex lists.
pub fn find_unavoidable_tournament_with(
    tour: &Tournament,
    t: usize,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "pattern order t must be at least 1".into(),
        ));
    }
    let n = tour.n();
    if n < 3 * t {
        return Err(Error::Size(format!(
            "U_{t} has {} vertices, the tournament has {n}",
            3 * t
        )));
    }
    require_word_size(n)?;
    let out: Vec<u64> = (0..n).map(|u| tour.out_mask(u)).collect();
    let inn: Vec<u64> = (0..n).map(|u| tour.in_mask(u)).collect();
    let all = crate::bits::low_mask(n);
    search_transitive(&out, all, t, &mut Vec::new(), budget, &mut |v1, budget| {
        let succ = v1.iter().fold(all, |m, &v| m & out[v]);
        let pred = v1.iter().fold(all, |m, &v| m & inn[v]);
        if (succ.count_ones() as usize) < t || (pred.count_ones() as usize) < t {
            return Ok(None);
        }
        search_transitive(&out, succ, t, &mut Vec::new(), budget, &mut |v2, budget| {
            let last = v2.iter().fold(pred, |m, &v| m & out[v]);
            let found = search_transitive(&out, last, t, &mut Vec::new(), budget, &mut |v3, _| {
                Ok(Some(v3.to_vec()))
            })?;
            Ok(found.map(|v3| PatternWitness {
                kind: PatternKind::CyclicBlowup,
                colour: None,
                classes: vec![sorted(v1), sorted(v2), sorted(&v3)],
            }))
        })
    })
}

pub fn find_unavoidable_tournament(tour: &Tournament, t: usize) -> Result<Option<PatternWitness>> {
    find_unavoidable_tournament_with(tour, t, &mut Budget::unlimited())
}

struct TransitiveSearch<'a> {
    out: &'a [u64],
    dead: HashSet<(u64, usize)>,
}

impl TransitiveSearch<'_> {
    /// Source-first transitive `k`-subset of `cand`. Splits on the source
    /// vertex and recurses into its out-neighbourhood; failed `(cand, k)`
    /// states are memoized.
    fn find(&mut self, cand: u64, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
        if k == 0 {
            return Ok(Some(Vec::new()));
        }
        if (cand.count_ones() as usize) < k || self.dead.contains(&(cand, k)) {
            return Ok(None);
        }
        budget.tick()?;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = cand & self.out[v];
            if (next.count_ones() as usize) + 1 < k {
                continue;
            }
            if let Some(mut tail) = self.find(next, k - 1, budget)? {
                tail.insert(0, v);
                return Ok(Some(tail));
            }
        }
        self.dead.insert((cand, k));
        Ok(None)
    }
}

/// A `t`-set inducing a transitive subtournament, sorted ascending.
pub fn find_transitive_subtournament_with(
    tour: &Tournament,
    t: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    require_word_size(tour.n())?;
    let out: Vec<u64> = (0..tour.n()).map(|u| tour.out_mask(u)).collect();
    let mut search = TransitiveSearch {
        out: &out,
        dead: HashSet::new(),
    };
    Ok(search
        .find(crate::bits::low_mask(tour.n()), t, budget)?
        .map(|s| sorted(&s)))
}

pub fn find_transitive_subtournament(tour: &Tournament, t: usize) -> Result<Option<Vec<usize>>> {
    find_transitive_subtournament_with(tour, t, &mut Budget::unlimited())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cyclic_blowup, random_tournament, transitive_tournament};

    #[test]
    fn blowup_witnesses_itself() {
        let b = cyclic_blowup(2);
        let w = find_unavoidable_tournament(&b, 2).unwrap().unwrap();
        assert_eq!(w.classes, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert!(w.verify_tournament(&b, 2));
    }

    #[test]
    fn transitive_has_no_blowup() {
        assert_eq!(
            find_unavoidable_tournament(&transitive_tournament(12), 2).unwrap(),
            None
        );
        assert!(matches!(
            find_unavoidable_tournament(&transitive_tournament(5), 2),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn transitive_subtournaments() {
        assert_eq!(
            find_transitive_subtournament(&transitive_tournament(6), 6).unwrap(),
            Some((0..6).collect())
        );
        assert_eq!(
            find_transitive_subtournament(&cyclic_blowup(1), 3).unwrap(),
            None
        );
        let t = random_tournament(30, 11);
        let s = find_transitive_subtournament(&t, 4).unwrap().unwrap();
        assert_eq!(s.len(), 4);
        assert!(t.induced(&s).is_transitive());
    }
}
