use serde::Serialize;

use crate::bits::Ones;
use crate::detect::require_word_size;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SeededRng;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DrcCertificate {
    /// `K` vertices, ascending.
    pub set: Vec<usize>,
    pub k: usize,
    pub t: usize,
    /// Smallest common neighbourhood over all `t`-subsets of `set`.
    pub min_common: usize,
    /// 1-based index of the successful attempt.
    pub attempt: usize,
}

/// Visits the `t`-subsets of `set` in lexicographic order with their
/// common neighbourhood; stops at the first one for which `f` is true.
fn first_subset(
    rows: &[u64],
    set: &[usize],
    t: usize,
    f: &mut impl FnMut(&[usize], u64) -> bool,
) -> Option<Vec<usize>> {
    fn go(
        rows: &[u64],
        set: &[usize],
        start: usize,
        t: usize,
        chosen: &mut Vec<usize>,
        common: u64,
        f: &mut impl FnMut(&[usize], u64) -> bool,
    ) -> bool {
        if chosen.len() == t {
            return f(chosen, common);
        }
        for idx in start..set.len() {
            chosen.push(set[idx]);
            if go(rows, set, idx + 1, t, chosen, common & rows[set[idx]], f) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(t);
    go(rows, set, 0, t, &mut chosen, u64::MAX, f).then_some(chosen)
}

/// A `K`-set in which every `t` vertices have at least `K` common
/// neighbours, or `None` after `tries` failed attempts.
///
/// Attempt `k` draws `t` vertices uniformly with repetition from stream `k`
/// of `seed` and takes their common neighbourhood `A`. While some
/// `t`-subset of `A` (first in lexicographic order) has fewer than `K`
/// common neighbours, its largest vertex is deleted from `A`. If at least
/// `K` vertices survive, the `K` smallest are checked exhaustively and
/// returned.
pub fn dependent_random_choice(
    g: &Graph,
    k: usize,
    t: usize,
    seed: u64,
    tries: usize,
) -> Result<Option<DrcCertificate>> {
    if t == 0 || k < t {
        return Err(Error::InvalidArgument(format!(
            "need K >= t >= 1, got K = {k}, t = {t}"
        )));
    }
    let n = g.n();
    require_word_size(n)?;
    if n == 0 {
        return Ok(None);
    }
    let rows: Vec<u64> = (0..n).map(|u| g.mask(u)).collect();
    for attempt in 1..=tries {
        let mut rng = SeededRng::with_stream(seed, attempt as u64);
        let common = (0..t).fold(u64::MAX, |m, _| m & rows[rng.index(n)]);
        let mut set: Vec<usize> = Ones(common).collect();
        while set.len() >= k {
            let bad = first_subset(&rows, &set, t, &mut |_, c| (c.count_ones() as usize) < k);
            match bad {
                Some(x) => {
                    let worst = *x.last().expect("t >= 1");
                    set.retain(|&v| v != worst);
                }
                None => break,
            }
        }
        if set.len() < k {
            continue;
        }
        set.truncate(k);
        let mut min_common = usize::MAX;
        first_subset(&rows, &set, t, &mut |_, c| {
            min_common = min_common.min(c.count_ones() as usize);
            false
        });
        if min_common >= k {
            return Ok(Some(DrcCertificate {
                set,
                k,
                t,
                min_common,
                attempt,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_graph;

    #[test]
    fn complete_and_empty() {
        let cert = dependent_random_choice(&Graph::complete(8), 6, 2, 0, 5)
            .unwrap()
            .unwrap();
        assert_eq!(cert.set.len(), 6);
        assert_eq!(cert.min_common, 6);
        assert_eq!(
            dependent_random_choice(&Graph::empty(8), 3, 2, 0, 5).unwrap(),
            None
        );
        assert!(dependent_random_choice(&Graph::empty(8), 1, 2, 0, 5).is_err());
    }

    #[test]
    fn dense_random() {
        let g = random_graph(60, 0.8, 13);
        let cert = dependent_random_choice(&g, 6, 2, 13, 10).unwrap().unwrap();
        for (i, &x) in cert.set.iter().enumerate() {
            for &y in &cert.set[i + 1..] {
                assert!(g.neighbours(x).filter(|&z| g.has_edge(y, z)).count() >= 6);
            }
        }
    }
}
