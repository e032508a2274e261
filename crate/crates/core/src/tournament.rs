use crate::bits::{self, BitMatrix};
use crate::error::{Error, Result};

/// An orientation of the complete graph on `0..n`.
///
/// Row `u` of the out-adjacency matrix holds the out-neighbourhood of `u`.
/// Exactly one of `u -> v`, `v -> u` holds for every pair `u != v`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tournament {
    out: BitMatrix,
}

impl Tournament {
    /// Builds a tournament from `f(u, v)` evaluated for every `u < v`:
    /// `true` orients the pair `u -> v`, `false` orients it `v -> u`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = BitMatrix::new(n, n);
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    out.set(u, v, true);
                } else {
                    out.set(v, u, true);
                }
            }
        }
        Tournament { out }
    }

    /// Builds a tournament from a directed edge list; every unordered pair
    /// must be covered exactly once.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = BitMatrix::new(n, n);
        let mut seen = 0usize;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge {u}->{v} out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at {u}")));
            }
            if out.get(u, v) || out.get(v, u) {
                return Err(Error::InvalidArgument(format!(
                    "pair {{{u}, {v}}} oriented twice"
                )));
            }
            out.set(u, v, true);
            seen += 1;
        }
        if seen != n * n.saturating_sub(1) / 2 {
            return Err(Error::InvalidArgument(format!(
                "{seen} edges given, a tournament on {n} vertices has {}",
                n * n.saturating_sub(1) / 2
            )));
        }
        Ok(Tournament { out })
    }

    pub fn n(&self) -> usize {
        self.out.rows()
    }

    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.out.get(u, v)
    }

    pub fn out_row(&self, u: usize) -> &[u64] {
        self.out.row(u)
    }

    /// Out-neighbourhood as a single word. Requires `n <= 64`.
    #[inline]
    pub fn out_mask(&self, u: usize) -> u64 {
        debug_assert!(self.n() <= 64);
        self.out.row_word(u)
    }

    /// In-neighbourhood as a single word. Requires `n <= 64`.
    #[inline]
    pub fn in_mask(&self, u: usize) -> u64 {
        bits::low_mask(self.n()) & !self.out_mask(u) & !(1u64 << u)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out.row_count(u)
    }

    pub fn out_neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.out.row(u))
    }

    /// Directed edges `(u, v)` meaning `u -> v`, listed by unordered pair in
    /// lexicographic order of `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            (u + 1..n).map(move |v| if self.beats(u, v) { (u, v) } else { (v, u) })
        })
    }

    /// Subtournament on `vertices`; new vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Tournament {
        Tournament::from_fn(vertices.len(), |i, j| self.beats(vertices[i], vertices[j]))
    }

    /// Relabelled copy in which old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Tournament {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Tournament::from_fn(n, |a, b| self.beats(inv[a], inv[b]))
    }

    /// Every edge reversed.
    pub fn reversed(&self) -> Tournament {
        Tournament::from_fn(self.n(), |u, v| self.beats(v, u))
    }

    pub fn is_transitive(&self) -> bool {
        // A tournament is transitive iff its out-degrees are 0, 1, ..., n-1.
        let n = self.n();
        let mut seen = vec![false; n];
        for u in 0..n {
            let d = self.out_degree(u);
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    /// Whether every vertex reaches every other along directed paths.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for (v, flag) in seen.iter_mut().enumerate() {
                    if u != v && !*flag && self.beats(u, v) == forward {
                        *flag = true;
                        stack.push(v);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Tournament::from_edges(3, [(0, 1), (1, 2), (2, 0)]).is_ok());
        assert!(Tournament::from_edges(3, [(0, 1), (1, 0), (2, 0)]).is_err());
        assert!(Tournament::from_edges(3, [(0, 1), (1, 2)]).is_err());
        assert!(Tournament::from_edges(3, [(0, 0), (1, 2), (2, 0)]).is_err());
        assert!(Tournament::from_edges(3, [(0, 3), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn masks_and_transitivity() {
        let c3 = Tournament::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.out_mask(0), 0b010);
        assert_eq!(c3.in_mask(0), 0b100);
        assert!(!c3.is_transitive());
        assert!(c3.is_strongly_connected());
        let t = Tournament::from_fn(5, |_, _| true);
        assert!(t.is_transitive());
        assert!(!t.is_strongly_connected());
        assert_eq!(t.reversed().out_degree(4), 4);
    }

    #[test]
    fn permuted_moves_edges() {
        let t = Tournament::from_fn(3, |_, _| true);
        let p = t.permuted(&[2, 1, 0]);
        assert!(p.beats(2, 1) && p.beats(1, 0) && p.beats(2, 0));
        let sub = t.induced(&[2, 0]);
        assert!(sub.beats(1, 0));
    }
}
