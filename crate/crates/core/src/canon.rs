//! Canonical labelling of small digraphs (undirected graphs are symmetric
//! digraphs), used for isomorph rejection in exhaustive enumeration.
//!
//! The canonical form is computed by individualisation–refinement:
//!
//! 1. *Refinement.* Starting from an ordered partition of the vertices, a
//!    cell is split by the vector of `(out-count, in-count)` of each vertex
//!    into every cell; the pieces are ordered by that vector. This is
//!    repeated until no cell splits (an equitable partition). From the unit
//!    partition the first round is exactly degree refinement.
//! 2. *Individualisation.* If cells remain that are not singletons, the
//!    first smallest such cell is chosen and each of its vertices in turn is
//!    moved into a singleton cell placed in front of the rest, followed by
//!    refinement.
//! 3. *Tie-break.* Every discrete partition is a labelling; the canonical
//!    form is the labelling with the lexicographically least adjacency
//!    string (rows of relabelled out-neighbourhoods, row 0 first, lowest
//!    bit first within a row, compared as `u16` row values).
//!
//! Vertices that are interchangeable by a transposition that fixes every
//! other vertex (same out- and in-neighbourhoods apart from each other, with
//! a symmetric or absent edge between them) are individualised only once,
//! since their subtrees yield the same set of labellings.

/// Largest vertex count handled here.
pub const CANON_MAX: usize = 16;

/// Digraph on at most 16 vertices; row `u` is the out-neighbourhood of `u`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SmallDigraph {
    n: u8,
    out: [u16; CANON_MAX],
}

impl SmallDigraph {
    pub fn new(n: usize) -> Self {
        assert!(
            n <= CANON_MAX,
            "SmallDigraph holds at most {CANON_MAX} vertices"
        );
        SmallDigraph {
            n: n as u8,
            out: [0; CANON_MAX],
        }
    }

    pub fn from_rows(rows: &[u16]) -> Self {
        let mut g = SmallDigraph::new(rows.len());
        g.out[..rows.len()].copy_from_slice(rows);
        g
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rows(&self) -> &[u16] {
        &self.out[..self.n()]
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        (self.out[u] >> v) & 1 == 1
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_arc(u, v);
        self.add_arc(v, u);
    }

    /// Appends a vertex with the given out- and in-neighbourhoods among the
    /// existing vertices.
    pub fn with_vertex(&self, out: u16, inn: u16) -> SmallDigraph {
        let n = self.n();
        let mut g = SmallDigraph::new(n + 1);
        g.out[..n].copy_from_slice(&self.out[..n]);
        g.out[n] = out;
        for u in 0..n {
            if (inn >> u) & 1 == 1 {
                g.out[u] |= 1 << n;
            }
        }
        g
    }

    fn in_rows(&self) -> [u16; CANON_MAX] {
        let mut inn = [0u16; CANON_MAX];
        for u in 0..self.n() {
            let mut row = self.out[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                inn[v] |= 1 << u;
            }
        }
        inn
    }

    /// Relabelled copy: old vertex `order[i]` becomes `i`.
    pub fn relabel(&self, order: &[usize]) -> SmallDigraph {
        let n = self.n();
        let mut pos = [0usize; CANON_MAX];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = SmallDigraph::new(n);
        for (i, &v) in order.iter().enumerate() {
            let mut row = self.out[v];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                g.out[i] |= 1 << pos[w];
            }
        }
        g
    }

    /// Canonical form and the labelling producing it (`order[i]` is the
    /// vertex placed at `i`). Isomorphic digraphs have equal forms.
    pub fn canonical(&self) -> (SmallDigraph, Vec<usize>) {
        let n = self.n();
        if n == 0 {
            return (*self, Vec::new());
        }
        let mut search = Search {
            g: self,
            inn: self.in_rows(),
            best: None,
        };
        let mut cells = vec![(0..n).collect::<Vec<usize>>()];
        search.refine(&mut cells);
        search.descend(cells);
        let (form, order) = search.best.expect("at least one leaf");
        (form, order)
    }

    pub fn canonical_form(&self) -> SmallDigraph {
        self.canonical().0
    }
}

struct Search<'a> {
    g: &'a SmallDigraph,
    inn: [u16; CANON_MAX],
    best: Option<(SmallDigraph, Vec<usize>)>,
}

impl Search<'_> {
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut changed = false;
            let masks: Vec<u16> = cells
                .iter()
                .map(|c| c.iter().fold(0u16, |m, &v| m | (1 << v)))
                .collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(u32, u32)>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let key = masks
                            .iter()
                            .map(|&m| {
                                (
                                    (self.g.out[v] & m).count_ones(),
                                    (self.inn[v] & m).count_ones(),
                                )
                            })
                            .collect();
                        (key, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                        start = k;
                    }
                }
                if next.last().map(Vec::len) != Some(cell.len()) {
                    changed = true;
                }
            }
            *cells = next;
            if !changed {
                return;
            }
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let (bu, bv) = (1u16 << u, 1u16 << v);
        let keep = !(bu | bv);
        self.g.has_arc(u, v) == self.g.has_arc(v, u)
            && self.g.out[u] & keep == self.g.out[v] & keep
            && self.inn[u] & keep == self.inn[v] & keep
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let form = self.g.relabel(&order);
            let better = match &self.best {
                None => true,
                Some((best, _)) => form.rows() < best.rows(),
            };
            if better {
                self.best = Some((form, order));
            }
            return;
        };
        let cell = cells[ti].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..ti]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[ti + 1..]);
            self.refine(&mut next);
            self.descend(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn random_digraph(n: usize, symmetric: bool, seed: u64) -> SmallDigraph {
        let mut rng = SeededRng::new(seed);
        let mut g = SmallDigraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if symmetric {
                    if rng.bit() {
                        g.add_edge(u, v);
                    }
                } else if rng.bit() {
                    g.add_arc(u, v);
                } else {
                    g.add_arc(v, u);
                }
            }
        }
        g
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = SeededRng::new(77);
        for seed in 0..60 {
            let n = 1 + (seed as usize % 10);
            let g = random_digraph(n, seed % 2 == 0, seed);
            let order = rng.permutation(n);
            let h = g.relabel(&order);
            assert_eq!(g.canonical_form(), h.canonical_form(), "seed {seed}");
            let (form, order) = g.canonical();
            assert_eq!(g.relabel(&order), form);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        // Path on 4 vertices vs star on 4 vertices: both have 3 edges.
        let mut path = SmallDigraph::new(4);
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        path.add_edge(2, 3);
        let mut star = SmallDigraph::new(4);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        star.add_edge(0, 3);
        assert_ne!(path.canonical_form(), star.canonical_form());
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        let empty = SmallDigraph::new(16);
        assert_eq!(empty.canonical_form(), empty);
        let mut complete = SmallDigraph::new(16);
        for u in 0..16 {
            for v in u + 1..16 {
                complete.add_edge(u, v);
            }
        }
        assert_eq!(complete.canonical_form(), complete);
    }
}
