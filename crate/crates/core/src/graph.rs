//! Undirected simple graphs and bipartite graphs.

use std::collections::BTreeSet;

use crate::bits::{self, BitMatrix};
use crate::error::{Error, Result};

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: BitMatrix::new(n, n),
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    /// Edge `{u, v}` present iff `f(u, v)` for `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Rejects loops, out-of-range ids and repeated pairs.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge {{{u}, {v}}} out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate edge {{{u}, {v}}}"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop");
        self.adj.set(u, v, true);
        self.adj.set(v, u, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj.set(u, v, false);
        self.adj.set(v, u, false);
    }

    pub fn edge_count(&self) -> usize {
        self.adj.count() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj.row_count(u)
    }

    pub fn row(&self, u: usize) -> &[u64] {
        self.adj.row(u)
    }

    /// Neighbourhood as a single word. Requires `n <= 64`.
    #[inline]
    pub fn mask(&self, u: usize) -> u64 {
        debug_assert!(self.n() <= 64);
        self.adj.row_word(u)
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.adj.row(u))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbours(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// Proper 2-colouring of the vertices if the graph is bipartite.
    pub fn two_colour(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.neighbours(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }
}

/// Bipartite graph between classes `A = 0..a_size` and `B = 0..b_size`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipartiteGraph {
    left: BitMatrix,
}

impl BipartiteGraph {
    pub fn empty(a_size: usize, b_size: usize) -> Self {
        BipartiteGraph {
            left: BitMatrix::new(a_size, b_size),
        }
    }

    pub fn from_fn(a_size: usize, b_size: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut h = BipartiteGraph::empty(a_size, b_size);
        for i in 0..a_size {
            for j in 0..b_size {
                if f(i, j) {
                    h.left.set(i, j, true);
                }
            }
        }
        h
    }

    /// Rejects out-of-range indices and duplicate edges.
    pub fn from_edges(
        a_size: usize,
        b_size: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut h = BipartiteGraph::empty(a_size, b_size);
        for (i, j) in edges {
            if i >= a_size || j >= b_size {
                return Err(Error::InvalidArgument(format!(
                    "edge ({i}, {j}) out of range for classes {a_size} x {b_size}"
                )));
            }
            if h.has_edge(i, j) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({i}, {j})")));
            }
            h.left.set(i, j, true);
        }
        Ok(h)
    }

    /// Both copies of `V(g)` as classes, `(u, v)` an edge iff `uv` is.
    pub fn double_cover(g: &Graph) -> Self {
        BipartiteGraph::from_fn(g.n(), g.n(), |u, v| g.has_edge(u, v))
    }

    pub fn a_size(&self) -> usize {
        self.left.rows()
    }

    pub fn b_size(&self) -> usize {
        self.left.cols()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.left.get(i, j)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.left.set(i, j, true);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.left.set(i, j, false);
    }

    pub fn edge_count(&self) -> usize {
        self.left.count()
    }

    /// Neighbours in `B` of left vertex `i`, as words.
    pub fn row(&self, i: usize) -> &[u64] {
        self.left.row(i)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.a_size()).flat_map(move |i| bits::ones(self.left.row(i)).map(move |j| (i, j)))
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().collect()
    }

    /// Same graph with the roles of the classes exchanged.
    pub fn transpose(&self) -> Self {
        BipartiteGraph {
            left: self.left.transpose(),
        }
    }
}

/// A bipartite graph whose classes are labelled by vertices of `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddedBipartite {
    pub n: usize,
    pub a_vertices: Vec<usize>,
    pub b_vertices: Vec<usize>,
    pub graph: BipartiteGraph,
}

impl EmbeddedBipartite {
    /// Edges as pairs of vertices of `[n]`, each `(min, max)`.
    pub fn vertex_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges().map(|(i, j)| {
            let (x, y) = (self.a_vertices[i], self.b_vertices[j]);
            (x.min(y), x.max(y))
        })
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.vertex_edges() {
            g.add_edge(u, v);
        }
        g
    }
}
