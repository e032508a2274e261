use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        }
    }
}

/// Red/blue colouring of the edges of `K_n`. Only the red class is stored;
/// blue is its complement among all pairs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoColouring {
    red: Graph,
}

impl TwoColouring {
    pub fn from_red_graph(red: Graph) -> Self {
        TwoColouring { red }
    }

    /// Rejects loops, out-of-range ids and repeated pairs.
    pub fn from_red_pairs(n: usize, red: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Ok(TwoColouring {
            red: Graph::from_edges(n, red)?,
        })
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> bool) -> Self {
        TwoColouring {
            red: Graph::from_fn(n, f),
        }
    }

    pub fn monochromatic(n: usize, colour: Colour) -> Self {
        match colour {
            Colour::Red => TwoColouring {
                red: Graph::complete(n),
            },
            Colour::Blue => TwoColouring {
                red: Graph::empty(n),
            },
        }
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn colour(&self, u: usize, v: usize) -> Colour {
        if self.red.has_edge(u, v) {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red.has_edge(u, v)
    }

    pub fn red_count(&self) -> usize {
        self.red.edge_count()
    }

    pub fn blue_count(&self) -> usize {
        let n = self.n();
        n * n.saturating_sub(1) / 2 - self.red_count()
    }

    pub fn count(&self, colour: Colour) -> usize {
        match colour {
            Colour::Red => self.red_count(),
            Colour::Blue => self.blue_count(),
        }
    }

    pub fn red_graph(&self) -> &Graph {
        &self.red
    }

    pub fn colour_class(&self, colour: Colour) -> Graph {
        match colour {
            Colour::Red => self.red.clone(),
            Colour::Blue => self.red.complement(),
        }
    }

    /// Neighbourhood of `u` in the given colour as a word. Requires `n <= 64`.
    #[inline]
    pub fn mask(&self, colour: Colour, u: usize) -> u64 {
        let red = self.red.mask(u);
        match colour {
            Colour::Red => red,
            Colour::Blue => crate::bits::low_mask(self.n()) & !red & !(1u64 << u),
        }
    }

    /// Red pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn red_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.red.edges()
    }

    pub fn swapped(&self) -> TwoColouring {
        TwoColouring {
            red: self.red.complement(),
        }
    }

    /// Flips the colour of pair `{u, v}`.
    pub fn flip(&mut self, u: usize, v: usize) {
        if self.red.has_edge(u, v) {
            self.red.remove_edge(u, v);
        } else {
            self.red.add_edge(u, v);
        }
    }

    /// Relabelled copy in which old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> TwoColouring {
        let mut red = Graph::empty(self.n());
        for (u, v) in self.red.edges() {
            red.add_edge(perm[u], perm[v]);
        }
        TwoColouring { red }
    }
}
