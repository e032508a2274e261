use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, TwoColouring};
use crate::tournament::Tournament;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    /// `classes = [clique, rest]`: inside the `2t` vertices the named colour
    /// is exactly a clique on `clique`.
    ColourClique,
    /// `classes = [x, y]`: the named colour is exactly two disjoint cliques.
    ColourTwoCliques,
    /// `classes = [v1, v2, v3]`: transitive classes with `v1 -> v2 -> v3 -> v1`.
    CyclicBlowup,
}

/// Vertex sets certifying an occurrence of an unavoidable pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colour: Option<Colour>,
    pub classes: Vec<Vec<usize>>,
}

impl PatternWitness {
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.classes.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    fn classes_well_formed(&self, count: usize, t: usize, n: usize) -> bool {
        if self.classes.len() != count || self.classes.iter().any(|c| c.len() != t) {
            return false;
        }
        let all = self.vertices();
        all.iter().all(|&v| v < n) && all.windows(2).all(|w| w[0] != w[1])
    }

    /// Re-checks the witness pair by pair against `c`.
    pub fn verify_colouring(&self, c: &TwoColouring, t: usize) -> bool {
        let Some(colour) = self.colour else {
            return false;
        };
        match self.kind {
            PatternKind::ColourClique => {
                if !self.classes_well_formed(2, t, c.n()) {
                    return false;
                }
                let clique = &self.classes[0];
                let all = self.vertices();
                all.iter().enumerate().all(|(i, &u)| {
                    all[i + 1..].iter().all(|&v| {
                        let inside = clique.contains(&u) && clique.contains(&v);
                        (c.colour(u, v) == colour) == inside
                    })
                })
            }
            PatternKind::ColourTwoCliques => {
                if !self.classes_well_formed(2, t, c.n()) {
                    return false;
                }
                let all = self.vertices();
                let same_class = |u: usize, v: usize| {
                    self.classes
                        .iter()
                        .any(|k| k.contains(&u) && k.contains(&v))
                };
                all.iter().enumerate().all(|(i, &u)| {
                    all[i + 1..]
                        .iter()
                        .all(|&v| (c.colour(u, v) == colour) == same_class(u, v))
                })
            }
            PatternKind::CyclicBlowup => false,
        }
    }

    /// Re-checks the witness edge by edge against `tour`.
    pub fn verify_tournament(&self, tour: &Tournament, t: usize) -> bool {
        if self.kind != PatternKind::CyclicBlowup
            || self.colour.is_some()
            || !self.classes_well_formed(3, t, tour.n())
        {
            return false;
        }
        for (i, class) in self.classes.iter().enumerate() {
            if !tour.induced(class).is_transitive() {
                return false;
            }
            let next = &self.classes[(i + 1) % 3];
            if !class
                .iter()
                .all(|&u| next.iter().all(|&v| tour.beats(u, v)))
            {
                return false;
            }
        }
        true
    }
}
