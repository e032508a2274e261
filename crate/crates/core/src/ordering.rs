use crate::error::{Error, Result};

/// A linear ordering of `0..n`: position `i` holds vertex `perm[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ordering {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl Ordering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::InvalidArgument(format!(
                    "ordering is not a permutation of 0..{n}"
                )));
            }
            pos[v] = i;
        }
        Ok(Ordering { perm, pos })
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            perm: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    #[inline]
    pub fn vertex_at(&self, i: usize) -> usize {
        self.perm[i]
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.perm
    }

    /// Vertices at positions `start..end`.
    pub fn interval(&self, start: usize, end: usize) -> &[usize] {
        &self.perm[start..end]
    }

    pub fn reversed(&self) -> Ordering {
        let mut perm = self.perm.clone();
        perm.reverse();
        Ordering::new(perm).expect("reversal of a permutation")
    }
}
