//! Seeded randomness with a fixed, portable bit-consumption scheme.
//!
//! Scheme `chacha8-v1`: a `ChaCha8Rng` seeded with
//! `SeedableRng::seed_from_u64(seed)`, optionally switched to stream `k`
//! with `set_stream(k)`. Every derived draw is computed here from
//! `next_u64` so results do not depend on distribution code elsewhere:
//!
//! * `bit()` consumes one bit of a buffered `next_u64` word, lowest bit first;
//! * `below(n)` is rejection sampling on whole words (`x < zone` with
//!   `zone = 2^64 - 2^64 mod n`), returning `x mod n`;
//! * `unit()` is `(next_u64 >> 11) * 2^-53`;
//! * `shuffle` is Fisher–Yates from the back using `below(i + 1)`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub const RNG_SCHEME: &str = "chacha8-v1";

#[derive(Clone, Debug)]
pub struct SeededRng {
    inner: ChaCha8Rng,
    buffer: u64,
    remaining: u32,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
            buffer: 0,
            remaining: 0,
        }
    }

    /// Independent stream `stream` of the generator for `seed`.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        SeededRng {
            inner,
            buffer: 0,
            remaining: 0,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    pub fn bit(&mut self) -> bool {
        if self.remaining == 0 {
            self.buffer = self.inner.next_u64();
            self.remaining = 64;
        }
        let b = self.buffer & 1 == 1;
        self.buffer >>= 1;
        self.remaining -= 1;
        b
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        let zone = u64::MAX - (u64::MAX % n + 1) % n;
        loop {
            let x = self.inner.next_u64();
            if x <= zone {
                return x % n;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.below(n as u64) as usize
    }

    /// Uniform float in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        self.shuffle(&mut p);
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = SeededRng::new(42);
        let mut b = SeededRng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SeededRng::with_stream(42, 1);
        let mut d = SeededRng::new(42);
        assert_ne!(c.next_u64(), d.next_u64());
    }

    #[test]
    fn below_is_in_range_and_covers() {
        let mut r = SeededRng::new(3);
        let mut seen = [false; 7];
        for _ in 0..500 {
            let x = r.below(7) as usize;
            seen[x] = true;
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(r.below(1), 0);
    }

    #[test]
    fn permutation_is_bijection() {
        let mut r = SeededRng::new(9);
        let mut p = r.permutation(50);
        p.sort_unstable();
        assert_eq!(p, (0..50).collect::<Vec<_>>());
    }
}
