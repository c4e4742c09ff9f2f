//! Reproducible pseudo-random stream used by every randomized generator.
//!
//! The stream is Knuth's MMIX linear congruential generator
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! ```
//!
//! seeded with `state = seed`. Each draw advances the state once and
//! returns its upper 32 bits. [`Lcg::below`] maps a draw to `0..bound` by
//! `(draw * bound) >> 32`. Any implementation following these three rules
//! reproduces the generated fixtures bit for bit.

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish draw in `0..bound`. `bound` must be at most `2^32`.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0 && bound as u64 <= 1 << 32, "bound out of range");
        ((self.next_u32() as u64 * bound as u64) >> 32) as usize
    }

    /// Bernoulli draw with probability `num / den`.
    pub fn chance(&mut self, num: usize, den: usize) -> bool {
        self.below(den) < num
    }

    /// Fisher-Yates shuffle driven by [`Lcg::below`], last index first.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_draws_are_pinned() {
        let mut r = Lcg::new(1);
        // state1 = 6364136223846793005 + 1442695040888963407
        let s1 = 6364136223846793005u64.wrapping_add(1442695040888963407);
        assert_eq!(r.next_u32(), (s1 >> 32) as u32);
        let s2 = s1.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        assert_eq!(r.next_u32(), (s2 >> 32) as u32);
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = Lcg::new(42);
        for bound in 1..50 {
            for _ in 0..100 {
                assert!(r.below(bound) < bound);
            }
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<u32> = {
            let mut r = Lcg::new(7);
            (0..16).map(|_| r.next_u32()).collect()
        };
        let b: Vec<u32> = {
            let mut r = Lcg::new(7);
            (0..16).map(|_| r.next_u32()).collect()
        };
        assert_eq!(a, b);
    }
}
