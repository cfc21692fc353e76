//! Seeded randomness for reproducible experiments.
//!
//! The generator is SplitMix64 with its state initialised to the seed, and a
//! draw below `bound` is the high word of `next_u64() * bound`. Both steps
//! are fixed so that streams can be reproduced outside Rust.

use rand_core::{RngCore, SeedableRng};
pub use rand_xoshiro::SplitMix64;

pub fn seeded(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// Uniform-ish draw in `0..bound` (multiply-shift, no rejection).
pub fn below<R: RngCore>(rng: &mut R, bound: usize) -> usize {
    assert!(bound > 0, "empty range");
    ((rng.next_u64() as u128 * bound as u128) >> 64) as usize
}
