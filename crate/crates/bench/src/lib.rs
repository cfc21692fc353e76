//! Input generators shared by the benchmarks.

use strfact::experiment::random_word;
use strfact::rng::seeded;
use strfact::TokenString;

/// Deterministic random word for benchmark inputs.
pub fn bench_word(n: usize, sigma: usize, seed: u64) -> TokenString {
    random_word(&mut seeded(seed), n, sigma)
}
