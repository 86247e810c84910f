//! Shared instance generation for the benchmarks.

use lemoine::oracle::sampling::{random_triangle, random_weights, SplitMix64};
use lemoine::{Triangle, WeightTriple};

pub const BENCH_SEED: u64 = 0xBE7C;

/// A deterministic batch of solver instances.
pub fn instance_batch(count: usize) -> Vec<(Triangle, WeightTriple)> {
    let mut rng = SplitMix64::new(BENCH_SEED);
    (0..count)
        .map(|_| {
            let t = random_triangle(&mut rng);
            let w = random_weights(&mut rng, &t);
            (t, w)
        })
        .collect()
}
