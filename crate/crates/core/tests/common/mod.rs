#![allow(dead_code)]

use coinstack::DenominationSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const PRIME_64: u64 = 18_446_744_073_709_551_557; // 2^64 - 59

/// Every non-empty subset of `{1..=max}`.
pub fn all_subsets(max: u64) -> Vec<DenominationSet> {
    (1u64..1 << max)
        .map(|bits| DenominationSet::new((1..=max).filter(|j| bits >> (j - 1) & 1 == 1)).unwrap())
        .collect()
}

/// Random sets whose largest value is uniform in `1..=max_largest`; smaller
/// values are included independently with probability `density`.
pub fn random_sets(
    seed: u64,
    count: usize,
    max_largest: u64,
    density: f64,
) -> Vec<DenominationSet> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let largest = rng.gen_range(1..=max_largest);
            let values: Vec<u64> = (1..largest)
                .filter(|_| rng.gen_bool(density))
                .chain(std::iter::once(largest))
                .collect();
            DenominationSet::new(values).unwrap()
        })
        .collect()
}

/// Plain reachability: can `s` be paid with `values`?
pub fn brute_representable(values: &[u64], upto: u64) -> Vec<bool> {
    let mut reach = vec![false; upto as usize + 1];
    reach[0] = true;
    for t in 1..=upto as usize {
        reach[t] = values
            .iter()
            .any(|&v| v as usize <= t && reach[t - v as usize]);
    }
    reach
}
