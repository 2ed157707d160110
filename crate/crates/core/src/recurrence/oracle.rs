//! Brute-force counts of coin stacks, independent of the recurrence.

use num_bigint::BigUint;
use num_traits::One;

use crate::denominations::DenominationSet;
use crate::limits::Limits;
use crate::{Error, Result};

/// Counts ordered sequences of denominations summing to `i` by walking every
/// one of them.
pub fn enumerate_compositions(ds: &DenominationSet, i: u64, limits: &Limits) -> Result<BigUint> {
    limits.check_oracle(i)?;

    fn walk(values: &[u64], remaining: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        values
            .iter()
            .take_while(|&&v| v <= remaining)
            .map(|&v| walk(values, remaining - v))
            .sum()
    }

    Ok(BigUint::from(walk(ds.values(), i)))
}

/// Coin counts `K_1..K_L` for one stack, ignoring order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartMultiset {
    multiplicities: Vec<u64>,
    total: u64,
}

impl PartMultiset {
    /// `multiplicities[j - 1]` is the number of coins of value `j`.
    pub fn new(multiplicities: Vec<u64>) -> Self {
        let total = multiplicities
            .iter()
            .enumerate()
            .map(|(idx, &k)| (idx as u64 + 1) * k)
            .sum();
        PartMultiset {
            multiplicities,
            total,
        }
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of coins in the stack.
    pub fn coin_count(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    /// Whether only coins from `ds` are used.
    pub fn fits(&self, ds: &DenominationSet) -> bool {
        self.multiplicities
            .iter()
            .enumerate()
            .all(|(idx, &k)| k == 0 || ds.flag(idx as u64 + 1))
    }

    /// Distinct orderings: `(K_1 + ... + K_L)! / (K_1! ... K_L!)`.
    pub fn arrangements(&self) -> BigUint {
        // Product of binomials C(s + t, t), built one factor at a time so
        // every intermediate division is exact.
        let mut result = BigUint::one();
        let mut placed = 0u64;
        for &k in &self.multiplicities {
            for t in 1..=k {
                placed += 1;
                result *= placed;
                result /= t;
            }
        }
        result
    }
}

/// Every multiset of coins from `ds` with total value `i`.
pub fn part_multisets(ds: &DenominationSet, i: u64) -> Vec<PartMultiset> {
    fn go(values: &[u64], remaining: u64, counts: &mut Vec<u64>, out: &mut Vec<PartMultiset>) {
        match values.split_first() {
            None => {
                if remaining == 0 {
                    out.push(PartMultiset::new(counts.clone()));
                }
            }
            Some((&v, rest)) => {
                for k in 0..=remaining / v {
                    counts[v as usize - 1] = k;
                    go(rest, remaining - k * v, counts, out);
                }
                counts[v as usize - 1] = 0;
            }
        }
    }

    let mut out = Vec::new();
    let mut counts = vec![0u64; ds.largest() as usize];
    go(ds.values(), i, &mut counts, &mut out);
    out
}

/// Sums the multinomial arrangement counts over all coin multisets of total
/// `i`.
pub fn multinomial_count(ds: &DenominationSet, i: u64, limits: &Limits) -> Result<BigUint> {
    limits.check_oracle(i)?;
    Ok(part_multisets(ds, i)
        .iter()
        .map(PartMultiset::arrangements)
        .sum())
}

/// `E_1..E_5` written out as polynomials in `B_1..B_5`: each entry is a
/// coefficient and the exponents of `B_1..B_5`.
const EXPANSIONS: [&[(u64, [u32; 5])]; 5] = [
    // E_1 = B1
    &[(1, [1, 0, 0, 0, 0])],
    // E_2 = B2 + B1^2
    &[(1, [0, 1, 0, 0, 0]), (1, [2, 0, 0, 0, 0])],
    // E_3 = B3 + 2 B1 B2 + B1^3
    &[
        (1, [0, 0, 1, 0, 0]),
        (2, [1, 1, 0, 0, 0]),
        (1, [3, 0, 0, 0, 0]),
    ],
    // E_4 = B4 + 2 B1 B3 + B2^2 + 3 B1^2 B2 + B1^4
    &[
        (1, [0, 0, 0, 1, 0]),
        (2, [1, 0, 1, 0, 0]),
        (1, [0, 2, 0, 0, 0]),
        (3, [2, 1, 0, 0, 0]),
        (1, [4, 0, 0, 0, 0]),
    ],
    // E_5 = B5 + 2 B1 B4 + 2 B2 B3 + 3 B2^2 B1 + 4 B2 B1^3 + 3 B1^2 B3 + B1^5
    &[
        (1, [0, 0, 0, 0, 1]),
        (2, [1, 0, 0, 1, 0]),
        (2, [0, 1, 1, 0, 0]),
        (3, [1, 2, 0, 0, 0]),
        (4, [3, 1, 0, 0, 0]),
        (3, [2, 0, 1, 0, 0]),
        (1, [5, 0, 0, 0, 0]),
    ],
];

/// Evaluates the written-out expansion of `E_i` (`1 <= i <= 5`) at a 0/1
/// mask. `mask[0]` is `B_1`; missing entries count as zero.
pub fn symbolic_expansion_check(i: u64, mask: &[bool]) -> Result<BigUint> {
    if !(1..=5).contains(&i) {
        return Err(Error::UnsupportedIndex(i));
    }
    let b = |j: usize| u64::from(mask.get(j).copied().unwrap_or(false));
    let total: u64 = EXPANSIONS[i as usize - 1]
        .iter()
        .map(|(coef, exps)| {
            coef * exps
                .iter()
                .enumerate()
                .map(|(j, &e)| b(j).pow(e))
                .product::<u64>()
        })
        .sum();
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_denominations;

    fn ds(text: &str) -> DenominationSet {
        parse_denominations(text).unwrap()
    }

    #[test]
    fn composition_examples() {
        let lim = Limits::default();
        assert_eq!(
            enumerate_compositions(&ds("2,5"), 7, &lim).unwrap(),
            2u32.into()
        );
        assert_eq!(
            enumerate_compositions(&ds("2,5"), 0, &lim).unwrap(),
            1u32.into()
        );
        // 4 = 1+1+1+1, 1+1+2 (x3), 2+2, 1+3 (x2) => 1 + 3 + 1 + 2
        assert_eq!(
            enumerate_compositions(&ds("1,2,3"), 4, &lim).unwrap(),
            7u32.into()
        );
    }

    #[test]
    fn multinomial_examples() {
        let lim = Limits::default();
        let sets = part_multisets(&ds("1,2"), 4);
        let counts: Vec<BigUint> = sets.iter().map(PartMultiset::arrangements).collect();
        assert_eq!(sets.len(), 3);
        assert_eq!(counts.iter().sum::<BigUint>(), 5u32.into());
        assert!(counts.contains(&3u32.into()));
        assert_eq!(multinomial_count(&ds("1,2"), 4, &lim).unwrap(), 5u32.into());
        assert_eq!(multinomial_count(&ds("5"), 5, &lim).unwrap(), 1u32.into());
        let brute = enumerate_compositions(&ds("2,3"), 12, &lim).unwrap();
        assert_eq!(brute, 12u32.into());
        assert_eq!(multinomial_count(&ds("2,3"), 12, &lim).unwrap(), brute);
    }

    #[test]
    fn oracle_limit() {
        let lim = Limits::default();
        assert!(enumerate_compositions(&ds("3"), 24, &lim).is_ok());
        assert_eq!(
            enumerate_compositions(&ds("3"), 25, &lim),
            Err(Error::OracleLimitExceeded {
                index: 25,
                limit: 24
            })
        );
        assert_eq!(
            multinomial_count(&ds("3"), 25, &lim),
            Err(Error::OracleLimitExceeded {
                index: 25,
                limit: 24
            })
        );
    }

    #[test]
    fn arrangements_are_multinomials() {
        // 2 ones, 1 two, 3 fours: 6! / (2! 1! 3!) = 60
        let m = PartMultiset::new(vec![2, 1, 0, 3]);
        assert_eq!(m.total(), 2 + 2 + 12);
        assert_eq!(m.coin_count(), 6);
        assert_eq!(m.arrangements(), 60u32.into());
        assert!(m.fits(&ds("1,2,4")));
        assert!(!m.fits(&ds("1,4")));
        assert_eq!(PartMultiset::new(vec![]).arrangements(), 1u32.into());
    }

    #[test]
    fn expansion_examples() {
        let all = ds("1,2,3,4,5");
        assert_eq!(
            symbolic_expansion_check(5, all.mask()).unwrap(),
            16u32.into()
        );
        assert_eq!(
            symbolic_expansion_check(1, ds("2,5").mask()).unwrap(),
            0u32.into()
        );
        let two_four = ds("2,4");
        assert_eq!(
            symbolic_expansion_check(4, two_four.mask()).unwrap(),
            2u32.into()
        );
        assert_eq!(
            enumerate_compositions(&two_four, 4, &Limits::default()).unwrap(),
            2u32.into()
        );
        // short masks are zero-padded
        assert_eq!(symbolic_expansion_check(3, &[true]).unwrap(), 1u32.into());
    }

    #[test]
    fn expansion_rejects_other_indices() {
        assert_eq!(
            symbolic_expansion_check(0, &[true]),
            Err(Error::UnsupportedIndex(0))
        );
        assert_eq!(
            symbolic_expansion_check(6, &[true]),
            Err(Error::UnsupportedIndex(6))
        );
    }

    #[test]
    fn expansion_coefficients_sum_to_compositions() {
        // with every B_j = 1, E_i counts all compositions of i: 2^(i-1)
        for i in 1..=5u64 {
            assert_eq!(
                symbolic_expansion_check(i, &[true; 5]).unwrap(),
                BigUint::from(1u64 << (i - 1))
            );
        }
    }
}
