//! The stack-count sequence `E_i`.
//!
//! `E_0 = 1` and `E_i = B_1 E_{i-1} + B_2 E_{i-2} + ... + B_L E_{i-L}` with
//! terms of negative index read as zero. Three routes are provided: a dense
//! sliding-window evaluation, a single-term evaluator based on remainder
//! arithmetic modulo the characteristic polynomial, and brute-force oracles
//! that count stacks directly.

mod fast;
mod oracle;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::denominations::DenominationSet;
use crate::limits::Limits;
use crate::Result;

pub use fast::e_term_fast;
pub use oracle::{
    enumerate_compositions, multinomial_count, part_multisets, symbolic_expansion_check,
    PartMultiset,
};

/// `E_0..=E_n` for one denomination set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackCountSequence {
    ds: DenominationSet,
    terms: Vec<BigUint>,
}

impl StackCountSequence {
    pub fn denominations(&self) -> &DenominationSet {
        &self.ds
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigUint> {
        self.terms
    }

    /// Index of the last stored term.
    pub fn last_index(&self) -> u64 {
        self.terms.len() as u64 - 1
    }

    /// Re-checks every stored term against the masked window sum.
    pub fn satisfies_recurrence(&self) -> bool {
        if self.terms.first() != Some(&BigUint::one()) {
            return false;
        }
        (1..self.terms.len()).all(|i| {
            let window: BigUint = (1..=self.ds.largest().min(i as u64))
                .filter(|&j| self.ds.flag(j))
                .map(|j| &self.terms[i - j as usize])
                .sum();
            window == self.terms[i]
        })
    }
}

/// Computes `E_0..=E_n` exactly.
///
/// Fails with [`crate::Error::ResourceLimit`] when `n * L` exceeds the
/// work bound.
pub fn e_sequence(ds: &DenominationSet, n: u64, limits: &Limits) -> Result<StackCountSequence> {
    limits.check_work(u128::from(n) * u128::from(ds.largest()))?;
    Ok(StackCountSequence {
        ds: ds.clone(),
        terms: dense_terms(ds, n as usize),
    })
}

pub(crate) fn dense_terms(ds: &DenominationSet, n: usize) -> Vec<BigUint> {
    let mut terms: Vec<BigUint> = Vec::with_capacity(n + 1);
    terms.push(BigUint::one());
    for i in 1..=n {
        let mut acc = BigUint::zero();
        for &v in ds.values() {
            let v = v as usize;
            if v > i {
                break;
            }
            acc += &terms[i - v];
        }
        terms.push(acc);
    }
    terms
}

/// Streams `E_0, E_1, ...` keeping only the last `L` terms.
#[derive(Debug, Clone)]
pub struct StackCounts<'a> {
    ds: &'a DenominationSet,
    ring: Vec<BigUint>,
    next: u64,
}

impl<'a> StackCounts<'a> {
    pub fn new(ds: &'a DenominationSet) -> Self {
        StackCounts {
            ds,
            ring: vec![BigUint::zero(); ds.largest() as usize],
            next: 0,
        }
    }

    /// Index the next call to [`advance`](Self::advance) will produce.
    pub fn next_index(&self) -> u64 {
        self.next
    }

    /// Computes the next term and returns it with its index.
    pub fn advance(&mut self) -> (u64, &BigUint) {
        let i = self.next;
        let len = self.ring.len() as u64;
        let slot = (i % len) as usize;
        let value = if i == 0 {
            BigUint::one()
        } else {
            let mut acc = BigUint::zero();
            for &v in self.ds.values() {
                if v > i {
                    break;
                }
                acc += &self.ring[((i - v) % len) as usize];
            }
            acc
        };
        // The slot held E_{i-L}, which was consumed above when L <= i.
        self.ring[slot] = value;
        self.next += 1;
        (i, &self.ring[slot])
    }
}

/// `E_n` by the sliding window, storing only `L` terms.
pub fn e_term_dp(ds: &DenominationSet, n: u64, limits: &Limits) -> Result<BigUint> {
    limits.check_work(u128::from(n) * ds.len() as u128)?;
    let mut stream = StackCounts::new(ds);
    loop {
        let (i, value) = stream.advance();
        if i == n {
            return Ok(value.clone());
        }
    }
}

/// `E_n mod modulus` by the sliding window over machine words.
pub fn e_term_dp_mod(ds: &DenominationSet, n: u64, modulus: u64, limits: &Limits) -> Result<u64> {
    if modulus < 2 {
        return Err(crate::Error::InvalidModulus(modulus));
    }
    limits.check_work(u128::from(n) * ds.len() as u128)?;
    Ok(*dense_terms_mod(ds, n as usize, modulus).last().unwrap())
}

pub(crate) fn dense_terms_mod(ds: &DenominationSet, n: usize, modulus: u64) -> Vec<u64> {
    let mut terms = Vec::with_capacity(n + 1);
    terms.push(1 % modulus);
    for i in 1..=n {
        let mut acc = 0u64;
        for &v in ds.values() {
            let v = v as usize;
            if v > i {
                break;
            }
            acc = add_mod(acc, terms[i - v], modulus);
        }
        terms.push(acc);
    }
    terms
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}
