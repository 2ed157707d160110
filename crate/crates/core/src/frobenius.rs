//! Representability and the Frobenius number, read off from `E_i`.
//!
//! An amount `S` is a non-negative combination of the denominations exactly
//! when at least one coin stack is worth `S`, i.e. when `E_S > 0`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::denominations::DenominationSet;
use crate::limits::Limits;
use crate::recurrence::{e_term_dp, e_term_fast, StackCounts};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentabilityReport {
    pub target: u64,
    pub representable: bool,
    /// `E_S`, the number of coin stacks worth the target.
    pub e_value: BigUint,
}

impl RepresentabilityReport {
    fn new(target: u64, e_value: BigUint) -> Self {
        RepresentabilityReport {
            target,
            representable: !e_value.is_zero(),
            e_value,
        }
    }
}

/// Decides whether `target` can be paid with the denominations.
///
/// Small targets use the sliding window; large ones switch to the
/// single-term evaluator when that is estimated to be cheaper. Both are
/// exact.
pub fn is_representable(
    ds: &DenominationSet,
    target: u64,
    limits: &Limits,
) -> Result<RepresentabilityReport> {
    let window_work = u128::from(target) * ds.len() as u128;
    let order = u128::from(ds.largest());
    let fast_work = order * order * (u128::from(64 - target.leading_zeros()) + 1);
    let e_value = if window_work <= fast_work {
        e_term_dp(ds, target, limits)?
    } else {
        e_term_fast(ds, target, None, limits)?
    };
    Ok(RepresentabilityReport::new(target, e_value))
}

/// Answers many targets with a single pass of the sliding window. Reports
/// come back in the order of `targets`.
pub fn representable_batch(
    ds: &DenominationSet,
    targets: &[u64],
    limits: &Limits,
) -> Result<Vec<RepresentabilityReport>> {
    let Some(&max) = targets.iter().max() else {
        return Ok(Vec::new());
    };
    limits.check_work(u128::from(max) * ds.len() as u128)?;

    let mut order: Vec<usize> = (0..targets.len()).collect();
    order.sort_by_key(|&k| targets[k]);

    let mut reports: Vec<Option<RepresentabilityReport>> = vec![None; targets.len()];
    let mut stream = StackCounts::new(ds);
    let mut pending = order.into_iter().peekable();
    while pending.peek().is_some() {
        let (i, value) = stream.advance();
        while let Some(k) = pending.next_if(|&k| targets[k] == i) {
            reports[k] = Some(RepresentabilityReport::new(i, value.clone()));
        }
    }
    Ok(reports.into_iter().map(Option::unwrap).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusKind {
    /// gcd 1 and no unit coin: a largest non-representable amount exists.
    Finite,
    /// A coin of value 1 is present.
    AllRepresentable,
    /// gcd > 1: infinitely many amounts can never be paid.
    InfiniteGap,
}

impl FrobeniusKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FrobeniusKind::Finite => "finite",
            FrobeniusKind::AllRepresentable => "all_representable",
            FrobeniusKind::InfiniteGap => "infinite_gap",
        }
    }
}

/// A run of consecutive representable amounts `start..start + length` with
/// `length` equal to the smallest coin. Adding that coin repeatedly covers
/// every amount past the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub start: u64,
    pub length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusResult {
    pub kind: FrobeniusKind,
    /// Largest non-representable amount; only for [`FrobeniusKind::Finite`].
    pub value: Option<u64>,
    pub certificate: Option<Certificate>,
}

/// Finds the largest amount that cannot be paid.
///
/// Streams `E_i` until `smallest` consecutive terms are positive. The index
/// bound defaults to `smallest * largest`; exceeding it is
/// [`Error::SearchLimitExceeded`].
pub fn frobenius_number(ds: &DenominationSet, limits: &Limits) -> Result<FrobeniusResult> {
    if ds.gcd() > 1 {
        return Ok(FrobeniusResult {
            kind: FrobeniusKind::InfiniteGap,
            value: None,
            certificate: None,
        });
    }
    if ds.contains(1) {
        return Ok(FrobeniusResult {
            kind: FrobeniusKind::AllRepresentable,
            value: None,
            certificate: Some(Certificate {
                start: 0,
                length: 1,
            }),
        });
    }

    let run_needed = ds.smallest();
    let bound = limits
        .search_bound
        .unwrap_or_else(|| ds.smallest().saturating_mul(ds.largest()));
    limits.check_work(u128::from(bound) * ds.len() as u128)?;

    let mut stream = StackCounts::new(ds);
    let mut last_zero = None;
    let mut run = 0u64;
    while stream.next_index() < bound {
        let (i, value) = stream.advance();
        if value.is_zero() {
            last_zero = Some(i);
            run = 0;
            continue;
        }
        run += 1;
        if run == run_needed {
            // 1 is never representable here, so a zero has been seen.
            return Ok(FrobeniusResult {
                kind: FrobeniusKind::Finite,
                value: last_zero,
                certificate: Some(Certificate {
                    start: i + 1 - run_needed,
                    length: run_needed,
                }),
            });
        }
    }
    Err(Error::SearchLimitExceeded {
        bound,
        run: run_needed,
    })
}

/// `F_i`: the number of unordered coin multisets worth `i`, by the usual
/// one-denomination-at-a-time accumulation.
pub fn partition_count(ds: &DenominationSet, i: u64, limits: &Limits) -> Result<BigUint> {
    limits.check_work(u128::from(i) * ds.len() as u128)?;
    let n = i as usize;
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for &v in ds.values() {
        let v = v as usize;
        for s in v..=n {
            let (lo, hi) = ways.split_at_mut(s);
            hi[0] += &lo[s - v];
        }
    }
    Ok(ways.pop().unwrap())
}
