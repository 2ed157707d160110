//! Coin denomination sets and their binary mask.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DenominationError {
    #[error("no denominations given")]
    EmptyInput,
    #[error("denomination `{0}` is not positive")]
    NonPositive(String),
    #[error("`{0}` is not an integer")]
    Malformed(String),
    #[error("largest denomination {largest} exceeds the limit {limit}")]
    TooLarge { largest: String, limit: u64 },
}

/// A validated set of distinct positive coin values.
///
/// `mask()[j - 1]` is set exactly when `j` is one of the values, so the mask
/// always has length `largest()` and ends in `true`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenominationSet {
    values: Vec<u64>,
    mask: Vec<bool>,
    gcd: u64,
}

impl DenominationSet {
    /// Builds a set from arbitrary values, deduplicating and sorting them.
    pub fn new<I>(values: I) -> Result<Self, DenominationError>
    where
        I: IntoIterator<Item = u64>,
    {
        Self::with_limit(values, Limits::DEFAULT_MAX_DENOMINATION)
    }

    pub fn with_limit<I>(values: I, max_denomination: u64) -> Result<Self, DenominationError>
    where
        I: IntoIterator<Item = u64>,
    {
        let mut values: Vec<u64> = values.into_iter().collect();
        if values.is_empty() {
            return Err(DenominationError::EmptyInput);
        }
        if values.contains(&0) {
            return Err(DenominationError::NonPositive("0".to_string()));
        }
        values.sort_unstable();
        values.dedup();

        let largest = *values.last().unwrap();
        if largest > max_denomination {
            return Err(DenominationError::TooLarge {
                largest: largest.to_string(),
                limit: max_denomination,
            });
        }

        let mut mask = vec![false; largest as usize];
        for &v in &values {
            mask[v as usize - 1] = true;
        }
        let gcd = values.iter().fold(0u64, |g, &v| g.gcd(&v));

        Ok(DenominationSet { values, mask, gcd })
    }

    /// Rebuilds a set from a mask (`mask[j - 1]` flags value `j`).
    pub fn from_mask(mask: &[bool]) -> Result<Self, DenominationError> {
        Self::new(
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as u64 + 1),
        )
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn largest(&self) -> u64 {
        *self.values.last().unwrap()
    }

    pub fn smallest(&self) -> u64 {
        self.values[0]
    }

    /// Number of denominations.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// `B_j` for `j >= 1`; zero outside `1..=largest`.
    pub fn flag(&self, j: u64) -> bool {
        j >= 1 && j <= self.largest() && self.mask[j as usize - 1]
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn contains(&self, value: u64) -> bool {
        self.values.binary_search(&value).is_ok()
    }

    /// Every value multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Self, DenominationError> {
        if factor == 0 {
            return Err(DenominationError::NonPositive("0".to_string()));
        }
        Self::with_limit(self.values.iter().map(|&v| v * factor), u64::MAX)
    }
}

impl fmt::Display for DenominationSet {
    /// Sorted, comma-separated, no whitespace.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for DenominationSet {
    type Err = DenominationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_denominations(s)
    }
}

/// Parses a comma-separated list such as `"6, 9, 20"` with the default
/// size limit.
pub fn parse_denominations(text: &str) -> Result<DenominationSet, DenominationError> {
    parse_denominations_with(text, Limits::DEFAULT_MAX_DENOMINATION)
}

pub fn parse_denominations_with(
    text: &str,
    max_denomination: u64,
) -> Result<DenominationSet, DenominationError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(DenominationError::EmptyInput);
    }
    let mut values = Vec::new();
    for raw in text.split(',') {
        values.push(parse_token(raw.trim(), max_denomination)?);
    }
    DenominationSet::with_limit(values, max_denomination)
}

fn parse_token(token: &str, max_denomination: u64) -> Result<u64, DenominationError> {
    let (negative, digits) = match token.as_bytes().first() {
        Some(b'-') => (true, &token[1..]),
        Some(b'+') => (false, &token[1..]),
        _ => (false, token),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(DenominationError::Malformed(token.to_string()));
    }
    let all_zero = digits.bytes().all(|b| b == b'0');
    if negative || all_zero {
        return Err(DenominationError::NonPositive(token.to_string()));
    }
    match digits.parse::<u64>() {
        Ok(v) => Ok(v),
        Err(_) => Err(DenominationError::TooLarge {
            largest: digits.trim_start_matches('0').to_string(),
            limit: max_denomination,
        }),
    }
}

/// The mask as 0/1 flags, index 0 holding `B_1`.
pub fn mask_of(ds: &DenominationSet) -> Vec<u8> {
    ds.mask.iter().map(|&b| u8::from(b)).collect()
}
