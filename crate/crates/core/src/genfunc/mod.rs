//! The rational generating function `G(x) = P(x) / Q(x)` of `E_i`.
//!
//! `Q(x) = B_L x^L + ... + B_1 x - 1`. The numerator can be assembled term
//! by term from `E_1..E_{L-1}` ([`build_numerator_literal`]); every bracketed
//! coefficient is the recurrence rearranged, so it always reduces to the
//! constant `-1` and `G(x) = -1 / Q(x) = 1 / (1 - sum B_j x^j)`.
//!
//! Signs follow the `-1` constant-term convention throughout; only
//! [`RationalGF::normalized`] flips them, and only for display.

mod polynomial;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::denominations::DenominationSet;
use crate::recurrence::dense_terms;
use crate::{Error, Result};

pub use polynomial::IntPolynomial;

/// A numerator/denominator pair standing for the power series `P / Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGF {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        RationalGF {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Display form with a positive constant term in the denominator, e.g.
    /// `1 / (1 - x^2 - x^5)`.
    pub fn normalized(&self) -> String {
        let flip = self.denominator.coeff(0).is_negative();
        let (p, q) = if flip {
            (self.numerator.negated(), self.denominator.negated())
        } else {
            (self.numerator.clone(), self.denominator.clone())
        };
        if q.is_constant() {
            format!("{p} / {q}")
        } else {
            format!("{p} / ({q})")
        }
    }
}

/// `Q(x)`: constant term `-1`, coefficient of `x^j` equal to `B_j`.
pub fn build_denominator(ds: &DenominationSet) -> IntPolynomial {
    let mut coeffs = Vec::with_capacity(ds.largest() as usize + 1);
    coeffs.push(BigInt::from(-1));
    coeffs.extend(ds.mask().iter().map(|&b| BigInt::from(u8::from(b))));
    IntPolynomial::new(coeffs)
}

/// `P(x)` assembled coefficient by coefficient: for `1 <= k <= L-1` the
/// coefficient of `x^k` is `B_k + B_{k-1} E_1 + ... + B_1 E_{k-1} - E_k`,
/// and the constant term is `-1`.
pub fn build_numerator_literal(ds: &DenominationSet) -> IntPolynomial {
    let order = ds.largest() as usize;
    let e: Vec<BigInt> = dense_terms(ds, order - 1)
        .into_iter()
        .map(BigInt::from)
        .collect();

    let mut coeffs = Vec::with_capacity(order);
    coeffs.push(BigInt::from(-1));
    for k in 1..order {
        // B_k E_0 + B_{k-1} E_1 + ... + B_1 E_{k-1}
        let mut c: BigInt = (0..k)
            .filter(|&m| ds.flag((k - m) as u64))
            .map(|m| &e[m])
            .sum();
        c -= &e[k];
        coeffs.push(c);
    }
    IntPolynomial::new(coeffs)
}

/// `G(x)` with the numerator built literally from the sequence.
pub fn literal_gf(ds: &DenominationSet) -> RationalGF {
    RationalGF::new(build_numerator_literal(ds), build_denominator(ds))
}

/// `G(x) = -1 / Q(x)`.
pub fn simplified_gf(ds: &DenominationSet) -> RationalGF {
    RationalGF::new(IntPolynomial::constant(-1), build_denominator(ds))
}

/// First `n + 1` power-series coefficients of `P / Q`.
///
/// Requires `Q(0) = +-1` so the expansion stays integral; anything else is
/// [`Error::NonUnitConstantTerm`].
pub fn series_expand(gf: &RationalGF, n: u64) -> Result<Vec<BigInt>> {
    let q = gf.denominator.coeffs();
    let q0 = gf.denominator.coeff(0);
    if q0.abs() != BigInt::one() {
        return Err(Error::NonUnitConstantTerm(q0));
    }
    let p = gf.numerator.coeffs();
    let n = n as usize;

    let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = p.get(i).cloned().unwrap_or_default();
        for (j, qj) in q.iter().enumerate().take(i + 1).skip(1) {
            if !qj.is_zero() {
                acc -= qj * &c[i - j];
            }
        }
        // dividing by a unit is multiplying by it
        if q0.is_negative() {
            acc = -acc;
        }
        c.push(acc);
    }
    Ok(c)
}

/// Converts series coefficients to naturals; `None` if any is negative.
pub fn series_as_naturals(series: &[BigInt]) -> Option<Vec<BigUint>> {
    series.iter().map(BigInt::to_biguint).collect()
}
