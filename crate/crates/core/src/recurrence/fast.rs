//! Single-term evaluation by remainder arithmetic.
//!
//! With `C(x) = x^L - B_1 x^{L-1} - ... - B_L`, write
//! `x^n mod C(x) = r_0 + r_1 x + ... + r_{L-1} x^{L-1}`. Then
//! `E_n = r_0 E_0 + ... + r_{L-1} E_{L-1}`. The remainder is built by
//! square-and-multiply, so the cost is `O(L^2 log n)` coefficient operations
//! with schoolbook products.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{add_mod, dense_terms, dense_terms_mod};
use crate::denominations::DenominationSet;
use crate::limits::Limits;
use crate::{Error, Result};

/// Coefficient arithmetic used by the remainder computation.
trait Coefficients {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem);
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem);
}

struct Exact;

impl Coefficients for Exact {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn add_assign(&self, acc: &mut BigUint, a: &BigUint) {
        *acc += a;
    }
    fn mul_add_assign(&self, acc: &mut BigUint, a: &BigUint, b: &BigUint) {
        *acc += a * b;
    }
}

struct Modular(u64);

impl Coefficients for Modular {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add_assign(&self, acc: &mut u64, a: &u64) {
        *acc = add_mod(*acc, *a, self.0);
    }
    fn mul_add_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        let product = (u128::from(*a) * u128::from(*b) % u128::from(self.0)) as u64;
        *acc = add_mod(*acc, product, self.0);
    }
}

/// Arithmetic in `Z[x] / C(x)` for one denomination set.
struct RemainderRing<'a, R: Coefficients> {
    coeffs: R,
    values: &'a [u64],
    order: usize,
}

impl<R: Coefficients> RemainderRing<'_, R> {
    /// Folds every coefficient of degree `>= L` back down using
    /// `x^L = sum over values v of x^(L - v)`.
    fn reduce(&self, mut poly: Vec<R::Elem>) -> Vec<R::Elem> {
        for d in (self.order..poly.len()).rev() {
            let top = std::mem::replace(&mut poly[d], self.coeffs.zero());
            if self.coeffs.is_zero(&top) {
                continue;
            }
            for &v in self.values {
                self.coeffs.add_assign(&mut poly[d - v as usize], &top);
            }
        }
        poly.truncate(self.order);
        poly
    }

    fn square(&self, a: &[R::Elem]) -> Vec<R::Elem> {
        let mut out = vec![self.coeffs.zero(); 2 * a.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if self.coeffs.is_zero(ai) {
                continue;
            }
            for (j, aj) in a.iter().enumerate() {
                self.coeffs.mul_add_assign(&mut out[i + j], ai, aj);
            }
        }
        self.reduce(out)
    }

    fn times_x(&self, mut a: Vec<R::Elem>) -> Vec<R::Elem> {
        a.insert(0, self.coeffs.zero());
        self.reduce(a)
    }

    /// `x^n mod C(x)`, always of length `L`.
    fn power_of_x(&self, n: u64) -> Vec<R::Elem> {
        let mut r = vec![self.coeffs.zero(); self.order];
        r[0] = self.coeffs.one();
        if n == 0 {
            return r;
        }
        for bit in (0..64 - n.leading_zeros()).rev() {
            r = self.square(&r);
            if (n >> bit) & 1 == 1 {
                r = self.times_x(r);
            }
        }
        r
    }

    fn inner_product(&self, r: &[R::Elem], seed: &[R::Elem]) -> R::Elem {
        let mut acc = self.coeffs.zero();
        for (a, b) in r.iter().zip(seed) {
            self.coeffs.mul_add_assign(&mut acc, a, b);
        }
        acc
    }
}

/// `E_n` (or `E_n mod modulus`) without computing the intermediate terms.
///
/// The result always equals the sliding-window value, reduced when a modulus
/// is given. Fails with [`Error::InvalidModulus`] for a modulus below 2 and
/// with [`Error::ResourceLimit`] when `L^2 * log2(n)` exceeds the work bound.
pub fn e_term_fast(
    ds: &DenominationSet,
    n: u64,
    modulus: Option<u64>,
    limits: &Limits,
) -> Result<BigUint> {
    if let Some(m) = modulus {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
    }
    let order = ds.largest() as usize;
    let rounds = u128::from(64 - n.leading_zeros()) + 1;
    limits.check_work((order as u128).pow(2) * rounds)?;

    let result = match modulus {
        None => {
            let seed = dense_terms(ds, order - 1);
            if n < order as u64 {
                return Ok(seed[n as usize].clone());
            }
            let ring = RemainderRing {
                coeffs: Exact,
                values: ds.values(),
                order,
            };
            ring.inner_product(&ring.power_of_x(n), &seed)
        }
        Some(m) => {
            let seed = dense_terms_mod(ds, order - 1, m);
            if n < order as u64 {
                return Ok(BigUint::from(seed[n as usize]));
            }
            let ring = RemainderRing {
                coeffs: Modular(m),
                values: ds.values(),
                order,
            };
            BigUint::from(ring.inner_product(&ring.power_of_x(n), &seed))
        }
    };
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_denominations;
    use proptest::prelude::*;

    /// Companion-matrix power, kept only as an independent reference.
    fn matrix_power_term(ds: &DenominationSet, n: u64) -> BigUint {
        let l = ds.largest() as usize;
        let identity = |k: usize| -> Vec<Vec<BigUint>> {
            (0..k)
                .map(|i| (0..k).map(|j| BigUint::from(u8::from(i == j))).collect())
                .collect()
        };
        let mul = |a: &Vec<Vec<BigUint>>, b: &Vec<Vec<BigUint>>| -> Vec<Vec<BigUint>> {
            let k = a.len();
            let mut out = vec![vec![BigUint::zero(); k]; k];
            for i in 0..k {
                for t in 0..k {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    for j in 0..k {
                        out[i][j] += &a[i][t] * &b[t][j];
                    }
                }
            }
            out
        };
        // state (E_i, E_{i-1}, ..., E_{i-L+1}) -> (E_{i+1}, ...)
        let mut step = vec![vec![BigUint::zero(); l]; l];
        for (j, cell) in step[0].iter_mut().enumerate() {
            *cell = BigUint::from(u8::from(ds.flag(j as u64 + 1)));
        }
        for i in 1..l {
            step[i][i - 1] = BigUint::one();
        }
        let mut acc = identity(l);
        let mut base = step;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &base);
            }
            base = mul(&base, &base);
            e >>= 1;
        }
        // initial state (E_0, E_{-1}, ...) = (1, 0, ..., 0)
        acc[0][0].clone()
    }

    #[test]
    fn paper_example() {
        let ds = parse_denominations("2,5").unwrap();
        let lim = Limits::default();
        assert_eq!(
            e_term_fast(&ds, 7, None, &lim).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(e_term_fast(&ds, 3, None, &lim).unwrap(), BigUint::zero());
    }

    #[test]
    fn fibonacci_thirty() {
        let ds = parse_denominations("1,2").unwrap();
        let lim = Limits::default();
        let dp = super::super::e_sequence(&ds, 30, &lim).unwrap();
        assert_eq!(dp.terms()[30], BigUint::from(1_346_269u32));
        assert_eq!(
            e_term_fast(&ds, 30, None, &lim).unwrap(),
            BigUint::from(1_346_269u32)
        );
    }

    #[test]
    fn unit_coin_and_small_n() {
        let lim = Limits::default();
        let ones = parse_denominations("1").unwrap();
        assert_eq!(e_term_fast(&ones, 0, None, &lim).unwrap(), BigUint::one());
        assert_eq!(
            e_term_fast(&ones, 1_000_000, None, &lim).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            e_term_fast(&ones, 5, Some(2), &lim).unwrap(),
            BigUint::one()
        );
        let ds = parse_denominations("4,9").unwrap();
        for n in 0..9 {
            assert_eq!(
                e_term_fast(&ds, n, None, &lim).unwrap(),
                dense_terms(&ds, 8)[n as usize]
            );
        }
    }

    #[test]
    fn bad_modulus_and_budget() {
        let ds = parse_denominations("2,5").unwrap();
        let lim = Limits::default();
        assert_eq!(
            e_term_fast(&ds, 7, Some(1), &lim),
            Err(Error::InvalidModulus(1))
        );
        assert_eq!(
            e_term_fast(&ds, 7, Some(0), &lim),
            Err(Error::InvalidModulus(0))
        );
        let tight = lim.with_max_work(10);
        assert!(matches!(
            e_term_fast(&ds, 7, None, &tight),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn agrees_with_companion_matrix() {
        let lim = Limits::default();
        for text in ["2,5", "1,2", "3,4,7", "1,5,6,11", "9"] {
            let ds = parse_denominations(text).unwrap();
            for n in [0, 1, 10, 57, 200, 513] {
                assert_eq!(
                    e_term_fast(&ds, n, None, &lim).unwrap(),
                    matrix_power_term(&ds, n),
                    "{text} n={n}"
                );
            }
        }
    }

    fn arb_set() -> impl Strategy<Value = DenominationSet> {
        prop::collection::vec(1u64..=24, 1..8).prop_map(|v| DenominationSet::new(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn fast_equals_sliding_window(ds in arb_set(), n in 0u64..=2000, m in 2u64..) {
            let lim = Limits::default();
            let exact = dense_terms(&ds, n as usize).pop().unwrap();
            prop_assert_eq!(e_term_fast(&ds, n, None, &lim).unwrap(), exact.clone());
            prop_assert_eq!(e_term_fast(&ds, n, Some(m), &lim).unwrap(), exact % m);
        }
    }
}
