//! Counting ordered coin stacks.
//!
//! For a set of coin denominations, `E_i` is the number of ways to stack
//! coins (order matters) so that their values total `i`. The sequence obeys
//! a linear recurrence whose window is the denomination mask, which makes
//! its generating function rational with denominator
//! `B_L x^L + ... + B_1 x - 1`. Because `E_i` vanishes exactly when `i` is
//! not a non-negative combination of the denominations, the sequence also
//! answers coin-problem representability queries and locates the Frobenius
//! number.
//!
//! ```
//! use coinstack::{parse_denominations, e_sequence, Limits};
//!
//! let ds = parse_denominations("2,5").unwrap();
//! let seq = e_sequence(&ds, 7, &Limits::default()).unwrap();
//! assert_eq!(seq.terms()[7], 2u32.into());
//! ```

pub mod denominations;
pub mod error;
pub mod frobenius;
pub mod genfunc;
pub mod limits;
pub mod recurrence;

pub use denominations::{mask_of, parse_denominations, DenominationError, DenominationSet};
pub use error::{Error, Result};
pub use frobenius::{
    frobenius_number, is_representable, partition_count, representable_batch, Certificate,
    FrobeniusKind, FrobeniusResult, RepresentabilityReport,
};
pub use genfunc::{
    build_denominator, build_numerator_literal, literal_gf, series_as_naturals, series_expand,
    simplified_gf, IntPolynomial, RationalGF,
};
pub use limits::Limits;
pub use recurrence::{
    e_sequence, e_term_dp, e_term_dp_mod, e_term_fast, enumerate_compositions, multinomial_count,
    part_multisets, symbolic_expansion_check, PartMultiset, StackCountSequence, StackCounts,
};
