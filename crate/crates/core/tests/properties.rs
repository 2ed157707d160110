mod common;

use coinstack::{
    build_numerator_literal, e_sequence, e_term_fast, enumerate_compositions, literal_gf,
    multinomial_count, part_multisets, partition_count, series_expand, simplified_gf,
    symbolic_expansion_check, DenominationSet, IntPolynomial, Limits,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use common::{all_subsets, random_sets};

#[test]
fn every_stored_sequence_satisfies_the_recurrence() {
    let lim = Limits::default();
    for ds in all_subsets(7).iter().chain(&random_sets(11, 30, 40, 0.3)) {
        let seq = e_sequence(ds, 150, &lim).unwrap();
        assert!(seq.satisfies_recurrence(), "{ds}");
        assert_eq!(seq.last_index(), 150);
    }
}

#[test]
fn support_stays_positive_after_a_full_window() {
    let lim = Limits::default();
    for ds in all_subsets(8) {
        let terms = e_sequence(&ds, 300, &lim).unwrap().into_terms();
        let l = ds.largest() as usize;
        if let Some(start) = (0..terms.len().saturating_sub(l))
            .find(|&i| terms[i..i + l].iter().all(|t| !t.is_zero()))
        {
            assert!(terms[start..].iter().all(|t| !t.is_zero()), "{ds}");
        }
    }
}

#[test]
fn multisets_respect_the_mask() {
    for ds in all_subsets(6) {
        for i in 0..=14 {
            for m in part_multisets(&ds, i) {
                assert_eq!(m.total(), i);
                assert!(m.fits(&ds));
            }
        }
    }
}

#[test]
fn oracles_agree_at_the_edge_of_their_limit() {
    let lim = Limits::default();
    for text in ["1,2,3", "2,3,7", "1,4,6"] {
        let ds: DenominationSet = text.parse().unwrap();
        let e = e_sequence(&ds, 24, &lim).unwrap();
        assert_eq!(
            enumerate_compositions(&ds, 24, &lim).unwrap(),
            e.terms()[24]
        );
        assert_eq!(multinomial_count(&ds, 24, &lim).unwrap(), e.terms()[24]);
    }
}

#[test]
fn expansions_cover_longer_masks() {
    // masks longer than five entries only contribute through B_1..B_5
    let lim = Limits::default();
    for ds in all_subsets(7) {
        let e = e_sequence(&ds, 5, &lim).unwrap();
        for i in 1..=5 {
            assert_eq!(
                symbolic_expansion_check(i, ds.mask()).unwrap(),
                e.terms()[i as usize]
            );
        }
    }
}

#[test]
fn literal_and_simplified_series_coincide() {
    for ds in all_subsets(6).iter().chain(&random_sets(5, 40, 48, 0.2)) {
        let a = series_expand(&literal_gf(ds), 200).unwrap();
        let b = series_expand(&simplified_gf(ds), 200).unwrap();
        assert_eq!(a, b, "{ds}");
    }
}

#[test]
fn numerator_collapses_on_dense_random_sets() {
    for ds in random_sets(99, 40, 64, 0.8) {
        assert_eq!(
            build_numerator_literal(&ds),
            IntPolynomial::constant(-1),
            "{ds}"
        );
    }
}

#[test]
fn series_matches_recurrence_with_large_terms() {
    let lim = Limits::default();
    let ds: DenominationSet = "1,2,3,5,8".parse().unwrap();
    let series = series_expand(&simplified_gf(&ds), 600).unwrap();
    let terms = e_sequence(&ds, 600, &lim).unwrap().into_terms();
    assert!(terms[600].bits() > 300);
    let expected: Vec<BigInt> = terms.into_iter().map(BigInt::from).collect();
    assert_eq!(series, expected);
}

#[test]
fn partitions_never_exceed_stacks() {
    let lim = Limits::default();
    for ds in all_subsets(6) {
        let e = e_sequence(&ds, 40, &lim).unwrap();
        for i in 0..=40u64 {
            let f = partition_count(&ds, i, &lim).unwrap();
            assert!(f <= e.terms()[i as usize]);
            assert_eq!(f.is_zero(), e.terms()[i as usize].is_zero());
        }
    }
}

#[test]
fn fast_path_at_large_order() {
    let lim = Limits::default();
    let ds = DenominationSet::new([17, 250, 251, 999]).unwrap();
    let dense = e_sequence(&ds, 5_000, &lim).unwrap().into_terms();
    for n in [0u64, 998, 999, 1_000, 2_345, 5_000] {
        assert_eq!(
            e_term_fast(&ds, n, None, &lim).unwrap(),
            dense[n as usize],
            "n={n}"
        );
        let m = 1_000_003u64;
        assert_eq!(
            e_term_fast(&ds, n, Some(m), &lim).unwrap(),
            &dense[n as usize] % BigUint::from(m)
        );
    }
}
