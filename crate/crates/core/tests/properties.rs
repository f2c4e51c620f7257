//! Property-based invariants of the exact layers: quotient/coefficient round
//! trips, normalization invariance, and parity of the nonreal zero count.

use lpq_core::engine::nonreal_count;
use lpq_core::poly::RatPoly;
use lpq_core::rat::{rat_frac, rat_i64, Rat};
use lpq_core::series::{coeffs_from_quotients, quotients, CoefficientSeries, QuotientRule};
use proptest::prelude::*;

/// A positive rational with numerator/denominator in a small range.
fn pos_rat() -> impl Strategy<Value = Rat> {
    (1i64..200, 1i64..200).prop_map(|(n, d)| rat_frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// quotients ∘ coeffs_from_quotients is the identity on quotient data.
    #[test]
    fn quotients_round_trip(qs in prop::collection::vec(pos_rat(), 1..8),
                            a0 in pos_rat(), a1 in pos_rat()) {
        let series = coeffs_from_quotients(&qs, a0, a1).unwrap();
        let profile = quotients(&series, series.max_index()).unwrap();
        for (i, q) in qs.iter().enumerate() {
            prop_assert_eq!(profile.q_n(i + 2), q);
        }
    }

    /// coeffs_from_quotients ∘ quotients recovers the series up to the
    /// normalization a_0 = a_1 = 1 (second quotients are scale-invariant).
    #[test]
    fn coefficients_round_trip(coeffs in prop::collection::vec(pos_rat(), 3..9)) {
        let series = CoefficientSeries::from_coeffs(coeffs).unwrap();
        let n = series.max_index();
        let profile = quotients(&series, n).unwrap();
        let qs: Vec<Rat> = (2..=n).map(|k| profile.q_n(k).clone()).collect();
        let rebuilt = coeffs_from_quotients(&qs, rat_i64(1), rat_i64(1)).unwrap();
        let normalized = series.normalize();
        prop_assert_eq!(rebuilt.coeffs(), normalized.coeffs());
    }

    /// Second quotients are invariant under normalization and under global
    /// rescaling of the coefficient sequence.
    #[test]
    fn quotients_scale_invariant(coeffs in prop::collection::vec(pos_rat(), 3..9),
                                 scale in pos_rat()) {
        let series = CoefficientSeries::from_coeffs(coeffs.clone()).unwrap();
        let scaled = CoefficientSeries::from_coeffs(
            coeffs.iter().map(|c| c * &scale).collect()).unwrap();
        let n = series.max_index();
        let p1 = quotients(&series, n).unwrap();
        let p2 = quotients(&scaled, n).unwrap();
        let p3 = quotients(&series.normalize(), n).unwrap();
        for k in 2..=n {
            prop_assert_eq!(p1.q_n(k), p2.q_n(k));
            prop_assert_eq!(p1.q_n(k), p3.q_n(k));
        }
    }

    /// Nonreal zeros of a real polynomial come in conjugate pairs.
    #[test]
    fn nonreal_count_is_even(coeffs in prop::collection::vec(-50i64..50, 2..9)) {
        prop_assume!(coeffs.iter().any(|&c| c != 0));
        let p = RatPoly::new(coeffs.into_iter().map(rat_i64).collect());
        prop_assume!(!p.is_zero() && p.degree() >= 1);
        let zc = nonreal_count(&p).unwrap();
        prop_assert_eq!(zc % 2, 0);
        prop_assert!(zc <= p.degree());
    }

    /// nonreal_count is invariant under multiplication by a nonzero constant
    /// and by powers of x, which add only real zeros at the origin.
    #[test]
    fn nonreal_count_ignores_scaling_and_origin_zeros(
            coeffs in prop::collection::vec(-20i64..20, 2..7),
            shift in 0usize..3, num in 1i64..20) {
        prop_assume!(coeffs.iter().any(|&c| c != 0));
        let p = RatPoly::new(coeffs.into_iter().map(rat_i64).collect());
        prop_assume!(!p.is_zero() && p.degree() >= 1);
        let zc = nonreal_count(&p).unwrap();
        let shifted = p.mul(&RatPoly::monomial(rat_i64(num), shift));
        prop_assert_eq!(nonreal_count(&shifted).unwrap(), zc);
    }

    /// A rule-generated series agrees with the closed-form product of its
    /// own quotients.
    #[test]
    fn generator_consistency(c_num in 3i64..6, n_max in 3usize..12) {
        let rule = QuotientRule::Constant { q: rat_i64(c_num) };
        let series = CoefficientSeries::from_rule(rule, rat_i64(1), rat_i64(1), n_max).unwrap();
        let profile = quotients(&series, n_max).unwrap();
        for k in 2..=n_max {
            prop_assert_eq!(profile.q_n(k), &rat_i64(c_num));
        }
        // extending the materialization preserves the prefix
        let longer = series.materialize_to(n_max + 3).unwrap();
        prop_assert_eq!(&longer.coeffs()[..=n_max], series.coeffs());
    }
}

/// Real-rootedness decisions agree between the exact Sturm count and an
/// evaluation-based sign-change lower bound on products of known linear
/// factors.
#[test]
fn sturm_agrees_on_constructed_hyperbolic_products() {
    for roots in [
        vec![-1i64, -2, -3],
        vec![-1, -1, -4],
        vec![-5, -5, -5, -5],
        vec![-1, -2, -3, -4, -5, -6],
    ] {
        let mut p = RatPoly::from_i64(&[1]);
        for r in &roots {
            p = p.mul(&RatPoly::from_i64(&[-r, 1]));
        }
        assert_eq!(nonreal_count(&p).unwrap(), 0, "roots {roots:?}");
    }
    // attach one conjugate pair: (x² + x + 1) has discriminant −3
    let pair = RatPoly::from_i64(&[1, 1, 1]);
    let mut p = pair.clone();
    for r in [-1i64, -2, -3] {
        p = p.mul(&RatPoly::from_i64(&[-r, 1]));
    }
    assert_eq!(nonreal_count(&p).unwrap(), 2);
    assert_eq!(nonreal_count(&p.mul(&pair)).unwrap(), 4);
}
