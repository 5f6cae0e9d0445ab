use proptest::prelude::*;
use trace_poincare_core::closedforms::{
    c2k_closed, eq7_unreduced, r2k_closed, teranishi_c2k, thm21_sum,
};
use trace_poincare_core::exactmath::{catalan, DensePolynomial, ExactRational, Sign};
use trace_poincare_core::molien::{molien_series, two_by_two_series};
use trace_poincare_core::{ProblemSpec, Ring};

const D: usize = 60;

#[test]
fn pure_formulas_match_the_engine() {
    for k in 2..=8 {
        let engine = molien_series(&ProblemSpec::pure(2, k), D);
        for (name, f) in [
            ("teranishi", teranishi_c2k(k).unwrap()),
            ("residue sum", thm21_sum(k).unwrap()),
            ("closed", c2k_closed(k).unwrap()),
        ] {
            assert_eq!(f.series(D), engine, "{name}, k = {k}");
        }
    }
}

#[test]
fn mixed_formula_matches_the_engine() {
    for k in 3..=10 {
        let engine = molien_series(&ProblemSpec::mixed(2, k), D);
        assert_eq!(r2k_closed(k).unwrap().series(D), engine, "k = {k}");
        assert_eq!(two_by_two_series(k, Ring::MixedTrace, D), engine, "k = {k}");
    }
}

#[test]
fn mixed_k2_is_not_on_the_generic_denominator() {
    // 1 / ((1-t)^4 (1-t^2)): the k = 2 mixed series sits outside the k >= 3 formula.
    let s = molien_series(&ProblemSpec::mixed(2, 2), 20);
    let expected = trace_poincare_core::FactoredRationalFunction::new(
        DensePolynomial::one(),
        trace_poincare_core::FactoredDenominator::new([(1, 4), (2, 1)]),
    );
    assert_eq!(s, expected.series(20));
}

proptest! {
    #[test]
    fn numerator_shapes(k in 3usize..=14) {
        let pure = c2k_closed(k).unwrap().numerator;
        let mixed = r2k_closed(k).unwrap().numerator;
        let cat = ExactRational::from_integer(catalan(k as u64 - 2));
        prop_assert_eq!(pure.eval(&ExactRational::from_integer(1.into())), cat.clone());
        prop_assert_eq!(mixed.eval(&ExactRational::from_integer(1.into())), cat);
        prop_assert_eq!(pure.palindromic_sign(), Some(Sign::Plus));
        prop_assert_eq!(mixed.palindromic_sign(), Some(Sign::Plus));
        prop_assert!(mixed.is_even());
        let one_plus_t2 = DensePolynomial::from_ints(&[1, 0, 1]);
        prop_assert_eq!(mixed.multiplicity_of(&one_plus_t2) > 0, k % 2 == 0);
        let raw = eq7_unreduced(k).unwrap().numerator;
        prop_assert_eq!(raw, &pure * &DensePolynomial::from_ints(&[1, -2, 1]));
    }
}
