use trace_poincare_core::molien::{
    molien_series, molien_series_with, two_by_two_series, FoldStrategy, MolienOptions, Pruning,
};
use trace_poincare_core::{ProblemSpec, Ring, TruncatedSeries};

fn with(spec: &ProblemSpec, order: usize, opts: MolienOptions<'_>) -> TruncatedSeries {
    molien_series_with(spec, order, &opts).unwrap()
}

fn small_cases() -> Vec<ProblemSpec> {
    let mut v = Vec::new();
    for k in 2..=3 {
        v.push(ProblemSpec::pure(3, k));
        v.push(ProblemSpec::mixed(3, k));
    }
    v
}

#[test]
fn pruning_rules_agree() {
    for spec in small_cases() {
        let base = with(&spec, 12, MolienOptions { pruning: Pruning::None, ..Default::default() });
        for pruning in [Pruning::Component, Pruning::Spread] {
            let s = with(&spec, 12, MolienOptions { pruning, ..Default::default() });
            assert_eq!(s, base, "{spec:?} {pruning:?}");
        }
    }
}

#[test]
fn fold_strategies_agree() {
    let mut cases = small_cases();
    cases.push(ProblemSpec::pure(2, 4));
    cases.push(ProblemSpec::mixed(2, 5));
    for spec in cases {
        let order = if spec.n() == 2 { 30 } else { 10 };
        let div = with(&spec, order, MolienOptions::default());
        let mul = with(&spec, order, MolienOptions { strategy: FoldStrategy::Multiply, ..Default::default() });
        assert_eq!(div, mul, "{spec:?}");
    }
}

#[test]
fn pinned_variable_is_irrelevant() {
    for ring in [Ring::PureTrace, Ring::MixedTrace] {
        let spec = ProblemSpec::new(3, 2, ring).unwrap();
        let base = molien_series(&spec, 15);
        for pinned in 0..2 {
            let s = with(&spec, 15, MolienOptions { pinned: Some(pinned), ..Default::default() });
            assert_eq!(s, base, "{ring:?} pinned {pinned}");
        }
    }
}

#[test]
fn coefficients_are_nonnegative_integers() {
    let mut cases = small_cases();
    cases.extend((2..=6).flat_map(|k| [ProblemSpec::pure(2, k), ProblemSpec::mixed(2, k)]));
    cases.push(ProblemSpec::pure(1, 3));
    for spec in cases {
        for c in molien_series(&spec, 14).coeffs() {
            assert!(c.is_integer() && *c.numer() >= 0.into(), "{spec:?}: {c}");
        }
    }
}

#[test]
fn shortcut_matches_the_engine() {
    for k in 2..=6 {
        for ring in [Ring::PureTrace, Ring::MixedTrace] {
            let spec = ProblemSpec::new(2, k, ring).unwrap();
            assert_eq!(two_by_two_series(k, ring, 40), molien_series(&spec, 40), "k = {k} {ring:?}");
        }
    }
}
