//! JSON forms of the exact objects: polynomials and series as arrays of
//! `"num/den"` strings (lowest degree first), denominators as `{"i": e}`.

use std::collections::BTreeMap;

use anyhow::{Context, Result};
use trace_poincare_core::exactmath::{format_rational, parse_rational};
use trace_poincare_core::{
    CyclotomicExponents, DensePolynomial, ExactRational, FactoredDenominator, TruncatedSeries,
};

pub fn rationals_to_json(coeffs: &[ExactRational]) -> Vec<String> {
    coeffs.iter().map(format_rational).collect()
}

pub fn rationals_from_json(coeffs: &[String]) -> Result<Vec<ExactRational>> {
    coeffs
        .iter()
        .map(|s| parse_rational(s).with_context(|| format!("bad coefficient {s:?}")))
        .collect()
}

pub fn poly_to_json(p: &DensePolynomial) -> Vec<String> {
    rationals_to_json(p.coeffs())
}

pub fn poly_from_json(coeffs: &[String]) -> Result<DensePolynomial> {
    Ok(DensePolynomial::new(rationals_from_json(coeffs)?))
}

pub fn series_to_json(s: &TruncatedSeries) -> Vec<String> {
    rationals_to_json(s.coeffs())
}

pub fn series_from_json(coeffs: &[String]) -> Result<TruncatedSeries> {
    Ok(TruncatedSeries::new(rationals_from_json(coeffs)?))
}

pub fn den_to_json(d: &FactoredDenominator) -> BTreeMap<usize, u32> {
    d.iter().collect()
}

pub fn den_from_json(m: &BTreeMap<usize, u32>) -> FactoredDenominator {
    FactoredDenominator::new(m.iter().map(|(&i, &e)| (i, e)))
}

pub fn cyclotomic_to_json(c: &CyclotomicExponents) -> BTreeMap<usize, u32> {
    c.iter().collect()
}

/// Compact `i:e` list used in CSV cells, e.g. `1:3 2:4 3:5`.
pub fn exponents_cell(exps: impl Iterator<Item = (usize, u32)>) -> String {
    exps.filter(|&(_, e)| e > 0)
        .map(|(i, e)| format!("{i}:{e}"))
        .collect::<Vec<_>>()
        .join(" ")
}
