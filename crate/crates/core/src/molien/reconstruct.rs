use super::ProblemSpec;
use crate::exactmath::{DensePolynomial, FactoredDenominator, FactoredRationalFunction, TruncatedSeries};
use crate::Error;

/// Extra coefficients beyond `deg(den)` that must be available and vanish.
pub const DEFAULT_GUARD_MARGIN: usize = 5;

pub fn reconstruct(
    series: &TruncatedSeries,
    den: &FactoredDenominator,
    spec: &ProblemSpec,
) -> Result<FactoredRationalFunction, Error> {
    reconstruct_with_margin(series, den, spec, DEFAULT_GUARD_MARGIN)
}

pub fn reconstruct_with_margin(
    series: &TruncatedSeries,
    den: &FactoredDenominator,
    spec: &ProblemSpec,
    margin: usize,
) -> Result<FactoredRationalFunction, Error> {
    let num = reconstruct_numerator(series, &den.expand(), spec, margin)?;
    Ok(FactoredRationalFunction::new(num, den.clone()))
}

/// Multiplies `series` by the expanded candidate denominator `den` (constant
/// term 1) and checks that the product is a polynomial of degree exactly
/// `deg(den) - k n^2`, the degree forced by the functional equation.
///
/// Fails with [`Error::ReconstructionFailed`] at the first degree above that
/// bound carrying a nonzero coefficient.
pub fn reconstruct_numerator(
    series: &TruncatedSeries,
    den: &DensePolynomial,
    spec: &ProblemSpec,
    margin: usize,
) -> Result<DensePolynomial, Error> {
    let den_degree = den.degree().ok_or(Error::DivisionByZero)?;
    let required = den_degree + margin;
    if series.order() < required {
        return Err(Error::InsufficientOrder {
            order: series.order(),
            required,
        });
    }
    let product = series.mul_polynomial(den);
    let num_degree = den_degree as i64 - spec.functional_degree() as i64;
    let first_free = usize::try_from(num_degree + 1).unwrap_or(0);
    if let Some(degree) = (first_free..=series.order()).find(|&i| !num_traits::Zero::is_zero(product.coeff(i))) {
        return Err(Error::ReconstructionFailed { degree });
    }
    let num = DensePolynomial::new(product.coeffs()[..first_free].to_vec());
    if num_degree < 0 || num.degree() != Some(num_degree as usize) {
        return Err(Error::NumeratorDegree {
            expected: num_degree.max(0) as usize,
            found: num.degree(),
        });
    }
    Ok(num)
}

/// Reconstruction assuming only that the function is proper: the product
/// with `den` must vanish from degree `deg(den)` on. Used where the
/// functional-equation degree is not known to apply.
pub fn reconstruct_proper(
    series: &TruncatedSeries,
    den: &FactoredDenominator,
    margin: usize,
) -> Result<FactoredRationalFunction, Error> {
    let expanded = den.expand();
    let den_degree = expanded.degree().ok_or(Error::DivisionByZero)?;
    let required = den_degree + margin.max(1);
    if series.order() < required {
        return Err(Error::InsufficientOrder {
            order: series.order(),
            required,
        });
    }
    let product = series.mul_polynomial(&expanded);
    if let Some(degree) = (den_degree..=series.order()).find(|&i| !num_traits::Zero::is_zero(product.coeff(i))) {
        return Err(Error::ReconstructionFailed { degree });
    }
    let num = DensePolynomial::new(product.coeffs()[..den_degree].to_vec());
    Ok(FactoredRationalFunction::new(num, den.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molien::molien_series;

    #[test]
    fn proper_reconstruction_ignores_the_degree_law() {
        let spec = ProblemSpec::mixed(2, 2);
        let s = molien_series(&spec, 20);
        let den = FactoredDenominator::new([(1, 4), (2, 1)]);
        assert!(reconstruct(&s, &den, &spec).is_err());
        assert_eq!(reconstruct_proper(&s, &den, 5).unwrap().numerator, DensePolynomial::one());
        let smaller = FactoredDenominator::new([(1, 3), (2, 1)]);
        assert!(matches!(
            reconstruct_proper(&s, &smaller, 5),
            Err(Error::ReconstructionFailed { .. })
        ));
    }

    #[test]
    fn two_by_two_numerators() {
        let spec = ProblemSpec::pure(2, 2);
        let s = molien_series(&spec, 20);
        let f = reconstruct(&s, &FactoredDenominator::new([(1, 2), (2, 3)]), &spec).unwrap();
        assert_eq!(f.numerator, DensePolynomial::one());

        let spec = ProblemSpec::pure(2, 4);
        let s = molien_series(&spec, 30);
        let f = reconstruct(&s, &FactoredDenominator::new([(1, 6), (2, 7)]), &spec).unwrap();
        assert_eq!(f.numerator, DensePolynomial::from_ints(&[1, -2, 4, -2, 1]));
    }

    #[test]
    fn too_small_denominator_fails() {
        let spec = ProblemSpec::pure(2, 2);
        let s = molien_series(&spec, 20);
        let err = reconstruct(&s, &FactoredDenominator::new([(1, 2), (2, 2)]), &spec);
        assert!(matches!(err, Err(Error::ReconstructionFailed { .. })), "{err:?}");
    }

    #[test]
    fn short_series_is_rejected() {
        let spec = ProblemSpec::pure(2, 2);
        let s = molien_series(&spec, 10);
        let err = reconstruct(&s, &FactoredDenominator::new([(1, 2), (2, 3)]), &spec);
        assert_eq!(err, Err(Error::InsufficientOrder { order: 10, required: 13 }));
    }

    #[test]
    fn oversized_denominator_gives_nonreduced_numerator() {
        let spec = ProblemSpec::pure(2, 2);
        let s = molien_series(&spec, 20);
        let f = reconstruct(&s, &FactoredDenominator::new([(1, 3), (2, 3)]), &spec);
        // one extra (1 - t) raises the degree the functional equation expects
        // by one, and the numerator becomes 1 - t.
        assert_eq!(f.unwrap().numerator, DensePolynomial::from_ints(&[1, -1]));
    }
}
