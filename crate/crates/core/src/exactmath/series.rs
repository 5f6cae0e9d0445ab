use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::DensePolynomial;
use super::ratfun::FactoredRationalFunction;
use super::rational::ExactRational;

/// Power series in `t` known exactly through degree `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Coefficients for degrees `0..=order`, where `order = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least degree 0");
        Self { coeffs }
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        Self::new(coeffs.iter().cloned().map(|c| ExactRational::from_integer(c.into())).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![ExactRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(&DensePolynomial::one(), order)
    }

    pub fn from_polynomial(p: &DensePolynomial, order: usize) -> Self {
        Self::new((0..=order).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &ExactRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^m`, dropping what falls beyond the order.
    pub fn shift(&self, m: usize) -> Self {
        let d = self.order();
        Self::new(
            (0..=d)
                .map(|i| {
                    if i >= m {
                        self.coeffs[i - m].clone()
                    } else {
                        ExactRational::zero()
                    }
                })
                .collect(),
        )
    }

    pub fn mul_polynomial(&self, p: &DensePolynomial) -> Self {
        let d = self.order();
        let mut out = vec![ExactRational::zero(); d + 1];
        for (j, c) in p.coeffs().iter().enumerate().take(d + 1) {
            if c.is_zero() {
                continue;
            }
            for i in 0..=d - j {
                out[i + j] += c * &self.coeffs[i];
            }
        }
        Self::new(out)
    }

    /// Divides by a polynomial with nonzero constant term, one coefficient at a
    /// time: `q_m = (s_m - sum_{j >= 1} p_j q_{m-j}) / p_0`.
    pub fn div_polynomial(&self, p: &DensePolynomial) -> Self {
        let p0 = p.coeff(0);
        assert!(!p0.is_zero(), "divisor must have a nonzero constant term");
        let d = self.order();
        let mut out: Vec<ExactRational> = Vec::with_capacity(d + 1);
        for m in 0..=d {
            let mut acc = self.coeffs[m].clone();
            for (j, c) in p.coeffs().iter().enumerate().skip(1).take(m) {
                if !c.is_zero() {
                    acc -= c * &out[m - j];
                }
            }
            out.push(acc / &p0);
        }
        Self::new(out)
    }

    /// Divides by `(1 - t^i)^e` via repeated strided prefix sums.
    pub fn div_one_minus_t_pow(&self, i: usize, e: u32) -> Self {
        assert!(i >= 1);
        let mut c = self.coeffs.clone();
        for _ in 0..e {
            for m in i..c.len() {
                let prev = c[m - i].clone();
                c[m] += prev;
            }
        }
        Self::new(c)
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Smallest degree where the two series differ, over their common range.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let d = self.order().min(other.order());
        (0..=d).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

/// Exact Taylor coefficients of `f` through degree `order`, by the linear
/// recurrence of the expanded denominator.
pub fn series_of(f: &FactoredRationalFunction, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_polynomial(&f.numerator, order).div_polynomial(&f.denominator.expand())
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(t^{})]", self.order() + 1)
    }
}

fn common_order(a: &TruncatedSeries, b: &TruncatedSeries) -> usize {
    a.order().min(b.order())
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = common_order(self, rhs);
        TruncatedSeries::new((0..=d).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect())
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = common_order(self, rhs);
        TruncatedSeries::new((0..=d).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = common_order(self, rhs);
        let mut out = vec![ExactRational::zero(); d + 1];
        for i in 0..=d {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=d - i {
                out[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        TruncatedSeries::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FactoredDenominator;
    use proptest::prelude::*;

    #[test]
    fn closed_form_two_by_two_expansion() {
        let f = FactoredRationalFunction::new(
            DensePolynomial::one(),
            FactoredDenominator::new([(1, 2), (2, 3)]),
        );
        assert_eq!(series_of(&f, 4), TruncatedSeries::from_ints(&[1, 2, 6, 10, 20]));
    }

    #[test]
    fn trivial_expansions() {
        let geo = FactoredRationalFunction::new(
            DensePolynomial::one(),
            FactoredDenominator::new([(1, 1)]),
        );
        assert_eq!(series_of(&geo, 3), TruncatedSeries::from_ints(&[1, 1, 1, 1]));
        let cancel = FactoredRationalFunction::new(
            DensePolynomial::from_ints(&[1, -1]),
            FactoredDenominator::new([(1, 1)]),
        );
        assert_eq!(series_of(&cancel, 2), TruncatedSeries::from_ints(&[1, 0, 0]));
    }

    #[test]
    fn prefix_sum_division_matches_general_division() {
        let s = TruncatedSeries::from_ints(&[1, 3, -2, 5, 0, 7, 1]);
        let p = DensePolynomial::one_minus_t_pow(2).pow(3);
        assert_eq!(s.div_one_minus_t_pow(2, 3), s.div_polynomial(&p));
        assert_eq!(s.div_polynomial(&p).mul_polynomial(&p), s);
    }

    /// Schoolbook long division of `num` by `den` in ascending powers; the
    /// oracle for the recurrence path.
    fn long_division(num: &DensePolynomial, den: &DensePolynomial, order: usize) -> Vec<ExactRational> {
        let mut rem: Vec<ExactRational> = (0..=order + den.coeffs().len()).map(|i| num.coeff(i)).collect();
        let d0 = den.coeff(0);
        let mut quot = Vec::new();
        for m in 0..=order {
            let q = &rem[m] / &d0;
            for (j, c) in den.coeffs().iter().enumerate() {
                if m + j < rem.len() {
                    rem[m + j] -= &q * c;
                }
            }
            quot.push(q);
        }
        quot
    }

    proptest! {
        #[test]
        fn recurrence_agrees_with_long_division(
            num in proptest::collection::vec(-9i64..9, 0..6),
            exps in proptest::collection::vec(0u32..3, 1..4),
            order in 0usize..30,
        ) {
            let f = FactoredRationalFunction::new(
                DensePolynomial::from_ints(&num),
                FactoredDenominator::new(exps.iter().enumerate().map(|(i, &e)| (i + 1, e))),
            );
            let expected = long_division(&f.numerator, &f.denominator.expand(), order);
            let got = series_of(&f, order);
            prop_assert_eq!(got.coeffs(), &expected[..]);
        }
    }
}
