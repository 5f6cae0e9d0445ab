use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::{cyclotomic_factor, CyclotomicExponents, FactoredDenominator};
use super::poly::DensePolynomial;
use super::rational::ExactRational;
use super::series::{series_of, TruncatedSeries};
use crate::Error;

/// `numerator / prod (1 - t^i)^e_i`. Not necessarily in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredRationalFunction {
    pub numerator: DensePolynomial,
    pub denominator: FactoredDenominator,
}

impl FactoredRationalFunction {
    pub fn new(numerator: DensePolynomial, denominator: FactoredDenominator) -> Self {
        Self {
            numerator,
            denominator,
        }
    }

    pub fn series(&self, order: usize) -> TruncatedSeries {
        series_of(self, order)
    }

    pub fn cyclotomic_denominator(&self) -> CyclotomicExponents {
        self.denominator.to_cyclotomic()
    }

    /// Re-expresses the same function over `target`, multiplying or exactly
    /// dividing the numerator by cyclotomic factors as needed.
    pub fn rebase(&self, target: &FactoredDenominator) -> Result<Self, Error> {
        let cur = self.cyclotomic_denominator();
        let tgt = target.to_cyclotomic();
        let mut num = self.numerator.clone();
        for d in 1..=cur.max_index().max(tgt.max_index()) {
            let (have, want) = (cur.exponent(d), tgt.exponent(d));
            if want > have {
                num = &num * &cyclotomic_factor(d).pow(want - have);
            } else if have > want {
                num = num.exact_div(&cyclotomic_factor(d).pow(have - want))?;
            }
        }
        Ok(Self::new(num, target.clone()))
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator.expand() == &other.numerator * &self.denominator.expand()
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        RationalFunction::new(self.numerator.clone(), self.denominator.expand())
    }
}

impl fmt::Display for FactoredRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / [{}]", self.numerator, self.denominator)
    }
}

/// Quotient of two arbitrary polynomials. Only used for exact identity checks,
/// so nothing is ever reduced; equality cross-multiplies.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: DensePolynomial,
    pub den: DensePolynomial,
}

impl RationalFunction {
    pub fn new(num: DensePolynomial, den: DensePolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self { num, den }
    }

    pub fn polynomial(p: DensePolynomial) -> Self {
        Self::new(p, DensePolynomial::one())
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::new(-&self.num, self.den.clone())
    }
}
