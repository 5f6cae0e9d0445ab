use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{to_rational, ExactRational};
use crate::Error;

/// Univariate polynomial in `t` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`; the highest stored coefficient is
/// nonzero, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePolynomial {
    coeffs: Vec<ExactRational>,
}

/// `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    ExactDiv,
}

pub fn poly_arith(
    a: &DensePolynomial,
    b: &DensePolynomial,
    op: PolyOp,
) -> Result<DensePolynomial, Error> {
    match op {
        PolyOp::Add => Ok(a + b),
        PolyOp::Sub => Ok(a - b),
        PolyOp::Mul => Ok(a * b),
        PolyOp::ExactDiv => a.exact_div(b),
    }
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        Self::new(coeffs.iter().cloned().map(to_rational).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^degree`.
    pub fn monomial(c: ExactRational, degree: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `1 - t^i`.
    pub fn one_minus_t_pow(i: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); i + 1];
        coeffs[0] = ExactRational::one();
        coeffs[i] -= ExactRational::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^m`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactRational::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * to_rational(i as u64))
                .collect(),
        )
    }

    /// `t^d * p(1/t)` for the given `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.degree().is_none_or(|deg| deg <= d));
        let mut coeffs = vec![ExactRational::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Returns `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), Error> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![ExactRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let q = top / lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn exact_div(&self, divisor: &Self) -> Result<Self, Error> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Largest `m` with `factor^m | self`. The zero polynomial reports 0.
    pub fn multiplicity_of(&self, factor: &Self) -> usize {
        assert!(factor.degree().is_some_and(|d| d > 0), "factor must be nonconstant");
        if self.is_zero() {
            return 0;
        }
        let mut m = 0;
        let mut cur = self.clone();
        while let Ok(q) = cur.exact_div(factor) {
            cur = q;
            m += 1;
        }
        m
    }

    /// Multiplicity of `t = 1` as a root.
    pub fn root_one_multiplicity(&self) -> usize {
        self.multiplicity_of(&Self::one_minus_t_pow(1))
    }

    /// `Some(s)` when `t^deg p(1/t) = s * p`.
    pub fn palindromic_sign(&self) -> Option<Sign> {
        let d = self.degree()?;
        let rev = self.reversed(d);
        if rev == *self {
            Some(Sign::Plus)
        } else if rev == -self {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    /// Only even powers of `t` carry nonzero coefficients.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Debug for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePolynomial({self})")
    }
}

/// Ascending powers, e.g. `1 - 2t + 4t^2`.
impl fmt::Display for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            if i == 0 || !unit {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;
    fn add(self, rhs: &DensePolynomial) -> DensePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &DensePolynomial {
    type Output = DensePolynomial;
    fn sub(self, rhs: &DensePolynomial) -> DensePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;
    fn mul(self, rhs: &DensePolynomial) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

impl Neg for &DensePolynomial {
    type Output = DensePolynomial;
    fn neg(self) -> DensePolynomial {
        DensePolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for DensePolynomial {
            type Output = DensePolynomial;
            fn $m(self, rhs: DensePolynomial) -> DensePolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for DensePolynomial {
    type Output = DensePolynomial;
    fn neg(self) -> DensePolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        let prod = poly_arith(&p(&[1, -1]), &p(&[1, 1]), PolyOp::Mul).unwrap();
        assert_eq!(prod, p(&[1, 0, -1]));
    }

    #[test]
    fn exact_division() {
        let q = poly_arith(&p(&[1, 0, 0, 0, -1]), &p(&[1, 0, -1]), PolyOp::ExactDiv).unwrap();
        assert_eq!(q, p(&[1, 0, 1]));
        let err = poly_arith(&p(&[1, 0, 0, -1]), &p(&[1, 0, -1]), PolyOp::ExactDiv);
        assert_eq!(err, Err(Error::NotDivisible));
        assert_eq!(p(&[1]).exact_div(&DensePolynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), DensePolynomial::zero());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[1, -2, 4, -2, 1]).to_string(), "1 - 2t + 4t^2 - 2t^3 + t^4");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(DensePolynomial::zero().to_string(), "0");
        let half = DensePolynomial::constant(ExactRational::new(1.into(), 2.into()));
        assert_eq!(half.shift(2).to_string(), "(1/2)t^2");
    }

    #[test]
    fn palindromes_and_roots() {
        assert_eq!(p(&[1, -1, 1]).palindromic_sign(), Some(Sign::Plus));
        assert_eq!(p(&[1, 0, -1]).palindromic_sign(), Some(Sign::Minus));
        assert_eq!(p(&[1, 2]).palindromic_sign(), None);
        assert_eq!(p(&[1, -2, 1]).root_one_multiplicity(), 2);
        assert_eq!(p(&[1, 1]).root_one_multiplicity(), 0);
        assert!(p(&[1, 0, 3, 0, 1]).is_even());
        assert!(!p(&[1, 1]).is_even());
    }

    #[test]
    fn reversal_and_eval() {
        assert_eq!(p(&[1, 2]).reversed(3), p(&[0, 0, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).eval(&to_rational(2)), to_rational(17));
        assert_eq!(p(&[5, 1, 1]).derivative(), p(&[1, 2]));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    fn small_poly() -> impl Strategy<Value = DensePolynomial> {
        proptest::collection::vec(-20i64..20, 0..7).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn div_rem_reassembles(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
            prop_assert_eq!(&(&q * &b) + &r, a);
        }
    }
}
