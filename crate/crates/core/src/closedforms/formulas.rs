use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::{
    binomial, factorial, falling_factorial, rising_factorial, to_rational, DensePolynomial,
    ExactRational, FactoredDenominator, FactoredRationalFunction,
};
use crate::Error;

fn require_k(k: usize, min: usize) -> Result<(), Error> {
    if k < min {
        Err(Error::InvalidProblem(if min == 2 {
            "this formula needs k >= 2"
        } else {
            "this formula needs k >= 3"
        }))
    } else {
        Ok(())
    }
}

fn t() -> DensePolynomial {
    DensePolynomial::from_ints(&[0, 1])
}

/// `(1 - t)^{2k-2} (1 - t^2)^{2k-1}`, the least denominator of the pure
/// `2 x 2` series.
pub fn pure_denominator(k: usize) -> FactoredDenominator {
    FactoredDenominator::new([(1, 2 * k as u32 - 2), (2, 2 * k as u32 - 1)])
}

/// `(1 - t)^{2k} (1 - t^2)^{2k-3}`, the least denominator of the mixed
/// `2 x 2` series for `k >= 3`.
pub fn mixed_denominator(k: usize) -> FactoredDenominator {
    FactoredDenominator::new([(1, 2 * k as u32), (2, (2 * k as u32).saturating_sub(3))])
}

/// `(1 - t)^{2k} (1 - t^2)^{2k-1}`, the common denominator every raw n = 2
/// pure formula lands on before the final `(1 - t)^2` cancels.
fn raw_pure_denominator(k: usize) -> FactoredDenominator {
    FactoredDenominator::new([(1, 2 * k as u32), (2, 2 * k as u32 - 1)])
}

/// Polynomial in `z` whose coefficients are polynomials in `t`; entry `j` is
/// the coefficient of `z^j`.
#[derive(Clone, Debug)]
struct ZPoly(Vec<DensePolynomial>);

impl ZPoly {
    /// `d/dz`.
    fn dz(&self) -> Self {
        ZPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&to_rational(j as u64)))
                .collect(),
        )
    }

    /// Multiplies by `c(t) * z^s`.
    fn mul_term(&self, c: &DensePolynomial, s: usize) -> Self {
        let mut out = alloc::vec![DensePolynomial::zero(); s];
        out.extend(self.0.iter().map(|x| x * c));
        ZPoly(out)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Self, j: usize| p.0.get(j).cloned().unwrap_or_default();
        ZPoly((0..n).map(|j| &get(self, j) - &get(other, j)).collect())
    }

    /// Substitutes `z = t`.
    fn at_z_equals_t(&self) -> DensePolynomial {
        self.0
            .iter()
            .enumerate()
            .fold(DensePolynomial::zero(), |acc, (j, c)| &acc + &c.shift(j))
    }
}

/// Teranishi's formula for `P(C(2,k))`:
///
/// ```text
/// (-1)^{k-1} / (2 (k-1)! (1-t)^{2k}) * (d/dz)^{k-1} [ z^{k-2} (z-1)^2 / (tz-1)^k ] at z = t
/// ```
///
/// The derivative is taken symbolically on `P(z,t) / (tz - 1)^m`, using
/// `d/dz (P / (tz-1)^m) = (P_z (tz-1) - m t P) / (tz-1)^{m+1}`. The result is
/// returned over [`pure_denominator`].
pub fn teranishi_c2k(k: usize) -> Result<FactoredRationalFunction, Error> {
    require_k(k, 2)?;
    // z^{k-2} (z - 1)^2 = z^k - 2 z^{k-1} + z^{k-2}
    let mut p = ZPoly(alloc::vec![DensePolynomial::zero(); k + 1]);
    p.0[k - 2] = DensePolynomial::one();
    p.0[k - 1] = DensePolynomial::from_ints(&[-2]);
    p.0[k] = DensePolynomial::one();
    let mut m = k;
    for _ in 0..k - 1 {
        let pz = p.dz();
        let times_tz_minus_1 = pz.mul_term(&t(), 1).sub(&pz);
        p = times_tz_minus_1.sub(&p.mul_term(&t().scale(&to_rational(m as u64)), 0));
        m += 1;
    }
    // (tz - 1)^m at z = t is (t^2 - 1)^{2k-1} = -(1 - t^2)^{2k-1}
    debug_assert_eq!(m, 2 * k - 1);
    let q = p.at_z_equals_t();
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let scale = ExactRational::new(BigInt::from(sign), BigInt::from(2) * factorial(k as u64 - 1));
    FactoredRationalFunction::new(q.scale(&scale), raw_pure_denominator(k)).rebase(&pure_denominator(k))
}

/// The double-residue sum for `P(C(2,k))`: over `a + b + c = k - 1`, `b <= 2`,
///
/// ```text
/// -(k-2)_a (2)_b k^(c) / (2 a! b! c!) * t^{k-2-a+c} (t-1)^{2-b} (1-t^2)^{-k-c}
/// ```
///
/// all times `(1 - t)^{-2k}`, with falling factorials `(n)_a` and rising
/// factorials `n^(c)`. Returned over [`pure_denominator`].
pub fn thm21_sum(k: usize) -> Result<FactoredRationalFunction, Error> {
    require_k(k, 2)?;
    let mut num = DensePolynomial::zero();
    let t_minus_1 = DensePolynomial::from_ints(&[-1, 1]);
    let one_minus_t2 = DensePolynomial::one_minus_t_pow(2);
    for b in 0..=2usize.min(k - 1) {
        for a in 0..=k - 1 - b {
            let c = k - 1 - a - b;
            let top = falling_factorial(k as i64 - 2, a as u64)
                * falling_factorial(2, b as u64)
                * rising_factorial(k as i64, c as u64);
            if top.is_zero() {
                continue;
            }
            let bottom = BigInt::from(2) * factorial(a as u64) * factorial(b as u64) * factorial(c as u64);
            let coef = -ExactRational::new(top, bottom);
            let t_exp = k + c - 2 - a;
            // over the common (1 - t^2)^{2k-1}, the term keeps (1 - t^2)^{k-1-c}
            let term = &(&DensePolynomial::monomial(coef, t_exp) * &t_minus_1.pow((2 - b) as u32))
                * &one_minus_t2.pow((k - 1 - c) as u32);
            num = &num + &term;
        }
    }
    FactoredRationalFunction::new(num, raw_pure_denominator(k)).rebase(&pure_denominator(k))
}

/// `sum C(k-2,i)^2 t^{2i} - sum C(k-2,i) C(k-2,i+1) t^{2i+1}` over
/// [`pure_denominator`].
pub fn c2k_closed(k: usize) -> Result<FactoredRationalFunction, Error> {
    require_k(k, 2)?;
    Ok(FactoredRationalFunction::new(pure_numerator(k), pure_denominator(k)))
}

pub(crate) fn pure_numerator(k: usize) -> DensePolynomial {
    let m = k as i64 - 2;
    let mut c = Vec::new();
    for i in 0..=m {
        c.push(ExactRational::from_integer(binomial(m, i).pow(2)));
        c.push(ExactRational::from_integer(-(binomial(m, i) * binomial(m, i + 1))));
    }
    DensePolynomial::new(c)
}

/// Narayana numerator `sum C(k-2,i) C(k-2,i+1) / (k-2) t^{2i}` over
/// [`mixed_denominator`]; needs `k >= 3`.
pub fn r2k_closed(k: usize) -> Result<FactoredRationalFunction, Error> {
    require_k(k, 3)?;
    Ok(FactoredRationalFunction::new(mixed_numerator(k), mixed_denominator(k)))
}

pub(crate) fn mixed_numerator(k: usize) -> DensePolynomial {
    let m = k as i64 - 2;
    let mut c = Vec::new();
    for i in 0..m {
        c.push(ExactRational::new(binomial(m, i) * binomial(m, i + 1), BigInt::from(m)));
        c.push(ExactRational::zero());
    }
    DensePolynomial::new(c)
}

/// The unreduced form `(sum C(k-1,i)^2 t^{2i} - sum C(k,i+1) C(k-2,i) t^{2i+1})`
/// over `(1 - t)^{2k} (1 - t^2)^{2k-1}`.
pub fn eq7_unreduced(k: usize) -> Result<FactoredRationalFunction, Error> {
    require_k(k, 2)?;
    let k = k as i64;
    let mut c = Vec::new();
    for i in 0..=k {
        c.push(ExactRational::from_integer(binomial(k - 1, i).pow(2)));
        c.push(ExactRational::from_integer(-(binomial(k, i + 1) * binomial(k - 2, i))));
    }
    Ok(FactoredRationalFunction::new(
        DensePolynomial::new(c),
        raw_pure_denominator(k as usize),
    ))
}

/// `N(1)` where `N` is a numerator over [`pure_denominator`] or
/// [`mixed_denominator`].
pub fn numerator_at_one(f: &FactoredRationalFunction) -> ExactRational {
    f.numerator.eval(&ExactRational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::catalan;

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_ints(c)
    }

    #[test]
    fn teranishi_small_cases() {
        assert_eq!(teranishi_c2k(2).unwrap().numerator, p(&[1]));
        assert_eq!(teranishi_c2k(3).unwrap().numerator, p(&[1, -1, 1]));
        assert_eq!(teranishi_c2k(5).unwrap().numerator, p(&[1, -3, 9, -9, 9, -3, 1]));
        assert_eq!(teranishi_c2k(5).unwrap().denominator, pure_denominator(5));
    }

    #[test]
    fn residue_sum_small_cases() {
        assert_eq!(thm21_sum(2).unwrap(), teranishi_c2k(2).unwrap());
        let f = thm21_sum(3).unwrap();
        assert_eq!(f.numerator, p(&[1, -1, 1]));
        assert_eq!(f.denominator, FactoredDenominator::new([(1, 4), (2, 5)]));
        assert_eq!(
            thm21_sum(8).unwrap().numerator,
            p(&[1, -6, 36, -90, 225, -300, 400, -300, 225, -90, 36, -6, 1])
        );
    }

    #[test]
    fn binomial_closed_forms() {
        assert_eq!(c2k_closed(2).unwrap().numerator, p(&[1]));
        assert_eq!(c2k_closed(4).unwrap().numerator, p(&[1, -2, 4, -2, 1]));
        assert_eq!(c2k_closed(6).unwrap().numerator, p(&[1, -4, 16, -24, 36, -24, 16, -4, 1]));
        assert_eq!(r2k_closed(3).unwrap().numerator, p(&[1]));
        assert_eq!(r2k_closed(6).unwrap().numerator, p(&[1, 0, 6, 0, 6, 0, 1]));
        assert_eq!(
            r2k_closed(9).unwrap().numerator,
            p(&[1, 0, 21, 0, 105, 0, 175, 0, 105, 0, 21, 0, 1])
        );
        assert!(r2k_closed(2).is_err());
        assert!(c2k_closed(1).is_err());
    }

    #[test]
    fn all_pure_routes_agree() {
        for k in 2..=8 {
            let closed = c2k_closed(k).unwrap();
            assert_eq!(teranishi_c2k(k).unwrap(), closed, "teranishi k = {k}");
            assert_eq!(thm21_sum(k).unwrap(), closed, "residue sum k = {k}");
        }
    }

    #[test]
    fn unreduced_form_carries_one_minus_t_squared() {
        for k in 2..=12 {
            let raw = eq7_unreduced(k).unwrap();
            let expected = &pure_numerator(k) * &p(&[1, -2, 1]);
            assert_eq!(raw.numerator, expected, "k = {k}");
        }
    }

    #[test]
    fn numerators_at_one_are_catalan() {
        for k in 3..=12 {
            let cat = ExactRational::from_integer(catalan(k as u64 - 2));
            assert_eq!(numerator_at_one(&c2k_closed(k).unwrap()), cat);
            assert_eq!(numerator_at_one(&r2k_closed(k).unwrap()), cat);
        }
        assert_eq!(numerator_at_one(&c2k_closed(2).unwrap()), ExactRational::one());
    }
}
