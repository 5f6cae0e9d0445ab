use alloc::collections::VecDeque;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{
    binomial, cyclotomic, factorial, DensePolynomial, ExactRational,
    FactoredDenominator, FactoredRationalFunction,
};
use crate::Error;

/// `c_m ~ a * C(m + d - 1, d - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticEstimate {
    /// Pole order at `t = 1`, plus one for partial sums.
    pub d: usize,
    pub a: ExactRational,
    pub partial_sums: bool,
}

impl AsymptoticEstimate {
    pub fn estimate(&self, m: usize) -> ExactRational {
        &self.a * ExactRational::from_integer(binomial((m + self.d - 1) as i64, self.d as i64 - 1))
    }

    /// The constant in front of `m^{d-1}`, i.e. `a / (d - 1)!`.
    pub fn power_constant(&self) -> ExactRational {
        &self.a / ExactRational::from_integer(factorial(self.d as u64 - 1))
    }
}

fn exact_div_one_minus_t(p: &DensePolynomial, times: usize) -> DensePolynomial {
    p.exact_div(&DensePolynomial::one_minus_t_pow(1).pow(times as u32))
        .expect("the multiplicity of the root 1 was counted on this polynomial")
}

/// Leading asymptotics of the coefficients of `f` (or of their partial sums).
///
/// Writing `f = f*(t) / ((1 - t)^d g(t))` with `f*(1) != 0` and
/// `g = prod_{d >= 2} phi_d^{e_d}`, the constant is `f*(1) / g(1)`. Every other
/// pole must have order strictly below `d`.
pub fn asymptotics(f: &FactoredRationalFunction, partial_sums: bool) -> Result<AsymptoticEstimate, Error> {
    if f.numerator.is_zero() {
        return Err(Error::InvalidProblem("the zero function has no asymptotics"));
    }
    let cyc = f.cyclotomic_denominator();
    let m1 = f.numerator.root_one_multiplicity();
    let at_one = cyc.exponent(1) as i64 - m1 as i64;
    if at_one <= 0 {
        return Err(Error::InvalidProblem("no pole at t = 1"));
    }
    let d = at_one as usize + usize::from(partial_sums);
    for (root, e) in cyc.iter().filter(|&(r, _)| r >= 2) {
        let order = e as i64 - f.numerator.multiplicity_of(&cyclotomic(root)) as i64;
        if order >= d as i64 {
            return Err(Error::DominanceViolated {
                root,
                order: order as usize,
                dominant: d,
            });
        }
    }
    let one = ExactRational::one();
    let f_star = exact_div_one_minus_t(&f.numerator, m1).eval(&one);
    let g1 = cyc
        .iter()
        .filter(|&(r, _)| r >= 2)
        .fold(ExactRational::one(), |acc, (r, e)| acc * cyclotomic(r).eval(&one).pow(e as i32));
    Ok(AsymptoticEstimate {
        d,
        a: f_star / g1,
        partial_sums,
    })
}

/// Exact `c_m` of `f` (or of its partial sums), by the integer recurrence of
/// the expanded denominator with a sliding window.
pub fn coefficient_at(f: &FactoredRationalFunction, m: usize, partial_sums: bool) -> ExactRational {
    let den = if partial_sums {
        f.denominator.times(&FactoredDenominator::new([(1, 1)]))
    } else {
        f.denominator.clone()
    };
    let den: Vec<BigInt> = den
        .expand()
        .integer_coeffs()
        .expect("products of (1 - t^i) have integer coefficients");
    let scale = f.numerator.denominator_lcm();
    let num: Vec<BigInt> = f
        .numerator
        .scale(&ExactRational::from_integer(scale.clone()))
        .integer_coeffs()
        .expect("scaled by the lcm of the coefficient denominators");
    let width = den.len().saturating_sub(1);
    // window holds x_{i-1}, x_{i-2}, ..., most recent first
    let mut window: VecDeque<BigInt> = VecDeque::with_capacity(width + 1);
    let mut x = BigInt::zero();
    for i in 0..=m {
        x = num.get(i).cloned().unwrap_or_default();
        for (j, dj) in den.iter().enumerate().skip(1) {
            if let Some(prev) = window.get(j - 1) {
                if !dj.is_zero() {
                    x -= dj * prev;
                }
            }
        }
        window.push_front(x.clone());
        window.truncate(width.max(1));
    }
    ExactRational::new(x, scale)
}

/// `c_m / (A C(m + d - 1, d - 1))`.
pub fn asymptotic_ratio_test(
    f: &FactoredRationalFunction,
    m: usize,
    partial_sums: bool,
) -> Result<ExactRational, Error> {
    if m < 1 {
        return Err(Error::InvalidProblem("the ratio test needs m >= 1"));
    }
    let est = asymptotics(f, partial_sums)?;
    Ok(coefficient_at(f, m, partial_sums) / est.estimate(m))
}

/// Whether `A / (d-1)!` times a stated denominator is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantDenominatorReport {
    /// The constant in front of `m^{d-1}`, in lowest terms.
    pub constant: ExactRational,
    pub stated_denominator: BigInt,
    pub divides: bool,
}

/// Compares the leading constant with
/// `[(k-1) n^2 (+1)]! * prod_j j^{profile(j)} * (prod_{2 <= j <= n} phi_j(1))^{(n-1)(k-1)}`;
/// `profile` holds the exponents of `(1 - t^j)`, `1 <= j <= n`.
pub fn constant_denominator_report(
    est: &AsymptoticEstimate,
    n: usize,
    k: usize,
    profile: &[(usize, u32)],
) -> ConstantDenominatorReport {
    let top = (k - 1) * n * n + usize::from(est.partial_sums);
    let mut stated = factorial(top as u64);
    for &(j, e) in profile {
        stated *= BigInt::from(j).pow(e);
    }
    let one = ExactRational::one();
    let phis = (2..=n).fold(BigInt::one(), |acc, j| acc * cyclotomic(j).eval(&one).to_integer());
    stated *= phis.pow(((n - 1) * (k - 1)) as u32);
    let constant = est.power_constant();
    let divides = stated.is_multiple_of(constant.denom())
        && !stated.is_zero()
        && !constant.numer().is_negative();
    ConstantDenominatorReport {
        constant,
        stated_denominator: stated,
        divides,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::{c2k_closed, r2k_closed};
    use crate::exactmath::{catalan, series_of};
    use num_traits::ToPrimitive;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn two_by_two_constants() {
        let e = asymptotics(&c2k_closed(2).unwrap(), false).unwrap();
        assert_eq!((e.d, e.a.clone()), (5, q(1, 8)));
        for k in 2..=8u32 {
            let cat = ExactRational::from_integer(catalan(k as u64 - 2));
            let pure = asymptotics(&c2k_closed(k as usize).unwrap(), false).unwrap();
            assert_eq!(pure.a, &cat / ExactRational::from_integer(BigInt::from(2).pow(2 * k - 1)));
            assert_eq!(pure.d, 4 * k as usize - 3);
            if k >= 3 {
                let mixed = asymptotics(&r2k_closed(k as usize).unwrap(), false).unwrap();
                assert_eq!(mixed.a, &cat / ExactRational::from_integer(BigInt::from(2).pow(2 * k - 3)));
            }
        }
    }

    #[test]
    fn partial_sums_raise_the_order() {
        let e = asymptotics(&c2k_closed(3).unwrap(), true).unwrap();
        assert_eq!(e.d, 10);
        assert_eq!(e.a, q(1, 32));
    }

    #[test]
    fn dominance_is_strict() {
        // 1 / (1 - t^2)^2: the pole at -1 has the same order as the one at 1.
        let f = FactoredRationalFunction::new(DensePolynomial::one(), FactoredDenominator::new([(2, 2)]));
        assert_eq!(
            asymptotics(&f, false),
            Err(Error::DominanceViolated { root: 2, order: 2, dominant: 2 })
        );
        // with partial sums the pole at 1 wins
        assert_eq!(asymptotics(&f, true).unwrap().d, 3);
    }

    #[test]
    fn recurrence_coefficient_matches_series() {
        let f = r2k_closed(5).unwrap();
        let s = series_of(&f, 40);
        for m in [0, 1, 7, 40] {
            assert_eq!(&coefficient_at(&f, m, false), s.coeff(m));
        }
        let partial: ExactRational = s.coeffs().iter().sum();
        assert_eq!(coefficient_at(&f, 40, true), partial);
    }

    #[test]
    fn pure_pole_ratio_is_exact() {
        let f = FactoredRationalFunction::new(DensePolynomial::one(), FactoredDenominator::new([(1, 3)]));
        assert_eq!(asymptotic_ratio_test(&f, 100, false).unwrap(), ExactRational::one());
    }

    #[test]
    fn ratios_approach_one() {
        let r = asymptotic_ratio_test(&c2k_closed(2).unwrap(), 2000, false).unwrap();
        assert!((r.to_f64().unwrap() - 1.0).abs() < 0.01);
        let r = asymptotic_ratio_test(&c2k_closed(3).unwrap(), 5000, false).unwrap();
        assert!((r.to_f64().unwrap() - 1.0).abs() < 0.01);
    }

    #[test]
    fn stated_denominator_for_two_by_two() {
        for k in 2..=6usize {
            let f = c2k_closed(k).unwrap();
            let e = asymptotics(&f, false).unwrap();
            let alpha = [(1, 2 * k as u32 - 2), (2, k as u32)];
            assert!(constant_denominator_report(&e, 2, k, &alpha).divides, "k = {k}");
        }
    }
}
