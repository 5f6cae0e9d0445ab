//! Cyclotomic polynomials and denominators of the form `prod (1 - t^i)^e_i`.
//!
//! Sign convention: `cyclotomic(d)` is the monic `phi_d`, so `phi_1 = t - 1`.
//! Denominators are normalized to constant term 1, which means the factor
//! attached to `d = 1` is `1 - t = -phi_1` (see [`cyclotomic_factor`]). With that
//! choice `1 - t^i = prod_{d | i} cyclotomic_factor(d)` holds with no stray sign.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::poly::DensePolynomial;
use crate::Error;

/// Monic `phi_d`, computed as `(t^d - 1) / prod_{e | d, e < d} phi_e`.
pub fn cyclotomic(d: usize) -> DensePolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut num = -DensePolynomial::one_minus_t_pow(d);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = num
            .exact_div(&cyclotomic(e))
            .expect("phi_e divides t^d - 1 for every proper divisor e");
    }
    num
}

/// `1 - t` for `d = 1`, otherwise `phi_d`: the factor with constant term 1.
pub fn cyclotomic_factor(d: usize) -> DensePolynomial {
    if d == 1 {
        DensePolynomial::one_minus_t_pow(1)
    } else {
        cyclotomic(d)
    }
}

/// Euler's totient, the degree of `phi_d`.
pub fn totient(d: usize) -> usize {
    (1..=d).filter(|&j| gcd(j, d) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `prod_i (1 - t^i)^exps[i]`. Zero exponents are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredDenominator {
    exps: BTreeMap<usize, u32>,
}

impl FactoredDenominator {
    pub fn new<I: IntoIterator<Item = (usize, u32)>>(exps: I) -> Self {
        let mut out = Self::default();
        for (i, e) in exps {
            out.add(i, e);
        }
        out
    }

    pub fn one() -> Self {
        Self::default()
    }

    fn add(&mut self, i: usize, e: u32) {
        assert!(i >= 1, "factor index must be positive");
        if e > 0 {
            *self.exps.entry(i).or_insert(0) += e;
        }
    }

    /// Exponent of `(1 - t^i)`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|(&i, &e)| (i, e))
    }

    /// Largest `i` with a nonzero exponent, 0 for the empty product.
    pub fn n_max(&self) -> usize {
        self.exps.keys().next_back().copied().unwrap_or(0)
    }

    /// `sum_i i * e_i`.
    pub fn degree(&self) -> usize {
        self.iter().map(|(i, e)| i * e as usize).sum()
    }

    /// Order of the pole at `t = 1`, `sum_i e_i`.
    pub fn total_exponent(&self) -> usize {
        self.iter().map(|(_, e)| e as usize).sum()
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, e) in other.iter() {
            out.add(i, e);
        }
        out
    }

    pub fn expand(&self) -> DensePolynomial {
        self.iter().fold(DensePolynomial::one(), |acc, (i, e)| {
            &acc * &DensePolynomial::one_minus_t_pow(i).pow(e)
        })
    }

    pub fn to_cyclotomic(&self) -> CyclotomicExponents {
        den_to_cyclotomic(self)
    }
}

/// Renders `(1 - t)^2 (1 - t^2)^3`; the empty product renders as `1`.
impl fmt::Display for FactoredDenominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (n, (i, e)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            match i {
                1 => f.write_str("(1 - t)")?,
                _ => write!(f, "(1 - t^{i})")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exponents `e_d` of `cyclotomic_factor(d)`; the canonical comparison key for
/// denominators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicExponents {
    exps: BTreeMap<usize, u32>,
}

impl CyclotomicExponents {
    pub fn new<I: IntoIterator<Item = (usize, u32)>>(exps: I) -> Self {
        let mut out = Self::default();
        for (d, e) in exps {
            assert!(d >= 1, "cyclotomic index must be positive");
            if e > 0 {
                *out.exps.entry(d).or_insert(0) += e;
            }
        }
        out
    }

    pub fn exponent(&self, d: usize) -> u32 {
        self.exps.get(&d).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|(&d, &e)| (d, e))
    }

    pub fn max_index(&self) -> usize {
        self.exps.keys().next_back().copied().unwrap_or(0)
    }

    /// Returns a copy with `e_d` replaced.
    pub fn with_exponent(&self, d: usize, e: u32) -> Self {
        let mut out = self.clone();
        if e == 0 {
            out.exps.remove(&d);
        } else {
            out.exps.insert(d, e);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.iter().map(|(d, e)| totient(d) * e as usize).sum()
    }

    /// `prod_d cyclotomic_factor(d)^e_d`, constant term 1.
    pub fn expand(&self) -> DensePolynomial {
        self.iter().fold(DensePolynomial::one(), |acc, (d, e)| {
            &acc * &cyclotomic_factor(d).pow(e)
        })
    }

    /// Indices at which the two vectors differ, with both exponents.
    pub fn diff(&self, other: &Self) -> Vec<(usize, u32, u32)> {
        let top = self.max_index().max(other.max_index());
        (1..=top)
            .filter_map(|d| {
                let (a, b) = (self.exponent(d), other.exponent(d));
                (a != b).then_some((d, a, b))
            })
            .collect()
    }

    pub fn to_product_form(&self) -> Result<FactoredDenominator, Error> {
        cyclotomic_to_den(self)
    }
}

/// Renders `phi_1^5 phi_2^3`.
impl fmt::Display for CyclotomicExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (n, (d, e)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "phi_{d}^{e}")?;
        }
        Ok(())
    }
}

/// `e_d = sum_{d | i} exps(i)`.
pub fn den_to_cyclotomic(den: &FactoredDenominator) -> CyclotomicExponents {
    let mut out = BTreeMap::new();
    for (i, e) in den.iter() {
        for d in (1..=i).filter(|d| i % d == 0) {
            *out.entry(d).or_insert(0) += e;
        }
    }
    CyclotomicExponents::new(out)
}

/// Inverse of [`den_to_cyclotomic`], peeling off factors from the largest index
/// down. The decomposition is unique when it exists.
pub fn cyclotomic_to_den(cyc: &CyclotomicExponents) -> Result<FactoredDenominator, Error> {
    let top = cyc.max_index();
    let mut exps = alloc::vec![0i64; top + 1];
    for i in (1..=top).rev() {
        let used: i64 = (2 * i..=top).step_by(i).map(|j| exps[j]).sum();
        let e = i64::from(cyc.exponent(i)) - used;
        if e < 0 {
            return Err(Error::NoProductForm { index: i });
        }
        exps[i] = e;
    }
    Ok(FactoredDenominator::new(
        exps.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &e)| (i, e as u32)),
    ))
}
