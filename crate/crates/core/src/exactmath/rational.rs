use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// Reduced fraction with a positive denominator; zero is `0/1`.
pub type ExactRational = BigRational;

pub fn to_rational<T: Into<BigInt>>(v: T) -> ExactRational {
    BigRational::from_integer(v.into())
}

/// `C(n, k)`, zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(n)_a = n (n - 1) ... (n - a + 1)`.
pub fn falling_factorial(n: i64, a: u64) -> BigInt {
    (0..a as i64).fold(BigInt::one(), |acc, i| acc * (n - i))
}

/// `n^(a) = n (n + 1) ... (n + a - 1)`.
pub fn rising_factorial(n: i64, a: u64) -> BigInt {
    (0..a as i64).fold(BigInt::one(), |acc, i| acc * (n + i))
}

/// `C_m = C(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> BigInt {
    binomial(2 * m as i64, m as i64) / (m + 1)
}

/// Renders as `"num/den"`, the serialized coefficient form.
pub fn format_rational(q: &ExactRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"num/den"` or a bare integer; the result is reduced.
pub fn parse_rational(s: &str) -> Result<ExactRational, Error> {
    let s = s.trim();
    let parse = |x: &str| x.trim().parse::<BigInt>().map_err(|_| Error::ParseRational);
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d.is_zero() {
                return Err(Error::ParseRational);
            }
            Ok(BigRational::new(parse(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn factorials() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(2, 3), BigInt::zero());
        assert_eq!(rising_factorial(2, 3), BigInt::from(24));
        assert_eq!(factorial(6), BigInt::from(720));
        let cat: alloc::vec::Vec<_> = (0..8).map(catalan).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from));
    }

    #[test]
    fn rational_text_form() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(parse_rational("7").unwrap(), to_rational(7));
        assert_eq!(format_rational(&parse_rational("0/5").unwrap()), "0/1");
        assert_eq!(parse_rational("1/0"), Err(Error::ParseRational));
        assert_eq!(parse_rational("x/2"), Err(Error::ParseRational));
    }
}
