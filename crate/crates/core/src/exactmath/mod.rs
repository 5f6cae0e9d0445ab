//! Exact rational, polynomial, factored-denominator and power-series arithmetic.
//!
//! Nothing in here ever rounds. Polynomials are dense in `t`, denominators are
//! kept as exponent vectors over `(1 - t^i)` and compared through their
//! cyclotomic exponents.

mod cyclotomic;
mod poly;
mod ratfun;
mod rational;
mod series;

pub use cyclotomic::{
    cyclotomic, cyclotomic_factor, cyclotomic_to_den, den_to_cyclotomic, totient,
    CyclotomicExponents, FactoredDenominator,
};
pub use poly::{poly_arith, DensePolynomial, PolyOp, Sign};
pub use ratfun::{FactoredRationalFunction, RationalFunction};
pub use rational::{
    binomial, catalan, factorial, falling_factorial, format_rational, parse_rational,
    rising_factorial, to_rational, ExactRational,
};
pub use series::{series_of, TruncatedSeries};
