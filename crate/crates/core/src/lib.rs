//! Exact arithmetic for the one-variable Poincaré series of the pure and mixed
//! trace rings of `k` generic `n x n` matrices.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure functions:
//!
//! - [`exactmath`]: rationals, dense polynomials, cyclotomic bookkeeping,
//!   factored denominators and truncated power series.
//! - [`molien`]: constant-term evaluation of the Molien–Weyl integrals and
//!   rational reconstruction over a candidate denominator.
//! - [`closedforms`]: the explicit `n = 2` formulas and the identities and
//!   recurrences relating them.
//! - [`denomconj`]: conjectured least denominators for arbitrary `(n, k)`.
//! - [`verify`]: functional equation, pole order, leastness and asymptotic
//!   checks that every computed series must pass.
//!
//! IO, the command-line driver, fixtures and report formats live in the
//! `trace-poincare` companion crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod closedforms;
pub mod denomconj;
pub mod error;
pub mod exactmath;
pub mod molien;
pub mod verify;

pub use error::Error;
pub use exactmath::{
    CyclotomicExponents, DensePolynomial, ExactRational, FactoredDenominator,
    FactoredRationalFunction, TruncatedSeries,
};
pub use molien::{ProblemSpec, Ring};
