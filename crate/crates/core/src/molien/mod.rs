//! Constant-term evaluation of the one-variable Molien–Weyl integrals for the
//! pure and mixed trace rings, and rational reconstruction of the result.
//!
//! The integrand has total degree 0 in the `z` variables, so one of them is
//! pinned to 1 and the torus integral becomes the `z`-constant term of a
//! Laurent series in `n - 1` variables:
//!
//! ```text
//! P(t) = 1/n! * CT_z [ num(z) * prod_{i != j} (1 - t z_i/z_j)^{-k} ] * (1 - t)^{-nk}
//! ```
//!
//! where `num(z) = prod_{i != j} (1 - z_i/z_j)`, times `sum_{i,j} z_i/z_j` for
//! the mixed ring. The diagonal factors `i = j` are the scalar `(1 - t)^{-nk}`.

mod engine;
mod laurent;
mod reconstruct;
mod shortcut;

use core::fmt;

pub use engine::{molien_series, molien_series_with, FoldStrategy, MolienOptions};
pub use laurent::{expand_geometric_factor, Exponent, LaurentTable, Pruning};
pub use reconstruct::{
    reconstruct, reconstruct_numerator, reconstruct_proper, reconstruct_with_margin,
    DEFAULT_GUARD_MARGIN,
};
pub use shortcut::two_by_two_series;

use crate::Error;

/// Bumped whenever the engine's output could change; part of every cache key.
pub const ENGINE_VERSION: u32 = 1;

/// Pure trace ring (matrix invariants) or mixed trace ring (concomitants).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    PureTrace,
    MixedTrace,
}

impl Ring {
    pub fn as_str(self) -> &'static str {
        match self {
            Ring::PureTrace => "pure",
            Ring::MixedTrace => "mixed",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `k` generic `n x n` matrices and which trace ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProblemSpec {
    n: usize,
    k: usize,
    ring: Ring,
}

impl ProblemSpec {
    pub fn new(n: usize, k: usize, ring: Ring) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::InvalidProblem("matrix size n must be at least 1"));
        }
        if k < 2 {
            return Err(Error::InvalidProblem("number of matrices k must be at least 2"));
        }
        Ok(Self { n, k, ring })
    }

    pub fn pure(n: usize, k: usize) -> Self {
        Self::new(n, k, Ring::PureTrace).expect("valid problem")
    }

    pub fn mixed(n: usize, k: usize) -> Self {
        Self::new(n, k, Ring::MixedTrace).expect("valid problem")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// `k n^2`, the shift in the functional equation.
    pub fn functional_degree(&self) -> usize {
        self.k * self.n * self.n
    }

    /// `(k - 1) n^2 + 1`, the order of the pole at `t = 1`.
    pub fn pole_order(&self) -> usize {
        (self.k - 1) * self.n * self.n + 1
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={}, {})", self.n, self.k, self.ring)
    }
}
