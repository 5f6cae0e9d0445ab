//! Library half of the `trace-poincare` binary: serialization, fixtures,
//! the on-disk series cache, verification suites and the denominator scan.

pub mod cache;
pub mod compute;
pub mod fixtures;
pub mod format;
pub mod report;
pub mod scan;
pub mod suites;

pub use report::{Check, Report, Status};
