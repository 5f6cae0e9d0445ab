//! Explicit formulas for the `2 x 2` Poincaré series and the identities used
//! to prove them.
//!
//! Every pure formula lands on `(1 - t)^{2k-2} (1 - t^2)^{2k-1}` and every
//! mixed one on `(1 - t)^{2k} (1 - t^2)^{2k-3}`, so agreement between routes is
//! plain numerator equality.

mod formulas;
mod identities;

pub use formulas::{
    c2k_closed, eq7_unreduced, mixed_denominator, numerator_at_one, pure_denominator, r2k_closed,
    teranishi_c2k, thm21_sum,
};
pub use identities::{
    check_b_recurrence, check_operator_recurrences, verify_identity, Identity, IdentityReport,
    OperatorReport, ReadingCheck, RecurrenceCheck, RECURRENCE_ORDER,
};
