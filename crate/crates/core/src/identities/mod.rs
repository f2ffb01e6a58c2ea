//! Binomial transforms, the forward difference operator, partial Bell
//! polynomials, and the exact sum rules and inverse relations satisfied by
//! Roman harmonic numbers and Stirling numbers.

mod bell;
mod inverse;
mod sum_rules;
mod transform;

pub use bell::{bell_partial, c_faa_di_bruno, BellKind};
pub use inverse::{inverse_relation_apply, Direction, InverseForm};
pub use sum_rules::{alternating_partial_extremes, order_series_value, sum_rule_residual, RuleParams, SumRule};
pub use transform::{binomial_transform, difference_apply};
