//! Exact Roman harmonic numbers and their companions.
//!
//! The Roman harmonic numbers `c_n^(k)` are defined for every integer degree
//! `n` and order `k >= 0`. This crate computes them exactly, together with
//! Stirling numbers of the first kind for negative first argument, Stirling
//! numbers of the second kind, generalized Bernoulli numbers, nested sums,
//! truncated generating series, binomial transforms, Bell polynomials and
//! derivatives of the Pochhammer symbol and its reciprocal. A floating-point
//! bridge checks the integral representations and analytic sum rules.
//!
//! Table-backed functions take a [`Tables`] handle holding the memo grids.
//!
//! ```
//! use rho_core::{harmonic::c, exact::rat, Tables};
//! let t = Tables::new();
//! assert_eq!(c(&t, 3, 2).unwrap(), rat(85, 36));
//! assert_eq!(c(&t, -3, 2).unwrap(), rat(-3, 2));
//! ```

pub mod error;
pub mod exact;
pub mod harmonic;
pub mod identities;
pub mod memo;
pub mod numeric;
pub mod output;
pub mod pochhammer;
pub mod series;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Int, Rational};
pub use memo::Tables;
