//! Exact scalar, polynomial, series and determinant kernels.
//!
//! Everything here works over `Q`. Values are immutable once built and
//! carry no interior mutability, so they can be shared freely across threads.

mod bareiss;
mod param_poly;
mod rational;
mod series;
mod unipoly;

pub use bareiss::{bareiss_det, ExactRing};
pub use param_poly::ParamPoly;
pub use rational::{int, rat, rat_normalize, render, Rational};
pub use series::Series;
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    /// Every known coefficient is zero, so the leading term is unknown.
    #[error("cannot determine valuation: series is O(t^{known_to})")]
    UndeterminedValuation { known_to: i64 },
    #[error("coefficient of t^{requested} requested but series is only known mod t^{known_to}")]
    PrecisionExhausted { requested: i64, known_to: i64 },
    #[error("operation needs a finite precision but the series is exact and not a monomial")]
    UnboundedPrecision,
    #[error("not a square: {0}")]
    NotASquare(String),
}
