//! Explicit odd hyperelliptic curves `y^2 = f(x)` over `Q`.
//!
//! The linear systems studied are `V(i) = H^0(omega((i+1) P_inf))`, written
//! as `u * dx/y` for monomials `u = x^a y^b`. Ramification is computed two
//! ways: order sequences from local expansions at every branch place and at
//! infinity, and the affine Wronskian, whose principal divisor accounts
//! for the ordinary affine places without locating them.

mod function;
mod local;
mod model;
mod orders;
mod torsion;
mod weights;

pub use function::CurveFunction;
pub use local::{expand_at, local_coordinates, Expandable, LocalCoordinates};
pub use model::{rational_roots, HyperellipticModel, Place};
pub use orders::{
    build_basis, order_sequence_at, Monomial, MonomialBasis, OrderSequence, PrecisionPolicy,
};
pub use torsion::{
    division_polynomial, torsion_check, torsion_comparison, DivisionPolynomial, TorsionComparison,
};
pub use weights::{
    affine_wronskian, branch_orders, function_order, infinity_order, total_weight,
    wronskian_matrix, ConjugateBranches, PlaceWeight, WeightReport,
};

use thiserror::Error;

use crate::numeric::NumericError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("f must have odd degree, got degree {0}")]
    EvenDegree(usize),
    #[error("f must have degree at least 3, got degree {0}")]
    DegreeTooSmall(usize),
    #[error("f must be monic")]
    NotMonic,
    #[error("f is not squarefree")]
    NotSquarefree,
    #[error("f does not split over Q; exact weight bookkeeping needs every branch point rational")]
    NotSplit,
    #[error("place {0} is not on the curve")]
    NotOnCurve(String),
    #[error("expansions inconclusive up to the precision cap of {cap} coefficients")]
    Inconclusive { cap: usize },
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),
    #[error("the wronskian vanishes identically")]
    DegenerateWronskian,
    #[error("weight bookkeeping is inconsistent: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}
