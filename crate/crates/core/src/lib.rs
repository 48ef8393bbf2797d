//! Exact ramification computations: intersection numbers on `C x C` for
//! families of linear systems, and Wronskian weights on explicit curves.
//!
//! * [`numeric`]: rationals, parameter polynomials, truncated Laurent
//!   series, fraction-free determinants.
//! * [`chow`]: the intersection ring of `C x C` spanned by `K1, K2, Delta`.
//! * [`bundles`]: Chern classes of jet bundles, pushforwards and the
//!   rank-drop-one Porteous class.
//! * [`formulas`]: closed counting formulas in `(g, i)` and a certifier
//!   that checks engine values against them as polynomial identities.
//! * [`curves`]: explicit odd hyperelliptic curves, order sequences,
//!   Wronskians and ramification weights.

pub mod bundles;
pub mod chow;
pub mod curves;
pub mod formulas;
pub mod numeric;
