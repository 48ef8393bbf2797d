use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use super::local::expand_with;
use super::{
    build_basis, local_coordinates, order_sequence_at, CurveError, CurveFunction,
    HyperellipticModel, MonomialBasis, OrderSequence, Place, PrecisionPolicy,
};
use crate::numeric::{bareiss_det, UniPoly};

/// Matrix `[D_x^m u_k]` for `m, k = 0..r`, rows indexed by derivative order.
pub fn wronskian_matrix(
    model: &HyperellipticModel,
    basis: &MonomialBasis,
) -> Vec<Vec<CurveFunction>> {
    let n = basis.len();
    let mut rows: Vec<Vec<CurveFunction>> = Vec::with_capacity(n);
    rows.push(
        basis
            .elements
            .iter()
            .map(|m| m.to_function(model))
            .collect(),
    );
    for m in 1..n {
        let next = rows[m - 1].iter().map(CurveFunction::derivative).collect();
        rows.push(next);
    }
    rows
}

/// `det(D_x^m u_k)`. Where `x` is a local parameter and `dx/y` is a unit,
/// its order equals the ramification weight.
pub fn affine_wronskian(
    model: &HyperellipticModel,
    basis: &MonomialBasis,
) -> Result<CurveFunction, CurveError> {
    let w = bareiss_det(&wronskian_matrix(model, basis));
    if w.is_zero() {
        return Err(CurveError::DegenerateWronskian);
    }
    Ok(w)
}

/// Order of a nonzero function at a place, raising precision until the
/// leading term is visible.
pub fn function_order(
    model: &HyperellipticModel,
    fun: &CurveFunction,
    place: &Place,
    policy: &PrecisionPolicy,
) -> Result<i64, CurveError> {
    for precision in policy.schedule() {
        let lc = local_coordinates(model, place, precision)?;
        if let Ok(v) = expand_with(&lc, fun)?.valuation() {
            return Ok(v);
        }
    }
    Err(CurveError::Inconclusive { cap: policy.cap })
}

/// Order of `W = (a + b y)/d` at every branch place over a factor of `f`.
///
/// With `t = y` one has `ord(x - x0) = 2` and `ord(y) = 1`, so the two
/// summands have orders of different parity and never cancel. Roots are
/// grouped into factors of `f` on which `a`, `b`, `d` all have constant
/// valuation, so no root finding is needed.
pub fn branch_orders(
    model: &HyperellipticModel,
    w: &CurveFunction,
) -> Result<Vec<(UniPoly, i64)>, CurveError> {
    let mut classes = vec![(model.f().clone(), Vec::new())];
    for p in [w.a(), w.b(), w.denom()] {
        let mut next = Vec::new();
        for (h, vals) in classes {
            for (part, v) in valuation_classes(&h, p)? {
                let mut vals: Vec<Option<i64>> = vals.clone();
                vals.push(v);
                next.push((part, vals));
            }
        }
        classes = next;
    }
    let mut out = Vec::new();
    for (h, vals) in classes {
        let (va, vb, vd) = (vals[0], vals[1], vals[2].unwrap_or(0));
        let ord = match (va, vb) {
            (Some(a), Some(b)) => (2 * a).min(2 * b + 1),
            (Some(a), None) => 2 * a,
            (None, Some(b)) => 2 * b + 1,
            (None, None) => return Err(CurveError::DegenerateWronskian),
        };
        out.push((h, ord - 2 * vd));
    }
    out.sort_by(|l, r| l.1.cmp(&r.1).then_with(|| l.0.coeffs().cmp(r.0.coeffs())));
    Ok(out)
}

/// Splits a squarefree `h` into monic factors on whose roots `p` has a fixed
/// valuation (`None` when `p = 0`).
fn valuation_classes(h: &UniPoly, p: &UniPoly) -> Result<Vec<(UniPoly, Option<i64>)>, CurveError> {
    if p.is_zero() {
        return Ok(vec![(h.monic(), None)]);
    }
    let mut out = Vec::new();
    let mut rest = h.monic();
    let mut q = p.clone();
    let mut k = 0;
    while !rest.is_constant() {
        let c = q.gcd(&rest);
        let free = rest.exact_div(&c)?;
        if !free.is_constant() {
            out.push((free.monic(), Some(k)));
        }
        if c.is_constant() {
            break;
        }
        q = q.exact_div(&c)?;
        rest = c;
        k += 1;
    }
    Ok(out)
}

/// `ord_inf(W)`, from degrees alone: `ord(x) = -2`, `ord(y) = -(2g+1)`.
pub fn infinity_order(model: &HyperellipticModel, w: &CurveFunction) -> Result<i64, CurveError> {
    let g = model.genus();
    let deg = |p: &UniPoly| p.degree().map(|d| d as i64);
    let a = deg(w.a()).map(|d| -2 * d);
    let b = deg(w.b()).map(|d| -2 * d - (2 * g + 1));
    let num = match (a, b) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(CurveError::DegenerateWronskian),
    };
    Ok(num + 2 * deg(w.denom()).unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceWeight {
    pub place: Place,
    pub orders: OrderSequence,
}

/// Branch places over an irreducible factor of `f` of degree above one,
/// all sharing the same weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateBranches {
    pub factor: UniPoly,
    pub weight_each: i64,
}

impl ConjugateBranches {
    pub fn weight(&self) -> i64 {
        self.weight_each * self.factor.degree().unwrap_or(0) as i64
    }
}

/// Ramification of `V(i)`: located places with their order sequences,
/// irrational branch places in conjugate groups, and the aggregate weight of
/// the ordinary affine places.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub i: i64,
    pub genus: i64,
    pub entries: Vec<PlaceWeight>,
    pub conjugates: Vec<ConjugateBranches>,
    /// Weight carried by ordinary affine places, which are not located.
    pub remainder: i64,
    pub total: i64,
}

impl WeightReport {
    pub fn located(&self) -> i64 {
        self.entries.iter().map(|e| e.orders.weight()).sum()
    }

    pub fn weight_at(&self, place: &Place) -> Option<i64> {
        self.entries
            .iter()
            .find(|e| &e.place == place)
            .map(|e| e.orders.weight())
    }
}

impl fmt::Display for WeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "{}\torders {}\tweight {}",
                e.place,
                e.orders,
                e.orders.weight()
            )?;
        }
        for c in &self.conjugates {
            writeln!(f, "roots of {}\tweight {} each", c.factor, c.weight_each)?;
        }
        writeln!(f, "ordinary affine places\tweight {}", self.remainder)?;
        write!(f, "total\t{}", self.total)
    }
}

/// Total weight of `V(i)` with exact bookkeeping.
///
/// Rational branch places and infinity get order sequences. A branch place
/// has weight `ord(W) + N(N-1)/2` for `N` sections, since `dx/y` is a unit
/// there and `dx/dt` has a simple zero; this is checked against the order
/// sequence where one is computed and used alone at irrational branch
/// places. The ordinary affine places contribute `ord(W)` each, and since
/// `div(W)` has degree 0 their sum is `-ord_inf(W) - sum_branch ord(W)`.
pub fn total_weight(
    model: &HyperellipticModel,
    i: i64,
    policy: &PrecisionPolicy,
) -> Result<WeightReport, CurveError> {
    let basis = build_basis(model, i);
    let n = basis.len() as i64;
    let frame = n * (n - 1) / 2;
    let w = affine_wronskian(model, &basis)?;
    let branch = branch_orders(model, &w)?;
    let mut principal = infinity_order(model, &w)?;
    let mut entries = Vec::new();
    let mut conjugates = Vec::new();
    for (factor, ord) in &branch {
        principal += ord * factor.degree().unwrap_or(0) as i64;
        let mut irrational = factor.clone();
        for x0 in model.branch_x() {
            if irrational.eval(x0).is_zero() {
                irrational = irrational.exact_div(&UniPoly::linear_root(x0))?;
            }
        }
        if !irrational.is_constant() {
            conjugates.push(ConjugateBranches {
                factor: irrational,
                weight_each: ord + frame,
            });
        }
    }
    let (located, at_infinity) = rayon::join(
        || -> Vec<Result<PlaceWeight, CurveError>> {
            model
                .branch_x()
                .par_iter()
                .map(|x0| {
                    let ord = branch
                        .iter()
                        .find(|(h, _)| h.eval(x0).is_zero())
                        .map(|(_, o)| *o)
                        .ok_or_else(|| {
                            CurveError::Inconsistent(format!(
                                "branch point {} lies in no class",
                                crate::numeric::render(x0)
                            ))
                        })?;
                    let place = Place::Branch { x: x0.clone() };
                    let orders = order_sequence_at(model, &basis, &place, policy)?;
                    if orders.weight() != ord + frame {
                        return Err(CurveError::Inconsistent(format!(
                            "weight {} at {place} disagrees with ord(W) + {frame} = {}",
                            orders.weight(),
                            ord + frame
                        )));
                    }
                    Ok(PlaceWeight { place, orders })
                })
                .collect()
        },
        || order_sequence_at(model, &basis, &Place::Infinity, policy),
    );
    for entry in located {
        entries.push(entry?);
    }
    let orders = at_infinity?;
    entries.push(PlaceWeight {
        place: Place::Infinity,
        orders,
    });
    let remainder = -principal;
    if remainder < 0 {
        return Err(CurveError::Inconsistent(format!(
            "ordinary affine weight {remainder} is negative"
        )));
    }
    let total = entries.iter().map(|e| e.orders.weight()).sum::<i64>()
        + conjugates
            .iter()
            .map(ConjugateBranches::weight)
            .sum::<i64>()
        + remainder;
    Ok(WeightReport {
        i,
        genus: model.genus(),
        entries,
        conjugates,
        remainder,
        total,
    })
}
