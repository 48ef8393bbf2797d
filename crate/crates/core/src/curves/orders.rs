use std::fmt;

use num_traits::Zero;

use super::local::LocalCoordinates;
use super::{local_coordinates, CurveError, CurveFunction, HyperellipticModel, Place};
use crate::numeric::{Rational, Series};

/// `x^a y^b` with `b` in `{0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    /// Pole order at infinity, where `x` and `y` have poles of order 2 and `2g+1`.
    pub fn pole_order(&self, genus: i64) -> i64 {
        2 * self.a as i64 + (2 * genus + 1) * self.b as i64
    }

    pub fn to_function(&self, model: &HyperellipticModel) -> CurveFunction {
        CurveFunction::monomial(&model.f_shared(), self.a, self.b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = match self.a {
            0 => String::new(),
            1 => "x".into(),
            a => format!("x^{a}"),
        };
        match (x.is_empty(), self.b) {
            (true, 0) => write!(f, "1"),
            (true, _) => write!(f, "y"),
            (false, 0) => write!(f, "{x}"),
            (false, _) => write!(f, "{x}*y"),
        }
    }
}

/// Basis `u * dx/y` of `H^0(omega((i+1) P_inf))`, by increasing pole order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub i: i64,
    pub genus: i64,
    pub elements: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Monomials with `2a + (2g+1)b <= 2g + i - 1`; `div(dx/y) = (2g-2) P_inf`
/// makes these exactly the sections with at most an `(i+1)`-fold pole.
/// `i = -1` is the canonical system.
pub fn build_basis(model: &HyperellipticModel, i: i64) -> MonomialBasis {
    assert!(i >= -1, "build_basis: i must be at least -1");
    let g = model.genus();
    let bound = 2 * g + i - 1;
    let mut elements = Vec::new();
    for b in 0..=1u32 {
        let mut a = 0u32;
        loop {
            let m = Monomial { a, b };
            if m.pole_order(g) > bound {
                break;
            }
            elements.push(m);
            a += 1;
        }
    }
    elements.sort_by_key(|m| m.pole_order(g));
    MonomialBasis {
        i,
        genus: g,
        elements,
    }
}

/// Strictly increasing vanishing orders of a linear system at a place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSequence {
    orders: Vec<i64>,
}

impl OrderSequence {
    pub fn new(mut orders: Vec<i64>) -> Self {
        orders.sort_unstable();
        debug_assert!(orders.windows(2).all(|w| w[0] < w[1]));
        Self { orders }
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    /// `sum_j (orders[j] - j)`.
    pub fn weight(&self) -> i64 {
        self.orders
            .iter()
            .enumerate()
            .map(|(j, &e)| e - j as i64)
            .sum()
    }
}

impl fmt::Display for OrderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.orders.iter().map(i64::to_string).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// How many series coefficients to compute, and when to give up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub start: usize,
    pub cap: usize,
}

impl PrecisionPolicy {
    pub const DEFAULT_CAP: usize = 1 << 14;

    /// Start at `4 (g(g+i)^2 + 2g + 2)`, a multiple of the largest possible
    /// weight, and double up to `2^14`.
    pub fn for_system(genus: i64, i: i64) -> Self {
        let start = 4 * (genus * (genus + i) * (genus + i) + 2 * genus + 2);
        Self {
            start: start as usize,
            cap: Self::DEFAULT_CAP,
        }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        Self { cap, ..self }
    }

    /// Precisions to try, in order.
    pub fn schedule(&self) -> impl Iterator<Item = usize> + '_ {
        let first = self.start.min(self.cap).max(1);
        std::iter::successors(Some(first), move |&p| {
            (p < self.cap).then(|| (2 * p).min(self.cap))
        })
    }
}

/// Distinct valuations attained by the span of `series`, or `None` when the
/// precision is too low to separate them.
pub(crate) fn staircase_valuations(series: &[Series]) -> Option<Vec<i64>> {
    let known_to = series.iter().filter_map(Series::known_to).min()?;
    let low = series
        .iter()
        .map(|s| s.valuation().unwrap_or(known_to))
        .min()?
        .min(known_to);
    let width = (known_to - low) as usize;
    let mut pivots: Vec<(usize, Vec<Rational>)> = Vec::new();
    for s in series {
        let mut row: Vec<Rational> = (0..width)
            .map(|k| s.coeff(low + k as i64).expect("below known_to"))
            .collect();
        loop {
            let lead = row.iter().position(|c| !c.is_zero())?;
            match pivots.iter().find(|(l, _)| *l == lead) {
                Some((_, p)) => {
                    let factor = &row[lead] / &p[lead];
                    for (r, q) in row.iter_mut().zip(p) {
                        *r -= &factor * q;
                    }
                }
                None => {
                    pivots.push((lead, row));
                    break;
                }
            }
        }
    }
    let mut vals: Vec<i64> = pivots.iter().map(|(l, _)| low + *l as i64).collect();
    vals.sort_unstable();
    Some(vals)
}

/// Expansions of the sections `u_k dx/y` at a place, as `dt` coefficients.
pub(crate) fn section_expansions(
    lc: &LocalCoordinates,
    basis: &MonomialBasis,
) -> Result<Vec<Series>, CurveError> {
    let w = lc.dx_over_y()?;
    let max_a = basis.elements.iter().map(|m| m.a).max().unwrap_or(0);
    let mut x_pows = vec![Series::one()];
    for _ in 0..max_a {
        let next = x_pows.last().expect("nonempty") * &lc.x;
        x_pows.push(next);
    }
    let yw = &lc.y * &w;
    Ok(basis
        .elements
        .iter()
        .map(|m| {
            let base = if m.b == 0 { &w } else { &yw };
            &x_pows[m.a as usize] * base
        })
        .collect())
}

/// Vanishing orders at `place` of the sections of `V(i)` as sections of
/// `omega((i+1) P_inf)`: at infinity the `(i+1)`-fold allowed pole shifts
/// every order up by `i + 1`.
pub fn order_sequence_at(
    model: &HyperellipticModel,
    basis: &MonomialBasis,
    place: &Place,
    policy: &PrecisionPolicy,
) -> Result<OrderSequence, CurveError> {
    model.check_place(place)?;
    let shift = match place {
        Place::Infinity => basis.i + 1,
        _ => 0,
    };
    for precision in policy.schedule() {
        let lc = local_coordinates(model, place, precision)?;
        let sections = section_expansions(&lc, basis)?;
        if let Some(vals) = staircase_valuations(&sections) {
            return Ok(OrderSequence::new(
                vals.into_iter().map(|v| v + shift).collect(),
            ));
        }
    }
    Err(CurveError::Inconclusive { cap: policy.cap })
}
