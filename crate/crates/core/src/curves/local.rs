use num_traits::{One, Zero};

use super::{CurveError, CurveFunction, HyperellipticModel, Place};
use crate::numeric::{int, NumericError, Rational, Series, UniPoly};

/// Expansions of `x`, `y` and `dx/dt` in the canonical local parameter `t`
/// of a place:
///
/// * ordinary `(x0, y0)`: `t = x - x0`;
/// * branch `(x0, 0)`: `t = y`, so `x - x0` is a series in `t^2`;
/// * infinity: `x = t^-2` and `y = t^-(2g+1) s(t)` with `s(0) = 1`.
#[derive(Clone, Debug)]
pub struct LocalCoordinates {
    pub x: Series,
    pub y: Series,
    pub dx: Series,
}

impl LocalCoordinates {
    /// Coefficient of `dt` in `dx/y`.
    pub fn dx_over_y(&self) -> Result<Series, NumericError> {
        Ok(&self.dx * &self.y.invert()?)
    }
}

/// What to expand: a function, or the differential `dx/y` (as its `dt`
/// coefficient).
#[derive(Clone, Copy, Debug)]
pub enum Expandable<'a> {
    Function(&'a CurveFunction),
    DxOverY,
}

/// Solves `h(X) = T` for `X(T)` with `h(0) = 0`, `h'(0) != 0`, to `n` terms.
///
/// With `c = h'(0)`, `X = c Z` and `T = c^2 S` the equation becomes
/// `S = Z + h_2 Z^2 + h_3 c Z^3 + ...`, which has integral coefficients when
/// `h` does; reverting that form keeps the numbers small.
fn revert(h: &UniPoly, n: usize) -> Series {
    let c = h.coeff(1);
    debug_assert!(h.coeff(0).is_zero() && !c.is_zero());
    let c_inv = c.recip();
    let mut scale = &c_inv * &c_inv;
    let unit: Vec<Rational> = h
        .coeffs()
        .iter()
        .map(|hk| {
            let v = hk * &scale;
            scale *= &c;
            v
        })
        .collect();
    let z = revert_unit(&UniPoly::new(unit), n);
    // X_k = c^(1-2k) Z_k
    let step = &c_inv * &c_inv;
    let mut factor = c_inv;
    let mut coeffs = vec![Rational::zero()];
    for k in 1..n as i64 {
        coeffs.push(z.coeff(k).unwrap_or_else(|_| Rational::zero()) * &factor);
        factor *= &step;
    }
    Series::new(0, coeffs).truncate(n as i64)
}

/// Newton reversion of `h` with `h'(0) = 1`, doubling the precision each step.
fn revert_unit(h: &UniPoly, n: usize) -> Series {
    let dh = h.derivative();
    let target = Series::monomial(Rational::one(), 1);
    let mut x = Series::monomial(Rational::one(), 1).truncate(2);
    let mut known = 2usize;
    while known < n {
        known = (2 * known).min(n);
        // Treat the current iterate as exact to `known` terms.
        let guess = Series::exact(1, coeffs_from(&x, 1, known as i64)).truncate(known as i64);
        let residual = &h.eval_series(&guess) - &target;
        let slope = dh.eval_series(&guess).invert().expect("h'(0) != 0");
        x = &guess - &(&residual * &slope);
    }
    x.truncate(n as i64)
}

fn coeffs_from(s: &Series, from: i64, to: i64) -> Vec<Rational> {
    (from..to)
        .map(|k| s.coeff(k).unwrap_or_else(|_| Rational::zero()))
        .collect()
}

/// Local coordinates at `place`, with `precision` known coefficients in the
/// expansions of `x` (branch places) or `y` (other places).
pub fn local_coordinates(
    model: &HyperellipticModel,
    place: &Place,
    precision: usize,
) -> Result<LocalCoordinates, CurveError> {
    model.check_place(place)?;
    let p = precision.max(1) as i64;
    let f = model.f();
    match place {
        Place::Ordinary { x: x0, y: y0 } => {
            let x = Series::exact(0, vec![x0.clone(), Rational::one()]);
            let shifted = f.shift(x0).scale(&(y0 * y0).recip());
            let unit = Series::exact(0, shifted.coeffs().to_vec()).truncate(p);
            let y = unit.sqrt()?.scale(y0);
            Ok(LocalCoordinates {
                x,
                y,
                dx: Series::one(),
            })
        }
        Place::Branch { x: x0 } => {
            let h = f.shift(x0);
            let half = (p as usize).div_ceil(2) + 1;
            let big_x = revert(&h, half);
            let mut coeffs = vec![Rational::zero(); 2 * half];
            for k in 1..half {
                coeffs[2 * k] = big_x.coeff(k as i64).expect("within precision");
            }
            coeffs[0] = x0.clone();
            let x = Series::new(0, coeffs);
            let dx = x.derivative();
            Ok(LocalCoordinates {
                x,
                y: Series::monomial(Rational::one(), 1),
                dx,
            })
        }
        Place::Infinity => {
            let n = f.degree().expect("nonzero") as i64;
            // s^2 = t^(2n) f(t^-2) = sum_m f_{n-m} t^(2m)
            let mut sq = vec![Rational::zero(); (2 * n + 1) as usize];
            for m in 0..=n {
                sq[(2 * m) as usize] = f.coeff((n - m) as usize);
            }
            let s = Series::exact(0, sq).truncate(p).sqrt()?;
            let y = &Series::monomial(Rational::one(), -n) * &s;
            let x = Series::monomial(Rational::one(), -2);
            let dx = Series::monomial(int(-2), -3);
            Ok(LocalCoordinates { x, y, dx })
        }
    }
}

/// Laurent expansion of a function, or of `dx/y`, at a place.
pub fn expand_at(
    model: &HyperellipticModel,
    what: Expandable<'_>,
    place: &Place,
    precision: usize,
) -> Result<Series, CurveError> {
    let lc = local_coordinates(model, place, precision)?;
    match what {
        Expandable::DxOverY => Ok(lc.dx_over_y()?),
        Expandable::Function(fun) => expand_with(&lc, fun),
    }
}

pub(crate) fn expand_with(
    lc: &LocalCoordinates,
    fun: &CurveFunction,
) -> Result<Series, CurveError> {
    let a = fun.a().eval_series(&lc.x);
    let b = fun.b().eval_series(&lc.x);
    let mut d = fun.denom().eval_series(&lc.x);
    if d.is_exact() && !fun.denom().is_constant() {
        // Exact but not a monomial: cut it to the working precision first.
        let v = d.valuation()?;
        let rel =
            lc.y.precision()
                .unwrap_or(0)
                .max(lc.x.precision().unwrap_or(0));
        d = d.truncate(v + rel);
    }
    let num = &a + &(&b * &lc.y);
    Ok(&num * &d.invert()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn elliptic() -> HyperellipticModel {
        HyperellipticModel::new(UniPoly::from_ints(&[0, -1, 0, 1])).unwrap()
    }

    fn genus_two() -> HyperellipticModel {
        HyperellipticModel::new(UniPoly::from_ints(&[0, 24, -50, 35, -10, 1])).unwrap()
    }

    #[test]
    fn branch_expansion_of_x() {
        let m = elliptic();
        let f = m.f_shared();
        let x = CurveFunction::x(&f);
        let s = expand_at(
            &m,
            Expandable::Function(&x),
            &Place::Branch { x: int(0) },
            12,
        )
        .unwrap();
        assert_eq!(s.valuation().unwrap(), 2);
        // t^2 = x^3 - x, so x = -t^2 - t^6 - 3 t^10 - ...
        assert_eq!(s.leading().unwrap(), &int(-1));
        assert_eq!(s.coeff(6).unwrap(), int(-1));
        assert_eq!(s.coeff(10).unwrap(), int(-3));
        let lc = local_coordinates(&m, &Place::Branch { x: int(0) }, 12).unwrap();
        // y^2 = f(x) holds identically in t.
        let fx = m.f().eval_series(&lc.x);
        assert!((&lc.y * &lc.y).agrees_with(&fx));
    }

    #[test]
    fn constants_and_infinity() {
        let m = genus_two();
        let f = m.f_shared();
        let one = CurveFunction::constant(&f, int(1));
        for place in [Place::Infinity, Place::Branch { x: int(3) }] {
            let s = expand_at(&m, Expandable::Function(&one), &place, 8).unwrap();
            assert_eq!(s.valuation().unwrap(), 0);
            assert!(s.agrees_with(&Series::one()));
        }
        let x = CurveFunction::x(&f);
        let s = expand_at(&m, Expandable::Function(&x), &Place::Infinity, 8).unwrap();
        assert_eq!(s.valuation().unwrap(), -2);
        let lc = local_coordinates(&m, &Place::Infinity, 20).unwrap();
        assert!((&lc.y * &lc.y).agrees_with(&m.f().eval_series(&lc.x)));
        // dx/y vanishes to order 2g - 2 at infinity.
        let w = expand_at(&m, Expandable::DxOverY, &Place::Infinity, 20).unwrap();
        assert_eq!(w.valuation().unwrap(), 2);
    }

    #[test]
    fn ordinary_expansion() {
        let m = HyperellipticModel::new(UniPoly::from_ints(&[1, 0, 0, 1])).unwrap();
        let place = m.place_at(int(2), int(-3)).unwrap();
        let lc = local_coordinates(&m, &place, 10).unwrap();
        assert_eq!(lc.y.coeff(0).unwrap(), int(-3));
        // dy/dx = f'(2) / (2 y0) = 12 / -6
        assert_eq!(lc.y.coeff(1).unwrap(), int(-2));
        assert!((&lc.y * &lc.y).agrees_with(&m.f().eval_series(&lc.x)));
        let y = CurveFunction::y(&m.f_shared());
        let inv = y.inverse().unwrap();
        let s = expand_at(&m, Expandable::Function(&inv), &place, 10).unwrap();
        assert_eq!(s.coeff(0).unwrap(), rat(-1, 3));
    }

    #[test]
    fn off_curve_places_are_rejected() {
        let m = elliptic();
        let err = expand_at(&m, Expandable::DxOverY, &Place::Branch { x: int(2) }, 4).unwrap_err();
        assert!(matches!(err, CurveError::NotOnCurve(_)));
    }

    #[test]
    fn reversion_inverts() {
        let h = UniPoly::from_ints(&[0, 3, 1, -2]);
        let x = revert(&h, 9);
        let back = h.eval_series(&x);
        assert!(back.agrees_with(&Series::monomial(int(1), 1)));
        assert_eq!(back.known_to(), Some(9));
    }
}
