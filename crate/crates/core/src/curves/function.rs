use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::CurveError;
use crate::numeric::{ExactRing, NumericError, Rational, UniPoly};

/// Element `(a(x) + b(x) y) / denom(x)` of the function field of
/// `y^2 = f(x)`.
///
/// Canonical form: `gcd(a, b, denom) = 1` and `denom` monic, which makes
/// the representation unique since `{1, y}` is a basis over `Q(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFunction {
    a: UniPoly,
    b: UniPoly,
    denom: UniPoly,
    f: Arc<UniPoly>,
}

impl CurveFunction {
    pub(crate) fn from_parts(a: UniPoly, b: UniPoly, denom: UniPoly, f: Arc<UniPoly>) -> Self {
        assert!(!denom.is_zero(), "CurveFunction: zero denominator");
        if a.is_zero() && b.is_zero() {
            return Self {
                a,
                b,
                denom: UniPoly::one(),
                f,
            };
        }
        let common = a.gcd(&b).gcd(&denom);
        let (mut a, mut b, mut denom) = (a, b, denom);
        if !common.is_constant() {
            a = a.exact_div(&common).expect("gcd divides");
            b = b.exact_div(&common).expect("gcd divides");
            denom = denom.exact_div(&common).expect("gcd divides");
        }
        let lead = denom.leading().expect("nonzero").recip();
        if !lead.is_one() {
            a = a.scale(&lead);
            b = b.scale(&lead);
            denom = denom.scale(&lead);
        }
        Self { a, b, denom, f }
    }

    pub fn from_poly(f: &Arc<UniPoly>, p: UniPoly) -> Self {
        Self::from_parts(p, UniPoly::zero(), UniPoly::one(), Arc::clone(f))
    }

    pub fn constant(f: &Arc<UniPoly>, c: Rational) -> Self {
        Self::from_poly(f, UniPoly::constant(c))
    }

    pub fn x(f: &Arc<UniPoly>) -> Self {
        Self::from_poly(f, UniPoly::x())
    }

    pub fn y(f: &Arc<UniPoly>) -> Self {
        Self::from_parts(
            UniPoly::zero(),
            UniPoly::one(),
            UniPoly::one(),
            Arc::clone(f),
        )
    }

    /// `x^a y^b`, with `y^2` reduced to `f`.
    pub fn monomial(f: &Arc<UniPoly>, a: u32, b: u32) -> Self {
        let xa = UniPoly::x().pow(a);
        let fy = f.pow(b / 2);
        if b.is_multiple_of(2) {
            Self::from_poly(f, xa * fy)
        } else {
            Self::from_parts(UniPoly::zero(), xa * fy, UniPoly::one(), Arc::clone(f))
        }
    }

    pub fn a(&self) -> &UniPoly {
        &self.a
    }

    pub fn b(&self) -> &UniPoly {
        &self.b
    }

    pub fn denom(&self) -> &UniPoly {
        &self.denom
    }

    pub fn curve_poly(&self) -> &UniPoly {
        &self.f
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn with(&self, a: UniPoly, b: UniPoly, denom: UniPoly) -> Self {
        Self::from_parts(a, b, denom, Arc::clone(&self.f))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.denom == rhs.denom {
            return self.with(&self.a + &rhs.a, &self.b + &rhs.b, self.denom.clone());
        }
        self.with(
            &self.a * &rhs.denom + &rhs.a * &self.denom,
            &self.b * &rhs.denom + &rhs.b * &self.denom,
            &self.denom * &rhs.denom,
        )
    }

    pub fn neg(&self) -> Self {
        self.with(-&self.a, -&self.b, self.denom.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.a * &rhs.a + &(&self.b * &rhs.b) * &*self.f;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        self.with(a, b, &self.denom * &rhs.denom)
    }

    /// `a^2 - b^2 f`, the norm of `a + b y` down to `Q(x)`.
    pub fn norm_numerator(&self) -> UniPoly {
        &self.a * &self.a - &(&self.b * &self.b) * &*self.f
    }

    /// Multiplicative inverse via the conjugate `a - b y`.
    pub fn inverse(&self) -> Result<Self, CurveError> {
        if self.is_zero() {
            return Err(CurveError::Numeric(NumericError::DivisionByZero));
        }
        let n = self.norm_numerator();
        Ok(self.with(&self.a * &self.denom, -&(&self.b * &self.denom), n))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, CurveError> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// `d/dx`, using `dy/dx = f'/(2y) = f' y / (2f)`.
    pub fn derivative(&self) -> Self {
        let (a, b, d, f) = (&self.a, &self.b, &self.denom, &*self.f);
        let two_f = f.scale(&Rational::from_integer(2.into()));
        let da = &a.derivative() * d - a * &d.derivative();
        let db = &b.derivative() * d - b * &d.derivative();
        let new_a = &da * &two_f;
        let new_b = &db * &two_f + &(b * d) * &f.derivative();
        self.with(new_a, new_b, &(&two_f * d) * d)
    }
}

impl ExactRing for CurveFunction {
    // The identities have no curve attached; they adopt the other operand's
    // curve on first use.
    fn ring_zero() -> Self {
        Self {
            a: UniPoly::zero(),
            b: UniPoly::zero(),
            denom: UniPoly::one(),
            f: Arc::new(UniPoly::zero()),
        }
    }
    fn ring_one() -> Self {
        Self {
            a: UniPoly::one(),
            b: UniPoly::zero(),
            denom: UniPoly::one(),
            f: Arc::new(UniPoly::zero()),
        }
    }
    fn is_ring_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        adopt(self, rhs).add(&adopt(rhs, self))
    }
    fn sub(&self, rhs: &Self) -> Self {
        adopt(self, rhs).sub(&adopt(rhs, self))
    }
    fn mul(&self, rhs: &Self) -> Self {
        adopt(self, rhs).mul(&adopt(rhs, self))
    }
    fn neg(&self) -> Self {
        CurveFunction::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        adopt(self, rhs)
            .div(&adopt(rhs, self))
            .expect("exact_div by zero function")
    }
}

/// `x` rebased onto `other`'s curve if `x` is a detached identity.
fn adopt(x: &CurveFunction, other: &CurveFunction) -> CurveFunction {
    if x.f.is_zero() && !other.f.is_zero() {
        CurveFunction {
            f: Arc::clone(&other.f),
            ..x.clone()
        }
    } else {
        x.clone()
    }
}

impl fmt::Display for CurveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => format!("{}", self.a),
            (true, false) => format!("({})*y", self.b),
            (false, false) => format!("{} + ({})*y", self.a, self.b),
        };
        if self.denom.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num}) / ({})", self.denom)
        }
    }
}
