//! Truncated Laurent series in one local parameter `t`.
//!
//! A series is either exact (a Laurent polynomial) or known modulo
//! `t^known_to`. Arithmetic propagates the precision it can justify, and
//! reading past it is an error rather than a silent zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{int, rational_sqrt, render};
use super::{NumericError, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    /// Exponent of `coeffs[0]`. When `coeffs` is empty and the series is
    /// inexact this equals `known_to`: only a lower bound is known.
    valuation: i64,
    coeffs: Vec<Rational>,
    /// `None` for exact series.
    known_to: Option<i64>,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Numerators over a common denominator.
fn integral(a: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let denom = a.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = a.iter().map(|x| x.numer() * (&denom / x.denom())).collect();
    (nums, denom)
}

/// Product of two power series, keeping `m` terms. The convolution runs on
/// integers and each output coefficient is normalized once.
fn mul_trunc(a: &[Rational], b: &[Rational], m: usize) -> Vec<Rational> {
    let len = m.min((a.len() + b.len()).saturating_sub(1));
    let (na, da) = integral(&a[..a.len().min(m)]);
    let (nb, db) = integral(&b[..b.len().min(m)]);
    let mut acc = vec![BigInt::zero(); len];
    for (i, x) in na.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in nb.iter().enumerate().take(len.saturating_sub(i)) {
            acc[i + j] += x * y;
        }
    }
    let denom = da * db;
    acc.into_iter()
        .map(|n| Rational::new(n, denom.clone()))
        .collect()
}

/// Reciprocal of a power series with nonzero constant term, `m` terms, by
/// Newton iteration `r <- r (2 - a r)`.
fn inv_trunc(a: &[Rational], m: usize) -> Vec<Rational> {
    let mut r = vec![a[0].recip()];
    while r.len() < m {
        let n = (2 * r.len()).min(m);
        let ar = mul_trunc(&a[..a.len().min(n)], &r, n);
        let mut e: Vec<Rational> = ar.into_iter().map(|c| -c).collect();
        e.resize(n, Rational::zero());
        e[0] += int(2);
        r = mul_trunc(&r, &e, n);
        r.resize(n, Rational::zero());
    }
    r.truncate(m);
    r
}

impl Series {
    fn from_parts(mut valuation: i64, mut coeffs: Vec<Rational>, known_to: Option<i64>) -> Self {
        if let Some(n) = known_to {
            let keep = (n - valuation).max(0) as usize;
            coeffs.truncate(keep);
        } else {
            while coeffs.last().is_some_and(Zero::is_zero) {
                coeffs.pop();
            }
        }
        let lead = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        valuation += lead as i64;
        if coeffs.is_empty() {
            valuation = known_to.unwrap_or_default();
        }
        Self {
            valuation,
            coeffs,
            known_to,
        }
    }

    /// Series `sum coeffs[k] t^(valuation + k)` known modulo
    /// `t^(valuation + coeffs.len())`.
    pub fn new(valuation: i64, coeffs: Vec<Rational>) -> Self {
        let n = valuation + coeffs.len() as i64;
        Self::from_parts(valuation, coeffs, Some(n))
    }

    /// Exact Laurent polynomial.
    pub fn exact(valuation: i64, coeffs: Vec<Rational>) -> Self {
        Self::from_parts(valuation, coeffs, None)
    }

    /// The series `O(t^n)`: zero as far as is known.
    pub fn unknown_from(n: i64) -> Self {
        Self::from_parts(n, Vec::new(), Some(n))
    }

    pub fn zero() -> Self {
        Self::exact(0, Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::exact(0, vec![c])
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::exact(k, vec![c])
    }

    pub fn is_exact(&self) -> bool {
        self.known_to.is_none()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.is_exact() && self.coeffs.is_empty()
    }

    /// True when no nonzero coefficient is known.
    pub fn is_zero_within_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Absolute precision: the series is known modulo `t^n`.
    pub fn known_to(&self) -> Option<i64> {
        self.known_to
    }

    /// Number of known coefficients from the valuation on.
    pub fn precision(&self) -> Option<i64> {
        self.known_to.map(|n| n - self.valuation)
    }

    pub fn valuation(&self) -> Result<i64, NumericError> {
        if self.coeffs.is_empty() {
            return Err(NumericError::UndeterminedValuation {
                known_to: self.known_to.unwrap_or(i64::MAX),
            });
        }
        Ok(self.valuation)
    }

    pub fn leading(&self) -> Result<&Rational, NumericError> {
        self.valuation()?;
        Ok(&self.coeffs[0])
    }

    pub fn coeff(&self, k: i64) -> Result<Rational, NumericError> {
        if let Some(n) = self.known_to {
            if k >= n {
                return Err(NumericError::PrecisionExhausted {
                    requested: k,
                    known_to: n,
                });
            }
        }
        let idx = k - self.valuation;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[idx as usize].clone())
    }

    /// Forgets everything from `t^n` on.
    pub fn truncate(&self, n: i64) -> Self {
        Self::from_parts(
            self.valuation,
            self.coeffs.clone(),
            min_opt(self.known_to, Some(n)),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return match self.known_to {
                None => Self::zero(),
                Some(n) => Self::unknown_from(n),
            };
        }
        Self::from_parts(
            self.valuation,
            self.coeffs.iter().map(|a| a * c).collect(),
            self.known_to,
        )
    }

    pub fn invert(&self) -> Result<Series, NumericError> {
        let v = self.valuation()?;
        match self.precision() {
            None if self.coeffs.len() == 1 => Ok(Self::monomial(self.coeffs[0].recip(), -v)),
            None => Err(NumericError::UnboundedPrecision),
            Some(p) => Ok(Self::new(-v, inv_trunc(&self.coeffs, p as usize))),
        }
    }

    /// Square root with leading coefficient the positive rational root.
    pub fn sqrt(&self) -> Result<Series, NumericError> {
        let v = self.valuation()?;
        if v % 2 != 0 {
            return Err(NumericError::NotASquare(format!("odd valuation {v}")));
        }
        let lead = &self.coeffs[0];
        let root = rational_sqrt(lead).ok_or_else(|| {
            NumericError::NotASquare(format!(
                "leading coefficient {} is not a square in Q",
                render(lead)
            ))
        })?;
        let p = match self.precision() {
            None if self.coeffs.len() == 1 => return Ok(Self::monomial(root, v / 2)),
            None => return Err(NumericError::UnboundedPrecision),
            Some(p) => p as usize,
        };
        let lead_inv = lead.recip();
        let unit: Vec<Rational> = self.coeffs.iter().map(|c| c * &lead_inv).collect();
        let half = Rational::new(1.into(), 2.into());
        let mut r = vec![Rational::one()];
        while r.len() < p {
            let m = (2 * r.len()).min(p);
            let q = mul_trunc(&unit[..m.min(unit.len())], &inv_trunc(&r, m), m);
            let mut next = vec![Rational::zero(); m];
            for (k, slot) in next.iter_mut().enumerate() {
                let rk = r.get(k).cloned().unwrap_or_else(Rational::zero);
                let qk = q.get(k).cloned().unwrap_or_else(Rational::zero);
                *slot = (rk + qk) * &half;
            }
            r = next;
        }
        r.truncate(p);
        Ok(Self::new(v / 2, r.into_iter().map(|c| c * &root).collect()))
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * int(self.valuation + k as i64))
            .collect();
        Self::from_parts(self.valuation - 1, coeffs, self.known_to.map(|n| n - 1))
    }

    /// True when `self - other` vanishes to the precision both sides justify.
    pub fn agrees_with(&self, other: &Series) -> bool {
        (self - other).is_zero_within_precision()
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        if self.is_exact_zero() {
            return rhs.clone();
        }
        if rhs.is_exact_zero() {
            return self.clone();
        }
        let known_to = min_opt(self.known_to, rhs.known_to);
        let v = self.valuation.min(rhs.valuation);
        let end = |s: &Series| s.valuation + s.coeffs.len() as i64;
        let mut top = end(self).max(end(rhs));
        if let Some(n) = known_to {
            top = top.min(n);
        }
        let len = (top - v).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for s in [self, rhs] {
            for (k, c) in s.coeffs.iter().enumerate() {
                let idx = s.valuation + k as i64 - v;
                if idx >= 0 && (idx as usize) < len {
                    coeffs[idx as usize] += c;
                }
            }
        }
        Series::from_parts(v, coeffs, known_to)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::from_parts(
            self.valuation,
            self.coeffs.iter().map(|c| -c).collect(),
            self.known_to,
        )
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return Series::zero();
        }
        let v = self.valuation + rhs.valuation;
        let known_to = min_opt(
            self.known_to.map(|n| n + rhs.valuation),
            rhs.known_to.map(|n| n + self.valuation),
        );
        let full = (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(1);
        let m = match known_to {
            Some(n) => ((n - v).max(0) as usize).min(full),
            None => full,
        };
        Series::from_parts(v, mul_trunc(&self.coeffs, &rhs.coeffs, m), known_to)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series { (&self).$m(&rhs) }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series { (&self).$m(rhs) }
        }
        impl $tr<Series> for &Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.valuation + k as i64;
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let abs = c.abs();
            match e {
                0 => write!(f, "{}", render(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", render(&abs))?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        match self.known_to {
            Some(n) if first => write!(f, "O(t^{n})"),
            Some(n) => write!(f, " + O(t^{n})"),
            None if first => write!(f, "0"),
            None => Ok(()),
        }
    }
}
