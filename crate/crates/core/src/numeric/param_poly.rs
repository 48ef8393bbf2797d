use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{int, render};
use super::Rational;

/// Polynomial in the two formal parameters `g` and `i` with rational
/// coefficients, stored sparsely by exponent pair `(e_g, e_i)`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn monomial(c: Rational, e_g: u32, e_i: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e_g, e_i), c);
        }
        Self { terms }
    }

    /// The parameter `g`.
    pub fn g() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The parameter `i`.
    pub fn i() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coeff(&self, e_g: u32, e_i: u32) -> Rational {
        self.terms
            .get(&(e_g, e_i))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Degree in `g` (0 for the zero polynomial).
    pub fn degree_g(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Degree in `i` (0 for the zero polynomial).
    pub fn degree_i(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact value at the integer point `(g, i)`.
    pub fn eval(&self, g: i64, i: i64) -> Rational {
        let (g, i) = (int(g), int(i));
        self.terms
            .iter()
            .map(|(&(eg, ei), c)| {
                c * num_traits::pow(g.clone(), eg as usize)
                    * num_traits::pow(i.clone(), ei as usize)
            })
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Substitutes a constant for `i`, leaving a polynomial in `g` alone.
    pub fn at_i(&self, i: i64) -> Self {
        let i = int(i);
        let mut out = Self::zero();
        for (&(eg, ei), c) in &self.terms {
            out = &out + &Self::monomial(c * num_traits::pow(i.clone(), ei as usize), eg, 0);
        }
        out
    }

    fn insert_add(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert_add(*k, v.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self + &(-rhs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (&(ag, ai), a) in &self.terms {
            for (&(bg, bi), b) in &rhs.terms {
                out.insert_add((ag + bg, ai + bi), a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly { (&self).$m(&rhs) }
        }
        impl $tr<&ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: &ParamPoly) -> ParamPoly { (&self).$m(rhs) }
        }
        impl $tr<ParamPoly> for &ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl fmt::Display for ParamPoly {
    /// Highest total degree first, e.g. `2*g^3*i - g + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (n, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || *key == (0, 0) {
                factors.push(render(&abs));
            }
            for (name, e) in [("g", key.0), ("i", key.1)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
