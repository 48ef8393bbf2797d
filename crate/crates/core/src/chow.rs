//! Intersection ring of `C x C` for a curve of fixed genus `g`.
//!
//! Classes live in the span of `1` (degree 0), `K1, K2, Delta` (degree 1)
//! and the point class (degree 2). Products are reduced with
//!
//! ```text
//! K1^2 = K2^2 = 0,   K1 K2 = 4(g-1)^2 pt,
//! K1 Delta = K2 Delta = (2g-2) pt,   Delta^2 = -(2g-2) pt.
//! ```

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::numeric::{int, rat, render, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(i64),
}

/// A class `c0 + k1 K1 + k2 K2 + delta Delta + pt [pt]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ChowClass {
    pub c0: Rational,
    pub k1: Rational,
    pub k2: Rational,
    pub delta: Rational,
    pub pt: Rational,
}

impl ChowClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn fundamental() -> Self {
        Self {
            c0: int(1),
            ..Self::default()
        }
    }

    pub fn divisor(k1: Rational, k2: Rational, delta: Rational) -> Self {
        Self {
            k1,
            k2,
            delta,
            ..Self::default()
        }
    }

    pub fn k1() -> Self {
        Self {
            k1: int(1),
            ..Self::default()
        }
    }

    pub fn k2() -> Self {
        Self {
            k2: int(1),
            ..Self::default()
        }
    }

    pub fn diagonal() -> Self {
        Self {
            delta: int(1),
            ..Self::default()
        }
    }

    pub fn point() -> Self {
        Self::points(int(1))
    }

    pub fn points(n: Rational) -> Self {
        Self {
            pt: n,
            ..Self::default()
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            c0: &self.c0 * c,
            k1: &self.k1 * c,
            k2: &self.k2 * c,
            delta: &self.delta * c,
            pt: &self.pt * c,
        }
    }

    /// Homogeneous component of the given degree.
    pub fn degree_part(&self, degree: u8) -> Self {
        match degree {
            0 => Self {
                c0: self.c0.clone(),
                ..Self::default()
            },
            1 => Self::divisor(self.k1.clone(), self.k2.clone(), self.delta.clone()),
            2 => Self::points(self.pt.clone()),
            _ => Self::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero()
            && self.k1.is_zero()
            && self.k2.is_zero()
            && self.delta.is_zero()
            && self.pt.is_zero()
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        ChowClass {
            c0: &self.c0 + &rhs.c0,
            k1: &self.k1 + &rhs.k1,
            k2: &self.k2 + &rhs.k2,
            delta: &self.delta + &rhs.delta,
            pt: &self.pt + &rhs.pt,
        }
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale(&int(-1))
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self + &(-rhs)
    }
}

impl Add for ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: ChowClass) -> ChowClass {
        &self + &rhs
    }
}

impl Sub for ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: ChowClass) -> ChowClass {
        &self - &rhs
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            (&self.c0, "1"),
            (&self.k1, "K1"),
            (&self.k2, "K2"),
            (&self.delta, "Delta"),
            (&self.pt, "pt"),
        ]
        .into_iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, name)| format!("{}*{name}", render(c)))
        .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The ring for a concrete genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChowRing {
    genus: i64,
}

impl ChowRing {
    pub fn new(genus: i64) -> Result<Self, ChowError> {
        if genus < 1 {
            return Err(ChowError::InvalidGenus(genus));
        }
        Ok(Self { genus })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Bilinear product reduced by the intersection numbers of `C x C`.
    pub fn mul(&self, a: &ChowClass, b: &ChowClass) -> ChowClass {
        let g = self.genus;
        let kk = int(4 * (g - 1) * (g - 1));
        let kd = int(2 * g - 2);
        let dd = -&kd;
        // K1^2 and K2^2 vanish.
        let pairs = &a.k1 * &b.k2 + &a.k2 * &b.k1;
        let with_delta = &a.k1 * &b.delta + &a.delta * &b.k1 + &a.k2 * &b.delta + &a.delta * &b.k2;
        let degree2 = pairs * kk + with_delta * kd + &a.delta * &b.delta * dd;
        ChowClass {
            c0: &a.c0 * &b.c0,
            k1: &a.c0 * &b.k1 + &a.k1 * &b.c0,
            k2: &a.c0 * &b.k2 + &a.k2 * &b.c0,
            delta: &a.c0 * &b.delta + &a.delta * &b.c0,
            pt: &a.c0 * &b.pt + &a.pt * &b.c0 + degree2,
        }
    }

    /// Degree of the zero-cycle part; lower-degree parts integrate to 0.
    pub fn integrate(&self, a: &ChowClass) -> Rational {
        a.pt.clone()
    }

    /// Class of the `j`-th Weierstrass divisor:
    /// `(g+j)(g+j+1)/2 K2 + j(g+j+1) Delta + j(j+1)/2 K1`.
    ///
    /// This is the closed form; the derivation from the Wronski bundle lives in
    /// [`crate::bundles::class_w_derived`].
    pub fn class_w(&self, j: i64) -> ChowClass {
        let g = self.genus;
        ChowClass::divisor(
            rat(j * (j + 1), 2),
            rat((g + j) * (g + j + 1), 2),
            int(j * (g + j + 1)),
        )
    }
}
