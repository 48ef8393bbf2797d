use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, UniPoly};

/// Integral domain with exact division, enough for fraction-free
/// elimination.
pub trait ExactRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_ring_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs` where the quotient is known to exist.
    fn exact_div(&self, rhs: &Self) -> Self;
}

macro_rules! num_ring {
    ($t:ty) => {
        impl ExactRing for $t {
            fn ring_zero() -> Self {
                <$t as Zero>::zero()
            }
            fn ring_one() -> Self {
                <$t as One>::one()
            }
            fn is_ring_zero(&self) -> bool {
                Zero::is_zero(self)
            }
            fn add(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg(&self) -> Self {
                -self
            }
            fn exact_div(&self, rhs: &Self) -> Self {
                self / rhs
            }
        }
    };
}
num_ring!(Rational);
num_ring!(BigInt);

impl ExactRing for UniPoly {
    fn ring_zero() -> Self {
        UniPoly::zero()
    }
    fn ring_one() -> Self {
        UniPoly::one()
    }
    fn is_ring_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        UniPoly::exact_div(self, rhs).expect("division by zero polynomial")
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every division is by the previous pivot and is exact. A zero pivot is
/// replaced by swapping in a lower row; if none exists the determinant is 0.
///
/// Panics if the matrix is not square.
pub fn bareiss_det<R: ExactRing>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "bareiss_det: matrix is not square"
    );
    if n == 0 {
        return R::ring_one();
    }
    let mut m: Vec<Vec<R>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = R::ring_one();
    for k in 0..n - 1 {
        if m[k][k].is_ring_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_ring_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return R::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = R::ring_zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}
