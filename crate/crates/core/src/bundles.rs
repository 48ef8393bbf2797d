//! Chern-class calculus for the bundles built over `p1: C x C -> C`.
//!
//! Total Chern classes are truncated at degree 2, which loses nothing on a
//! surface. Jet bundles are assembled from their truncation filtration,
//! whose graded pieces are `L_i (x) omega_{p1}^m` with first Chern class
//! `(m+1) K2 + (i+1) Delta`.

use std::fmt;

use crate::chow::{ChowClass, ChowRing};
use crate::numeric::{int, rat, Rational};

/// Total Chern class `1 + c1 + c2` of a bundle on `C x C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernPoly {
    c1: ChowClass,
    c2: ChowClass,
}

impl ChernPoly {
    /// Keeps only the degree-1 part of `c1` and the degree-2 part of `c2`.
    pub fn new(c1: &ChowClass, c2: &ChowClass) -> Self {
        Self {
            c1: c1.degree_part(1),
            c2: c2.degree_part(2),
        }
    }

    pub fn trivial() -> Self {
        Self::new(&ChowClass::zero(), &ChowClass::zero())
    }

    /// `1 + c1` for a line bundle.
    pub fn line(c1: &ChowClass) -> Self {
        Self::new(c1, &ChowClass::zero())
    }

    pub fn c1(&self) -> &ChowClass {
        &self.c1
    }

    pub fn c2(&self) -> &ChowClass {
        &self.c2
    }

    /// Whitney product, truncated at degree 2.
    pub fn mul(&self, ring: &ChowRing, other: &ChernPoly) -> ChernPoly {
        let c1 = &self.c1 + &other.c1;
        let c2 = &(&self.c2 + &other.c2) + &ring.mul(&self.c1, &other.c1);
        Self::new(&c1, &c2)
    }

    /// Formal inverse `1 - c1 + (c1^2 - c2)`.
    pub fn inverse(&self, ring: &ChowRing) -> ChernPoly {
        let c2 = &ring.mul(&self.c1, &self.c1) - &self.c2;
        Self::new(&-&self.c1, &c2)
    }
}

impl fmt::Display for ChernPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1 + ({}) + ({})", self.c1, self.c2)
    }
}

/// `c1(E_j)` pulled back along `p1`, by the recursion
/// `c1(E_j) = c1(E_{j-1}) + (1 - (j+1)) K1` from the free bundle `E_0`.
pub fn c1_e(_ring: &ChowRing, j: i64) -> ChowClass {
    assert!(j >= 0, "c1_e: j must be nonnegative");
    (1..=j).fold(ChowClass::zero(), |acc, step| {
        &acc + &ChowClass::k1().scale(&int(1 - (step + 1)))
    })
}

/// Chern class of `p1^* E_j`. Its `c2` and `c1^2` vanish because the
/// bundle comes from a curve.
pub fn chern_pushforward(ring: &ChowRing, j: i64) -> ChernPoly {
    ChernPoly::line(&c1_e(ring, j))
}

/// Class of `W_j = Z_j - g Delta` read off from the line bundle carrying
/// the relative wronskian: `(g+j)(g+j+1)/2 K2 + j(g+j+1) Delta - c1(E_j)`.
pub fn class_w_derived(ring: &ChowRing, j: i64) -> ChowClass {
    let g = ring.genus();
    let wronskian_bundle =
        ChowClass::divisor(int(0), rat((g + j) * (g + j + 1), 2), int(j * (g + j + 1)));
    &wronskian_bundle - &c1_e(ring, j)
}

/// Chern class of the relative jet bundle `J^ell_{p1}(L_i)` as the product
/// of its `ell + 1` graded line bundles.
pub fn chern_jet(ring: &ChowRing, i: i64, ell: i64) -> ChernPoly {
    assert!(i >= 0 && ell >= 0, "chern_jet: indices must be nonnegative");
    (0..=ell).fold(ChernPoly::trivial(), |acc, m| {
        let piece = ChowClass::divisor(int(0), int(m + 1), int(i + 1));
        acc.mul(ring, &ChernPoly::line(&piece))
    })
}

/// Degree-2 part of `c(a - b) = c(a) / c(b)`: the class of the locus where a
/// map from a bundle with Chern class `b` to one with Chern class `a`, of
/// rank one more, fails to be injective.
pub fn porteous_c2(ring: &ChowRing, a: &ChernPoly, b: &ChernPoly) -> ChowClass {
    a.mul(ring, &b.inverse(ring)).c2().clone()
}

/// Class of the expanded Cukierman locus `E_i^+`, the degeneracy locus of
/// `p1^* E_i -> J^{g+i}_{p1}(L_i)`.
pub fn class_e_plus(ring: &ChowRing, i: i64) -> ChowClass {
    let jets = chern_jet(ring, i, ring.genus() + i);
    porteous_c2(ring, &jets, &chern_pushforward(ring, i))
}

/// `c2` of the first-order relative jets of `O(W_i)`: `[W_i] (K2 + [W_i])`.
pub fn class_sw(ring: &ChowRing, i: i64) -> ChowClass {
    let w = class_w_derived(ring, i);
    ring.mul(&w, &(&ChowClass::k2() + &w))
}

/// `int [W_i][Delta]`, the number of Weierstrass points counted on the diagonal.
pub fn w_delta_degree(ring: &ChowRing, i: i64) -> Rational {
    ring.integrate(&ring.mul(&class_w_derived(ring, i), &ChowClass::diagonal()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(g: i64) -> ChowRing {
        ChowRing::new(g).unwrap()
    }

    #[test]
    fn pushforward_first_chern_class() {
        let r = ring(3);
        assert!(c1_e(&r, 0).is_zero());
        assert_eq!(c1_e(&r, 1), ChowClass::k1().scale(&int(-1)));
        assert_eq!(c1_e(&r, 2), ChowClass::k1().scale(&int(-3)));
    }

    #[test]
    fn derived_w_matches_closed_class() {
        for g in 1..=9 {
            let r = ring(g);
            for j in 0..=8 {
                assert_eq!(class_w_derived(&r, j), r.class_w(j));
            }
        }
    }

    #[test]
    fn jet_examples() {
        let r1 = ring(1);
        assert_eq!(
            chern_jet(&r1, 0, 1).c1(),
            &ChowClass::divisor(int(0), int(3), int(2))
        );
        for i in 0..5 {
            assert_eq!(
                chern_jet(&r1, i, 0).c1(),
                &ChowClass::divisor(int(0), int(1), int(i + 1))
            );
        }
        // g=2, i=1, ell=3: c2 = 1/2 (i+1)(g+i)(g+i+1)(g+i+2) K2 Delta + 1/2 (i+1)^2 (g+i)(g+i+1) Delta^2
        //               = 60 * 2 + 24 * (-2) = 72 points.
        let r2 = ring(2);
        assert_eq!(chern_jet(&r2, 1, 3).c2(), &ChowClass::points(int(72)));
    }

    #[test]
    fn jet_truncation_recursion() {
        for g in 1..5 {
            let r = ring(g);
            for i in 0..5 {
                for ell in 1..7 {
                    let step =
                        ChernPoly::line(&ChowClass::divisor(int(0), int(ell + 1), int(i + 1)));
                    assert_eq!(
                        chern_jet(&r, i, ell),
                        chern_jet(&r, i, ell - 1).mul(&r, &step)
                    );
                }
            }
        }
    }

    #[test]
    fn porteous_examples() {
        let r2 = ring(2);
        assert_eq!(r2.integrate(&class_e_plus(&r2, 1)), int(128));
        let r1 = ring(1);
        for i in 0..6 {
            assert_eq!(r1.integrate(&class_e_plus(&r1, i)), int(0));
        }
    }

    #[test]
    fn sw_examples() {
        let r2 = ring(2);
        assert_eq!(r2.integrate(&class_sw(&r2, 1)), int(140));
        for g in 1..6 {
            assert_eq!(ring(g).integrate(&class_sw(&ring(g), 0)), int(0));
        }
        for i in 0..6 {
            assert_eq!(ring(1).integrate(&class_sw(&ring(1), i)), int(0));
        }
    }

    #[test]
    fn decomposition_is_consistent_on_grid() {
        // SW = D + E with E = E^+ - (g+1) W.Delta; D must then be the stated
        // non-negative count.
        for g in 1..=8 {
            let r = ring(g);
            for i in 0..=8 {
                let sw = r.integrate(&class_sw(&r, i));
                let e = r.integrate(&class_e_plus(&r, i)) - int(g + 1) * w_delta_degree(&r, i);
                let d = &sw - &e;
                assert_eq!(&d + &e, sw);
                assert!(e >= int(0) && d >= int(0), "g={g} i={i}");
            }
        }
    }

    fn arb_chern() -> impl Strategy<Value = ChernPoly> {
        proptest::collection::vec(-5i64..6, 4).prop_map(|v| {
            ChernPoly::new(
                &ChowClass::divisor(int(v[0]), int(v[1]), int(v[2])),
                &ChowClass::points(int(v[3])),
            )
        })
    }

    proptest! {
        #[test]
        fn quotient_by_trivial(a in arb_chern(), g in 1i64..8) {
            let r = ring(g);
            prop_assert_eq!(porteous_c2(&r, &a, &ChernPoly::trivial()), a.c2().clone());
        }

        #[test]
        fn inverse_is_inverse(a in arb_chern(), g in 1i64..8) {
            let r = ring(g);
            prop_assert_eq!(a.mul(&r, &a.inverse(&r)), ChernPoly::trivial());
        }
    }
}
