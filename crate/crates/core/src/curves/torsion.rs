use super::weights::branch_orders;
use super::{affine_wronskian, build_basis, CurveError, HyperellipticModel};
use crate::numeric::{int, UniPoly};

/// Division polynomial `psi_n`, either a polynomial in `x` (`n` odd) or
/// `y` times one (`n` even).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionPolynomial {
    pub poly: UniPoly,
    pub has_y: bool,
}

impl DivisionPolynomial {
    fn mul(&self, rhs: &Self, f: &UniPoly) -> Self {
        let mut poly = &self.poly * &rhs.poly;
        if self.has_y && rhs.has_y {
            poly = &poly * f;
        }
        Self {
            poly,
            has_y: self.has_y ^ rhs.has_y,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        debug_assert!(self.has_y == rhs.has_y || self.poly.is_zero() || rhs.poly.is_zero());
        Self {
            poly: &self.poly - &rhs.poly,
            has_y: self.has_y || rhs.has_y,
        }
    }

    /// `psi_n^2` with `y^2 = f`, a polynomial in `x` alone.
    pub fn squared_in_x(&self, f: &UniPoly) -> UniPoly {
        let sq = &self.poly * &self.poly;
        if self.has_y {
            &sq * f
        } else {
            sq
        }
    }
}

/// `psi_n` for `y^2 = x^3 + a2 x^2 + a4 x + a6`, by the standard recursion.
pub fn division_polynomial(
    model: &HyperellipticModel,
    n: usize,
) -> Result<DivisionPolynomial, CurveError> {
    if model.genus() != 1 {
        return Err(CurveError::UnsupportedModel(format!(
            "division polynomials need genus 1, model has genus {}",
            model.genus()
        )));
    }
    assert!(n >= 1, "division_polynomial: n must be positive");
    let f = model.f();
    let (a2, a4, a6) = (f.coeff(2), f.coeff(1), f.coeff(0));
    let b2 = int(4) * &a2;
    let b4 = int(2) * &a4;
    let b6 = int(4) * &a6;
    let b8 = int(4) * &a2 * &a6 - &a4 * &a4;
    let plain = |p: UniPoly| DivisionPolynomial {
        poly: p,
        has_y: false,
    };
    let with_y = |p: UniPoly| DivisionPolynomial {
        poly: p,
        has_y: true,
    };

    let mut psi = vec![
        plain(UniPoly::zero()),
        plain(UniPoly::one()),
        with_y(UniPoly::constant(int(2))),
        plain(UniPoly::new(vec![
            b8.clone(),
            int(3) * &b6,
            int(3) * &b4,
            b2.clone(),
            int(3),
        ])),
        with_y(
            UniPoly::new(vec![
                &b4 * &b8 - &b6 * &b6,
                &b2 * &b8 - &b4 * &b6,
                int(10) * &b8,
                int(10) * &b6,
                int(5) * &b4,
                b2.clone(),
                int(2),
            ])
            .scale(&int(2)),
        ),
    ];
    while psi.len() <= n {
        let k = psi.len();
        let m = k / 2;
        let next = if k % 2 == 1 {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            let cube = |p: &DivisionPolynomial| p.mul(p, f).mul(p, f);
            psi[m + 2]
                .mul(&cube(&psi[m]), f)
                .sub(&psi[m - 1].mul(&cube(&psi[m + 1]), f))
        } else {
            // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi_2
            let sq = |p: &DivisionPolynomial| p.mul(p, f);
            let inner = psi[m + 2]
                .mul(&sq(&psi[m - 1]), f)
                .sub(&psi[m - 2].mul(&sq(&psi[m + 1]), f));
            let prod = psi[m].mul(&inner, f);
            // divide by 2y
            if prod.has_y {
                plain(prod.poly.scale(&crate::numeric::rat(1, 2)))
            } else {
                with_y(prod.poly.exact_div(&f.scale(&int(2)))?)
            }
        };
        psi.push(next);
    }
    Ok(psi.swap_remove(n))
}

/// The two x-loci compared by [`torsion_check`], both monic and squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionComparison {
    /// x-coordinates of affine ramification points of `V(j)`.
    pub ramification_locus: UniPoly,
    /// x-coordinates of affine `(j+1)`-torsion points.
    pub torsion_locus: UniPoly,
}

impl TorsionComparison {
    pub fn matches(&self) -> bool {
        self.ramification_locus == self.torsion_locus
    }
}

/// Builds both loci for the genus-one system `V(j) = H^0(O((j+1) P_inf))`.
///
/// Ordinary affine ramification is read from the norm `a^2 - b^2 f` of the
/// Wronskian `(a + b y)/d` with branch factors removed; branch places are
/// added when their weight `ord(W) + N(N-1)/2` is positive.
pub fn torsion_comparison(
    model: &HyperellipticModel,
    j: i64,
) -> Result<TorsionComparison, CurveError> {
    if model.genus() != 1 {
        return Err(CurveError::UnsupportedModel(format!(
            "torsion check needs genus 1, model has genus {}",
            model.genus()
        )));
    }
    assert!(j >= 1, "torsion_comparison: j must be positive");
    let f = model.f();
    let basis = build_basis(model, j);
    let n = basis.len() as i64;
    let w = affine_wronskian(model, &basis)?;
    let mut norm = w.norm_numerator();
    loop {
        let common = norm.gcd(f);
        if common.is_constant() {
            break;
        }
        norm = norm.exact_div(&common)?;
    }
    let mut ramification = norm.squarefree_part();
    for (factor, ord) in branch_orders(model, &w)? {
        if ord + n * (n - 1) / 2 > 0 {
            ramification = &ramification * &factor;
        }
    }
    let psi = division_polynomial(model, (j + 1) as usize)?;
    Ok(TorsionComparison {
        ramification_locus: ramification.monic(),
        torsion_locus: psi.squared_in_x(f).squarefree_part(),
    })
}

/// Whether the affine ramification points of `V(j)` are exactly the affine
/// `(j+1)`-torsion points.
pub fn torsion_check(model: &HyperellipticModel, j: i64) -> Result<bool, CurveError> {
    Ok(torsion_comparison(model, j)?.matches())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(c: &[i64]) -> HyperellipticModel {
        HyperellipticModel::new(UniPoly::from_ints(c)).unwrap()
    }

    #[test]
    fn base_cases() {
        let e = model(&[0, -1, 0, 1]);
        assert_eq!(
            division_polynomial(&e, 1).unwrap(),
            DivisionPolynomial {
                poly: UniPoly::one(),
                has_y: false
            }
        );
        assert_eq!(
            division_polynomial(&e, 2).unwrap(),
            DivisionPolynomial {
                poly: UniPoly::constant(int(2)),
                has_y: true
            }
        );
        assert_eq!(
            division_polynomial(&e, 3).unwrap().poly,
            UniPoly::from_ints(&[-1, 0, -6, 0, 3])
        );
    }

    #[test]
    fn recursion_degrees() {
        // deg psi_n^2 in x is n^2 - 1.
        let e = model(&[1, 0, 0, 1]);
        for n in 1..=9 {
            let p = division_polynomial(&e, n).unwrap();
            assert_eq!(p.has_y, n % 2 == 0);
            assert_eq!(p.squared_in_x(e.f()).degree(), Some(n * n - 1), "n={n}");
        }
    }

    #[test]
    fn x_squared_term_is_supported() {
        // y^2 = x(x-1)(x+2) = x^3 + x^2 - 2x: 2-torsion locus is f itself.
        let e = model(&[0, -2, 1, 1]);
        let psi2 = division_polynomial(&e, 2).unwrap();
        assert_eq!(psi2.squared_in_x(e.f()).squarefree_part(), e.f().clone());
        assert!(torsion_check(&e, 1).unwrap());
        assert!(torsion_check(&e, 2).unwrap());
    }

    #[test]
    fn torsion_examples() {
        assert!(torsion_check(&model(&[0, -1, 0, 1]), 1).unwrap());
        assert!(torsion_check(&model(&[0, -1, 0, 1]), 2).unwrap());
        for j in 1..=4 {
            assert!(torsion_check(&model(&[1, 0, 0, 1]), j).unwrap(), "j={j}");
            assert!(torsion_check(&model(&[0, -1, 0, 1]), j).unwrap(), "j={j}");
        }
    }

    #[test]
    fn genus_two_is_rejected() {
        let m = model(&[0, 24, -50, 35, -10, 1]);
        assert!(matches!(
            division_polynomial(&m, 3),
            Err(CurveError::UnsupportedModel(_))
        ));
        assert!(matches!(
            torsion_check(&m, 1),
            Err(CurveError::UnsupportedModel(_))
        ));
    }
}
