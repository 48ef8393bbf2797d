use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::NumericError;

/// Arbitrary-precision fraction, always kept reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds the canonical reduced fraction `n/d`.
pub fn rat_normalize(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Rational, NumericError> {
    let d = d.into();
    if d.is_zero() {
        return Err(NumericError::DivisionByZero);
    }
    Ok(BigRational::new(n.into(), d))
}

/// Shorthand for a small fraction known to have nonzero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    rat_normalize(n, d).expect("rat: zero denominator")
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Stable text form: `p` for integers, `p/q` otherwise.
pub fn render(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root in `Q`, if it exists.
pub(crate) fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = is_perfect_square(q.numer())?;
    let d = is_perfect_square(q.denom())?;
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        let q = rat_normalize(2, -4).unwrap();
        assert_eq!(q.numer(), &BigInt::from(-1));
        assert_eq!(q.denom(), &BigInt::from(2));
        let z = rat_normalize(0, 7).unwrap();
        assert_eq!(
            (z.numer().clone(), z.denom().clone()),
            (BigInt::from(0), BigInt::from(1))
        );
        assert_eq!(rat_normalize(6, 3).unwrap(), int(2));
        assert_eq!(rat_normalize(1, 0), Err(NumericError::DivisionByZero));
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&rat(-3, 6)), "-1/2");
        assert_eq!(render(&int(140)), "140");
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
            let q = rat(n, d);
            let again = rat_normalize(q.numer().clone(), q.denom().clone()).unwrap();
            prop_assert_eq!(&q, &again);
            prop_assert!(q.denom() > &BigInt::from(0));
            prop_assert!(num_integer::Integer::gcd(q.numer(), q.denom()) == BigInt::from(1) || q.numer().is_zero());
        }

        #[test]
        fn field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, e in -50i64..50, f in 1i64..50) {
            let (x, y, z) = (rat(a, b), rat(c, d), rat(e, f));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            if !x.is_zero() {
                prop_assert_eq!(&x * x.recip(), Rational::one());
            }
        }
    }
}
