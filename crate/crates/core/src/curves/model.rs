use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::CurveError;
use crate::numeric::{render, Rational, UniPoly};

/// The curve `y^2 = f(x)` with `f` monic, squarefree, of odd degree `2g+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticModel {
    f: Arc<UniPoly>,
    genus: i64,
    /// Rational roots of `f`, ascending.
    branch_x: Vec<Rational>,
}

impl HyperellipticModel {
    pub fn new(f: UniPoly) -> Result<Self, CurveError> {
        let deg = f.degree().unwrap_or(0);
        if deg.is_multiple_of(2) {
            return Err(CurveError::EvenDegree(deg));
        }
        if deg < 3 {
            return Err(CurveError::DegreeTooSmall(deg));
        }
        if !f.is_monic() {
            return Err(CurveError::NotMonic);
        }
        if !f.is_squarefree() {
            return Err(CurveError::NotSquarefree);
        }
        let branch_x = rational_roots(&f);
        Ok(Self {
            genus: ((deg - 1) / 2) as i64,
            f: Arc::new(f),
            branch_x,
        })
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub(crate) fn f_shared(&self) -> Arc<UniPoly> {
        Arc::clone(&self.f)
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Rational branch points in ascending order.
    pub fn branch_x(&self) -> &[Rational] {
        &self.branch_x
    }

    /// Whether every root of `f` is rational.
    pub fn splits_over_q(&self) -> bool {
        self.branch_x.len() == self.f.degree().unwrap_or(0)
    }

    pub fn require_split(&self) -> Result<(), CurveError> {
        if self.splits_over_q() {
            Ok(())
        } else {
            Err(CurveError::NotSplit)
        }
    }

    /// Rational branch places followed by infinity.
    pub fn branch_places(&self) -> Vec<Place> {
        self.branch_x
            .iter()
            .map(|x| Place::Branch { x: x.clone() })
            .chain(std::iter::once(Place::Infinity))
            .collect()
    }

    pub fn check_place(&self, place: &Place) -> Result<(), CurveError> {
        let ok = match place {
            Place::Infinity => true,
            Place::Branch { x } => self.f.eval(x).is_zero(),
            Place::Ordinary { x, y } => !y.is_zero() && self.f.eval(x) == y * y,
        };
        if ok {
            Ok(())
        } else {
            Err(CurveError::NotOnCurve(place.to_string()))
        }
    }

    /// Place with the given affine coordinates, classified by `y`.
    pub fn place_at(&self, x: Rational, y: Rational) -> Result<Place, CurveError> {
        let place = if y.is_zero() {
            Place::Branch { x }
        } else {
            Place::Ordinary { x, y }
        };
        self.check_place(&place)?;
        Ok(place)
    }
}

impl fmt::Display for HyperellipticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    /// Affine point with `y != 0`; local parameter `x - x0`.
    Ordinary { x: Rational, y: Rational },
    /// Affine point with `y = 0`; local parameter `y`.
    Branch { x: Rational },
    /// The unique place over `x = infinity`.
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Ordinary { x, y } => write!(f, "({}, {})", render(x), render(y)),
            Place::Branch { x } => write!(f, "({}, 0)", render(x)),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

fn lcm_of_denominators(f: &UniPoly) -> BigInt {
    f.coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if rest > BigInt::one() {
        primes.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        out = next;
    }
    out
}

/// Distinct rational roots, ascending, by the rational root theorem.
pub fn rational_roots(f: &UniPoly) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut p = f.clone();
    if p.is_zero() {
        return roots;
    }
    if p.coeff(0).is_zero() {
        roots.push(Rational::zero());
        while p.coeff(0).is_zero() && !p.is_constant() {
            p = p.exact_div(&UniPoly::x()).expect("x divides p");
        }
    }
    if p.is_constant() {
        return roots;
    }
    let scale = Rational::from_integer(lcm_of_denominators(&p));
    let ints = p.scale(&scale);
    let lead = ints.leading().expect("nonzero").numer().clone();
    let constant = ints.coeff(0).numer().clone();
    let nums = divisors(&constant);
    let dens = divisors(&lead);
    for q in &dens {
        for n in &nums {
            for sign in [1, -1] {
                let cand = Rational::new(n * sign, q.clone());
                if !roots.contains(&cand) && p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}
