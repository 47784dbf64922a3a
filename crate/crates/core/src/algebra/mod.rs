//! The coefficient tower: rationals, commutative polynomials, rational
//! functions in the spectral parameter, the free associative algebra on the
//! potential generators, and truncated power series over any of these.

mod free;
mod poly;
mod ratfunc;
mod series;
mod upoly;

pub use free::{FreePoly, Word};
pub use poly::{Monomial, Poly, Var};
pub use ratfunc::RatFunc;
pub use series::Series;
pub use upoly::{elementary_symmetric, UPoly};

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serialized form used on the wire: always `num/den`.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A unital ring, not necessarily commutative, that is also a vector space
/// over the rationals.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rat) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_rat(r: &Rat) -> Self {
        Self::one().scale(r)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// A ring containing the spectral parameter as a central element.
pub trait HasNu: Ring {
    fn nu() -> Self;
}

/// A ring in which the spectral parameter may appear in denominators, so that
/// the monic Frobenius recursion can be solved and residues taken.
pub trait NuAlgebra: HasNu {
    /// `self / (c · (ν − shift))`.
    fn div_nu_linear(&self, c: &Rat, shift: i64) -> Self;
    /// Residue at `ν = at`; the result is free of ν.
    fn residue_at(&self, at: i64) -> Result<Self, Error>;
    /// Specialize ν to a rational value.
    fn eval_nu(&self, value: &Rat) -> Result<Self, Error>;
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Sum of an iterator of ring elements.
pub fn sum<A: Ring, I: IntoIterator<Item = A>>(items: I) -> A {
    items.into_iter().fold(A::zero(), |acc, x| acc.add(&x))
}
