use std::fmt;

use super::{Rat, Ring};
use crate::algebra::{HasNu, NuAlgebra, Poly, UPoly, Var};
use crate::Error;

/// Quotient of a polynomial (in ν and any parameters) by a polynomial in ν
/// alone.
///
/// Canonical form: the denominator is monic and shares no factor with the
/// numerator, where the numerator is viewed as a polynomial in ν with
/// coefficients indexed by parameter monomials. Two canonical quotients are
/// equal exactly when they are equal as rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: Poly, den: UPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    /// The numerator when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den == UPoly::one()).then_some(&self.num)
    }

    pub fn is_nu_free(&self) -> bool {
        self.den == UPoly::one() && !self.num.contains_var(Var::Nu)
    }

    fn normalized(num: Poly, den: UPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let mut num = num;
        let mut den = den;
        if den.degree() != Some(0) {
            let parts = num.coefficients_in(Var::Nu);
            let g = parts.values().fold(den.clone(), |g, p| g.gcd(p));
            if g.degree().unwrap_or(0) > 0 {
                den = den.exact_div(&g).expect("gcd divides the denominator");
                let reduced = parts
                    .into_iter()
                    .map(|(m, p)| (m, p.exact_div(&g).expect("gcd divides the numerator")))
                    .collect();
                num = Poly::from_coefficients_in(Var::Nu, &reduced);
            }
        }
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc != <Rat as Ring>::one() {
            let inv = <Rat as Ring>::one() / &lc;
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        RatFunc { num, den }
    }

    fn is_scalar(&self) -> Option<Rat> {
        if self.den == UPoly::one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Exact residue at `ν = at`. Zero when there is no pole there; an error
    /// when the pole has order two or more.
    pub fn residue(&self, at: i64) -> Result<Rat, Error> {
        let r = self.residue_at(at)?;
        r.num.as_constant().ok_or(Error::NotScalar)
    }

    /// Divides by another quotient whose numerator involves only ν.
    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, Error> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let parts = other.num.coefficients_in(Var::Nu);
        if parts.len() != 1 || !parts.keys().next().unwrap().is_one() {
            return Err(Error::Unsupported(
                "division by a quotient whose numerator involves parameters".into(),
            ));
        }
        let other_num = parts.into_values().next().unwrap();
        let num = self.num.mul(&other.den.to_poly(Var::Nu));
        Ok(Self::normalized(num, self.den.mul(&other_num)))
    }

    /// Substitutes a parameter (never ν) by a polynomial free of ν.
    pub fn subs_param(&self, v: Var, value: &Poly) -> RatFunc {
        debug_assert!(v != Var::Nu);
        Self::normalized(self.num.subs(v, value), self.den.clone())
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let a = other.den.exact_div(&g).unwrap();
        let b = self.den.exact_div(&g).unwrap();
        let num = self
            .num
            .mul(&a.to_poly(Var::Nu))
            .add(&other.num.mul(&b.to_poly(Var::Nu)));
        Self::normalized(num, self.den.mul(&a))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        if let Some(c) = other.is_scalar() {
            return self.scale(&c);
        }
        if let Some(c) = self.is_scalar() {
            return other.scale(&c);
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn scale(&self, r: &Rat) -> Self {
        if Ring::is_zero(r) {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }
}

impl HasNu for RatFunc {
    fn nu() -> Self {
        RatFunc::from_poly(Poly::var(Var::Nu))
    }
}

impl NuAlgebra for RatFunc {
    fn div_nu_linear(&self, c: &Rat, shift: i64) -> Self {
        let lin = UPoly::linear(&Rat::from_integer(shift.into()));
        Self::normalized(
            self.num.scale(&(<Rat as Ring>::one() / c)),
            self.den.mul(&lin),
        )
    }

    fn residue_at(&self, at: i64) -> Result<Self, Error> {
        let root = Rat::from_integer(at.into());
        match self.den.root_multiplicity(&root) {
            0 => Ok(RatFunc::zero()),
            1 => {
                let rest = self.den.exact_div(&UPoly::linear(&root)).unwrap();
                let value = self.num.eval(Var::Nu, &root);
                Ok(RatFunc::from_poly(
                    value.scale(&(<Rat as Ring>::one() / rest.eval(&root))),
                ))
            }
            order => Err(Error::HigherOrderPole { at, order }),
        }
    }

    fn eval_nu(&self, value: &Rat) -> Result<Self, Error> {
        let d = self.den.eval(value);
        if Ring::is_zero(&d) {
            return Err(Error::Pole(value.to_string()));
        }
        Ok(RatFunc::from_poly(
            self.num
                .eval(Var::Nu, value)
                .scale(&(<Rat as Ring>::one() / d)),
        ))
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den.to_poly(Var::Nu))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn nu() -> Poly {
        Poly::var(Var::Nu)
    }

    fn over_linear(num: Poly, roots: &[i64]) -> RatFunc {
        let den = roots
            .iter()
            .fold(UPoly::one(), |d, &r| d.mul(&UPoly::linear(&int(r))));
        RatFunc::new(num, den).unwrap()
    }

    #[test]
    fn simple_residues() {
        let f = over_linear(Poly::one(), &[3]);
        assert_eq!(f.residue(3).unwrap(), int(1));
        let g = over_linear(nu().add(&Poly::one()), &[2, 5]);
        assert_eq!(g.residue(2).unwrap(), int(-1));
        assert_eq!(g.residue(5).unwrap(), int(2));
        assert_eq!(g.residue(4).unwrap(), int(0));
    }

    #[test]
    fn double_pole_is_reported() {
        let f = over_linear(Poly::one(), &[2, 2]);
        assert!(matches!(
            f.residue(2),
            Err(Error::HigherOrderPole { at: 2, order: 2 })
        ));
    }

    #[test]
    fn cancellation_to_lowest_terms() {
        // (ν² − 1) / ((ν − 1)(ν + 2)) = (ν + 1)/(ν + 2)
        let f = over_linear(nu().pow(2).sub(&Poly::one()), &[1, -2]);
        assert_eq!(f.den(), &UPoly::linear(&int(-2)));
        assert_eq!(f.residue(1).unwrap(), int(0));
        // cancelled factor with a parameter-dependent numerator
        let u = Poly::var(Var::U);
        let g = over_linear(u.mul(&nu().sub(&Poly::constant(int(4)))), &[4, 1]);
        assert_eq!(g, over_linear(u, &[1]));
    }

    #[test]
    fn addition_finds_common_denominator() {
        // 1/(ν−1) − 1/(ν−2) = −1/((ν−1)(ν−2))
        let a = over_linear(Poly::one(), &[1]);
        let b = over_linear(Poly::one(), &[2]);
        assert_eq!(a.sub(&b), over_linear(Poly::constant(int(-1)), &[1, 2]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn equality_matches_cross_multiplication() {
        let a = RatFunc::new(nu().scale(&int(2)), UPoly::new(vec![int(2), int(4)])).unwrap();
        let b = RatFunc::new(nu(), UPoly::new(vec![int(1), int(2)])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.den().leading(), Some(&int(1)));
    }

    #[test]
    fn evaluation() {
        let f = over_linear(nu(), &[1]);
        assert_eq!(f.eval_nu(&int(-1)).unwrap(), RatFunc::from(rat(1, 2)));
        assert!(f.eval_nu(&int(1)).is_err());
    }
}
