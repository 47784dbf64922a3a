use std::fmt;

use super::{Rat, Ring};
use crate::algebra::{Monomial, Poly, Var};

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn x() -> Self {
        UPoly::new(vec![Ring::zero(), Ring::one()])
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    /// `x − root`.
    pub fn linear(root: &Rat) -> Self {
        UPoly::new(vec![-root, Ring::one()])
    }

    /// `∏ (x + r)` over the given constants.
    pub fn product_of_shifts<'a>(shifts: impl IntoIterator<Item = &'a Rat>) -> Self {
        shifts
            .into_iter()
            .fold(UPoly::one(), |acc, r| acc.mul(&UPoly::linear(&-r)))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Ring::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            None => UPoly::default(),
            Some(lc) => self.scale(&(<Rat as Ring>::one() / lc)),
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(<Rat as Ring>::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (UPoly::default(), UPoly::default());
        };
        if nd < dd {
            return (UPoly::default(), self.clone());
        }
        let mut quot = vec![<Rat as Ring>::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / lc;
            if !Ring::is_zero(&c) {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of `root` as a zero.
    pub fn root_multiplicity(&self, root: &Rat) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = UPoly::linear(root);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    pub fn to_poly(&self, v: Var) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (e, c)| {
                acc.add(&Poly::term(c.clone(), Monomial::var(v, e as u32)))
            })
    }
}

impl Ring for UPoly {
    fn zero() -> Self {
        UPoly::default()
    }
    fn one() -> Self {
        UPoly::constant(Ring::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
    fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::default();
        }
        let mut out = vec![<Rat as Ring>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
    fn scale(&self, r: &Rat) -> Self {
        UPoly::new(self.coeffs.iter().map(|c| c * r).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(Var::X))
    }
}

/// Elementary symmetric polynomial `e_k` of the given values.
pub fn elementary_symmetric(values: &[Rat], k: usize) -> Rat {
    // e_j of a growing prefix
    let mut e = vec![<Rat as Ring>::zero(); k + 1];
    e[0] = Ring::one();
    for x in values {
        for j in (1..=k).rev() {
            let t = &e[j - 1] * x;
            e[j] += t;
        }
    }
    e[k].clone()
}
