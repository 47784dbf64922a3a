use std::fmt;

use super::{Rat, Ring};
use crate::Error;

/// Truncated power series `a_0 + a_1 z + … + a_N z^N` with coefficients in a
/// (possibly noncommutative) ring. The truncation order `N` is part of the
/// value; binary operations require equal orders.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<A> {
    coeffs: Vec<A>,
}

impl<A: Ring> Series<A> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![A::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = A::one();
        s
    }

    /// Builds a series from leading coefficients; missing grades are zero and
    /// grades beyond `order` are dropped.
    pub fn truncated(order: usize, coeffs: impl IntoIterator<Item = A>) -> Self {
        let mut s = Self::zero(order);
        for (n, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> A) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// A series with zero constant term and the given coefficients for
    /// grades `1..=order`.
    pub fn from_grades(order: usize, f: impl Fn(usize) -> A) -> Self {
        Self::from_fn(order, |n| if n == 0 { A::zero() } else { f(n) })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &A {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&A> {
        self.coeffs.get(n)
    }

    pub fn set(&mut self, n: usize, value: A) {
        self.coeffs[n] = value;
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(A::is_zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0] == A::one()
    }

    pub fn has_zero_constant(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    fn check_order(&self, other: &Self) -> Result<(), Error> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::MismatchedOrder {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(A::neg)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map(|a| a.scale(r))
    }

    /// Multiplies every coefficient on the left by a ring element.
    pub fn left_mul(&self, c: &A) -> Self {
        self.map(|a| c.mul(a))
    }

    /// Graded convolution `(ab)_n = Σ a_i b_{n−i}`, keeping the left factor
    /// on the left.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// The Euler operator `D = z d/dz`: grade `n` is multiplied by `n`.
    pub fn euler(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a.scale(&Rat::from_integer((n as i64).into())))
                .collect(),
        }
    }

    /// Two-sided inverse of a series with constant term one.
    pub fn invert_monic(&self) -> Result<Self, Error> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let order = self.order();
        let mut inv = Self::one(order);
        for n in 1..=order {
            let mut acc = A::zero();
            for i in 1..=n {
                acc = acc.add(&self.coeffs[i].mul(&inv.coeffs[n - i]));
            }
            inv.coeffs[n] = acc.neg();
        }
        Ok(inv)
    }

    /// Solution `e` of `D e = D(σ) e`, `e_0 = 1`; this is `exp(σ)` when the
    /// coefficients commute.
    pub fn exp_commutative(&self) -> Result<Self, Error> {
        if !self.has_zero_constant() {
            return Err(Error::NonzeroConstant);
        }
        let order = self.order();
        let ds = self.euler();
        let mut e = Self::one(order);
        for n in 1..=order {
            let mut acc = A::zero();
            for k in 1..=n {
                acc = acc.add(&ds.coeffs[k].mul(&e.coeffs[n - k]));
            }
            e.coeffs[n] = acc.scale(&Rat::new(1.into(), (n as i64).into()));
        }
        Ok(e)
    }

    pub fn map<B: Ring>(&self, f: impl Fn(&A) -> B) -> Series<B> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<B: Ring>(&self, f: impl Fn(&A) -> Result<B, Error>) -> Result<Series<B>, Error> {
        Ok(Series {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Drops grades above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// First grade at which two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        if self.order() != other.order() {
            return Some(0);
        }
        (0..=self.order()).find(|&n| self.coeffs[n] != other.coeffs[n])
    }
}

impl<A: Ring + fmt::Display> fmt::Display for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) z")?,
                _ => write!(f, "({c}) z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, FreePoly};

    type F = FreePoly<Rat>;

    fn u1z(order: usize) -> Series<F> {
        Series::truncated(order, [F::zero(), F::generator(1)])
    }

    #[test]
    fn single_term_product() {
        let s = u1z(2).mul(&u1z(2)).unwrap();
        assert_eq!(s.coeff(2), &F::generator(1).pow(2));
        assert!(s.coeff(1).is_zero());
    }

    #[test]
    fn free_difference_of_squares() {
        let one = Series::<F>::one(2);
        let a = one.add(&u1z(2)).unwrap();
        let b = one.sub(&u1z(2)).unwrap();
        let p = a.mul(&b).unwrap();
        let expected = Series::truncated(2, [F::one(), F::zero(), F::generator(1).pow(2).neg()]);
        assert_eq!(p, expected);
    }

    #[test]
    fn commutative_square() {
        // (z + z²)² = z² + 2z³ + O(z⁴)
        let u = Series::truncated(3, [int(0), int(1), int(1)]);
        let sq = u.mul(&u).unwrap();
        assert_eq!(sq, Series::truncated(3, [int(0), int(0), int(1), int(2)]));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = Series::<Rat>::one(2);
        let b = Series::<Rat>::one(3);
        assert!(matches!(
            a.mul(&b),
            Err(Error::MismatchedOrder { left: 2, right: 3 })
        ));
    }

    #[test]
    fn euler_operator() {
        let s = u1z(3);
        assert_eq!(s.euler(), s);
        let t = Series::truncated(3, [int(0), int(1), int(0), int(1)]);
        assert_eq!(
            t.euler(),
            Series::truncated(3, [int(0), int(1), int(0), int(3)])
        );
        let u = Series::from_grades(5, |k| F::generator(k as u32));
        let d3 = u.euler().euler().euler();
        for k in 1..=5 {
            assert_eq!(
                d3.coeff(k),
                &F::generator(k as u32).scale(&int((k * k * k) as i64))
            );
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(
            Series::<Rat>::one(4).invert_monic().unwrap(),
            Series::one(4)
        );
        let g = Series::truncated(4, [int(1), int(1)])
            .invert_monic()
            .unwrap();
        assert_eq!(
            g,
            Series::truncated(4, [int(1), int(-1), int(1), int(-1), int(1)])
        );
        let a = Series::<F>::one(2).add(&u1z(2)).unwrap();
        let inv = a.invert_monic().unwrap();
        let expected =
            Series::truncated(2, [F::one(), F::generator(1).neg(), F::generator(1).pow(2)]);
        assert_eq!(inv, expected);
        assert!(matches!(u1z(2).invert_monic(), Err(Error::NotMonic)));
    }

    #[test]
    fn exponential_of_z() {
        let e = Series::truncated(4, [int(0), int(1)])
            .exp_commutative()
            .unwrap();
        let expected = [
            int(1),
            int(1),
            Rat::new(1.into(), 2.into()),
            Rat::new(1.into(), 6.into()),
            Rat::new(1.into(), 24.into()),
        ];
        assert_eq!(e.coeffs(), &expected);
    }
}
