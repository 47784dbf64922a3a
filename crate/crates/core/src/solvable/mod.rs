//! Exactly solvable potentials: Eckart, Pöschl–Teller and Morse.
//!
//! Their residues are bivariate polynomials in `(u, v)` that factor
//! completely over the rationals. Factorizations are checked by expanding
//! the closed-form products and comparing canonical forms.

mod hypergeometric;
mod identities;

pub use hypergeometric::*;
pub use identities::*;

use std::fmt;

use crate::algebra::{int, rat, Poly, Rat, Ring, Series, Var};
use crate::compositions::{fold_sum, Filter, Step};
use crate::transforms::residues_from_potential;
use crate::{Check, Error, Mismatch};

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    (1..=n).fold(int(1), |acc, k| acc * int(k as i64))
}

/// `K = 1/(n!(n−1)!)`.
pub fn normalizer(n: u64) -> Rat {
    int(1) / (factorial(n) * factorial(n - 1))
}

fn var(v: Var) -> Poly {
    Poly::var(v)
}

fn cst(r: Rat) -> Poly {
    Poly::constant(r)
}

fn cint(n: i64) -> Poly {
    cst(int(n))
}

/// The `1/(s_j (n − s_{j−1}))` factor contributed by each step of a walk;
/// their product over a composition is `1/(s_p s_{p′})`.
pub(crate) fn walk_weight(st: &Step) -> Rat {
    rat(1, (st.after * (st.total - st.before)) as i64)
}

/// A potential `U(z) = Σ U_k z^k` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub enum PotentialFamily {
    /// `U_k = u + k v`.
    Eckart,
    /// `U_k = k(v + u)` for odd `k`, `k(v − u)` for even `k`.
    PoschlTeller,
    /// `U_1 = u`, `U_2 = v`, nothing else.
    Morse,
    /// `U_k` is entry `k − 1`; missing entries are zero.
    Custom(Vec<Poly>),
}

impl PotentialFamily {
    pub fn name(&self) -> &'static str {
        match self {
            PotentialFamily::Eckart => "eckart",
            PotentialFamily::PoschlTeller => "poschl-teller",
            PotentialFamily::Morse => "morse",
            PotentialFamily::Custom(_) => "custom",
        }
    }

    /// Parses one of the named families.
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "eckart" => Some(PotentialFamily::Eckart),
            "poschl-teller" | "pt" => Some(PotentialFamily::PoschlTeller),
            "morse" => Some(PotentialFamily::Morse),
            _ => None,
        }
    }

    pub fn coefficient(&self, k: usize) -> Poly {
        let kk = cint(k as i64);
        match self {
            PotentialFamily::Eckart => var(Var::U).add(&kk.mul(&var(Var::V))),
            PotentialFamily::PoschlTeller if k % 2 == 1 => kk.mul(&var(Var::V).add(&var(Var::U))),
            PotentialFamily::PoschlTeller => kk.mul(&var(Var::V).sub(&var(Var::U))),
            PotentialFamily::Morse => match k {
                1 => var(Var::U),
                2 => var(Var::V),
                _ => Poly::zero(),
            },
            PotentialFamily::Custom(cs) => match k {
                0 => Poly::zero(),
                _ => cs.get(k - 1).cloned().unwrap_or_default(),
            },
        }
    }

    pub fn potential_series(&self, order: usize) -> Series<Poly> {
        Series::from_grades(order, |k| self.coefficient(k))
    }
}

impl fmt::Display for PotentialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rewrites a polynomial in the parity parameters `u0 = v − u`,
/// `u1 = v + u` in terms of `(u, v)`.
pub fn parity_to_uv(p: &Poly) -> Poly {
    let u0 = var(Var::V).sub(&var(Var::U));
    let u1 = var(Var::V).add(&var(Var::U));
    p.subs(Var::U0, &u0).subs(Var::U1, &u1)
}

/// The `n`-th residue of a family as a polynomial in `(u, v)`, by the
/// family's own composition sum.
pub fn residue_polynomial(family: &PotentialFamily, n: usize) -> Result<Poly, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let nn = n as u64;
    let root = cint(n as i64);
    match family {
        PotentialFamily::Eckart => fold_sum(nn, &Filter::all(), root, |acc, st| {
            let factor = var(Var::U).add(&var(Var::V).scale(&int(i64::from(st.part))));
            acc.mul(&factor).scale(&walk_weight(st))
        }),
        PotentialFamily::PoschlTeller => {
            // weighted by the numbers of odd and even parts
            let sum = fold_sum(nn, &Filter::all(), root, |acc, st| {
                let param = if st.part % 2 == 1 { Var::U1 } else { Var::U0 };
                acc.mul(&var(param))
                    .scale(&(int(i64::from(st.part)) * walk_weight(st)))
            })?;
            Ok(parity_to_uv(&sum))
        }
        PotentialFamily::Morse => {
            fold_sum(nn, &Filter::all().parts_in(&[1, 2]), root, |acc, st| {
                let param = if st.part == 1 { Var::U } else { Var::V };
                acc.mul(&var(param)).scale(&walk_weight(st))
            })
        }
        PotentialFamily::Custom(_) => Ok(residues_from_potential(&family.potential_series(n))?
            .coeff(n)
            .clone()),
    }
}

/// `a_{n,i} = i(n − i)`.
pub fn eckart_a(n: u64, i: u64) -> i64 {
    (i * (n - i)) as i64
}

/// `b_{n,i} = n − 1 − 2i`.
pub fn eckart_b(n: u64, i: u64) -> i64 {
    n as i64 - 1 - 2 * i as i64
}

/// `(u+v+a_{n,i})(u+v+a_{n,i+1}) + b_{n,i}² v`.
pub fn eckart_factor(n: u64, i: u64) -> Poly {
    let s = var(Var::U).add(&var(Var::V));
    let left = s.add(&cint(eckart_a(n, i)));
    let right = s.add(&cint(eckart_a(n, i + 1)));
    left.mul(&right)
        .add(&var(Var::V).scale(&int(eckart_b(n, i).pow(2))))
}

/// `u1² + 2k²u0 + k⁴ − k²`.
pub fn pt_factor(k: i64) -> Poly {
    var(Var::U1)
        .pow(2)
        .add(&var(Var::U0).scale(&int(2 * k * k)))
        .add(&cint(k.pow(4) - k * k))
}

/// `u² + k²v`.
pub fn morse_factor(k: i64) -> Poly {
    var(Var::U).pow(2).add(&var(Var::V).scale(&int(k * k)))
}

/// The closed-form factorization of the `n`-th residue, expanded.
pub fn closed_form_product(family: &PotentialFamily, n: usize) -> Result<Poly, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let nn = n as u64;
    let m = nn / 2;
    let odd = nn % 2 == 1;
    let k = cst(normalizer(nn));
    let product = |factors: Vec<Poly>| factors.iter().fold(k.clone(), |acc, f| acc.mul(f));
    match family {
        PotentialFamily::Eckart => {
            let mut fs: Vec<Poly> = (0..m).map(|i| eckart_factor(nn, i)).collect();
            if odd {
                fs.push(var(Var::U).add(&var(Var::V)).add(&cint(eckart_a(nn, m))));
            }
            Ok(product(fs))
        }
        PotentialFamily::PoschlTeller => {
            let parity = if odd { 0 } else { 1 };
            let mut fs: Vec<Poly> = (1..n as i64)
                .filter(|k| k % 2 == parity)
                .map(pt_factor)
                .collect();
            if odd {
                fs.push(var(Var::U1));
            }
            Ok(parity_to_uv(&product(fs)))
        }
        PotentialFamily::Morse => {
            let parity = if odd { 0 } else { 1 };
            let mut fs: Vec<Poly> = (1..n as i64)
                .filter(|k| k % 2 == parity)
                .map(morse_factor)
                .collect();
            if odd {
                fs.push(var(Var::U));
            }
            Ok(product(fs))
        }
        PotentialFamily::Custom(_) => Err(Error::Unsupported(
            "no closed form for a custom potential".into(),
        )),
    }
}

/// Compares two polynomials, reporting the first monomial where they differ.
pub fn compare_polys(left: &Poly, right: &Poly, grade: usize, what: &str) -> Check {
    let diff = left.sub(right);
    let first = diff
        .terms()
        .next()
        .map(|(m, c)| format!("{what}: coefficient of {m} differs by {c}"));
    match first {
        None => Ok(()),
        Some(detail) => Err(Mismatch::new(grade, detail)),
    }
}

/// Composition sum against the expanded closed-form product.
pub fn verify_factorization(family: &PotentialFamily, n: usize) -> Check {
    let sum = residue_polynomial(family, n)?;
    let product = closed_form_product(family, n)?;
    compare_polys(&sum, &product, n, &format!("{family} residue vs product"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Poly {
        var(Var::U)
    }

    fn v() -> Poly {
        var(Var::V)
    }

    #[test]
    fn eckart_at_u_zero() {
        let r3 = residue_polynomial(&PotentialFamily::Eckart, 3)
            .unwrap()
            .eval(Var::U, &int(0));
        assert_eq!(r3.to_string(), "v + 2/3 v^2 + 1/12 v^3");
    }

    #[test]
    fn morse_low_orders() {
        let r3 = residue_polynomial(&PotentialFamily::Morse, 3).unwrap();
        let expected = u()
            .pow(3)
            .scale(&rat(1, 12))
            .add(&u().mul(&v()).scale(&rat(1, 3)));
        assert_eq!(r3, expected);
        let p2 = closed_form_product(&PotentialFamily::Morse, 2).unwrap();
        assert_eq!(p2, u().pow(2).scale(&rat(1, 2)).add(&v().scale(&rat(1, 2))));
    }

    #[test]
    fn first_residue_is_first_coefficient() {
        for fam in [
            PotentialFamily::Eckart,
            PotentialFamily::PoschlTeller,
            PotentialFamily::Morse,
        ] {
            assert_eq!(residue_polynomial(&fam, 1).unwrap(), fam.coefficient(1));
        }
    }

    #[test]
    fn eckart_bridge_at_two() {
        // a_{2,1} = 1, b_{2,0} = 1
        let expected = u().add(&v()).mul(&u().add(&v()).add(&cint(1))).add(&v());
        assert_eq!(eckart_factor(2, 0), expected);
    }

    #[test]
    fn small_factorizations() {
        for n in 1..=5 {
            for fam in [
                PotentialFamily::Eckart,
                PotentialFamily::PoschlTeller,
                PotentialFamily::Morse,
            ] {
                assert!(verify_factorization(&fam, n).is_ok(), "{fam} n={n}");
            }
        }
    }

    #[test]
    fn custom_matches_generic_route() {
        let fam = PotentialFamily::Custom(vec![u(), Poly::zero(), v()]);
        assert_eq!(fam.coefficient(4), Poly::zero());
        let r = residue_polynomial(&fam, 4).unwrap();
        let direct = residues_from_potential(&fam.potential_series(4)).unwrap();
        assert_eq!(&r, direct.coeff(4));
    }
}
