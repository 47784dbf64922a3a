use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Rat, Ring};
use crate::algebra::{HasNu, UPoly};

/// Commuting indeterminates. The declaration order is the variable order
/// used by the graded lexicographic monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Nu,
    U,
    V,
    U0,
    U1,
    Omega,
    Alpha,
    Beta,
    Gamma,
    Lambda,
    Mu,
    X,
    /// Abelianized image of the free generator `U_k`.
    Gen(u32),
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::Nu => "nu".into(),
            Var::U => "u".into(),
            Var::V => "v".into(),
            Var::U0 => "u0".into(),
            Var::U1 => "u1".into(),
            Var::Omega => "omega".into(),
            Var::Alpha => "alpha".into(),
            Var::Beta => "beta".into(),
            Var::Gamma => "gamma".into(),
            Var::Lambda => "lambda".into(),
            Var::Mu => "mu".into(),
            Var::X => "x".into(),
            Var::Gen(k) => format!("U{k}"),
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        Some(match name {
            "nu" => Var::Nu,
            "u" => Var::U,
            "v" => Var::V,
            "u0" => Var::U0,
            "u1" => Var::U1,
            "omega" => Var::Omega,
            "alpha" => Var::Alpha,
            "beta" => Var::Beta,
            "gamma" => Var::Gamma,
            "lambda" => Var::Lambda,
            "mu" => Var::Mu,
            "x" => Var::X,
            _ => {
                let k = name.strip_prefix('U')?.parse().ok()?;
                Var::Gen(k)
            }
        })
    }
}

/// Sparse exponent vector, sorted by variable, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits off the power of `v`.
    pub fn split(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        let rest = self.0.iter().copied().filter(|&(w, _)| w != v).collect();
        (e, Monomial(rest))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// earliest declared variable decides.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.name()
                } else {
                    format!("{}^{}", v.name(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Multivariate polynomial with exact rational coefficients, kept in
/// canonical form (no stored zeros).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(<Rat as Ring>::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&c) {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(<Rat as Ring>::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(<Rat as Ring>::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if Ring::is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if Ring::is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Views the polynomial as a polynomial in `v` whose coefficients are
    /// indexed by the remaining monomial.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<Monomial, UPoly> {
        let mut out: BTreeMap<Monomial, BTreeMap<u32, Rat>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            out.entry(rest).or_default().insert(e, c.clone());
        }
        out.into_iter()
            .map(|(m, cs)| {
                let deg = *cs.keys().max().unwrap() as usize;
                let mut dense = vec![<Rat as Ring>::zero(); deg + 1];
                for (e, c) in cs {
                    dense[e as usize] = c;
                }
                (m, UPoly::new(dense))
            })
            .collect()
    }

    /// Inverse of [`Poly::coefficients_in`].
    pub fn from_coefficients_in(v: Var, parts: &BTreeMap<Monomial, UPoly>) -> Poly {
        let mut out = Poly::default();
        for (rest, up) in parts {
            for (e, c) in up.coeffs().iter().enumerate() {
                out.add_term(rest.mul(&Monomial::var(v, e as u32)), c.clone());
            }
        }
        out
    }

    /// Substitutes `v := value`.
    pub fn subs(&self, v: Var, value: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            out = out.add(&powers[e as usize].mul(&Poly::term(c.clone(), rest)));
        }
        out
    }

    pub fn eval(&self, v: Var, value: &Rat) -> Poly {
        self.subs(v, &Poly::constant(value.clone()))
    }

    /// Coefficient of `v^e` as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: Var, e: u32) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let (k, rest) = m.split(v);
            if k == e {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Applies a derivation given by the images of the variables.
    pub fn derive_with(&self, image: impl Fn(Var) -> Poly) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            for &(v, e) in m.pairs() {
                let (_, rest) = m.split(v);
                let lowered = rest.mul(&Monomial::var(v, e - 1));
                let t = Poly::term(c * Rat::from_integer(e.into()), lowered);
                out = out.add(&t.mul(&image(v)));
            }
        }
        out
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(<Rat as Ring>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    fn scale(&self, r: &Rat) -> Self {
        if Ring::is_zero(r) {
            return Poly::default();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }
}

impl HasNu for Poly {
    fn nu() -> Self {
        Poly::var(Var::Nu)
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

pub(crate) fn fmt_rat_coeff(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Ascending monomial order, e.g. `v + 2/3 v^2 + 1/12 v^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &<Rat as Ring>::zero();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", fmt_rat_coeff(&abs))?;
            } else if abs == <Rat as Ring>::one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {}", fmt_rat_coeff(&abs), m)?;
            }
        }
        Ok(())
    }
}
