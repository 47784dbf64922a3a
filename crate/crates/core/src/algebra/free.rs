use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Rat, Ring};
use crate::algebra::{HasNu, Monomial, NuAlgebra, Poly, Var};
use crate::Error;

/// A word in the free generators `U_1, U_2, …`, stored by generator index.
/// The empty word is the unit.
///
/// Words are ordered by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(k: u32) -> Self {
        Word(vec![k])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the letters.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&k| u64::from(k)).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    /// Runs of a repeated generator are written as powers: `U1^2 U2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == k {
                j += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "U{k}")?;
            } else {
                write!(f, "U{k}^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Element of the free associative algebra over the scalar ring `S`:
/// a finite combination of words. Scalars are central.
#[derive(Clone, Debug, PartialEq)]
pub struct FreePoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Ring> FreePoly<S> {
    pub fn generator(k: u32) -> Self {
        Self::monomial(Word::letter(k), S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        FreePoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut out = FreePoly::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeff_of(&self, letters: &[u32]) -> S {
        self.coeff(&Word::new(letters.to_vec()))
    }

    fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&S) -> T) -> FreePoly<T> {
        FreePoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coeffs<T: Ring>(
        &self,
        f: impl Fn(&S) -> Result<T, Error>,
    ) -> Result<FreePoly<T>, Error> {
        let mut out = FreePoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// `Some(n)` when every word has weight `n`; the zero element is
    /// homogeneous of every weight and yields `None`.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        let mut weights = self.terms.keys().map(Word::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// True when every word has an odd number of letters.
    pub fn all_words_odd(&self) -> bool {
        self.terms.keys().all(|w| w.len() % 2 == 1)
    }

    /// The same element with every word reversed.
    pub fn reversed(&self) -> Self {
        FreePoly::from_terms(self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())))
    }
}

impl FreePoly<Rat> {
    /// Image under the quotient map to the commutative polynomial ring on
    /// `Gen(k)`.
    pub fn abelianize(&self) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            let m = Monomial::from_pairs(w.letters().iter().map(|&k| (Var::Gen(k), 1)));
            out = out.add(&Poly::term(c.clone(), m));
        }
        out
    }
}

impl<S: Ring> Ring for FreePoly<S> {
    fn zero() -> Self {
        FreePoly {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        FreePoly::constant(S::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        self.map_coeffs(S::neg)
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = FreePoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        out
    }
    fn scale(&self, r: &Rat) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }
}

impl<S: HasNu> HasNu for FreePoly<S> {
    fn nu() -> Self {
        FreePoly::constant(S::nu())
    }
}

impl<S: NuAlgebra> NuAlgebra for FreePoly<S> {
    fn div_nu_linear(&self, c: &Rat, shift: i64) -> Self {
        self.map_coeffs(|s| s.div_nu_linear(c, shift))
    }

    fn residue_at(&self, at: i64) -> Result<Self, Error> {
        self.try_map_coeffs(|s| s.residue_at(at))
    }

    fn eval_nu(&self, value: &Rat) -> Result<Self, Error> {
        self.try_map_coeffs(|s| s.eval_nu(value))
    }
}

impl<S: Ring + fmt::Display> fmt::Display for FreePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            // a plain negative scalar is folded into the separator
            let (negative, cs) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, cs),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                write!(f, "{w}")?;
            } else if cs.contains(' ') {
                write!(f, "({cs}) {w}")?;
            } else {
                write!(f, "{cs} {w}")?;
            }
        }
        Ok(())
    }
}
