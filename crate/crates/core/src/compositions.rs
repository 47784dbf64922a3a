//! Integer compositions, their partial-sum weights, and filtered
//! composition sums.
//!
//! Sums are evaluated by a depth-first walk that carries a running prefix
//! value, so a product over the parts costs one multiplication per tree node
//! rather than one per part per composition. The walk is split across
//! threads by the first part; since addition is exact the result does not
//! depend on scheduling.

use rayon::prelude::*;

use crate::algebra::{int, Rat, Ring};
use crate::Error;

/// An ordered list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("empty composition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "composition parts must be positive".into(),
            ));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|p|`, the number being composed.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// `ℓ(p)`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Left partial sums `s_1, …, s_ℓ`.
    pub fn partial_sums(&self) -> Vec<u64> {
        self.0
            .iter()
            .scan(0u64, |s, &p| {
                *s += u64::from(p);
                Some(*s)
            })
            .collect()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn even_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// `(s_p, s_{p′})`: products of the partial sums of the composition and
    /// of its reversal.
    pub fn weight_s(&self) -> (Rat, Rat) {
        let prod = |c: &Composition| {
            c.partial_sums()
                .iter()
                .fold(int(1), |acc, &s| acc * int(s as i64))
        };
        (prod(self), prod(&self.reversed()))
    }

    /// `q_p = s_2 s_4 ⋯ s_{ℓ−1}` for odd `ℓ`.
    pub fn weight_q(&self) -> Result<Rat, Error> {
        if self.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(
                "q-weight needs an odd number of parts".into(),
            ));
        }
        Ok(self
            .partial_sums()
            .iter()
            .skip(1)
            .step_by(2)
            .take(self.len() / 2)
            .fold(int(1), |acc, &s| acc * int(s as i64)))
    }

    /// `(p_1+p_2)(p_2+p_3)⋯(p_{ℓ−1}+p_ℓ)`; one for a single part.
    pub fn adjacent_pair_product(&self) -> Rat {
        self.0
            .windows(2)
            .fold(int(1), |acc, w| acc * int(i64::from(w[0] + w[1])))
    }

    /// Both sides of the cubic partial-sum identity:
    /// `(Σp)³ − Σp³` and `Σ_j s_j (n − s_j)(p_j + p_{j+1})`.
    pub fn cube_identity_sides(&self) -> Result<(Rat, Rat), Error> {
        if self.len() < 2 {
            return Err(Error::InvalidArgument(
                "cube identity needs at least two parts".into(),
            ));
        }
        let n = self.size() as i64;
        let cubes: i64 = self.0.iter().map(|&p| i64::from(p).pow(3)).sum();
        let lhs = int(n.pow(3) - cubes);
        let sums = self.partial_sums();
        let rhs: i64 = (0..self.len() - 1)
            .map(|j| {
                let s = sums[j] as i64;
                s * (n - s) * i64::from(self.0[j] + self.0[j + 1])
            })
            .sum();
        Ok((lhs, int(rhs)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LengthFilter {
    Exactly(usize),
    Odd,
    Even,
}

/// Conjunction of the supported constraints. The default admits every
/// composition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    pub length: Option<LengthFilter>,
    pub parts_in: Option<Vec<u32>>,
    pub odd_parts: Option<usize>,
    pub even_parts: Option<usize>,
}

impl Filter {
    pub fn all() -> Self {
        Filter::default()
    }

    pub fn length(mut self, l: LengthFilter) -> Self {
        self.length = Some(l);
        self
    }

    pub fn parts_in(mut self, parts: &[u32]) -> Self {
        self.parts_in = Some(parts.to_vec());
        self
    }

    pub fn odd_parts(mut self, k: usize) -> Self {
        self.odd_parts = Some(k);
        self
    }

    pub fn even_parts(mut self, k: usize) -> Self {
        self.even_parts = Some(k);
        self
    }

    fn admits_part(&self, p: u32) -> bool {
        self.parts_in.as_ref().is_none_or(|set| set.contains(&p))
    }

    /// Whether a prefix with these counts can still be extended to a match.
    fn prefix_ok(&self, len: usize, odd: usize, even: usize) -> bool {
        if let Some(LengthFilter::Exactly(k)) = self.length {
            if len > k {
                return false;
            }
        }
        self.odd_parts.is_none_or(|k| odd <= k) && self.even_parts.is_none_or(|k| even <= k)
    }

    fn complete_ok(&self, len: usize, odd: usize, even: usize) -> bool {
        let len_ok = match self.length {
            None => true,
            Some(LengthFilter::Exactly(k)) => len == k,
            Some(LengthFilter::Odd) => len % 2 == 1,
            Some(LengthFilter::Even) => len.is_multiple_of(2),
        };
        len_ok
            && self.odd_parts.is_none_or(|k| odd == k)
            && self.even_parts.is_none_or(|k| even == k)
    }

    pub fn matches(&self, c: &Composition) -> bool {
        c.parts().iter().all(|&p| self.admits_part(p))
            && self.complete_ok(c.len(), c.odd_parts(), c.even_parts())
    }
}

/// Context handed to the prefix callback when part `j` is appended.
#[derive(Clone, Copy, Debug)]
pub struct Step {
    /// One-based position `j` of the part.
    pub index: usize,
    pub part: u32,
    pub prev: Option<u32>,
    /// `s_{j−1}`.
    pub before: u64,
    /// `s_j`.
    pub after: u64,
    /// `n`.
    pub total: u64,
}

impl Step {
    pub fn is_last(&self) -> bool {
        self.after == self.total
    }
}

fn check_n(n: u64) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(())
}

/// All compositions of `n` admitted by `filter`, ordered by number of parts
/// and then lexicographically.
pub fn enumerate(n: u64, filter: &Filter) -> Result<Vec<Composition>, Error> {
    check_n(n)?;
    let mut out = Vec::new();
    let mut parts = Vec::new();
    walk_parts(n, filter, &mut parts, 0, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

fn walk_parts(n: u64, filter: &Filter, parts: &mut Vec<u32>, sum: u64, out: &mut Vec<Composition>) {
    if sum == n {
        let c = Composition(parts.clone());
        if filter.complete_ok(c.len(), c.odd_parts(), c.even_parts()) {
            out.push(c);
        }
        return;
    }
    for p in 1..=(n - sum) as u32 {
        if !filter.admits_part(p) {
            continue;
        }
        parts.push(p);
        let odd = parts.iter().filter(|&&q| q % 2 == 1).count();
        if filter.prefix_ok(parts.len(), odd, parts.len() - odd) {
            walk_parts(n, filter, parts, sum + u64::from(p), out);
        }
        parts.pop();
    }
}

/// Number of admitted compositions of `n`.
pub fn count(n: u64, filter: &Filter) -> Result<u64, Error> {
    fold_sum(n, filter, int(1), |acc, _| acc.clone())
        .map(|r| u64::try_from(r.to_integer()).expect("count fits in u64"))
}

/// `Σ_p extend(… extend(extend(root, step_1), step_2) …, step_ℓ)` over the
/// compositions of `n` admitted by `filter`.
///
/// Shared prefixes are extended once. A branch whose partial value is zero
/// is pruned, so `extend` must send zero to zero; every multiplicative
/// weight does.
pub fn fold_sum<T, F>(n: u64, filter: &Filter, root: T, extend: F) -> Result<T, Error>
where
    T: Ring + Send + Sync,
    F: Fn(&T, &Step) -> T + Sync,
{
    check_n(n)?;
    let walker = Walker {
        n,
        filter,
        extend: &extend,
    };
    let firsts: Vec<u32> = (1..=n as u32).filter(|&p| filter.admits_part(p)).collect();
    let partials: Vec<T> = firsts
        .into_par_iter()
        .map(|p| {
            let mut acc = T::zero();
            walker.descend(&root, p, None, 0, 1, 0, 0, &mut acc);
            acc
        })
        .collect();
    Ok(partials.iter().fold(T::zero(), |a, b| a.add(b)))
}

struct Walker<'a, F> {
    n: u64,
    filter: &'a Filter,
    extend: &'a F,
}

impl<F> Walker<'_, F> {
    #[allow(clippy::too_many_arguments)]
    fn descend<T: Ring>(
        &self,
        prefix: &T,
        part: u32,
        prev: Option<u32>,
        before: u64,
        index: usize,
        odd: usize,
        even: usize,
        acc: &mut T,
    ) where
        F: Fn(&T, &Step) -> T,
    {
        let (odd, even) = if part % 2 == 1 {
            (odd + 1, even)
        } else {
            (odd, even + 1)
        };
        if !self.filter.prefix_ok(index, odd, even) {
            return;
        }
        let after = before + u64::from(part);
        let step = Step {
            index,
            part,
            prev,
            before,
            after,
            total: self.n,
        };
        let value = (self.extend)(prefix, &step);
        if after == self.n {
            if self.filter.complete_ok(index, odd, even) {
                *acc = acc.add(&value);
            }
            return;
        }
        if value.is_zero() {
            return;
        }
        for p in 1..=(self.n - after) as u32 {
            if self.filter.admits_part(p) {
                self.descend(&value, p, Some(part), after, index + 1, odd, even, acc);
            }
        }
    }
}
