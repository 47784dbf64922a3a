//! Brute-force oracles: every sum is taken over an explicit list of
//! compositions, with weights computed from the composition itself rather
//! than from the prefix recursions used by the library.

#![allow(dead_code)]

use specres::algebra::{int, FreePoly, Poly, Rat, RatFunc, Ring, Series, UPoly, Var, Word};
use specres::compositions::{enumerate, Composition, Filter, LengthFilter};

pub type Free = FreePoly<Rat>;

pub fn compositions(n: u64) -> Vec<Composition> {
    enumerate(n, &Filter::all()).unwrap()
}

pub fn word(c: &Composition) -> Word {
    Word::new(c.parts().to_vec())
}

/// Product `x_{p_1} x_{p_2} ⋯ x_{p_l}` of entries of a series.
pub fn product_of<A: Ring>(s: &Series<A>, c: &Composition) -> A {
    c.parts()
        .iter()
        .fold(A::one(), |acc, &p| acc.mul(s.coeff(p as usize)))
}

/// `ρ_n = Σ n/(s_p s_{p′}) U_p`.
pub fn rho_brute<A: Ring>(u: &Series<A>, n: u64) -> A {
    compositions(n).iter().fold(A::zero(), |acc, c| {
        let (s, sr) = c.weight_s();
        acc.add(&product_of(u, c).scale(&(int(n as i64) / (s * sr))))
    })
}

/// `U_n = Σ (−1)^{l−1} n/((p_1+p_2)⋯(p_{l−1}+p_l)) ρ_p`.
pub fn u_brute<A: Ring>(rho: &Series<A>, n: u64) -> A {
    compositions(n).iter().fold(A::zero(), |acc, c| {
        let sign = if c.len() % 2 == 1 { int(1) } else { int(-1) };
        let w = sign * int(n as i64) / c.adjacent_pair_product();
        acc.add(&product_of(rho, c).scale(&w))
    })
}

fn odd_length(n: u64) -> Vec<Composition> {
    enumerate(n, &Filter::all().length(LengthFilter::Odd)).unwrap()
}

/// `W_n = Σ_{ℓ odd} ρ_p / ((p_1+p_2)⋯(p_{l−1}+p_l))`.
pub fn w_brute<A: Ring>(rho: &Series<A>, n: u64) -> A {
    odd_length(n).iter().fold(A::zero(), |acc, c| {
        acc.add(&product_of(rho, c).scale(&(int(1) / c.adjacent_pair_product())))
    })
}

/// `ρ_n = Σ_{ℓ odd} (−1)^{(ℓ−1)/2} W_p / (q_p q_{p′})`.
pub fn rho_from_w_brute<A: Ring>(w: &Series<A>, n: u64) -> A {
    odd_length(n).iter().fold(A::zero(), |acc, c| {
        let sign = if (c.len() / 2) % 2 == 0 {
            int(1)
        } else {
            int(-1)
        };
        let q = c.weight_q().unwrap() * c.reversed().weight_q().unwrap();
        acc.add(&product_of(w, c).scale(&(sign / q)))
    })
}

/// `1/∏_j s_j(ν − s_j)` as a rational function of `ν`.
fn frobenius_weight(c: &Composition) -> RatFunc {
    c.partial_sums().iter().fold(RatFunc::one(), |acc, &s| {
        let den = UPoly::new(vec![int(-(s as i64)), int(1)]).scale(&int(s as i64));
        acc.mul(&RatFunc::new(Poly::one(), den).unwrap())
    })
}

/// `φ_n` of `z²∂² + (1−ν)z∂ + U`: `Σ U_{p_l} ⋯ U_{p_1} / ∏ s_j(ν − s_j)`,
/// the potential of the most recent step standing on the left.
pub fn phi_brute(n: u64) -> FreePoly<RatFunc> {
    compositions(n).iter().fold(FreePoly::zero(), |acc, c| {
        let reversed = Word::new(c.parts().iter().rev().copied().collect());
        acc.add(&FreePoly::monomial(reversed, frobenius_weight(c)))
    })
}

/// `φ_n` of a general commutative operator with `P_k`, `Q_k` given: each
/// step `p_j` contributes `(s_{j−1} P_{p_j} + Q_{p_j}) / (s_j(ν − s_j))`.
pub fn phi_general_brute(p: &Series<Poly>, q: &Series<Poly>, n: u64) -> RatFunc {
    compositions(n).iter().fold(RatFunc::zero(), |acc, c| {
        let sums = c.partial_sums();
        let num = c
            .parts()
            .iter()
            .enumerate()
            .fold(Poly::one(), |num, (j, &part)| {
                let before = if j == 0 { 0 } else { sums[j - 1] };
                let factor = p
                    .coeff(part as usize)
                    .scale(&int(before as i64))
                    .add(q.coeff(part as usize));
                num.mul(&factor)
            });
        acc.add(&RatFunc::from_poly(num).mul(&frobenius_weight(c)))
    })
}

/// The free generators `U_k` abelianized to commuting variables.
pub fn commutative_generators(order: usize) -> Series<Poly> {
    Series::from_grades(order, |k| Poly::var(Var::Gen(k as u32)))
}

pub fn free_generators(order: usize) -> Series<Free> {
    Series::from_grades(order, |k| Free::generator(k as u32))
}

/// `Σ_{e_1 < … < e_k}` of the given values.
pub fn elementary_brute(values: &[Rat], k: usize) -> Rat {
    fn go(values: &[Rat], k: usize) -> Rat {
        if k == 0 {
            return int(1);
        }
        if values.len() < k {
            return int(0);
        }
        let (first, rest) = values.split_first().unwrap();
        first * go(rest, k - 1) + go(rest, k)
    }
    go(values, k)
}

pub fn factorial(n: u64) -> Rat {
    (1..=n).fold(int(1), |acc, k| acc * int(k as i64))
}
