//! Closed forms connecting a potential with its spectral residues.
//!
//! * forward: `ρ_n = Σ_{|p|=n} n/(s_p s_{p′}) U_{p_1}⋯U_{p_ℓ}`
//! * inverse: `U_n = Σ_{|p|=n} (−1)^{ℓ−1} n/((p_1+p_2)⋯(p_{ℓ−1}+p_ℓ)) ρ_{p_1}⋯ρ_{p_ℓ}`
//! * the ladder `ρ_{n,k} = Res(φ_n; ν=k)`, with `U_n = n Σ_k ρ_{n,k}`.
//!
//! Empty products (single-part compositions) are one.

use crate::algebra::{int, NuAlgebra, Rat, Ring, Series};
use crate::compositions::{fold_sum, Filter};
use crate::frobenius::{solve_monic, OperatorSpec};
use crate::Error;

/// Residues `ρ_1, …, ρ_N` stored as the series `Σ ρ_n z^n`.
pub type ResidueSequence<A> = Series<A>;

fn recip(n: u64) -> Rat {
    Rat::new(1.into(), (n as i64).into())
}

/// Spectral residues of the Schrödinger operator with potential `u`, by the
/// composition sum.
pub fn residues_from_potential<A: Ring + Send + Sync>(
    u: &Series<A>,
) -> Result<ResidueSequence<A>, Error> {
    if !u.has_zero_constant() {
        return Err(Error::NonzeroConstant);
    }
    let order = u.order();
    let mut rho = Series::zero(order);
    for n in 1..=order {
        // s_p picks up s_j = after, s_{p′} picks up n − s_{j−1}
        let value = fold_sum(
            n as u64,
            &Filter::all(),
            A::one().scale(&int(n as i64)),
            |acc, st| {
                acc.mul(u.coeff(st.part as usize))
                    .scale(&recip(st.after * (st.total - st.before)))
            },
        )?;
        rho.set(n, value);
    }
    Ok(rho)
}

/// The inverse map: potential coefficients from residues.
pub fn potential_from_residues<A: Ring + Send + Sync>(
    rho: &ResidueSequence<A>,
) -> Result<Series<A>, Error> {
    if !rho.has_zero_constant() {
        return Err(Error::NonzeroConstant);
    }
    let order = rho.order();
    let mut u = Series::zero(order);
    for n in 1..=order {
        let value = fold_sum(
            n as u64,
            &Filter::all(),
            A::one().scale(&int(n as i64)),
            |acc, st| {
                let next = acc.mul(rho.coeff(st.part as usize));
                match st.prev {
                    None => next,
                    Some(prev) => next.scale(&-recip(u64::from(prev + st.part))),
                }
            },
        )?;
        u.set(n, value);
    }
    Ok(u)
}

/// `ρ_{n,k} = Res(φ_n; ν = k)` for the potential `u`, via the factorization
/// `ρ_{n,k} = φ_{n−k}|_{ν=−k} · ρ_k`.
pub fn rho_nk<A: NuAlgebra>(u: &Series<A>, n: usize, k: usize) -> Result<A, Error> {
    if k == 0 || k > n || n > u.order() {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n <= {}, got n = {n}, k = {k}",
            u.order()
        )));
    }
    let phi = solve_monic(&OperatorSpec::schrodinger(u.clone())?);
    let rho_k = phi.coeff(k).residue_at(k as i64)?;
    let head = phi.coeff(n - k).eval_nu(&int(-(k as i64)))?;
    Ok(head.mul(&rho_k))
}

/// The triangle `ρ_{n,k}`, `1 ≤ k ≤ n ≤ N`, built from the residues alone:
/// `ρ_{n,n} = ρ_n` and, for `k < n`, with `m = n − k`,
/// `ρ_{n,k} = −(Σ_{j=1}^{m} ρ_{m,j}/(k+j)) ρ_k`.
///
/// Row `n` of the result holds `ρ_{n,1}, …, ρ_{n,n}`; row 0 is empty.
pub fn residue_ladder<A: Ring>(rho: &ResidueSequence<A>) -> Vec<Vec<A>> {
    let order = rho.order();
    let mut ladder: Vec<Vec<A>> = vec![Vec::new()];
    for n in 1..=order {
        let mut row = Vec::with_capacity(n);
        for k in 1..n {
            let m = n - k;
            let mut head = A::zero();
            for j in 1..=m {
                head = head.add(&ladder[m][j - 1].scale(&recip((k + j) as u64)));
            }
            row.push(head.neg().mul(rho.coeff(k)));
        }
        row.push(rho.coeff(n).clone());
        ladder.push(row);
    }
    ladder
}

/// `U_n = n (ρ_{n,n} + ρ_{n,n−1} + … + ρ_{n,1})`, using [`residue_ladder`].
pub fn potential_via_residue_ladder<A: Ring>(rho: &ResidueSequence<A>) -> Series<A> {
    let ladder = residue_ladder(rho);
    Series::from_grades(rho.order(), |n| {
        ladder[n]
            .iter()
            .fold(A::zero(), |acc, x| acc.add(x))
            .scale(&int(n as i64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, FreePoly, RatFunc};
    use crate::free_potential;

    type F = FreePoly<Rat>;

    fn g(k: u32) -> F {
        F::generator(k)
    }

    #[test]
    fn first_residues() {
        let rho = residues_from_potential(&free_potential(4)).unwrap();
        assert_eq!(rho.coeff(1), &g(1));
        assert_eq!(rho.coeff(3).coeff_of(&[2, 1]), rat(1, 6));
        assert_eq!(rho.coeff(4).coeff_of(&[1, 1, 1, 1]), rat(1, 144));
    }

    #[test]
    fn low_order_inverses() {
        let rho = Series::from_grades(3, |k| g(k as u32));
        let u = potential_from_residues(&rho).unwrap();
        assert_eq!(u.coeff(1), &g(1));
        assert_eq!(u.coeff(2), &g(2).scale(&int(2)).sub(&g(1).pow(2)));
        let expected3 = g(3)
            .scale(&int(3))
            .sub(&g(1).mul(&g(2)))
            .sub(&g(2).mul(&g(1)))
            .add(&g(1).pow(3).scale(&rat(3, 4)));
        assert_eq!(u.coeff(3), &expected3);
    }

    #[test]
    fn ladder_low_rungs() {
        let u = free_potential(2).map(|c| c.map_coeffs(|r| RatFunc::from(r.clone())));
        let r21 = rho_nk(&u, 2, 1).unwrap();
        let expected = g(1)
            .pow(2)
            .scale(&rat(-1, 2))
            .map_coeffs(|r| RatFunc::from(r.clone()));
        assert_eq!(r21, expected);
        assert!(rho_nk(&u, 2, 3).is_err());
        assert!(rho_nk(&u, 2, 0).is_err());

        let rho = Series::from_grades(2, |k| g(k as u32));
        let v = potential_via_residue_ladder(&rho);
        assert_eq!(v.coeff(1), &g(1));
        assert_eq!(v.coeff(2), &g(2).scale(&int(2)).sub(&g(1).pow(2)));
    }

    #[test]
    fn nonzero_constant_rejected() {
        let u = Series::truncated(2, [int(1), int(1)]);
        assert!(residues_from_potential(&u).is_err());
    }
}
