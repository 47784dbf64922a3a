//! The formal Darboux transformation.
//!
//! A prepotential `W` factors the shifted Hamiltonian,
//! `D² − νD + U + ν²/4 = (D − ν/2 − W)(D − ν/2 + W)` with `U = DW − W²`.
//! Swapping the factors gives the partner potential `Ũ = −DW − W²`, whose
//! residues are the negatives of those of `U`.

use crate::algebra::{int, rat, HasNu, NuAlgebra, Rat, Ring, Series};
use crate::compositions::{fold_sum, Filter, LengthFilter};
use crate::transforms::{residues_from_potential, ResidueSequence};
use crate::{compare_series, Check, Error};

/// A series `W` with zero constant term, read as a prepotential.
#[derive(Clone, Debug, PartialEq)]
pub struct Prepotential<A>(Series<A>);

impl<A: Ring> Prepotential<A> {
    pub fn new(w: Series<A>) -> Result<Self, Error> {
        if !w.has_zero_constant() {
            return Err(Error::NonzeroConstant);
        }
        Ok(Prepotential(w))
    }

    pub fn series(&self) -> &Series<A> {
        &self.0
    }

    pub fn into_series(self) -> Series<A> {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// `U = DW − W²`.
    pub fn potential(&self) -> Result<Series<A>, Error> {
        self.0.euler().sub(&self.0.mul(&self.0)?)
    }

    /// `Ũ = −DW − W²`.
    pub fn partner(&self) -> Result<Series<A>, Error> {
        self.0.euler().neg().sub(&self.0.mul(&self.0)?)
    }

    /// `−W`, the prepotential of the partner.
    pub fn negated(&self) -> Self {
        Prepotential(self.0.neg())
    }
}

/// Solves `U = DW − W²` for `W`:
/// `W_n = (1/n)(U_n + Σ_{i=1}^{n−1} W_i W_{n−i})`.
pub fn prepotential_from_potential<A: Ring>(u: &Series<A>) -> Result<Prepotential<A>, Error> {
    if !u.has_zero_constant() {
        return Err(Error::NonzeroConstant);
    }
    let order = u.order();
    let mut w: Series<A> = Series::zero(order);
    for n in 1..=order {
        let mut acc = u.coeff(n).clone();
        for i in 1..n {
            acc = acc.add(&w.coeff(i).mul(w.coeff(n - i)));
        }
        w.set(n, acc.scale(&rat(1, n as i64)));
    }
    Ok(Prepotential(w))
}

/// The partner potential `Ũ = −DW − W²`.
pub fn darboux_transform<A: Ring>(u: &Series<A>) -> Result<Series<A>, Error> {
    prepotential_from_potential(u)?.partner()
}

/// Checks that the residues of the Darboux partner are the negated residues
/// of `u`, grade by grade.
pub fn verify_residue_negation<A>(u: &Series<A>) -> Check
where
    A: Ring + Send + Sync + std::fmt::Display,
{
    let rho = residues_from_potential(u)?;
    let rho_partner = residues_from_potential(&darboux_transform(u)?)?;
    compare_series(
        &rho_partner,
        &rho.neg(),
        "partner residues vs negated residues",
    )
}

/// `W_n = Σ_{|p|=n, ℓ odd} ρ_p / ((p_1+p_2)⋯(p_{ℓ−1}+p_ℓ))`.
pub fn prepotential_from_residues<A: Ring + Send + Sync>(
    rho: &ResidueSequence<A>,
) -> Result<Prepotential<A>, Error> {
    if !rho.has_zero_constant() {
        return Err(Error::NonzeroConstant);
    }
    let order = rho.order();
    let filter = Filter::all().length(LengthFilter::Odd);
    let mut w = Series::zero(order);
    for n in 1..=order {
        let value = fold_sum(n as u64, &filter, A::one(), |acc, st| {
            let next = acc.mul(rho.coeff(st.part as usize));
            match st.prev {
                None => next,
                Some(prev) => next.scale(&rat(1, i64::from(prev + st.part))),
            }
        })?;
        w.set(n, value);
    }
    Ok(Prepotential(w))
}

/// `ρ_n = Σ_{|p|=n, ℓ odd} (−1)^{(ℓ−1)/2} W_p / (q_p q_{p′})`.
///
/// `q_p` collects `s_j` at even `j`; `q_{p′}` collects `n − s_j` at odd
/// `j < ℓ`.
pub fn residues_from_prepotential<A: Ring + Send + Sync>(
    w: &Prepotential<A>,
) -> Result<ResidueSequence<A>, Error> {
    let w = &w.0;
    let order = w.order();
    let filter = Filter::all().length(LengthFilter::Odd);
    let mut rho = Series::zero(order);
    for n in 1..=order {
        let value = fold_sum(n as u64, &filter, A::one(), |acc, st| {
            let next = acc.mul(w.coeff(st.part as usize));
            if st.index % 2 == 0 {
                next.scale(&rat(-1, st.after as i64))
            } else if !st.is_last() {
                next.scale(&rat(1, (st.total - st.after) as i64))
            } else {
                next
            }
        })?;
        rho.set(n, value);
    }
    Ok(rho)
}

/// Solves the coupled system `Dσ = −Wδ`, `Dδ − νδ = −Wσ` with `σ_0 = 1`,
/// `δ_0 = 0`, returning `(σ, δ)`. Here `σ, δ` are the half-sum and
/// half-difference of the monic solutions for `U` and its partner.
pub fn delta_series_oracle<A: NuAlgebra>(w: &Prepotential<A>) -> (Series<A>, Series<A>) {
    let w = &w.0;
    let order = w.order();
    let mut sigma = Series::one(order);
    let mut delta: Series<A> = Series::zero(order);
    for n in 1..=order {
        let mut s = A::zero();
        for j in 1..n {
            s = s.add(&w.coeff(n - j).mul(delta.coeff(j)));
        }
        sigma.set(n, s.scale(&rat(-1, n as i64)));

        let mut d = A::zero();
        for j in 0..n {
            d = d.add(&w.coeff(n - j).mul(sigma.coeff(j)));
        }
        delta.set(n, d.div_nu_linear(&int(1), n as i64));
    }
    (sigma, delta)
}

/// Residues `Res(δ_n; ν = n)` from [`delta_series_oracle`].
pub fn residues_via_delta<A: NuAlgebra>(w: &Prepotential<A>) -> Result<ResidueSequence<A>, Error> {
    let (_, delta) = delta_series_oracle(w);
    let mut rho = Series::zero(w.order());
    for n in 1..=w.order() {
        rho.set(n, delta.coeff(n).residue_at(n as i64)?);
    }
    Ok(rho)
}

/// `(D − ν/2 − W)(D − ν/2 + W) f`.
pub fn apply_factorized<A: HasNu>(w: &Prepotential<A>, f: &Series<A>) -> Result<Series<A>, Error> {
    let half_nu = A::nu().scale(&rat(1, 2));
    let first_order = |g: &Series<A>, sign: &Rat| -> Result<Series<A>, Error> {
        g.euler()
            .sub(&g.left_mul(&half_nu))?
            .add(&w.0.scale(sign).mul(g)?)
    };
    let inner = first_order(f, &int(1))?;
    first_order(&inner, &int(-1))
}

/// `(D² − νD + U + ν²/4) f`.
pub fn apply_shifted_hamiltonian<A: HasNu>(
    u: &Series<A>,
    f: &Series<A>,
) -> Result<Series<A>, Error> {
    let df = f.euler();
    let quarter_nu2 = A::nu().mul(&A::nu()).scale(&rat(1, 4));
    df.euler()
        .sub(&df.left_mul(&A::nu()))?
        .add(&u.mul(f)?)?
        .add(&f.left_mul(&quarter_nu2))
}

/// Checks the factorization identity on a test series `f`.
pub fn check_factorization<A: HasNu + std::fmt::Display>(u: &Series<A>, f: &Series<A>) -> Check {
    let w = prepotential_from_potential(u)?;
    let lhs = apply_factorized(&w, f)?;
    let rhs = apply_shifted_hamiltonian(u, f)?;
    compare_series(&lhs, &rhs, "factorized vs shifted Hamiltonian")
}

/// Checks both round trips between residues and prepotentials, using
/// `seq` once as a residue sequence and once as a prepotential.
pub fn check_w_rho_round_trip<A>(seq: &Series<A>) -> Check
where
    A: Ring + Send + Sync + std::fmt::Display,
{
    let w = prepotential_from_residues(seq)?;
    compare_series(&residues_from_prepotential(&w)?, seq, "ρ → W → ρ")?;
    let rho = residues_from_prepotential(&Prepotential::new(seq.clone())?)?;
    compare_series(prepotential_from_residues(&rho)?.series(), seq, "W → ρ → W")
}
