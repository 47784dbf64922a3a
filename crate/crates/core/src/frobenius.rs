//! Monic formal solutions of
//! `T = z²∂² + (1−ν)z∂ + P(z)z∂ + Q(z) = D² − νD + P·D + Q` (with `D = z∂`),
//! spectral residues, and gauge transformations.
//!
//! Coefficients may be noncommutative. `P` and `Q` act by multiplication on
//! the left, and `ν` is central.

use crate::algebra::{HasNu, NuAlgebra, Rat, Ring, Series};
use crate::{Error, Mismatch};

/// The pair `(P, Q)` defining `T`. Both series have zero constant term.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSpec<A> {
    p: Series<A>,
    q: Series<A>,
}

impl<A: Ring> OperatorSpec<A> {
    pub fn new(p: Series<A>, q: Series<A>) -> Result<Self, Error> {
        if p.order() != q.order() {
            return Err(Error::MismatchedOrder {
                left: p.order(),
                right: q.order(),
            });
        }
        if !p.has_zero_constant() || !q.has_zero_constant() {
            return Err(Error::NonzeroConstant);
        }
        Ok(OperatorSpec { p, q })
    }

    /// The Schrödinger operator `D² − νD + U`.
    pub fn schrodinger(u: Series<A>) -> Result<Self, Error> {
        Self::new(Series::zero(u.order()), u)
    }

    pub fn p(&self) -> &Series<A> {
        &self.p
    }

    pub fn q(&self) -> &Series<A> {
        &self.q
    }

    pub fn order(&self) -> usize {
        self.p.order()
    }

    pub fn map<B: Ring>(&self, f: impl Fn(&A) -> B) -> OperatorSpec<B> {
        OperatorSpec {
            p: self.p.map(&f),
            q: self.q.map(&f),
        }
    }
}

impl<A: HasNu> OperatorSpec<A> {
    /// `T[f]`, truncated at the operator's order.
    pub fn apply(&self, f: &Series<A>) -> Result<Series<A>, Error> {
        let df = f.euler();
        df.euler()
            .sub(&df.left_mul(&A::nu()))?
            .add(&self.p.mul(&df)?)?
            .add(&self.q.mul(f)?)
    }
}

/// Coefficients `φ_0 = 1, φ_1, …, φ_N` of the monic solution of `T[φ] = 0`,
/// from `n(ν−n)φ_n = Q_n + Σ_{j<n} (j P_{n−j} + Q_{n−j}) φ_j`.
pub fn solve_monic<A: NuAlgebra>(op: &OperatorSpec<A>) -> Series<A> {
    let order = op.order();
    let mut phi = Series::one(order);
    for n in 1..=order {
        let mut rhs = op.q.coeff(n).clone();
        for j in 1..n {
            let coef =
                op.p.coeff(n - j)
                    .scale(&Rat::from_integer((j as i64).into()))
                    .add(op.q.coeff(n - j));
            if !coef.is_zero() {
                rhs = rhs.add(&coef.mul(phi.coeff(j)));
            }
        }
        let value = rhs.div_nu_linear(&Rat::from_integer((n as i64).into()), n as i64);
        phi.set(n, value);
    }
    phi
}

/// `ρ_n = Res(φ_n; ν = n)` at every grade; the constant term is zero.
pub fn residue_table<A: NuAlgebra>(op: &OperatorSpec<A>) -> Result<Series<A>, Error> {
    let phi = solve_monic(op);
    let mut rho = Series::zero(op.order());
    for n in 1..=op.order() {
        rho.set(n, phi.coeff(n).residue_at(n as i64)?);
    }
    Ok(rho)
}

/// Whether `T|_{ν=n}` has a monic series solution, i.e. `ρ_n = 0`.
pub fn monic_solution_exists<A: NuAlgebra>(op: &OperatorSpec<A>, n: usize) -> Result<bool, Error> {
    if n == 0 || n > op.order() {
        return Err(Error::InvalidArgument(format!(
            "grade {n} outside 1..={}",
            op.order()
        )));
    }
    Ok(residue_table(op)?.coeff(n).is_zero())
}

/// The operator `μ ∘ T ∘ μ⁻¹` for a monic gauge factor `μ`.
///
/// With `g = μ⁻¹`, the Leibniz rule for `D` gives
/// `T[g f] = g D²f + (2Dg − νg + Pg) Df + (D²g − νDg + P Dg + Q g) f`,
/// so `P̂ = μ(2Dg + Pg)` and `Q̂ = μ(D²g − νDg + P Dg + Qg)`.
pub fn conjugate_operator<A: HasNu>(
    op: &OperatorSpec<A>,
    mu: &Series<A>,
) -> Result<OperatorSpec<A>, Error> {
    let g = mu.invert_monic()?;
    let dg = g.euler();
    let ddg = dg.euler();
    let pg = op.p.mul(&g)?;
    let p_hat = mu.mul(&dg.scale(&Rat::from_integer(2.into())).add(&pg)?)?;
    let q_inner = ddg
        .sub(&dg.left_mul(&A::nu()))?
        .add(&op.p.mul(&dg)?)?
        .add(&op.q.mul(&g)?)?;
    let q_hat = mu.mul(&q_inner)?;
    OperatorSpec::new(p_hat, q_hat)
}

/// Gauge factor solving `2Dμ = μP`:
/// `μ_n = (1/2n)(P_n + Σ_{j<n} μ_{n−j} P_j)`.
pub fn schrodinger_gauge<A: Ring>(op: &OperatorSpec<A>) -> Series<A> {
    let order = op.order();
    let mut mu: Series<A> = Series::one(order);
    for n in 1..=order {
        let mut acc = op.p.coeff(n).clone();
        for j in 1..n {
            acc = acc.add(&mu.coeff(n - j).mul(op.p.coeff(j)));
        }
        mu.set(n, acc.scale(&Rat::new(1.into(), ((2 * n) as i64).into())));
    }
    mu
}

/// Monic `μ` and potential `U` with `μ ∘ T ∘ μ⁻¹ = D² − νD + U`, by
/// conjugating with the gauge of [`schrodinger_gauge`].
pub fn normalize_to_schrodinger<A: HasNu>(
    op: &OperatorSpec<A>,
) -> Result<(Series<A>, Series<A>), Error> {
    let mu = schrodinger_gauge(op);
    let conj = conjugate_operator(op, &mu)?;
    if !conj.p.is_zero() {
        return Err(Error::Unsupported(
            "gauge did not remove the first-order term".into(),
        ));
    }
    Ok((mu, conj.q))
}

/// Commutative shortcut: `σ_n = P_n/2n`, `μ = exp σ`,
/// `U = Q − D²σ + νDσ − (Dσ)²`. Only meaningful for commuting coefficients.
pub fn normalize_commutative<A: HasNu>(
    op: &OperatorSpec<A>,
) -> Result<(Series<A>, Series<A>), Error> {
    let order = op.order();
    let sigma = Series::from_grades(order, |n| {
        op.p.coeff(n)
            .scale(&Rat::new(1.into(), ((2 * n) as i64).into()))
    });
    let mu = sigma.exp_commutative()?;
    let ds = sigma.euler();
    let u =
        op.q.sub(&ds.euler())?
            .add(&ds.left_mul(&A::nu()))?
            .sub(&ds.mul(&ds)?)?;
    Ok((mu, u))
}

/// The potential written directly in terms of the gauge factor:
/// `U = (μQ − z²μ'' − (1−ν) z μ') μ⁻¹`, with `z²μ'' = D²μ − Dμ` and
/// `z μ' = Dμ`. Valid for `μ` from [`schrodinger_gauge`].
pub fn gauge_formula_potential<A: HasNu>(
    op: &OperatorSpec<A>,
    mu: &Series<A>,
) -> Result<Series<A>, Error> {
    let dmu = mu.euler();
    let z2_mu2 = dmu.euler().sub(&dmu)?;
    let one_minus_nu = A::one().sub(&A::nu());
    let inner = mu
        .mul(&op.q)?
        .sub(&z2_mu2)?
        .sub(&dmu.left_mul(&one_minus_nu))?;
    inner.mul(&mu.invert_monic()?)
}

/// Checks that `T̂[μφ] = 0` up to the truncation order, where `φ` is the
/// monic solution of `T` and `T̂ = μ T μ⁻¹`.
pub fn check_conjugate_solution<A: NuAlgebra>(
    op: &OperatorSpec<A>,
    mu: &Series<A>,
) -> Result<(), Mismatch> {
    let conj = conjugate_operator(op, mu)?;
    let phi = solve_monic(op);
    let image = conj.apply(&mu.mul(&phi)?)?;
    match (0..=image.order()).find(|&n| !image.coeff(n).is_zero()) {
        None => Ok(()),
        Some(n) => Err(Mismatch::new(
            n,
            "conjugated operator does not annihilate the gauged solution",
        )),
    }
}
