//! Residues under the noncommutative KdV flow
//! `U̇ = D³U + s·3(DU·U + U·DU)`, `s = ±1`.
//!
//! Time derivatives are derivations of the free algebra determined by the
//! images of the generators; no time stepping happens anywhere.

use std::fmt;

use crate::algebra::{int, FreePoly, Poly, Rat, Ring, Series, Var, Word};
use crate::compositions::{enumerate, Filter};
use crate::transforms::residues_from_potential;
use crate::{free_potential, Check, Error, Mismatch};

type Free = FreePoly<Rat>;

/// Sign in front of the quadratic part of the flow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> Rat {
        match self {
            Sign::Plus => int(1),
            Sign::Minus => int(-1),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `D³U + sign·3(DU·U + U·DU)`, truncated at the order of `u`.
pub fn kdv_rhs<A: Ring>(u: &Series<A>, sign: Sign) -> Result<Series<A>, Error> {
    if !u.has_zero_constant() {
        return Err(Error::NonzeroConstant);
    }
    let du = u.euler();
    let quad = du.mul(u)?.add(&u.mul(&du)?)?;
    du.euler()
        .euler()
        .add(&quad.scale(&(sign.factor() * int(3))))
}

/// The derivation of the free algebra with `U_k ↦ U̇_k`.
#[derive(Clone, Debug)]
pub struct FlowDerivation {
    sign: Sign,
    /// `images[k]` is `U̇_k`; index 0 is unused.
    images: Vec<Free>,
}

impl FlowDerivation {
    /// The flow on the free potential, for generators up to `order`.
    pub fn new(order: usize, sign: Sign) -> Result<Self, Error> {
        let rhs = kdv_rhs(&free_potential(order), sign)?;
        Ok(FlowDerivation {
            sign,
            images: rhs.coeffs().to_vec(),
        })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn order(&self) -> usize {
        self.images.len() - 1
    }

    pub fn image(&self, k: u32) -> &Free {
        &self.images[k as usize]
    }

    /// Applies the Leibniz rule letter by letter.
    pub fn apply(&self, p: &Free) -> Result<Free, Error> {
        let mut out = Free::zero();
        for (word, c) in p.terms() {
            let letters = word.letters();
            for (i, &k) in letters.iter().enumerate() {
                if k as usize > self.order() {
                    return Err(Error::InvalidArgument(format!(
                        "generator U{k} beyond flow order {}",
                        self.order()
                    )));
                }
                let left = Free::monomial(Word::new(letters[..i].to_vec()), c.clone());
                let right = Free::monomial(Word::new(letters[i + 1..].to_vec()), int(1));
                out = out.add(&left.mul(self.image(k)).mul(&right));
            }
        }
        Ok(out)
    }

    /// The induced derivation of the commutative quotient.
    pub fn apply_abelian(&self, p: &Poly) -> Result<Poly, Error> {
        let images: Vec<Poly> = self.images.iter().map(Free::abelianize).collect();
        if let Some(bad) =
            p.terms()
                .flat_map(|(m, _)| m.pairs().to_vec())
                .find_map(|(v, _)| match v {
                    Var::Gen(k) if k as usize <= self.order() => None,
                    other => Some(other),
                })
        {
            return Err(Error::InvalidArgument(format!(
                "variable {} is not a flow generator",
                bad.name()
            )));
        }
        Ok(p.derive_with(|v| match v {
            Var::Gen(k) => images[k as usize].clone(),
            _ => Poly::zero(),
        }))
    }
}

/// `ρ̇_n` for the free potential.
pub fn residue_time_derivative(n: usize, sign: Sign) -> Result<Free, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let rho = residues_from_potential(&free_potential(n))?;
    FlowDerivation::new(n, sign)?.apply(rho.coeff(n))
}

/// Checks `ρ̇_n = n³ρ_n` word for word, `1 ≤ n ≤ order`.
pub fn verify_evolution(order: usize, sign: Sign) -> Check {
    let rho = residues_from_potential(&free_potential(order))?;
    let flow = FlowDerivation::new(order, sign)?;
    for n in 1..=order {
        let lhs = flow.apply(rho.coeff(n))?;
        let rhs = rho.coeff(n).scale(&int((n * n * n) as i64));
        if lhs != rhs {
            let diff = lhs.sub(&rhs);
            let (w, c) = diff.terms().next().expect("nonzero difference");
            return Err(Mismatch::new(
                n,
                format!("word {w}: derivative exceeds n³ρ_n by {c}"),
            ));
        }
    }
    Ok(())
}

/// The same check in the commutative quotient, which is much cheaper.
pub fn verify_evolution_abelianized(order: usize, sign: Sign) -> Check {
    let u = Series::from_grades(order, |k| Poly::var(Var::Gen(k as u32)));
    let rho = residues_from_potential(&u)?;
    let flow = FlowDerivation::new(order, sign)?;
    for n in 1..=order {
        let lhs = flow.apply_abelian(rho.coeff(n))?;
        let rhs = rho.coeff(n).scale(&int((n * n * n) as i64));
        if lhs != rhs {
            return Err(Mismatch::new(
                n,
                format!("derivative minus n³ρ_n = {}", lhs.sub(&rhs)),
            ));
        }
    }
    Ok(())
}

/// The grade-2 computation that decides the sign of the flow.
#[derive(Clone, Debug, PartialEq)]
pub struct SignWitness {
    pub sign: Sign,
    pub derivative: Free,
    pub expected: Free,
}

impl SignWitness {
    pub fn new(sign: Sign) -> Result<Self, Error> {
        let derivative = residue_time_derivative(2, sign)?;
        let rho = residues_from_potential(&free_potential(2))?;
        Ok(SignWitness {
            sign,
            derivative,
            expected: rho.coeff(2).scale(&int(8)),
        })
    }

    pub fn holds(&self) -> bool {
        self.derivative == self.expected
    }
}

impl fmt::Display for SignWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sign {}: d/dt rho_2 = {}; 8 rho_2 = {}; {}",
            self.sign,
            self.derivative,
            self.expected,
            if self.holds() { "equal" } else { "different" }
        )
    }
}

/// Evaluates the grade-2 witness for both signs and returns the one for
/// which the evolution law holds, together with both witnesses.
pub fn determine_sign() -> Result<(Sign, [SignWitness; 2]), Error> {
    let witnesses = [
        SignWitness::new(Sign::Plus)?,
        SignWitness::new(Sign::Minus)?,
    ];
    let valid: Vec<Sign> = witnesses
        .iter()
        .filter(|w| w.holds())
        .map(|w| w.sign)
        .collect();
    match valid.as_slice() {
        [s] => Ok((*s, witnesses)),
        _ => Err(Error::Unsupported(format!(
            "grade-2 witness admits {} signs",
            valid.len()
        ))),
    }
}

/// The constant `c` in `(Σp)³ − Σp³ = c Σ_j s_j (n − s_j)(p_j + p_{j+1})`,
/// read off from the composition `(1, 1)`.
pub fn cube_identity_constant() -> Rat {
    let c = crate::compositions::Composition::new(vec![1, 1]).expect("valid composition");
    let (lhs, rhs) = c.cube_identity_sides().expect("two parts");
    lhs / rhs
}

/// Checks the cube identity with constant `c` on every composition of
/// `2..=max_n` with at least two parts.
pub fn verify_cube_identity(max_n: u64, c: &Rat) -> Check {
    (2..=max_n).try_for_each(|n| verify_cube_identity_at(n, c))
}

/// The cube identity on the compositions of `n` alone.
pub fn verify_cube_identity_at(n: u64, c: &Rat) -> Check {
    for comp in enumerate(n, &Filter::all())? {
        if comp.len() < 2 {
            continue;
        }
        let (lhs, rhs) = comp.cube_identity_sides()?;
        if lhs != c * &rhs {
            return Err(Mismatch::new(
                n as usize,
                format!("{:?}: {lhs} != {c} * {rhs}", comp.parts()),
            ));
        }
    }
    Ok(())
}
