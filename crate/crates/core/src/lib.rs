//! Exact spectral residues of formal second-order operators
//! `z²∂² + (1−ν)z∂ + P(z)z∂ + Q(z)`.
//!
//! The spectral residue `ρ_n` is the residue at `ν = n` of the `n`-th
//! coefficient of the monic formal solution. This crate computes residues
//! through several independent routes (Frobenius recursion, composition
//! sums, the `ρ_{n,k}` ladder, the prepotential recursion) and verifies the
//! identities connecting them, all in exact rational arithmetic.

pub mod algebra;
pub mod compositions;
pub mod darboux;
mod error;
pub mod frobenius;
pub mod kdv;
pub mod serial;
pub mod solvable;
pub mod suites;
pub mod transforms;

pub use error::Error;

/// Where two objects that should agree first differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub grade: usize,
    pub detail: String,
}

impl Mismatch {
    pub fn new(grade: usize, detail: impl Into<String>) -> Self {
        Mismatch {
            grade,
            detail: detail.into(),
        }
    }
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "grade {}: {}", self.grade, self.detail)
    }
}

/// The free potential `U(z) = U_1 z + U_2 z² + …` with independent
/// noncommuting coefficients.
pub fn free_potential(order: usize) -> algebra::Series<algebra::FreePoly<algebra::Rat>> {
    algebra::Series::from_grades(order, |k| algebra::FreePoly::generator(k as u32))
}

/// Outcome of a verification: `Ok` or the first discrepancy.
pub type Check = Result<(), Mismatch>;

impl From<Error> for Mismatch {
    fn from(e: Error) -> Self {
        Mismatch::new(0, format!("error: {e}"))
    }
}

/// Compares two series grade by grade.
pub fn compare_series<A: algebra::Ring + std::fmt::Display>(
    left: &algebra::Series<A>,
    right: &algebra::Series<A>,
    what: &str,
) -> Check {
    match left.first_difference(right) {
        None => Ok(()),
        Some(n) if left.order() != right.order() => Err(Mismatch::new(
            n,
            format!("{what}: orders {} vs {}", left.order(), right.order()),
        )),
        Some(n) => Err(Mismatch::new(
            n,
            format!("{what}: {} != {}", left.coeff(n), right.coeff(n)),
        )),
    }
}
