//! Composition-sum identities obtained by specializing the factorizations,
//! and the tableaux generating functions.
//!
//! Every sum carries the weight `(n!/s_p)(n!/s_{p′})`.

use std::fmt;

use crate::algebra::{int, rat, Rat, Ring, UPoly};
use crate::compositions::{fold_sum, Filter, LengthFilter};
use crate::{Check, Error, Mismatch};

use super::{factorial, walk_weight};

/// Identities obtained from the factorizations: a filtered composition sum equals the
/// coefficient of `x^k` in an explicit product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumId {
    /// `k`-part compositions weighted by `∏p_i`; product
    /// `∏_{j<n} (x + j(j+1))`.
    Csum1,
    /// `k`-part compositions weighted by `∏(p_i − 1)`; product
    /// `∏_{i<m} ((n−1−2i)²x + i(i+1)(n−1−i)(n−i))`, times `m(m+1)` for odd
    /// `n`.
    Csum2,
    /// Odd `n = 2m+1`, `2k+1` odd parts, weight `∏p_i / 2^e`; product
    /// `∏_{i=1}^m (x + (2i)⁴)`.
    Corrid,
    /// As `Corrid` but with no even parts; product `∏ (x + (2i)⁴ − (2i)²)`.
    PtNoEven,
    /// Odd `n`, parts in `{1, 2}`, `2k+1` odd parts; product `∏ (x + (2i)²)`.
    MorseOdd,
    /// Even `n`, parts in `{1, 2}`, `2k` odd parts; product
    /// `∏ (x + (2i−1)²)`.
    MorseEven,
}

impl SumId {
    pub const ALL: [SumId; 6] = [
        SumId::Csum1,
        SumId::Csum2,
        SumId::Corrid,
        SumId::PtNoEven,
        SumId::MorseOdd,
        SumId::MorseEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumId::Csum1 => "csum1",
            SumId::Csum2 => "csum2",
            SumId::Corrid => "corrid",
            SumId::PtNoEven => "pt-no-even",
            SumId::MorseOdd => "morse-odd",
            SumId::MorseEven => "morse-even",
        }
    }

    pub fn parse(name: &str) -> Option<SumId> {
        SumId::ALL.into_iter().find(|id| id.name() == name)
    }

    /// Whether the identity is stated for this `n`.
    pub fn applies_to(self, n: u64) -> bool {
        match self {
            SumId::Csum1 | SumId::Csum2 => n >= 1,
            SumId::Corrid | SumId::PtNoEven | SumId::MorseOdd => n % 2 == 1,
            SumId::MorseEven => n >= 2 && n.is_multiple_of(2),
        }
    }

    /// Largest admissible `k`; the smallest is always zero.
    pub fn max_k(self, n: u64) -> u64 {
        match self {
            SumId::Csum1 | SumId::Csum2 => n,
            _ => n / 2,
        }
    }

    fn check(self, n: u64, k: u64) -> Result<(), Error> {
        if !self.applies_to(n) {
            return Err(Error::InvalidArgument(format!(
                "{self} is not defined for n = {n}"
            )));
        }
        if k > self.max_k(n) {
            return Err(Error::InvalidArgument(format!(
                "{self}: k = {k} outside 0..={}",
                self.max_k(n)
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn power_of_two_inverse(e: bool) -> Rat {
    if e {
        rat(1, 2)
    } else {
        int(1)
    }
}

/// The composition side of an identity.
pub fn composition_sum(id: SumId, n: u64, k: u64) -> Result<Rat, Error> {
    id.check(n, k)?;
    let k = k as usize;
    let filter = match id {
        SumId::Csum1 | SumId::Csum2 if k == 0 => return Ok(int(0)),
        SumId::Csum1 | SumId::Csum2 => Filter::all().length(LengthFilter::Exactly(k)),
        SumId::Corrid => Filter::all().odd_parts(2 * k + 1),
        SumId::PtNoEven => Filter::all().odd_parts(2 * k + 1).even_parts(0),
        SumId::MorseOdd => Filter::all().parts_in(&[1, 2]).odd_parts(2 * k + 1),
        SumId::MorseEven => Filter::all().parts_in(&[1, 2]).odd_parts(2 * k),
    };
    let root = factorial(n) * factorial(n);
    fold_sum(n, &filter, root, |acc, st| {
        let p = int(i64::from(st.part));
        let factor = match id {
            SumId::Csum1 | SumId::PtNoEven => p,
            SumId::Csum2 => p - int(1),
            SumId::Corrid => p * power_of_two_inverse(st.part % 2 == 0),
            SumId::MorseOdd | SumId::MorseEven => int(1),
        };
        acc * factor * walk_weight(st)
    })
}

/// The product side of an identity, expanded in `x`.
pub fn product_polynomial(id: SumId, n: u64) -> Result<UPoly, Error> {
    id.check(n, 0)?;
    let m = (n / 2) as i64;
    let shifted = |c: i64| UPoly::new(vec![int(c), int(1)]);
    let product = |fs: Vec<UPoly>| fs.iter().fold(UPoly::one(), |acc, f| acc.mul(f));
    Ok(match id {
        SumId::Csum1 => product((0..n as i64).map(|j| shifted(j * (j + 1))).collect()),
        SumId::Csum2 => {
            let nn = n as i64;
            let p = product(
                (0..m)
                    .map(|i| {
                        UPoly::new(vec![
                            int(i * (i + 1) * (nn - 1 - i) * (nn - i)),
                            int((nn - 1 - 2 * i).pow(2)),
                        ])
                    })
                    .collect(),
            );
            if n % 2 == 1 {
                p.scale(&int(m * (m + 1)))
            } else {
                p
            }
        }
        SumId::Corrid => product((1..=m).map(|i| shifted((2 * i).pow(4))).collect()),
        SumId::PtNoEven => product(
            (1..=m)
                .map(|i| shifted((2 * i).pow(4) - (2 * i).pow(2)))
                .collect(),
        ),
        SumId::MorseOdd => product((1..=m).map(|i| shifted((2 * i).pow(2))).collect()),
        SumId::MorseEven => product((1..=m).map(|i| shifted((2 * i - 1).pow(2))).collect()),
    })
}

/// Coefficient of `x^k` in the product side.
pub fn product_coefficient(id: SumId, n: u64, k: u64) -> Result<Rat, Error> {
    id.check(n, k)?;
    Ok(product_polynomial(id, n)?.coeff(k as usize))
}

/// Both sides of an identity for every admissible `k`.
pub fn verify_sum_identity(id: SumId, n: u64) -> Check {
    for k in 0..=id.max_k(n) {
        let sum = composition_sum(id, n, k)?;
        let coeff = product_coefficient(id, n, k)?;
        if sum != coeff {
            return Err(Mismatch::new(
                n as usize,
                format!("{id} k={k}: composition sum {sum} != product coefficient {coeff}"),
            ));
        }
    }
    Ok(())
}

/// `∏_{m=1}^n (1 + m(m−1)x/2)`: tableaux with distinct third-row entries.
pub fn tableaux_product(n: u64) -> UPoly {
    (1..=n as i64).fold(UPoly::one(), |acc, m| {
        acc.mul(&UPoly::new(vec![int(1), rat(m * (m - 1), 2)]))
    })
}

/// `Σ_p (∏ p_i/2^{p_i−1}) (n!/s_p)(n!/s_{p′}) x^{n−ℓ(p)}`.
pub fn tableaux_composition_side(n: u64) -> Result<UPoly, Error> {
    let root = UPoly::constant(factorial(n) * factorial(n));
    fold_sum(n, &Filter::all(), root, |acc, st| {
        let p = st.part;
        let mut coeffs = vec![int(0); p as usize];
        coeffs[p as usize - 1] = int(i64::from(p)) / int(2).pow(p as i32 - 1);
        acc.mul(&UPoly::new(coeffs)).scale(&walk_weight(st))
    })
}

/// `∏_{m=1}^{n−1} (1 + m(n−m)x)`: tableaux with distinct middle-row entries.
pub fn middle_row_product(n: u64) -> UPoly {
    let nn = n as i64;
    (1..nn).fold(UPoly::one(), |acc, m| {
        acc.mul(&UPoly::new(vec![int(1), int(m * (nn - m))]))
    })
}

/// `Σ_p (n!/s_p)(n!/s_{p′}) x^{n−ℓ(p)}`.
pub fn middle_row_composition_side(n: u64) -> Result<UPoly, Error> {
    let root = UPoly::constant(factorial(n) * factorial(n));
    fold_sum(n, &Filter::all(), root, |acc, st| {
        let mut coeffs = vec![int(0); st.part as usize];
        coeffs[st.part as usize - 1] = int(1);
        acc.mul(&UPoly::new(coeffs)).scale(&walk_weight(st))
    })
}

fn compare_upolys(left: &UPoly, right: &UPoly, n: u64, what: &str) -> Check {
    if left == right {
        Ok(())
    } else {
        Err(Mismatch::new(
            n as usize,
            format!("{what}: {left} != {right}"),
        ))
    }
}

/// Both tableaux generating functions agree with their composition sums.
pub fn tableaux_generating_identity(n: u64) -> Check {
    compare_upolys(
        &tableaux_product(n),
        &tableaux_composition_side(n)?,
        n,
        "third row",
    )?;
    compare_upolys(
        &middle_row_product(n),
        &middle_row_composition_side(n)?,
        n,
        "middle row",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_examples() {
        assert_eq!(composition_sum(SumId::Csum1, 2, 1).unwrap(), int(2));
        assert_eq!(composition_sum(SumId::Csum1, 2, 2).unwrap(), int(1));
        assert_eq!(composition_sum(SumId::MorseOdd, 3, 0).unwrap(), int(4));
        assert_eq!(product_coefficient(SumId::MorseOdd, 3, 0).unwrap(), int(4));
        assert_eq!(product_coefficient(SumId::MorseOdd, 5, 1).unwrap(), int(20));
        assert_eq!(product_coefficient(SumId::Corrid, 3, 0).unwrap(), int(16));
    }

    #[test]
    fn csum2_at_four() {
        assert_eq!(product_coefficient(SumId::Csum2, 4, 1).unwrap(), int(108));
        assert_eq!(composition_sum(SumId::Csum2, 4, 1).unwrap(), int(108));
        assert_eq!(composition_sum(SumId::Csum2, 4, 2).unwrap(), int(9));
        assert_eq!(composition_sum(SumId::Csum2, 4, 0).unwrap(), int(0));
    }

    #[test]
    fn ranges_are_enforced() {
        assert!(composition_sum(SumId::Corrid, 4, 0).is_err());
        assert!(composition_sum(SumId::MorseEven, 3, 0).is_err());
        assert!(product_coefficient(SumId::Csum1, 3, 4).is_err());
    }

    #[test]
    fn small_tableaux() {
        assert_eq!(tableaux_product(2), UPoly::new(vec![int(1), int(1)]));
        assert_eq!(
            tableaux_product(3),
            UPoly::new(vec![int(1), int(4), int(3)])
        );
        for n in 1..=5 {
            assert!(tableaux_generating_identity(n).is_ok());
        }
    }
}
