//! The hypergeometric side: operators whose monic solutions are
//! (confluent) hypergeometric series, their residues in the hypergeometric
//! parameters, and the polynomial bridges back to `(u, v)`.

use crate::algebra::{int, rat, NuAlgebra, Poly, Rat, RatFunc, Ring, Series, UPoly, Var};
use crate::frobenius::{solve_monic, OperatorSpec};
use crate::{compare_series, Check, Error, Mismatch};

use super::{
    cint, compare_polys, cst, eckart_a, eckart_factor, factorial, morse_factor, normalizer,
    pt_factor, var, PotentialFamily,
};

/// Rising factorial `x(x+1)⋯(x+n−1)`.
pub fn rising(x: &Poly, n: u64) -> Poly {
    (0..n).fold(Poly::one(), |acc, j| acc.mul(&x.add(&cint(j as i64))))
}

/// `[1−ν]^n = (1−ν)(2−ν)⋯(n−ν)` as a polynomial in ν.
fn gamma_rising(n: u64) -> UPoly {
    (1..=n).fold(UPoly::one(), |acc, j| {
        acc.mul(&UPoly::new(vec![int(j as i64), int(-1)]))
    })
}

/// `[a]^n [b]^n … / (n! [1−ν]^n)` for the given numerator factors.
fn hypergeometric_term(numerator: Poly, n: u64) -> RatFunc {
    RatFunc::new(numerator.scale(&(int(1) / factorial(n))), gamma_rising(n))
        .expect("nonzero denominator")
}

/// The Eckart operator `z/(1−z)` times the hypergeometric operator:
/// `P_k = −(α+β+ν)`, `Q_k = −αβ` for all `k ≥ 1`.
pub fn eckart_operator(order: usize) -> OperatorSpec<RatFunc> {
    let p = var(Var::Alpha)
        .add(&var(Var::Beta))
        .add(&var(Var::Nu))
        .neg();
    let q = var(Var::Alpha).mul(&var(Var::Beta)).neg();
    OperatorSpec::new(
        Series::from_grades(order, |_| RatFunc::from(p.clone())),
        Series::from_grades(order, |_| RatFunc::from(q.clone())),
    )
    .expect("well-formed operator")
}

/// `F_n = [α]^n [β]^n / (n! [γ]^n)` with `γ = 1 − ν`.
pub fn eckart_coefficient(n: u64) -> RatFunc {
    hypergeometric_term(
        rising(&var(Var::Alpha), n).mul(&rising(&var(Var::Beta), n)),
        n,
    )
}

/// `(u, v)` in terms of `(α, β)` and a value for ν:
/// `u = ¼(α−β−ν)(α−β+ν)`, `v = ¼(α+β+ν)(2−α−β−ν)`.
pub fn eckart_parameters(nu: &Poly) -> (Poly, Poly) {
    let a = var(Var::Alpha);
    let b = var(Var::Beta);
    let d = a.sub(&b);
    let s = a.add(&b).add(nu);
    let u = d.sub(nu).mul(&d.add(nu)).scale(&rat(1, 4));
    let v = s.mul(&cint(2).sub(&s)).scale(&rat(1, 4));
    (u, v)
}

/// Substitutes `(u, v)` by the given polynomials.
fn subs_uv(p: &Poly, u: &Poly, v: &Poly) -> Poly {
    // v first: u's image never contains the variable v
    p.subs(Var::V, v).subs(Var::U, u)
}

/// `(α+i)(β+i)(α+n−1−i)(β+n−1−i)` equals the `i`-th Eckart factor at `ν = n`.
pub fn eckart_bridge(n: u64, i: u64) -> Check {
    let a = var(Var::Alpha);
    let b = var(Var::Beta);
    let j = cint((n - 1 - i) as i64);
    let ii = cint(i as i64);
    let lhs = a.add(&ii).mul(&b.add(&ii)).mul(&a.add(&j)).mul(&b.add(&j));
    let (u, v) = eckart_parameters(&cint(n as i64));
    let rhs = subs_uv(&eckart_factor(n, i), &u, &v);
    compare_polys(&lhs, &rhs, n as usize, &format!("Eckart bridge i={i}"))
}

/// `−(α+m)(β+m) = u + v + a_{n,m}` at `ν = n = 2m+1`.
pub fn eckart_odd_bridge(n: u64) -> Check {
    let m = n / 2;
    let mm = cint(m as i64);
    let lhs = var(Var::Alpha).add(&mm).mul(&var(Var::Beta).add(&mm)).neg();
    let (u, v) = eckart_parameters(&cint(n as i64));
    let rhs = u.add(&v).add(&cint(eckart_a(n, m)));
    compare_polys(&lhs, &rhs, n as usize, "Eckart odd bridge")
}

/// The confluent operator `J₁ = D² − νD + 2ωz D + 2ωα z`.
pub fn morse_operator(order: usize) -> OperatorSpec<RatFunc> {
    let two_omega = var(Var::Omega).scale(&int(2));
    let p = Series::truncated(order, [RatFunc::zero(), RatFunc::from(two_omega.clone())]);
    let q = Series::truncated(
        order,
        [
            RatFunc::zero(),
            RatFunc::from(two_omega.mul(&var(Var::Alpha))),
        ],
    );
    OperatorSpec::new(p, q).expect("well-formed operator")
}

/// `φ_n = (−2)^n ω^n [α]^n / (n! [γ]^n)`.
pub fn morse_coefficient(n: u64) -> RatFunc {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let num = var(Var::Omega)
        .pow(n as u32)
        .mul(&rising(&var(Var::Alpha), n))
        .scale(&(int(sign) * int(2).pow(n as i32)));
    hypergeometric_term(num, n)
}

/// `u = ω(ν + 2α − 1)`, `v = −ω²`.
pub fn morse_parameters(nu: &Poly) -> (Poly, Poly) {
    let w = var(Var::Omega);
    let u = w.mul(&nu.add(&var(Var::Alpha).scale(&int(2))).sub(&cint(1)));
    (u, w.pow(2).neg())
}

/// The Morse bridges at `ν = n`: each factor `u² + k²v` is `4ω²` times two
/// linear factors in α, and for odd `n` also `u = 2ω(α+m)`.
pub fn morse_bridges(n: u64) -> Check {
    let m = (n / 2) as i64;
    let (u, v) = morse_parameters(&cint(n as i64));
    let a = var(Var::Alpha);
    let four_w2 = var(Var::Omega).pow(2).scale(&int(4));
    let pairs: Vec<(i64, i64, i64)> = if n.is_multiple_of(2) {
        (0..m).map(|i| (2 * i + 1, m + i, m - i - 1)).collect()
    } else {
        (1..=m).map(|i| (2 * i, m + i, m - i)).collect()
    };
    for (k, s, t) in pairs {
        let lhs = subs_uv(&morse_factor(k), &u, &v);
        let rhs = four_w2.mul(&a.add(&cint(s))).mul(&a.add(&cint(t)));
        compare_polys(&lhs, &rhs, n as usize, &format!("Morse bridge k={k}"))?;
    }
    if n % 2 == 1 {
        let rhs = var(Var::Omega).scale(&int(2)).mul(&a.add(&cint(m)));
        compare_polys(&u, &rhs, n as usize, "Morse odd bridge")?;
    }
    Ok(())
}

/// Checks that the Frobenius solution of the family's hypergeometric
/// operator reproduces the closed-form coefficients up to `order`.
pub fn check_hypergeometric_coefficients(family: &PotentialFamily, order: usize) -> Check {
    let (op, coefficient): (_, fn(u64) -> RatFunc) = match family {
        PotentialFamily::Eckart => (eckart_operator(order), eckart_coefficient),
        PotentialFamily::Morse => (morse_operator(order), morse_coefficient),
        _ => {
            return Err(
                Error::Unsupported(format!("no hypergeometric operator for {family}")).into(),
            )
        }
    };
    let phi = solve_monic(&op);
    let expected = Series::from_fn(order, |n| {
        if n == 0 {
            RatFunc::one()
        } else {
            coefficient(n as u64)
        }
    });
    compare_series(&phi, &expected, "Frobenius vs hypergeometric coefficients")
}

/// The `n`-th residue computed on the hypergeometric side.
///
/// The residue of the series coefficient at `ν = n` is taken in the
/// hypergeometric parameters; the factor bridges are checked as polynomial
/// identities; the product of bridge factors is assembled in `(u, v)` and
/// checked to pull back to that residue. The assembled product is returned.
pub fn hypergeometric_residue_oracle(family: &PotentialFamily, n: usize) -> Result<Poly, Mismatch> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()).into());
    }
    let nn = n as u64;
    let m = nn / 2;
    let odd = nn % 2 == 1;
    let k = normalizer(nn);
    let nu = cint(n as i64);
    let (coefficient, expected, product, (u, v)) = match family {
        PotentialFamily::Eckart => {
            (0..m).try_for_each(|i| eckart_bridge(nn, i))?;
            if odd {
                eckart_odd_bridge(nn)?;
            }
            let sign = if odd { -1 } else { 1 };
            let expected = rising(&var(Var::Alpha), nn)
                .mul(&rising(&var(Var::Beta), nn))
                .scale(&(int(sign) * k.clone()));
            let mut product = (0..m).fold(cst(k), |acc, i| acc.mul(&eckart_factor(nn, i)));
            if odd {
                product = product.mul(&var(Var::U).add(&var(Var::V)).add(&cint(eckart_a(nn, m))));
            }
            (
                eckart_coefficient(nn),
                expected,
                product,
                eckart_parameters(&nu),
            )
        }
        PotentialFamily::Morse => {
            morse_bridges(nn)?;
            let expected = var(Var::Omega)
                .pow(n as u32)
                .mul(&rising(&var(Var::Alpha), nn))
                .scale(&(int(2).pow(n as i32) * k.clone()));
            let parity = if odd { 0 } else { 1 };
            let mut product = (1..n as i64)
                .filter(|j| j % 2 == parity)
                .fold(cst(k), |acc, j| acc.mul(&morse_factor(j)));
            if odd {
                product = product.mul(&var(Var::U));
            }
            (
                morse_coefficient(nn),
                expected,
                product,
                morse_parameters(&nu),
            )
        }
        _ => {
            return Err(Error::Unsupported(format!("no hypergeometric oracle for {family}")).into())
        }
    };
    let residue = coefficient.residue_at(n as i64)?;
    let residue = residue.as_poly().ok_or(Error::NotScalar)?;
    compare_polys(residue, &expected, n, "residue of the series coefficient")?;
    compare_polys(
        &subs_uv(&product, &u, &v),
        residue,
        n,
        "bridged product vs residue",
    )?;
    Ok(product)
}

/// `u1² + 2k²u0 + k⁴ − k² = (λ+μ+k−1)(λ+μ−k−1)(λ−μ+k)(λ−μ−k)` under
/// `u = λ² − λ`, `v = μ − μ²`.
pub fn pt_bridge(k: i64) -> Check {
    let l = var(Var::Lambda);
    let m = var(Var::Mu);
    let u = l.pow(2).sub(&l);
    let v = m.sub(&m.pow(2));
    let lhs = pt_factor(k)
        .subs(Var::U0, &v.sub(&u))
        .subs(Var::U1, &v.add(&u));
    let s = l.add(&m);
    let d = l.sub(&m);
    let rhs = s
        .add(&cint(k - 1))
        .mul(&s.sub(&cint(k + 1)))
        .mul(&d.add(&cint(k)))
        .mul(&d.sub(&cint(k)));
    compare_polys(
        &lhs,
        &rhs,
        k.unsigned_abs() as usize,
        &format!("Pöschl–Teller bridge k={k}"),
    )
}

/// `w_k` for `w = λz/(z+1) + μz/(z−1)`: `λ(−1)^{k+1} − μ`.
fn pt_w(lambda: &Poly, mu: &Poly, k: usize) -> Poly {
    let sign = if k % 2 == 1 { 1 } else { -1 };
    lambda.scale(&int(sign)).sub(mu)
}

/// `𝒢₁ = D² − νD + 2w D + (λ+μ−ν) w` with symbolic `λ, μ, ν`.
pub fn pt_operator(order: usize) -> OperatorSpec<Poly> {
    let l = var(Var::Lambda);
    let m = var(Var::Mu);
    let c = l.add(&m).sub(&var(Var::Nu));
    OperatorSpec::new(
        Series::from_grades(order, |k| pt_w(&l, &m, k).scale(&int(2))),
        Series::from_grades(order, |k| c.mul(&pt_w(&l, &m, k))),
    )
    .expect("well-formed operator")
}

fn specialize(p: &Poly, lambda: &Rat, mu: &Rat) -> RatFunc {
    RatFunc::from(p.eval(Var::Lambda, lambda).eval(Var::Mu, mu))
}

/// `(1+z)^{ν−λ−μ} F((μ+λ−ν)/2, (μ−λ+1−ν)/2, 1−ν; 4z/(1+z)²)`, truncated at
/// `order`, with ν symbolic.
pub fn pt_closed_form_series(lambda: &Rat, mu: &Rat, order: usize) -> Series<RatFunc> {
    let nu = var(Var::Nu);
    let l = cst(lambda.clone());
    let m = cst(mu.clone());
    let exponent = nu.sub(&l).sub(&m);
    // binomial series of (1+z)^e
    let binomial = Series::from_fn(order, |k| {
        let falling = (0..k).fold(Poly::one(), |acc, j| {
            acc.mul(&exponent.sub(&cint(j as i64)))
        });
        RatFunc::from(falling.scale(&(int(1) / factorial(k as u64))))
    });
    let a = m.add(&l).sub(&nu).scale(&rat(1, 2));
    let b = m.sub(&l).add(&cint(1)).sub(&nu).scale(&rat(1, 2));
    let w = Series::from_grades(order, |k| {
        let sign = if k % 2 == 1 { 4 } else { -4 };
        RatFunc::from(cint(sign * k as i64))
    });
    let mut f = Series::zero(order);
    let mut w_power = Series::one(order);
    for j in 0..=order {
        let fj = hypergeometric_term(rising(&a, j as u64).mul(&rising(&b, j as u64)), j as u64);
        f = f.add(&w_power.left_mul(&fj)).expect("equal orders");
        w_power = w_power.mul(&w).expect("equal orders");
    }
    binomial.mul(&f).expect("equal orders")
}

/// Checks that the closed-form series is annihilated by `𝒢₁` up to
/// `order` and agrees with the Frobenius solution.
pub fn pt_solution_check(lambda: &Rat, mu: &Rat, order: usize) -> Check {
    let op = pt_operator(order).map(|p| specialize(p, lambda, mu));
    let phi = pt_closed_form_series(lambda, mu, order);
    if phi.coeff(0) != &RatFunc::one() {
        return Err(Mismatch::new(0, "constant term is not one"));
    }
    let image = op.apply(&phi)?;
    if let Some(n) = (0..=order).find(|&n| !image.coeff(n).is_zero()) {
        return Err(Mismatch::new(
            n,
            format!("operator leaves {}", image.coeff(n)),
        ));
    }
    compare_series(&phi, &solve_monic(&op), "closed form vs Frobenius solution")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eckart_first_coefficient() {
        // αβ / (1 − ν)
        let f1 = eckart_coefficient(1);
        assert_eq!(f1.den(), &UPoly::linear(&int(1)));
        assert_eq!(f1.num(), &var(Var::Alpha).mul(&var(Var::Beta)).neg());
    }

    #[test]
    fn bridges_hold() {
        for n in 1..=8u64 {
            for i in 0..n / 2 {
                assert!(eckart_bridge(n, i).is_ok(), "n={n} i={i}");
            }
            if n % 2 == 1 {
                assert!(eckart_odd_bridge(n).is_ok());
            }
            assert!(morse_bridges(n).is_ok(), "morse n={n}");
        }
        for k in 0..8 {
            assert!(pt_bridge(k).is_ok());
        }
    }

    #[test]
    fn morse_residue_denominator() {
        // residue of φ_2 at ν = 2 is 2²ω²α(α+1)/(2!·1!)
        let r = morse_coefficient(2).residue_at(2).unwrap();
        let expected = var(Var::Omega)
            .pow(2)
            .mul(&rising(&var(Var::Alpha), 2))
            .scale(&int(2));
        assert_eq!(r.as_poly().unwrap(), &expected);
    }

    #[test]
    fn closed_form_at_zero_parameters() {
        assert!(pt_solution_check(&int(0), &int(0), 4).is_ok());
    }
}
