//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails. Every comparison is exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use specres::algebra::{int, rat, FreePoly, Poly, Rat, RatFunc, Ring, Series, Var, Word};
use specres::compositions::{count, Filter};
use specres::darboux::{
    check_w_rho_round_trip, darboux_transform, prepotential_from_residues,
    residues_from_prepotential, residues_via_delta, Prepotential,
};
use specres::frobenius::{residue_table, OperatorSpec};
use specres::kdv::{
    cube_identity_constant, determine_sign, verify_cube_identity, verify_evolution,
    verify_evolution_abelianized,
};
use specres::solvable::{
    composition_sum, pt_solution_check, residue_polynomial, tableaux_generating_identity,
    verify_factorization, verify_sum_identity, PotentialFamily, SumId,
};
use specres::suites::{gauge_invariance, random_gauge, random_operator};
use specres::transforms::{potential_from_residues, residues_from_potential};

type Outcome = Result<Vec<String>, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check(r: specres::Check) -> Result<(), String> {
    r.map_err(|m| m.to_string())
}

fn free(terms: &[(&[u32], i64, i64)]) -> Free {
    Free::from_terms(
        terms
            .iter()
            .map(|(w, n, d)| (Word::new(w.to_vec()), rat(*n, *d))),
    )
}

fn rho_table() -> Outcome {
    let expected = [
        free(&[(&[1], 1, 1)]),
        free(&[(&[2], 1, 2), (&[1, 1], 1, 2)]),
        free(&[
            (&[3], 1, 3),
            (&[2, 1], 1, 6),
            (&[1, 2], 1, 6),
            (&[1, 1, 1], 1, 12),
        ]),
        free(&[
            (&[4], 1, 4),
            (&[3, 1], 1, 12),
            (&[1, 3], 1, 12),
            (&[2, 2], 1, 16),
            (&[1, 1, 2], 1, 48),
            (&[2, 1, 1], 1, 48),
            (&[1, 2, 1], 1, 36),
            (&[1, 1, 1, 1], 1, 144),
        ]),
    ];
    let rho = residues_from_potential(&free_generators(4)).map_err(|e| e.to_string())?;
    for (i, e) in expected.iter().enumerate() {
        ensure(rho.coeff(i + 1) == e, || {
            format!("rho_{} = {} expected {e}", i + 1, rho.coeff(i + 1))
        })?;
    }
    Ok(vec![format!("rho_4 = {}", rho.coeff(4))])
}

fn round_trip() -> Outcome {
    let total: u64 = (1..=8).map(|n| count(n, &Filter::all()).unwrap()).sum();
    ensure(total == 255, || format!("{total} compositions up to 8"))?;
    let g = free_generators(8);
    let e = |e: specres::Error| e.to_string();
    ensure(
        potential_from_residues(&residues_from_potential(&g).map_err(e)?).map_err(e)? == g,
        || "free U -> rho -> U".into(),
    )?;
    ensure(
        residues_from_potential(&potential_from_residues(&g).map_err(e)?).map_err(e)? == g,
        || "free rho -> U -> rho".into(),
    )?;
    let c = commutative_generators(12);
    ensure(
        potential_from_residues(&residues_from_potential(&c).map_err(e)?).map_err(e)? == c,
        || "commutative U -> rho -> U".into(),
    )?;
    ensure(
        residues_from_potential(&potential_from_residues(&c).map_err(e)?).map_err(e)? == c,
        || "commutative rho -> U -> rho".into(),
    )?;
    for family in [
        PotentialFamily::Eckart,
        PotentialFamily::PoschlTeller,
        PotentialFamily::Morse,
    ] {
        let u = family.potential_series(12);
        ensure(
            potential_from_residues(&residues_from_potential(&u).map_err(e)?).map_err(e)? == u,
            || format!("{family} in Q[u,v]"),
        )?;
    }
    Ok(vec!["free N=8, Q[U1..U12] and Q[u,v] families N=12".into()])
}

fn routes() -> Outcome {
    let u: Series<FreePoly<RatFunc>> = Series::from_grades(7, |k| FreePoly::generator(k as u32));
    let table = residue_table(&OperatorSpec::schrodinger(u).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let rho = residues_from_potential(&free_generators(7)).map_err(|e| e.to_string())?;
    for n in 1..=7 {
        let expected = rho.coeff(n).map_coeffs(|r| RatFunc::from(r.clone()));
        ensure(table.coeff(n) == &expected, || {
            format!("n={n}: {} vs {expected}", table.coeff(n))
        })?;
    }
    Ok(vec![])
}

fn gauge() -> Outcome {
    for seed in 0..20u64 {
        check(gauge_invariance(
            &random_operator(seed, 8),
            &random_gauge(seed, 8),
        ))
        .map_err(|m| format!("seed {seed}: {m}"))?;
    }
    Ok(vec!["20 seeded trials at N=8".into()])
}

fn eckart_u_zero() -> Outcome {
    let v = Poly::var(Var::V);
    let mut display = String::new();
    for n in 1..=12u64 {
        let rho = residue_polynomial(&PotentialFamily::Eckart, n as usize)
            .map_err(|e| e.to_string())?
            .eval(Var::U, &int(0));
        let product = (0..n as i64).fold(Poly::one(), |acc, j| {
            acc.mul(&v.add(&Poly::constant(int(j * (j + 1)))))
        });
        ensure(
            rho.scale(&(factorial(n) * factorial(n - 1))) == product,
            || format!("n={n}: {rho}"),
        )?;
        if n == 3 {
            display = rho.to_string();
        }
    }
    ensure(display == "v + 2/3 v^2 + 1/12 v^3", || {
        format!("rho_3 displays as {display}")
    })?;
    Ok(vec![format!("rho_3(0, v) = {display}")])
}

fn factorizations() -> Outcome {
    for (family, max) in [
        (PotentialFamily::Eckart, 10),
        (PotentialFamily::PoschlTeller, 10),
        (PotentialFamily::Morse, 12),
    ] {
        for n in 1..=max {
            check(verify_factorization(&family, n)).map_err(|m| format!("{family} n={n}: {m}"))?;
        }
    }
    Ok(vec![])
}

fn sum_identities() -> Outcome {
    let mut checked = 0;
    for id in SumId::ALL {
        for n in (1..=12).filter(|&n| id.applies_to(n)) {
            check(verify_sum_identity(id, n))?;
            checked += 1;
        }
    }
    let c41 = composition_sum(SumId::Csum2, 4, 1).map_err(|e| e.to_string())?;
    let c42 = composition_sum(SumId::Csum2, 4, 2).map_err(|e| e.to_string())?;
    ensure(c41 == int(108) && c42 == int(9), || {
        format!("csum2 n=4: {c41}, {c42}")
    })?;
    Ok(vec![format!("{checked} (identity, n) pairs")])
}

fn darboux() -> Outcome {
    let u = free_generators(8);
    let e = |e: specres::Error| e.to_string();
    let rho = residues_from_potential(&u).map_err(e)?;
    let partner = darboux_transform(&u).map_err(e)?;
    ensure(
        residues_from_potential(&partner).map_err(e)? == rho.neg(),
        || "residues not negated".into(),
    )?;
    let g = |k: u32| Free::generator(k);
    let free_expected = [
        g(1).neg(),
        g(1).pow(2).scale(&int(-2)).sub(&g(2)),
        g(1).pow(3)
            .scale(&int(-2))
            .sub(&g(1).mul(&g(2)))
            .sub(&g(2).mul(&g(1)))
            .sub(&g(3)),
    ];
    let c = |k: u32| Poly::var(Var::Gen(k));
    let printed = [
        c(1).neg(),
        c(1).pow(2).scale(&int(-2)).sub(&c(2)),
        c(1).pow(3)
            .scale(&int(-2))
            .sub(&c(1).mul(&c(2)).scale(&int(2)))
            .sub(&c(3)),
    ];
    let mut lines = Vec::new();
    for k in 0..3 {
        let got = partner.coeff(k + 1);
        ensure(got == &free_expected[k], || format!("U~_{} = {got}", k + 1))?;
        ensure(got.abelianize() == printed[k], || {
            format!("U~_{} abelianizes to {}", k + 1, got.abelianize())
        })?;
        lines.push(format!("U~_{} = {got}", k + 1));
    }
    Ok(lines)
}

fn w_inversion() -> Outcome {
    let g = free_generators(8);
    check(check_w_rho_round_trip(&g))?;
    let e = |e: specres::Error| e.to_string();
    let w = prepotential_from_residues(&g).map_err(e)?;
    let back = residues_from_prepotential(&w).map_err(e)?;
    ensure(back == g, || "rho -> W -> rho".into())?;
    let small: Series<FreePoly<RatFunc>> =
        Series::from_grades(5, |k| FreePoly::generator(k as u32));
    let via_delta = residues_via_delta(&Prepotential::new(small).map_err(e)?).map_err(e)?;
    let via_sum = residues_from_prepotential(&Prepotential::new(free_generators(5)).map_err(e)?)
        .map_err(e)?;
    for n in 1..=5 {
        let expected = via_sum.coeff(n).map_coeffs(|r| RatFunc::from(r.clone()));
        ensure(via_delta.coeff(n) == &expected, || {
            format!("delta residue n={n}")
        })?;
    }
    Ok(vec![])
}

fn kdv() -> Outcome {
    let (sign, witnesses) = determine_sign().map_err(|e| e.to_string())?;
    check(verify_evolution(6, sign))?;
    check(verify_evolution_abelianized(8, sign))?;
    let mut lines = vec![format!("sign {sign}")];
    lines.extend(witnesses.iter().map(|w| w.to_string()));
    Ok(lines)
}

fn cube() -> Outcome {
    let c = cube_identity_constant();
    check(verify_cube_identity(10, &c))?;
    for n in 2..=10 {
        for comp in compositions(n).iter().filter(|p| p.len() >= 2) {
            let (lhs, rhs) = comp.cube_identity_sides().map_err(|e| e.to_string())?;
            ensure(lhs == &c * rhs, || format!("{:?}", comp.parts()))?;
        }
    }
    Ok(vec![format!("c = {c}")])
}

fn pt_closed_form() -> Outcome {
    let choices: [(Rat, Rat); 2] = [(int(1), int(2)), (rat(1, 2), rat(-1, 3))];
    for (l, m) in &choices {
        check(pt_solution_check(l, m, 5)).map_err(|e| format!("lambda={l} mu={m}: {e}"))?;
    }
    Ok(vec![])
}

fn tableaux() -> Outcome {
    for n in 1..=10 {
        check(tableaux_generating_identity(n))?;
    }
    Ok(vec![])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("residue table through rho_4", rho_table),
        ("potential/residue round trip", round_trip),
        ("Frobenius table equals composition sums, N=7", routes),
        ("gauge invariance of residue tables", gauge),
        ("Eckart residues at u=0 factor, n<=12", eckart_u_zero),
        (
            "bivariate factorizations (Eckart, Poschl-Teller, Morse)",
            factorizations,
        ),
        ("composition-sum identities, n<=12", sum_identities),
        ("Darboux partner negates residues", darboux),
        (
            "prepotential/residue inversion and delta residues",
            w_inversion,
        ),
        ("KdV evolution of residues", kdv),
        ("cube identity, n<=10", cube),
        (
            "Poschl-Teller closed-form solution to order 5",
            pt_closed_form,
        ),
        ("tableaux generating functions, n<=10", tableaux),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(notes) => {
                println!("PASS {:>2} {name} ({secs:.2}s)", i + 1);
                for n in notes {
                    println!("        {n}");
                }
            }
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
