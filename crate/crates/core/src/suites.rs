//! Named verification suites with machine-readable reports.
//!
//! Each suite runs independently; cases are evaluated in parallel where
//! that pays off, and reports list cases in a fixed order regardless.

use std::fmt::{self, Display};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, rat, FreePoly, Poly, Rat, RatFunc, Ring, Series, UPoly, Var, Word};
use crate::darboux::{
    check_factorization, check_w_rho_round_trip, darboux_transform, prepotential_from_potential,
    prepotential_from_residues, residues_from_prepotential, residues_via_delta, Prepotential,
};
use crate::frobenius::{
    check_conjugate_solution, conjugate_operator, gauge_formula_potential, normalize_commutative,
    normalize_to_schrodinger, residue_table, OperatorSpec,
};
use crate::kdv::{cube_identity_constant, determine_sign, verify_cube_identity_at, FlowDerivation};
use crate::solvable::{
    check_hypergeometric_coefficients, closed_form_product, compare_polys,
    hypergeometric_residue_oracle, pt_bridge, pt_solution_check, residue_polynomial,
    tableaux_generating_identity, verify_factorization, verify_sum_identity, PotentialFamily,
    SumId,
};
use crate::transforms::{
    potential_from_residues, potential_via_residue_ladder, residue_ladder, residues_from_potential,
    rho_nk,
};
use crate::{free_potential, Check, Mismatch};

type Free = FreePoly<Rat>;

/// Outcome of one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub order: usize,
    pub pass: bool,
    /// First discrepancy; empty when the case passes.
    pub detail: String,
}

impl CaseReport {
    pub fn new(case: impl Into<String>, order: usize, result: Check) -> Self {
        let (pass, detail) = match result {
            Ok(()) => (true, String::new()),
            Err(m) => (false, m.to_string()),
        };
        CaseReport {
            case: case.into(),
            order,
            pass,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    /// Findings that are not pass/fail, such as the flow sign.
    pub notes: Vec<String>,
    pub overall: bool,
}

impl VerifyReport {
    fn new(suite: &str, cases: Vec<CaseReport>, notes: Vec<String>) -> Self {
        let overall = cases.iter().all(|c| c.pass);
        VerifyReport {
            suite: suite.into(),
            cases,
            notes,
            overall,
        }
    }
}

/// Which coefficient ring a suite works in; the free algebra grows much
/// faster with the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Setting {
    Free,
    Commutative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    RhoTable,
    RhoInv,
    Routes,
    Gauge,
    FacEckart,
    FacPt,
    FacMorse,
    Csums,
    Tableaux,
    Darboux,
    Winv,
    Kdv,
    Cube,
    PtSolution,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::RhoTable,
        Suite::RhoInv,
        Suite::Routes,
        Suite::Gauge,
        Suite::FacEckart,
        Suite::FacPt,
        Suite::FacMorse,
        Suite::Csums,
        Suite::Tableaux,
        Suite::Darboux,
        Suite::Winv,
        Suite::Kdv,
        Suite::Cube,
        Suite::PtSolution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RhoTable => "rhotable",
            Suite::RhoInv => "rhoinv",
            Suite::Routes => "routes",
            Suite::Gauge => "gauge",
            Suite::FacEckart => "fac-eckart",
            Suite::FacPt => "fac-pt",
            Suite::FacMorse => "fac-morse",
            Suite::Csums => "csums",
            Suite::Tableaux => "tableaux",
            Suite::Darboux => "darboux",
            Suite::Winv => "winv",
            Suite::Kdv => "kdv",
            Suite::Cube => "cube",
            Suite::PtSolution => "pt-solution",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn setting(self) -> Setting {
        match self {
            Suite::RhoTable
            | Suite::RhoInv
            | Suite::Routes
            | Suite::Darboux
            | Suite::Winv
            | Suite::Kdv => Setting::Free,
            _ => Setting::Commutative,
        }
    }

    pub fn default_order(self) -> usize {
        match self {
            Suite::RhoTable => 4,
            Suite::Routes => 7,
            Suite::Kdv | Suite::PtSolution => 6,
            Suite::RhoInv | Suite::Gauge | Suite::Darboux | Suite::Winv => 8,
            Suite::FacEckart | Suite::FacPt | Suite::Tableaux | Suite::Cube => 10,
            Suite::FacMorse | Suite::Csums => 12,
        }
    }

    pub fn run(self, order: usize) -> VerifyReport {
        let (cases, notes) = match self {
            Suite::RhoTable => (rho_table_cases(order), vec![]),
            Suite::RhoInv => (rho_inv_cases(order), vec![]),
            Suite::Routes => (route_cases(order), vec![]),
            Suite::Gauge => (gauge_cases(order), vec![]),
            Suite::FacEckart => (factorization_cases(&PotentialFamily::Eckart, order), vec![]),
            Suite::FacPt => (
                factorization_cases(&PotentialFamily::PoschlTeller, order),
                vec![],
            ),
            Suite::FacMorse => (factorization_cases(&PotentialFamily::Morse, order), vec![]),
            Suite::Csums => (csum_cases(order), vec![]),
            Suite::Tableaux => (
                (1..=order as u64)
                    .into_par_iter()
                    .map(|n| {
                        CaseReport::new(
                            format!("tableaux n={n}"),
                            n as usize,
                            tableaux_generating_identity(n),
                        )
                    })
                    .collect(),
                vec![],
            ),
            Suite::Darboux => (darboux_cases(order), vec![]),
            Suite::Winv => (winv_cases(order), vec![]),
            Suite::Kdv => kdv_cases(order),
            Suite::Cube => cube_cases(order),
            Suite::PtSolution => (pt_solution_cases(order), vec![]),
        };
        VerifyReport::new(self.name(), cases, notes)
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs every suite, each at its default order capped by `cap`, and merges
/// the cases under `suite/case` names.
pub fn run_all(cap: Option<usize>) -> VerifyReport {
    let mut cases = Vec::new();
    let mut notes = Vec::new();
    for suite in Suite::ALL {
        let order = cap.map_or(suite.default_order(), |c| c.min(suite.default_order()));
        let report = suite.run(order);
        cases.extend(report.cases.into_iter().map(|mut c| {
            c.case = format!("{}/{}", suite.name(), c.case);
            c
        }));
        notes.extend(
            report
                .notes
                .into_iter()
                .map(|n| format!("{}: {n}", suite.name())),
        );
    }
    VerifyReport::new("all", cases, notes)
}

/// One case per grade `from..=order`, comparing two series.
fn per_grade<A: Ring + Display>(
    label: &str,
    left: &Series<A>,
    right: &Series<A>,
    from: usize,
) -> Vec<CaseReport> {
    (from..=left.order())
        .map(|n| {
            let check = if left.coeff(n) == right.coeff(n) {
                Ok(())
            } else {
                Err(Mismatch::new(
                    n,
                    format!("{} != {}", left.coeff(n), right.coeff(n)),
                ))
            };
            CaseReport::new(format!("{label} n={n}"), n, check)
        })
        .collect()
}

fn failed(label: &str, order: usize, m: impl Into<Mismatch>) -> Vec<CaseReport> {
    vec![CaseReport::new(label, order, Err(m.into()))]
}

fn generators(order: usize) -> Series<Free> {
    free_potential(order)
}

/// The first four residues of the free potential, word by word.
pub fn reference_residues() -> Vec<Vec<(Vec<u32>, Rat)>> {
    vec![
        vec![(vec![1], rat(1, 1))],
        vec![(vec![2], rat(1, 2)), (vec![1, 1], rat(1, 2))],
        vec![
            (vec![3], rat(1, 3)),
            (vec![2, 1], rat(1, 6)),
            (vec![1, 2], rat(1, 6)),
            (vec![1, 1, 1], rat(1, 12)),
        ],
        vec![
            (vec![4], rat(1, 4)),
            (vec![3, 1], rat(1, 12)),
            (vec![1, 3], rat(1, 12)),
            (vec![2, 2], rat(1, 16)),
            (vec![1, 1, 2], rat(1, 48)),
            (vec![2, 1, 1], rat(1, 48)),
            (vec![1, 2, 1], rat(1, 36)),
            (vec![1, 1, 1, 1], rat(1, 144)),
        ],
    ]
}

fn rho_table_cases(order: usize) -> Vec<CaseReport> {
    let order = order.min(4);
    let rho = match residues_from_potential(&generators(order)) {
        Ok(r) => r,
        Err(e) => return failed("table", order, e),
    };
    reference_residues()
        .into_iter()
        .take(order)
        .enumerate()
        .map(|(i, entries)| {
            let n = i + 1;
            let expected = Free::from_terms(entries.into_iter().map(|(w, c)| (Word::new(w), c)));
            let check = if rho.coeff(n) == &expected {
                Ok(())
            } else {
                Err(Mismatch::new(n, format!("{} != {expected}", rho.coeff(n))))
            };
            CaseReport::new(format!("table n={n}"), n, check)
        })
        .collect()
}

fn rho_inv_cases(order: usize) -> Vec<CaseReport> {
    let u = generators(order);
    let run = || -> Result<Vec<CaseReport>, crate::Error> {
        let rho = residues_from_potential(&u)?;
        let back = potential_from_residues(&rho)?;
        let mut cases = per_grade("U -> rho -> U", &back, &u, 1);
        // the same generators read as residues
        let v = potential_from_residues(&u)?;
        cases.extend(per_grade(
            "rho -> U -> rho",
            &residues_from_potential(&v)?,
            &u,
            1,
        ));
        cases.extend(per_grade(
            "ladder vs inversion",
            &potential_via_residue_ladder(&u),
            &v,
            1,
        ));
        Ok(cases)
    };
    run().unwrap_or_else(|e| failed("rhoinv", order, e))
}

fn to_ratfunc(s: &Series<Free>) -> Series<FreePoly<RatFunc>> {
    s.map(|c| c.map_coeffs(|r| RatFunc::from(r.clone())))
}

fn route_cases(order: usize) -> Vec<CaseReport> {
    let run = || -> Result<Vec<CaseReport>, crate::Error> {
        let u = generators(order);
        let rho = residues_from_potential(&u)?;
        let op = OperatorSpec::schrodinger(to_ratfunc(&u))?;
        let frob = residue_table(&op)?;
        let mut cases = per_grade("Frobenius vs composition sum", &frob, &to_ratfunc(&rho), 1);
        let ladder = residue_ladder(&rho);
        let ru = to_ratfunc(&u);
        let small = order.min(6);
        for n in 1..=small {
            let check = (1..=n).try_for_each(|k| {
                let direct = rho_nk(&ru.truncate(n), n, k)?;
                let expected = ladder[n][k - 1].map_coeffs(|r| RatFunc::from(r.clone()));
                if direct == expected {
                    Ok(())
                } else {
                    Err(Mismatch::new(n, format!("k={k}: {direct} != {expected}")))
                }
            });
            cases.push(CaseReport::new(
                format!("ladder vs residue n={n}"),
                n,
                check,
            ));
        }
        Ok(cases)
    };
    run().unwrap_or_else(|e| failed("routes", order, e))
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// A random operator with rational coefficients.
pub fn random_operator(seed: u64, order: usize) -> OperatorSpec<RatFunc> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Series<RatFunc> = Series::zero(order);
    let mut q: Series<RatFunc> = Series::zero(order);
    for n in 1..=order {
        p.set(n, RatFunc::from(random_rat(&mut rng)));
        q.set(n, RatFunc::from(random_rat(&mut rng)));
    }
    OperatorSpec::new(p, q).expect("zero constant terms")
}

/// A random monic gauge factor with rational coefficients.
pub fn random_gauge(seed: u64, order: usize) -> Series<RatFunc> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut mu = Series::one(order);
    for n in 1..=order {
        mu.set(n, RatFunc::from(random_rat(&mut rng)));
    }
    mu
}

/// Residue tables before and after conjugation by `mu`.
pub fn gauge_invariance<A>(op: &OperatorSpec<A>, mu: &Series<A>) -> Check
where
    A: crate::algebra::NuAlgebra + Display,
{
    let before = residue_table(op)?;
    let after = residue_table(&conjugate_operator(op, mu)?)?;
    crate::compare_series(&after, &before, "residues after gauge")
}

/// The three normalizations to Schrödinger form agree.
pub fn normalization_routes(op: &OperatorSpec<RatFunc>) -> Check {
    let (mu, u) = normalize_to_schrodinger(op)?;
    let (_, u_comm) = normalize_commutative(op)?;
    crate::compare_series(&u_comm, &u, "exponential route vs conjugation")?;
    crate::compare_series(
        &gauge_formula_potential(op, &mu)?,
        &u,
        "gauge formula vs conjugation",
    )?;
    check_conjugate_solution(op, &mu)?;
    gauge_invariance(op, &mu)
}

fn gauge_cases(order: usize) -> Vec<CaseReport> {
    let mut cases: Vec<CaseReport> = (0..20u64)
        .into_par_iter()
        .map(|seed| {
            let op = random_operator(seed, order);
            let mu = random_gauge(seed, order);
            CaseReport::new(
                format!("random gauge {seed}"),
                order,
                gauge_invariance(&op, &mu),
            )
        })
        .collect();
    cases.extend((0..5u64).map(|seed| {
        let op = random_operator(100 + seed, order);
        CaseReport::new(
            format!("normalization routes {seed}"),
            order,
            normalization_routes(&op),
        )
    }));
    // a noncommutative operator: P_k = U_{2k−1}, Q_k = U_{2k}
    let small = order.min(5);
    let free_op = OperatorSpec::new(
        Series::from_grades(small, |k| FreePoly::<RatFunc>::generator(2 * k as u32 - 1)),
        Series::from_grades(small, |k| FreePoly::generator(2 * k as u32)),
    )
    .expect("zero constant terms");
    let mu = random_gauge(7, small).map(|c| FreePoly::constant(c.clone()));
    cases.push(CaseReport::new(
        "free operator, rational gauge",
        small,
        gauge_invariance(&free_op, &mu),
    ));
    let normalized = normalize_to_schrodinger(&free_op)
        .map_err(Mismatch::from)
        .and_then(|(mu, _)| {
            check_conjugate_solution(&free_op, &mu)?;
            gauge_invariance(&free_op, &mu)
        });
    cases.push(CaseReport::new(
        "free operator, normalizing gauge",
        small,
        normalized,
    ));
    cases
}

fn factorization_cases(family: &PotentialFamily, order: usize) -> Vec<CaseReport> {
    let mut cases: Vec<CaseReport> = (1..=order)
        .into_par_iter()
        .map(|n| {
            CaseReport::new(
                format!("{family} product n={n}"),
                n,
                verify_factorization(family, n),
            )
        })
        .collect();
    let direct = residues_from_potential(&family.potential_series(order));
    cases.extend((1..=order).map(|n| {
        let check = match &direct {
            Ok(rho) => residue_polynomial(family, n)
                .map_err(Mismatch::from)
                .and_then(|p| compare_polys(&p, rho.coeff(n), n, "family sum vs generic sum")),
            Err(e) => Err(e.clone().into()),
        };
        CaseReport::new(format!("{family} generic route n={n}"), n, check)
    }));
    match family {
        PotentialFamily::Eckart | PotentialFamily::Morse => {
            cases.extend(
                (1..=order)
                    .into_par_iter()
                    .map(|n| {
                        let check = hypergeometric_residue_oracle(family, n).and_then(|p| {
                            compare_polys(
                                &p,
                                &residue_polynomial(family, n)?,
                                n,
                                "hypergeometric vs composition sum",
                            )
                        });
                        CaseReport::new(format!("{family} hypergeometric n={n}"), n, check)
                    })
                    .collect::<Vec<_>>(),
            );
            let small = order.min(6);
            cases.push(CaseReport::new(
                format!("{family} series coefficients"),
                small,
                check_hypergeometric_coefficients(family, small),
            ));
        }
        PotentialFamily::PoschlTeller => {
            cases.extend(
                (1..order as i64)
                    .map(|k| CaseReport::new(format!("bridge k={k}"), k as usize, pt_bridge(k))),
            );
        }
        PotentialFamily::Custom(_) => {}
    }
    if *family == PotentialFamily::Eckart {
        cases.extend(
            (1..=order).map(|n| CaseReport::new(format!("u=0 product n={n}"), n, eckart_v_only(n))),
        );
    }
    cases
}

/// `n!(n−1)! ρ_n(0, v) = v(v + 1·2)(v + 2·3)⋯(v + (n−1)n)`.
pub fn eckart_v_only(n: usize) -> Check {
    let rho = residue_polynomial(&PotentialFamily::Eckart, n)?.eval(Var::U, &int(0));
    let nn = n as u64;
    let scaled = rho.scale(&(crate::solvable::factorial(nn) * crate::solvable::factorial(nn - 1)));
    let product = (0..n as i64).fold(UPoly::one(), |acc, j| {
        acc.mul(&UPoly::new(vec![int(j * (j + 1)), int(1)]))
    });
    compare_polys(&scaled, &product.to_poly(Var::V), n, "u = 0 specialization")?;
    // the closed form agrees too
    let closed = closed_form_product(&PotentialFamily::Eckart, n)?.eval(Var::U, &int(0));
    compare_polys(&closed, &rho, n, "closed form at u = 0")
}

fn csum_cases(order: usize) -> Vec<CaseReport> {
    let jobs: Vec<(SumId, u64)> = SumId::ALL
        .into_iter()
        .flat_map(|id| {
            (1..=order as u64)
                .filter(move |&n| id.applies_to(n))
                .map(move |n| (id, n))
        })
        .collect();
    jobs.into_par_iter()
        .map(|(id, n)| {
            CaseReport::new(
                format!("{id} n={n}"),
                n as usize,
                verify_sum_identity(id, n),
            )
        })
        .collect()
}

/// The partner potential through grade 3, as polynomials in `U_1, U_2, U_3`.
pub fn partner_display_check() -> Check {
    let t = darboux_transform(&generators(3))?;
    let g = |k: u32| Poly::var(Var::Gen(k));
    let expected = [
        g(1).neg(),
        g(1).pow(2).scale(&int(-2)).sub(&g(2)),
        g(1).pow(3)
            .scale(&int(-2))
            .sub(&g(1).mul(&g(2)).scale(&int(2)))
            .sub(&g(3)),
    ];
    for (i, e) in expected.iter().enumerate() {
        compare_polys(&t.coeff(i + 1).abelianize(), e, i + 1, "partner potential")?;
    }
    Ok(())
}

fn darboux_cases(order: usize) -> Vec<CaseReport> {
    let u = generators(order);
    let run = || -> Result<Vec<CaseReport>, crate::Error> {
        let rho = residues_from_potential(&u)?;
        let partner = darboux_transform(&u)?;
        let rho_partner = residues_from_potential(&partner)?;
        let mut cases = per_grade("negation", &rho_partner, &rho.neg(), 1);
        cases.extend(per_grade(
            "double transform",
            &darboux_transform(&partner)?,
            &u,
            1,
        ));
        cases.push(CaseReport::new(
            "partner display",
            3,
            partner_display_check(),
        ));
        let small = order.min(6);
        let lifted = u
            .truncate(small)
            .map(|c| c.map_coeffs(|r| Poly::constant(r.clone())));
        // a test series with its own generators, beyond those of U
        let f = Series::from_fn(small, |k| {
            FreePoly::<Poly>::generator((small + 1 + k) as u32)
        });
        cases.push(CaseReport::new(
            "factorization",
            small,
            check_factorization(&lifted, &f),
        ));
        Ok(cases)
    };
    run().unwrap_or_else(|e| failed("darboux", order, e))
}

fn winv_cases(order: usize) -> Vec<CaseReport> {
    let g = generators(order);
    let run = || -> Result<Vec<CaseReport>, crate::Error> {
        let mut cases = vec![CaseReport::new(
            "round trips",
            order,
            check_w_rho_round_trip(&g),
        )];
        let w_direct = prepotential_from_potential(&g)?;
        let w_via_rho = prepotential_from_residues(&residues_from_potential(&g)?)?;
        cases.extend(per_grade(
            "W from U vs W from rho",
            w_via_rho.series(),
            w_direct.series(),
            1,
        ));
        let w_of_rho = prepotential_from_residues(&g)?;
        let rho_of_w = residues_from_prepotential(&Prepotential::new(g.clone())?)?;
        cases.extend((1..=order).map(|n| {
            let odd =
                w_of_rho.series().coeff(n).all_words_odd() && rho_of_w.coeff(n).all_words_odd();
            let check = if odd {
                Ok(())
            } else {
                Err(Mismatch::new(n, "an even-length word appears"))
            };
            CaseReport::new(format!("odd words n={n}"), n, check)
        }));
        let small = order.min(6);
        let w = Prepotential::new(to_ratfunc(&g.truncate(small)))?;
        let via_delta = residues_via_delta(&w)?;
        let via_sum = to_ratfunc(&residues_from_prepotential(&Prepotential::new(
            g.truncate(small),
        )?)?);
        cases.extend(per_grade("delta residue", &via_delta, &via_sum, 1));
        Ok(cases)
    };
    run().unwrap_or_else(|e| failed("winv", order, e))
}

fn kdv_cases(order: usize) -> (Vec<CaseReport>, Vec<String>) {
    let (sign, witnesses) = match determine_sign() {
        Ok(x) => x,
        Err(e) => return (failed("sign", 2, e), vec![]),
    };
    let mut notes = vec![format!("flow sign {sign}")];
    notes.extend(witnesses.iter().map(|w| w.to_string()));
    let run = || -> Result<Vec<CaseReport>, crate::Error> {
        let flow = FlowDerivation::new(order, sign)?;
        let rho = residues_from_potential(&generators(order))?;
        let mut cases: Vec<CaseReport> = (1..=order)
            .into_par_iter()
            .map(|n| {
                let check = flow
                    .apply(rho.coeff(n))
                    .map_err(Mismatch::from)
                    .and_then(|d| {
                        let e = rho.coeff(n).scale(&int((n * n * n) as i64));
                        if d == e {
                            Ok(())
                        } else {
                            Err(Mismatch::new(
                                n,
                                format!("derivative minus n³ρ_n = {}", d.sub(&e)),
                            ))
                        }
                    });
                CaseReport::new(format!("free n={n}"), n, check)
            })
            .collect();
        let gens = Series::from_grades(order, |k| Poly::var(Var::Gen(k as u32)));
        let rho_ab = residues_from_potential(&gens)?;
        cases.extend((1..=order).map(|n| {
            let check = flow
                .apply_abelian(rho_ab.coeff(n))
                .map_err(Mismatch::from)
                .and_then(|d| {
                    compare_polys(
                        &d,
                        &rho_ab.coeff(n).scale(&int((n * n * n) as i64)),
                        n,
                        "abelianized",
                    )
                });
            CaseReport::new(format!("abelianized n={n}"), n, check)
        }));
        Ok(cases)
    };
    (run().unwrap_or_else(|e| failed("kdv", order, e)), notes)
}

fn cube_cases(order: usize) -> (Vec<CaseReport>, Vec<String>) {
    let c = cube_identity_constant();
    let cases = (2..=order as u64)
        .map(|n| {
            CaseReport::new(
                format!("cube n={n}"),
                n as usize,
                verify_cube_identity_at(n, &c),
            )
        })
        .collect();
    (cases, vec![format!("cube constant {c}")])
}

fn pt_solution_cases(order: usize) -> Vec<CaseReport> {
    let choices = [(int(1), int(2)), (rat(1, 2), rat(-1, 3)), (int(0), int(0))];
    choices
        .into_par_iter()
        .map(|(l, m)| {
            CaseReport::new(
                format!("lambda={l} mu={m}"),
                order,
                pt_solution_check(&l, &m, order),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let report = s.run(s.default_order().min(4));
            assert!(
                report.overall,
                "{s}: {:?}",
                report.cases.iter().find(|c| !c.pass)
            );
            assert!(!report.cases.is_empty(), "{s}");
        }
    }
}
