//! Batch front end: residue tables, transforms and verification suites.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad flags or input,
//! 3 an order guard was exceeded.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use specres::algebra::{format_rat, parse_rat, FreePoly, Poly, Rat, Series, Var};
use specres::darboux::{darboux_transform, prepotential_from_potential};
use specres::serial::{parse_series, poly_to_json, series_to_json};
use specres::solvable::{
    composition_sum, product_coefficient, residue_polynomial, PotentialFamily, SumId,
};
use specres::suites::{run_all, Setting, Suite, VerifyReport};
use specres::transforms::{potential_from_residues, residues_from_potential};
use specres::{free_potential, Error};

const COMMUTATIVE_GUARD: usize = 14;
const FREE_GUARD: usize = 10;
const GUARD_ENV: &str = "SPECRES_MAX_ORDER";

#[derive(Parser)]
#[command(
    name = "specres",
    version,
    about = "Exact spectral residues of formal second-order operators"
)]
struct Cli {
    /// Output format; `verify` defaults to json, everything else to pretty.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Independent noncommuting coefficients U1, U2, ...
    Free,
    Eckart,
    #[value(alias = "poschl-teller")]
    Pt,
    Morse,
}

#[derive(Subcommand)]
enum Command {
    /// Residues ρ_1..ρ_N of a potential family.
    Residues {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        order: usize,
        /// Specializations such as `u=0`; repeatable or comma-separated.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
    },
    /// Reads a residue series as JSON on stdin and prints the potential.
    InvertResidues {
        /// Truncation order; defaults to the order of the input.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Darboux transform of a potential: the free potential of the given
    /// order, or a JSON series on stdin.
    Darboux {
        #[arg(long, required_unless_present = "stdin")]
        order: Option<usize>,
        #[arg(long)]
        stdin: bool,
    },
    /// Runs a verification suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
        /// Defaults to the suite's own order.
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Both sides of a composition-sum identity.
    Compsum {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: u64,
        /// Every admissible k when omitted.
        #[arg(long)]
        k: Option<u64>,
    },
}

enum Failure {
    Input(String),
    Guard(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn guard(setting: Setting) -> Result<usize, Failure> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Input(format!(
                "{GUARD_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(match setting {
            Setting::Free => FREE_GUARD,
            Setting::Commutative => COMMUTATIVE_GUARD,
        }),
    }
}

fn check_guard(order: usize, setting: Setting) -> Outcome {
    let limit = guard(setting)?;
    if order > limit {
        return Err(Failure::Guard(format!(
            "order {order} exceeds the guard {limit}; raise it with {GUARD_ENV}"
        )));
    }
    Ok(())
}

fn write_csv(header: &[&str], rows: &[Vec<String>]) -> Outcome {
    let mut w = csv::Writer::from_writer(io::stdout());
    let io_err = |e: csv::Error| Failure::Input(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for r in rows {
        w.write_record(r).map_err(io_err)?;
    }
    w.flush().map_err(|e| Failure::Input(e.to_string()))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// Grade-by-grade rows of a free series.
fn series_rows(s: &Series<FreePoly<Rat>>) -> Vec<Vec<String>> {
    (1..=s.order())
        .map(|n| vec![n.to_string(), s.coeff(n).to_string()])
        .collect()
}

fn emit_series(format: Format, symbol: &str, s: &Series<FreePoly<Rat>>) -> Outcome {
    match format {
        Format::Json => print_json(&json!(series_to_json(s))),
        Format::Csv => write_csv(&["n", symbol], &series_rows(s))?,
        Format::Pretty => {
            for row in series_rows(s) {
                println!("{symbol}_{} = {}", row[0], row[1]);
            }
        }
    }
    Ok(())
}

fn parse_params(params: &[String]) -> Result<Vec<(Var, Rat)>, Failure> {
    params
        .iter()
        .map(|p| {
            let (name, value) = p.split_once('=').ok_or_else(|| {
                Failure::Input(format!("parameter {p:?} is not of the form name=value"))
            })?;
            let var = Var::parse(name.trim())
                .ok_or_else(|| Failure::Input(format!("unknown parameter {name:?}")))?;
            Ok((var, parse_rat(value)?))
        })
        .collect()
}

fn cmd_residues(format: Format, family: Family, order: usize, params: &[String]) -> Outcome {
    if order == 0 {
        return Err(Failure::Input("order must be positive".into()));
    }
    let family = match family {
        Family::Free => {
            check_guard(order, Setting::Free)?;
            if !params.is_empty() {
                return Err(Failure::Input("the free family takes no parameters".into()));
            }
            let rho = residues_from_potential(&free_potential(order))?;
            return emit_series(format, "rho", &rho);
        }
        Family::Eckart => PotentialFamily::Eckart,
        Family::Pt => PotentialFamily::PoschlTeller,
        Family::Morse => PotentialFamily::Morse,
    };
    check_guard(order, Setting::Commutative)?;
    let params = parse_params(params)?;
    let rows: Vec<Poly> = (1..=order)
        .map(|n| {
            let p = residue_polynomial(&family, n)?;
            Ok(params.iter().fold(p, |acc, (v, r)| acc.eval(*v, r)))
        })
        .collect::<Result<_, Error>>()?;
    match format {
        Format::Json => print_json(&json!({
            "family": family.name(),
            "params": params.iter().map(|(v, r)| (v.name(), Value::from(format_rat(r)))).collect::<serde_json::Map<_, _>>(),
            "rows": rows.iter().enumerate().map(|(i, p)| json!({"n": i + 1, "residue": poly_to_json(p)})).collect::<Vec<_>>(),
        })),
        Format::Csv => write_csv(
            &["n", "residue"],
            &rows
                .iter()
                .enumerate()
                .map(|(i, p)| vec![(i + 1).to_string(), p.to_string()])
                .collect::<Vec<_>>(),
        )?,
        Format::Pretty => {
            for (i, p) in rows.iter().enumerate() {
                println!("rho_{} = {p}", i + 1);
            }
        }
    }
    Ok(())
}

fn read_stdin_series() -> Result<Series<FreePoly<Rat>>, Failure> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
    Ok(parse_series(&text)?)
}

fn cmd_invert(format: Format, order: Option<usize>) -> Outcome {
    let rho = read_stdin_series()?;
    let order = order.unwrap_or(rho.order());
    if order > rho.order() {
        return Err(Failure::Input(format!(
            "requested order {order} exceeds the input order {}",
            rho.order()
        )));
    }
    check_guard(order, Setting::Free)?;
    let u = potential_from_residues(&rho.truncate(order))?;
    emit_series(format, "U", &u)
}

fn cmd_darboux(format: Format, order: Option<usize>, stdin: bool) -> Outcome {
    let u = if stdin {
        let u = read_stdin_series()?;
        match order {
            Some(n) if n > u.order() => {
                return Err(Failure::Input(format!(
                    "requested order {n} exceeds the input order {}",
                    u.order()
                )))
            }
            Some(n) => u.truncate(n),
            None => u,
        }
    } else {
        free_potential(order.expect("required by clap"))
    };
    check_guard(u.order(), Setting::Free)?;
    let w = prepotential_from_potential(&u)?;
    let partner = darboux_transform(&u)?;
    let rho = residues_from_potential(&u)?;
    let rho_partner = residues_from_potential(&partner)?;
    let negated = rho.neg();
    let named = [
        ("potential", "U", &u),
        ("prepotential", "W", w.series()),
        ("partner", "U~", &partner),
        ("residues", "rho", &rho),
        ("partner_residues", "rho~", &rho_partner),
    ];
    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (key, _, s) in named {
                obj.insert(key.into(), json!(series_to_json(s)));
            }
            obj.insert("negation_holds".into(), json!(rho_partner == negated));
            print_json(&Value::Object(obj));
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = named
                .iter()
                .flat_map(|(_, sym, s)| {
                    series_rows(s).into_iter().map(move |mut r| {
                        r.insert(0, sym.to_string());
                        r
                    })
                })
                .collect();
            write_csv(&["series", "n", "coefficient"], &rows)?;
        }
        Format::Pretty => {
            for (_, sym, s) in named {
                for row in series_rows(s) {
                    println!("{sym}_{} = {}", row[0], row[1]);
                }
            }
        }
    }
    if rho_partner != negated {
        return Err(Failure::Verification(
            "partner residues are not the negated residues".into(),
        ));
    }
    Ok(())
}

fn emit_report(format: Format, report: &VerifyReport) -> Outcome {
    match format {
        Format::Json => print_json(&json!(report)),
        Format::Csv => write_csv(
            &["suite", "case", "order", "pass", "detail"],
            &report
                .cases
                .iter()
                .map(|c| {
                    vec![
                        report.suite.clone(),
                        c.case.clone(),
                        c.order.to_string(),
                        c.pass.to_string(),
                        c.detail.clone(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Pretty => {
            for note in &report.notes {
                println!("note: {note}");
            }
            for c in &report.cases {
                if c.pass {
                    println!("PASS {}", c.case);
                } else {
                    println!("FAIL {}: {}", c.case, c.detail);
                }
            }
            let passed = report.cases.iter().filter(|c| c.pass).count();
            println!("{}: {passed}/{} passed", report.suite, report.cases.len());
        }
    }
    if report.overall {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "suite {} failed",
            report.suite
        )))
    }
}

fn cmd_verify(format: Format, suite: &str, max_order: Option<usize>) -> Outcome {
    let report = if suite == "all" {
        if let Some(n) = max_order {
            check_guard(n, Setting::Free)?;
        }
        run_all(max_order)
    } else {
        let s = Suite::parse(suite).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            Failure::Input(format!(
                "unknown suite {suite:?}; expected all or one of {}",
                names.join(", ")
            ))
        })?;
        let order = max_order.unwrap_or(s.default_order());
        check_guard(order, s.setting())?;
        s.run(order)
    };
    emit_report(format, &report)
}

fn cmd_compsum(format: Format, id: &str, n: u64, k: Option<u64>) -> Outcome {
    let id = SumId::parse(id).ok_or_else(|| {
        let names: Vec<&str> = SumId::ALL.iter().map(|s| s.name()).collect();
        Failure::Input(format!(
            "unknown identity {id:?}; expected one of {}",
            names.join(", ")
        ))
    })?;
    check_guard(n as usize, Setting::Commutative)?;
    if !id.applies_to(n) {
        return Err(Failure::Input(format!("{id} is not defined for n = {n}")));
    }
    let ks: Vec<u64> = match k {
        Some(k) => vec![k],
        None => (0..=id.max_k(n)).collect(),
    };
    let rows: Vec<(u64, Rat, Rat)> = ks
        .into_iter()
        .map(|k| {
            Ok((
                k,
                composition_sum(id, n, k)?,
                product_coefficient(id, n, k)?,
            ))
        })
        .collect::<Result<_, Error>>()?;
    let all_equal = rows.iter().all(|(_, s, p)| s == p);
    match format {
        Format::Json => print_json(&json!({
            "id": id.name(),
            "n": n,
            "rows": rows.iter().map(|(k, s, p)| json!({
                "k": k,
                "composition_sum": format_rat(s),
                "product_coefficient": format_rat(p),
                "equal": s == p,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => write_csv(
            &["k", "composition_sum", "product_coefficient", "equal"],
            &rows
                .iter()
                .map(|(k, s, p)| {
                    vec![
                        k.to_string(),
                        format_rat(s),
                        format_rat(p),
                        (s == p).to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Pretty => {
            for (k, s, p) in &rows {
                let mark = if s == p { "=" } else { "!=" };
                println!("{id} n={n} k={k}: {s} {mark} {p}");
            }
        }
    }
    if all_equal {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{id} fails at n = {n}")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty_default = cli.format.unwrap_or(Format::Pretty);
    let outcome = match &cli.command {
        Command::Residues {
            family,
            order,
            params,
        } => cmd_residues(pretty_default, *family, *order, params),
        Command::InvertResidues { order } => cmd_invert(pretty_default, *order),
        Command::Darboux { order, stdin } => cmd_darboux(pretty_default, *order, *stdin),
        Command::Verify { suite, max_order } => {
            cmd_verify(cli.format.unwrap_or(Format::Json), suite, *max_order)
        }
        Command::Compsum { id, n, k } => cmd_compsum(pretty_default, id, *n, *k),
    };
    let _ = io::stdout().flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("specres: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("specres: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("specres: {msg}");
            ExitCode::from(3)
        }
    }
}
