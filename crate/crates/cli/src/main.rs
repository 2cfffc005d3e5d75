use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use nsg_cli::output::{Format, Report, Table};
use nsg_cli::pmd::{self, DEFAULT_WINDOW};
use nsg_cli::record::{rational, write_csv, write_json, Status};
use nsg_cli::verify::{self, Grid, SweepConfig, TheoremId, DEFAULT_SEED};
use nsg_core::progressions::open_problem_sweep;
use nsg_core::roots::{fit_quasipolynomial, ROUNDING_TOLERANCE};
use nsg_core::{Error, NumericalSemigroup, QuotientReport};
use serde_json::{json, Value};

/// Numerical semigroups, their quotients, and checks of closed forms for the
/// invariants of `S/d` against brute force.
#[derive(Debug, Parser)]
#[command(name = "nsg", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Seed for the random generator sets used by `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Rounding tolerance for the roots-of-unity genus formula.
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Worker threads for `verify`.
    #[arg(long, global = true, env = "NSG_PARALLEL", default_value_t = 1)]
    parallel: usize,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators, F, g, gaps and Apéry set of ⟨gens⟩.
    Invariants {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        gens: Vec<i64>,
    },
    /// S/d by brute force, next to every closed form that applies.
    Quotient {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        gens: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Apéry set of ⟨gens⟩ with respect to n (default: the multiplicity).
    Apery {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        gens: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Sweep a theorem's parameter grid against the brute-force oracle.
    Verify(VerifyArgs),
    /// Fit g(⟨a, a+k⟩/d) as a quadratic in a on each residue class mod d.
    Fit {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        d: i64,
        /// Range of a, as `A..B` (inclusive).
        #[arg(long, value_parser = parse_range)]
        a: (i64, i64),
    },
    /// Solution set of ax mod b ≤ cx and its invariants.
    Pmd {
        a: i64,
        b: i64,
        c: i64,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: i64,
    },
    /// F and g of ⟨a, a+k, …, a+ℓk⟩/d over a range of d.
    SweepOpenProblem {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        ell: i64,
        /// Range of d, as `A..B` (inclusive).
        #[arg(long, value_parser = parse_range)]
        d: (i64, i64),
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_parser = parse_theorem)]
    theorem: TheoremId,
    #[arg(long)]
    max_gen: Option<i64>,
    #[arg(long)]
    d_max: Option<i64>,
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long)]
    max: Option<i64>,
    #[arg(long)]
    a_max: Option<i64>,
    #[arg(long)]
    k_max: Option<i64>,
    #[arg(long, value_delimiter = ',')]
    ks: Option<Vec<i64>>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, hide = true, value_parser = parse_theorem)]
    inject_off_by_one: Option<TheoremId>,
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("`{lo}`: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("`{hi}`: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// A failure that should exit with the given code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 2,
        error: error.into(),
    }
}

/// Theorem violations are mismatches; everything else is a usage problem.
fn from_core(e: Error) -> Failure {
    let code = if matches!(e, Error::TheoremViolation(_)) {
        1
    } else {
        2
    };
    Failure {
        code,
        error: e.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let tolerance = cli.tolerance.unwrap_or(ROUNDING_TOLERANCE);
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(usage(anyhow!(
            "--tolerance must be positive, got {tolerance}"
        )));
    }
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path)
                .with_context(|| format!("creating {}", path.display()))
                .map_err(usage)?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let code = match &cli.command {
        Command::Invariants { gens } => invariants(cli, &mut out, gens)?,
        Command::Quotient { gens, d } => quotient_cmd(cli, &mut out, gens, *d, tolerance)?,
        Command::Apery { gens, n } => apery(cli, &mut out, gens, *n)?,
        Command::Verify(args) => verify_cmd(cli, &mut out, args, tolerance)?,
        Command::Fit { k, d, a } => fit(cli, &mut out, *k, *d, *a)?,
        Command::Pmd { a, b, c, window } => pmd_cmd(cli, &mut out, *a, *b, *c, *window)?,
        Command::SweepOpenProblem { a, k, ell, d } => {
            open_problem(cli, &mut out, *a, *k, *ell, *d)?
        }
    };
    out.flush().context("writing output").map_err(usage)?;
    Ok(code)
}

fn io_failure(e: io::Error) -> Failure {
    usage(anyhow::Error::new(e).context("writing output"))
}

fn semigroup(gens: &[i64]) -> Result<NumericalSemigroup, Failure> {
    NumericalSemigroup::from_generators(gens).map_err(from_core)
}

fn invariants(cli: &Cli, out: &mut dyn Write, gens: &[i64]) -> Result<u8, Failure> {
    let s = semigroup(gens)?;
    let apery = s.multiplicity_apery();
    let mut r = Report::default();
    r.push("generators", json!(s.minimal_generators()))
        .push("multiplicity", s.multiplicity())
        .push("embedding_dimension", s.embedding_dimension() as i64)
        .push("frobenius", s.frobenius())
        .push("genus", s.genus())
        .push("conductor", s.conductor())
        .push("gaps", json!(s.gaps()))
        .push("apery_modulus", apery.modulus())
        .push("apery", json!(apery.elements()))
        .push("symmetric", s.is_symmetric())
        .push(
            "d_symmetric",
            json!((1..=10)
                .filter(|&d| s.is_d_symmetric(d))
                .collect::<Vec<i64>>()),
        );
    r.write(out, cli.format).map_err(io_failure)?;
    Ok(0)
}

fn prediction_value(p: &nsg_core::Prediction) -> Value {
    use nsg_core::Prediction::*;
    match p {
        Genus(g) => json!({ "genus": g }),
        Frobenius(f) => json!({ "frobenius": f }),
        Invariants { frobenius, genus } => json!({ "frobenius": frobenius, "genus": genus }),
        Generators(gens) => json!({ "generators": gens }),
    }
}

fn quotient_cmd(
    cli: &Cli,
    out: &mut dyn Write,
    gens: &[i64],
    d: i64,
    tolerance: f64,
) -> Result<u8, Failure> {
    let s = semigroup(gens)?;
    let report = QuotientReport::build(&s, d, tolerance).map_err(from_core)?;
    let q = &report.quotient;
    let mut r = Report::default();
    r.push("base", json!(s.minimal_generators()))
        .push("d", d)
        .push("generators", json!(q.minimal_generators()))
        .push("frobenius", report.frobenius_bruteforce)
        .push("genus", report.genus_bruteforce);
    for (name, check) in &report.formula_results {
        let mut v = prediction_value(&check.prediction);
        v["status"] = json!(if check.matches { "match" } else { "mismatch" });
        if let Some(res) = check.residual {
            v["residual"] = json!(res);
        }
        if cli.format == Format::Table {
            let mut text = nsg_cli::output::plain(&prediction_value(&check.prediction));
            text.push_str(if check.matches {
                "  match"
            } else {
                "  MISMATCH"
            });
            r.push(name, text);
        } else {
            r.push(name, v);
        }
    }
    r.write(out, cli.format).map_err(io_failure)?;
    Ok(if report.all_match() { 0 } else { 1 })
}

fn apery(cli: &Cli, out: &mut dyn Write, gens: &[i64], n: Option<i64>) -> Result<u8, Failure> {
    let s = semigroup(gens)?;
    let n = n.unwrap_or_else(|| s.multiplicity());
    let ap = s.apery_set(n).map_err(from_core)?;
    let (f, g) = ap.frobenius_and_genus().map_err(from_core)?;
    let mut r = Report::default();
    r.push("generators", json!(s.minimal_generators()))
        .push("modulus", ap.modulus())
        .push("elements", json!(ap.elements()))
        .push("frobenius", f)
        .push("genus", g);
    r.write(out, cli.format).map_err(io_failure)?;
    Ok(0)
}

fn verify_cmd(
    cli: &Cli,
    out: &mut dyn Write,
    args: &VerifyArgs,
    tolerance: f64,
) -> Result<u8, Failure> {
    let config = SweepConfig {
        theorem: args.theorem,
        grid: Grid {
            max_gen: args.max_gen,
            d_max: args.d_max,
            cases: args.cases,
            max: args.max,
            a_max: args.a_max,
            k_max: args.k_max,
            ks: args.ks.clone(),
            samples: args.samples,
        },
        tolerance,
        seed: cli.seed,
        parallel: cli.parallel,
        inject_off_by_one: args.inject_off_by_one,
    };
    let outcome = verify::run(&config).map_err(usage)?;
    let header = format!("verify {} (seed {})", outcome.theorem, outcome.seed);
    match cli.format {
        Format::Table => {
            let w = |out: &mut dyn Write, s: &str| writeln!(out, "{s}").map_err(io_failure);
            w(out, &header)?;
            for note in &outcome.notes {
                w(out, &format!("  {note}"))?;
            }
            for r in outcome
                .records
                .iter()
                .filter(|r| r.status == Status::Mismatch)
            {
                w(out, &format!("MISMATCH {}", r.to_json_line()))?;
            }
            w(out, &outcome.summary())?;
        }
        Format::Json => {
            eprintln!("{header}");
            write_json(out, &outcome.records).map_err(io_failure)?;
            eprintln!("{}", outcome.summary());
        }
        Format::Csv => {
            eprintln!("{header}");
            write_csv(&mut *out, &outcome.records).map_err(|e| io_failure(e.into()))?;
            eprintln!("{}", outcome.summary());
        }
    }
    Ok(outcome.exit_code() as u8)
}

fn fit(
    cli: &Cli,
    out: &mut dyn Write,
    k: i64,
    d: i64,
    (lo, hi): (i64, i64),
) -> Result<u8, Failure> {
    let fit = fit_quasipolynomial(k, d, lo..=hi).map_err(from_core)?;
    let mut t = Table::new(&[
        "residue",
        "b_residue",
        "c2",
        "c1",
        "c0",
        "fitted_at",
        "held_out",
        "constant",
    ]);
    for c in &fit.classes {
        let [c2, c1, c0] = c.coefficients;
        t.push(vec![
            json!(c.residue),
            json!(c.b_residue),
            rational(c2),
            rational(c1),
            rational(c0),
            json!(c.fitted_at),
            json!(c.held_out),
            c.cabd_constant.map(rational).unwrap_or(Value::Null),
        ]);
    }
    let held: usize = fit.classes.iter().map(|c| c.held_out).sum();
    let status = format!(
        "g(<a,a+{k}>/{d}) for a in {lo}..{hi}: {} classes, {held} held-out points reproduced exactly",
        fit.classes.len()
    );
    if cli.format == Format::Table {
        writeln!(out, "{status}").map_err(io_failure)?;
    } else {
        eprintln!("{status}");
    }
    t.write(out, cli.format).map_err(io_failure)?;
    Ok(0)
}

fn pmd_cmd(
    cli: &Cli,
    out: &mut dyn Write,
    a: i64,
    b: i64,
    c: i64,
    window: i64,
) -> Result<u8, Failure> {
    let report = pmd::solve(a, b, c, window).map_err(usage)?;
    let s = &report.semigroup;
    let mut r = Report::default();
    r.push("inequality", format!("{a}x mod {b} <= {c}x"))
        .push("scanned", report.scanned)
        .push("generators", json!(s.minimal_generators()))
        .push("multiplicity", s.multiplicity())
        .push("frobenius", s.frobenius())
        .push("genus", s.genus())
        .push("gaps", json!(s.gaps()))
        .push("symmetric", s.is_symmetric());
    r.write(out, cli.format).map_err(io_failure)?;
    Ok(0)
}

fn open_problem(
    cli: &Cli,
    out: &mut dyn Write,
    a: i64,
    k: i64,
    ell: i64,
    (lo, hi): (i64, i64),
) -> Result<u8, Failure> {
    if lo < 1 {
        return Err(usage(anyhow!("d must be at least 1, got {lo}")));
    }
    let rows = open_problem_sweep(a, k, ell, lo..=hi).map_err(from_core)?;
    let mut t = Table::new(&["d", "frobenius", "genus", "2g-F"]);
    for r in rows {
        t.push(vec![
            json!(r.d),
            json!(r.frobenius),
            json!(r.genus),
            json!(r.twice_genus_minus_frobenius),
        ]);
    }
    t.write(out, cli.format).map_err(io_failure)?;
    Ok(0)
}
