//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use nsg_cli::record::Status;
use nsg_cli::verify::{run, Grid, SweepConfig, SweepOutcome, TheoremId};
use nsg_core::progressions::{Ap3Spec, FullApSpec};
use nsg_core::{quotient, NumericalSemigroup};
use serde_json::json;

/// Name, base, divisor, generators of the quotient, (F, g) of the quotient.
type Golden = (&'static str, NumericalSemigroup, i64, Vec<i64>, (i64, i64));

struct Outcome {
    ok: bool,
    detail: String,
}

fn sweep(theorem: TheoremId, grid: Grid) -> (SweepOutcome, Duration) {
    let mut cfg = SweepConfig::new(theorem);
    cfg.grid = grid;
    let start = Instant::now();
    let out = run(&cfg).expect("valid config");
    (out, start.elapsed())
}

fn clean(out: &SweepOutcome) -> bool {
    out.mismatches() == 0 && out.matches() > 0
}

fn describe(outs: &[&SweepOutcome], elapsed: Duration) -> String {
    let parts: Vec<String> = outs.iter().map(|o| o.summary()).collect();
    format!("{} [{:.2}s]", parts.join("; "), elapsed.as_secs_f64())
}

fn main_genus_formula() -> Outcome {
    let (out, t) = sweep(
        TheoremId::TheoremMain,
        Grid {
            cases: Some(500),
            max_gen: Some(60),
            d_max: Some(12),
            ..Grid::default()
        },
    );
    let residual_ok = out.max_residual().is_some_and(|r| r < 1e-6);
    Outcome {
        ok: clean(&out) && out.matches() == 500 * 11 && residual_ok && t < Duration::from_secs(30),
        detail: describe(&[&out], t),
    }
}

fn two_generator_closed_form() -> Outcome {
    let (out, t) = sweep(
        TheoremId::Ed2ClosedForm,
        Grid {
            max: Some(60),
            d_max: Some(12),
            ..Grid::default()
        },
    );
    let worked = out.records.iter().any(|r| {
        r.params.get("a") == Some(&3)
            && r.params.get("b") == Some(&5)
            && r.params.get("d") == Some(&2)
            && r.formula == json!(2)
            && r.status == Status::Match
    });
    Outcome {
        ok: clean(&out) && worked && t < Duration::from_secs(20),
        detail: describe(&[&out], t),
    }
}

fn sylvester() -> Outcome {
    let (out, t) = sweep(
        TheoremId::Sylvester,
        Grid {
            max: Some(100),
            ..Grid::default()
        },
    );
    // coprime pairs 1 ≤ a ≤ b ≤ 100
    let expected = (1..=100i64)
        .flat_map(|a| (a..=100).map(move |b| (a, b)))
        .filter(|&(a, b)| nsg_core::gcd(a, b) == 1)
        .count();
    Outcome {
        ok: clean(&out) && out.matches() == expected,
        detail: describe(&[&out], t),
    }
}

fn root_identity() -> Outcome {
    let (out, t) = sweep(
        TheoremId::RootIdentity,
        Grid {
            d_max: Some(1000),
            ..Grid::default()
        },
    );
    Outcome {
        ok: clean(&out) && out.matches() == 999 && out.max_residual().is_some_and(|r| r < 1e-9),
        detail: describe(&[&out], t),
    }
}

fn class_constant() -> Outcome {
    let (out, t) = sweep(
        TheoremId::D2Constant,
        Grid {
            d_max: Some(8),
            max: Some(200),
            samples: Some(6),
            ..Grid::default()
        },
    );
    Outcome {
        ok: clean(&out) && out.skipped() == 0,
        detail: describe(&[&out], t),
    }
}

fn quasipolynomial() -> Outcome {
    let (out, t) = sweep(
        TheoremId::Quasipoly,
        Grid {
            ks: Some(vec![1, 2, 3, 5]),
            d_max: Some(8),
            a_max: Some(300),
            ..Grid::default()
        },
    );
    // one leading-coefficient record per admissible class
    let classes: usize = [1i64, 2, 3, 5]
        .iter()
        .flat_map(|&k| (1..=8i64).map(move |d| (k, d)))
        .map(|(k, d)| {
            (0..d)
                .filter(|&r| nsg_core::gcd(nsg_core::gcd(r, d), k) == 1)
                .count()
        })
        .sum();
    let leading = out
        .records
        .iter()
        .filter(|r| !r.params.contains_key("a"))
        .count();
    Outcome {
        ok: clean(&out) && leading == classes,
        detail: format!("{}, {classes} classes", describe(&[&out], t)),
    }
}

fn d_symmetric_frobenius() -> Outcome {
    let (out, t) = sweep(
        TheoremId::Strazzanti,
        Grid {
            d_max: Some(10),
            ..Grid::default()
        },
    );
    Outcome {
        ok: clean(&out),
        detail: describe(&[&out], t),
    }
}

fn three_term_progressions() -> Outcome {
    let grid = Grid {
        a_max: Some(120),
        k_max: Some(20),
        ..Grid::default()
    };
    let (g, t1) = sweep(TheoremId::Ap3Generators, grid.clone());
    let (e, t2) = sweep(TheoremId::Ap3EvenD, grid.clone());
    let (o, t3) = sweep(TheoremId::Ap3OddA, grid);
    Outcome {
        ok: clean(&g) && clean(&e) && clean(&o),
        detail: describe(&[&g, &e, &o], t1 + t2 + t3),
    }
}

fn parity_symmetry() -> Outcome {
    let (out, t) = sweep(
        TheoremId::Ap3Symmetric,
        Grid {
            a_max: Some(120),
            k_max: Some(20),
            ..Grid::default()
        },
    );
    Outcome {
        ok: clean(&out),
        detail: describe(&[&out], t),
    }
}

fn full_progressions() -> Outcome {
    let grid = Grid {
        a_max: Some(120),
        k_max: Some(20),
        ..Grid::default()
    };
    let (a, t1) = sweep(TheoremId::FullAp, grid.clone());
    let (k, t2) = sweep(TheoremId::FullApDk, grid);
    Outcome {
        ok: clean(&a) && clean(&k),
        detail: describe(&[&a, &k], t1 + t2),
    }
}

fn golden_examples() -> Outcome {
    let ap3 = |a, k| Ap3Spec::new(a, k, 1).unwrap().semigroup().unwrap();
    let cases: Vec<Golden> = vec![
        (
            "<3,5>/2",
            NumericalSemigroup::from_generators(&[3, 5]).unwrap(),
            2,
            vec![3, 4, 5],
            (2, 2),
        ),
        ("<6,7,8>/3", ap3(6, 1), 3, vec![2, 5], (3, 2)),
        ("<15,17,19>/5", ap3(15, 2), 5, vec![3, 11, 19], (16, 9)),
        (
            "<5,9,13,17,21>/2",
            FullApSpec::new(5, 4).unwrap().semigroup().unwrap(),
            2,
            vec![5, 7, 9, 11, 13],
            (8, 6),
        ),
    ];
    let mut bad = Vec::new();
    for (name, s, d, gens, (f, g)) in &cases {
        let q = quotient(s, *d).unwrap();
        let got = (q.frobenius(), q.genus());
        let gens_ok = q.minimal_generators() == gens.as_slice();
        if !gens_ok || got != (*f, *g) {
            bad.push(format!("{name}: got {:?} {got:?}", q.minimal_generators()));
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} fixtures", cases.len())
        } else {
            bad.join("; ")
        },
    }
}

fn cli_contract() -> Outcome {
    let start = Instant::now();
    let exe = env!("CARGO_BIN_EXE_nsg");
    let code = |args: &[&str]| {
        Command::new(exe)
            .args(args)
            .env_remove("NSG_PARALLEL")
            .output()
            .expect("binary runs")
            .status
            .code()
    };
    let mut problems = Vec::new();
    for t in TheoremId::ALL {
        let id = t.as_str();
        if code(&["verify", id, "--parallel", "4"]) != Some(0) {
            problems.push(format!("{id} not clean"));
        }
        if code(&["verify", id, "--parallel", "4", "--inject-off-by-one", id]) != Some(1) {
            problems.push(format!("{id} fault not detected"));
        }
    }
    if code(&["verify", "no-such-theorem"]) != Some(2) {
        problems.push("unknown id did not exit 2".into());
    }
    Outcome {
        ok: problems.is_empty(),
        detail: format!(
            "{} ids clean and mutation-sensitive{} [{:.2}s]",
            TheoremId::ALL.len() - problems.len().min(TheoremId::ALL.len()),
            if problems.is_empty() {
                String::new()
            } else {
                format!("; {}", problems.join(", "))
            },
            start.elapsed().as_secs_f64()
        ),
    }
}

type Check = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 12] = [
        (
            "genus of S/d from roots of unity, 500 random S, d in 2..=12",
            main_genus_formula,
        ),
        (
            "two-generator floor-sum closed form, a, b <= 60, d <= 12",
            two_generator_closed_form,
        ),
        ("Sylvester, coprime a, b <= 100", sylvester),
        ("sum of 1/(1 - zeta^n) = (d-1)/2, d <= 1000", root_identity),
        (
            "constant C per residue class, d <= 8, a, b <= 200",
            class_constant,
        ),
        (
            "quasipolynomial fits, k in {1,2,3,5}, d <= 8, a <= 300",
            quasipolynomial,
        ),
        (
            "Frobenius of S/d for d-symmetric S, d <= 10",
            d_symmetric_frobenius,
        ),
        (
            "<a, a+k, a+2k>/d generators and invariants, a <= 120, k <= 20",
            three_term_progressions,
        ),
        ("<a, a+k, a+2k> symmetric iff a even", parity_symmetry),
        ("full progressions, d | a and d | k", full_progressions),
        ("golden quotient examples", golden_examples),
        ("verify exit codes and fault injection", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let out = check();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        if !out.ok {
            failed += 1;
        }
        println!("{tag} {:>2}  {name}: {}", i + 1, out.detail);
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
