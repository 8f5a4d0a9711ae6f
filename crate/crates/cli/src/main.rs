use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hcoef::classifier::{bounds_report, classify_e1, classify_e2, BoundsReport, ClassificationVerdict};
use hcoef::config::Config;
use hcoef::constructions::{random_cm_spec, verify_examples};
use hcoef::field::prime_field;
use hcoef::hilbert::render_polynomial;
use hcoef::report::{analyze, InvariantReport, SCHEMA_VERSION};
use hcoef::spec::parse_ring_spec_with_warnings;
use hcoef::{Error, FieldSpec, RingSpec};

#[derive(Parser)]
#[command(name = "hcoef", version, about = "Hilbert coefficients and associated graded rings of local rings")]
struct Cli {
    /// Field to compute over, overriding the one in the ring file.
    #[arg(long, global = true, value_enum)]
    field: Option<FieldArg>,
    /// Characteristic for Fp, and for rings that name no field.
    #[arg(long, global = true, default_value_t = hcoef::field::DEFAULT_PRIME)]
    prime: u64,
    /// Initial truncation order.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    window: Option<u32>,
    /// Largest basis a truncation may have.
    #[arg(long, global = true, default_value_t = 20_000)]
    cap: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print intermediate data (superficial elements, tables, certificates).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of a ring.
    Analyze { path: PathBuf },
    /// Check both classification theorems against a ring.
    Classify { path: PathBuf },
    /// Run the built-in example rings and the extension contract.
    VerifyExamples,
    /// Check the coefficient inequalities for a ring.
    Bounds { path: PathBuf },
    /// Generate a seeded random Cohen-Macaulay ring and check its bounds.
    Random {
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn config(cli: &Cli) -> hcoef::Result<Config> {
    prime_field(cli.prime)?;
    Ok(Config {
        field: cli.field.map(|f| match f {
            FieldArg::Q => FieldSpec::Rationals,
            FieldArg::Fp => FieldSpec::PrimeField { p: cli.prime },
        }),
        prime: cli.prime,
        window: cli.window,
        cap: cli.cap,
        seed: cli.seed,
        ..Config::default()
    })
}

fn load(path: &Path) -> hcoef::Result<RingSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(vec![hcoef::spec::Diagnostic::error(None, format!("{}: {e}", path.display()))]))?;
    let (spec, warnings) = parse_ring_spec_with_warnings(&text)?;
    for w in warnings {
        eprintln!("{}: {w}", path.display());
    }
    Ok(spec)
}

fn run(cli: &Cli) -> hcoef::Result<u8> {
    let config = config(cli)?;
    match &cli.command {
        Command::Analyze { path } => {
            let inv = analyze(&load(path)?, &config)?;
            if cli.json {
                println!("{}", inv.to_json());
            } else {
                print!("{}", render_report(&inv, cli.verbose));
            }
            Ok(0)
        }
        Command::Classify { path } => {
            let inv = analyze(&load(path)?, &config)?;
            let verdicts = [classify_e1(&inv)?, classify_e2(&inv)?];
            if cli.json {
                let out = json!({ "schema": SCHEMA_VERSION, "spec": inv.spec, "verdicts": verdicts });
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                if cli.verbose > 0 {
                    print!("{}", render_report(&inv, cli.verbose));
                }
                for v in &verdicts {
                    print!("{}", render_verdict(v));
                }
            }
            Ok(if verdicts.iter().all(|v| v.passed()) { 0 } else { 1 })
        }
        Command::VerifyExamples => {
            let suite = verify_examples(&config)?;
            let ((fp, ft), (ep, et)) = suite.tallies();
            if cli.json {
                let out = json!({
                    "schema": SCHEMA_VERSION,
                    "rows": suite.rows,
                    "fixtures": { "passed": fp, "total": ft },
                    "extensions": { "passed": ep, "total": et },
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                println!("{:<16} {:<16} {:<24} {:<24} result", "fixture", "quantity", "expected", "computed");
                for r in &suite.rows {
                    let mark = if r.pass { "pass" } else { "FAIL" };
                    println!("{:<16} {:<16} {:<24} {:<24} {mark}", r.fixture, r.quantity, r.expected, r.computed);
                }
                println!("fixtures: {fp}/{ft} pass, extension contract: {ep}/{et} pass");
            }
            Ok(if suite.passed() { 0 } else { 1 })
        }
        Command::Bounds { path } => {
            let inv = analyze(&load(path)?, &config)?;
            Ok(emit_bounds(cli, &inv, &bounds_report(&inv), None))
        }
        Command::Random { vars, maxdeg } => {
            let spec = random_cm_spec(cli.seed, *vars, *maxdeg);
            let inv = analyze(&spec, &config)?;
            Ok(emit_bounds(cli, &inv, &bounds_report(&inv), Some(&spec)))
        }
    }
}

fn emit_bounds(cli: &Cli, inv: &InvariantReport, b: &BoundsReport, generated: Option<&RingSpec>) -> u8 {
    if cli.json {
        let mut out = json!({ "schema": SCHEMA_VERSION, "spec": inv.spec, "bounds": b });
        if generated.is_some() {
            out["report"] = serde_json::to_value(inv).expect("serializable");
        }
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        if let Some(spec) = generated {
            println!("generated: {spec}");
        }
        if generated.is_some() || cli.verbose > 0 {
            print!("{}", render_report(inv, cli.verbose));
        }
        print!("{}", render_bounds(b));
    }
    if b.all_hold() {
        0
    } else {
        1
    }
}

fn render_report(inv: &InvariantReport, verbose: u8) -> String {
    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, "ring: {}", inv.spec);
    let _ = writeln!(w, "dimension: {}", inv.d);
    let _ = writeln!(w, "h-polynomial: {}", inv.hpoly);
    let coeffs: Vec<String> = inv.e.iter().enumerate().map(|(i, e)| format!("e{i} = {e}")).collect();
    let _ = writeln!(w, "Hilbert coefficients: {}", coeffs.join(", "));
    let _ = writeln!(w, "embedding codimension h: {}", inv.h);
    let cm = if inv.graded_cm() { "Cohen-Macaulay" } else { "not Cohen-Macaulay" };
    let _ = writeln!(w, "depth G(A): {} ({cm})", inv.depth_g);
    let _ = writeln!(w, "type: {}", inv.cm_type);
    let _ = writeln!(w, "reduction number: {}", inv.reduction.reduction_number);
    let _ = writeln!(w, "l(m^2/Jm) = {}, l(m^3/Jm^2) = {}", inv.m2_jm, inv.m3_jm2);
    if let Some(rr) = &inv.ratliff_rush {
        let _ = writeln!(w, "Ratliff-Rush h~: {}", render_polynomial(&rr.h_tilde, "z"));
        let _ = writeln!(w, "Ratliff-Rush r: {}", render_polynomial(&rr.r, "z"));
    }
    if let Some(sigma) = &inv.sigma {
        let _ = writeln!(w, "sigma: {sigma:?}");
    }
    if let Some(rho) = &inv.rho {
        let _ = writeln!(w, "rho: {rho:?}");
    }
    if let Some(m3j) = &inv.m3j {
        let _ = writeln!(w, "l(m^3/Jm^2): {} = {} + {}", m3j.total, m3j.colon, m3j.quotient);
    }
    if verbose > 0 {
        if let Some(x) = &inv.superficial {
            let _ = writeln!(w, "superficial element: {:?} (attempt {}), b = {}", x.coeffs, x.attempt, render_polynomial(&x.b, "z"));
        }
        let _ = writeln!(w, "minimal reduction: {:?}", inv.reduction.elements);
        let _ = writeln!(w, "l(m^(j+1)/Jm^j): {:?}", inv.reduction.lengths);
        let _ = writeln!(w, "G(A)/J*G(A) Hilbert function: {:?}", inv.reduction_quotients);
        if let Some(rr) = &inv.ratliff_rush {
            let _ = writeln!(w, "l(m~^i/m^i): {:?}", rr.lengths);
        }
        let c = &inv.certification;
        let _ = writeln!(
            w,
            "certified over {} (seed {}, cap {}, series truncation {}, reduction truncation {})",
            c.field, c.seed, c.cap, c.series_truncation, c.reduction_truncation
        );
    }
    s
}

fn render_bounds(b: &BoundsReport) -> String {
    let mut s = String::new();
    for r in [&b.abhyankar, &b.northcott, &b.itoh] {
        let _ = writeln!(s, "{:<10} slack {:>3}  {}", r.name, r.slack, if r.holds { "holds" } else { "VIOLATED" });
    }
    for r in &b.macaulay {
        let mark = if r.holds { "holds" } else { "VIOLATED" };
        let _ = writeln!(s, "Macaulay   f({}) = {} <= f({})^<{}> = {}  {mark}", r.j + 1, r.next, r.j, r.j, r.bound);
    }
    s
}

fn render_verdict(v: &ClassificationVerdict) -> String {
    let mut s = String::new();
    if !v.applicable {
        let _ = writeln!(s, "{}: not applicable", v.theorem);
        return s;
    }
    let case = v.case.as_deref().map_or("no case".to_string(), |c| format!("case {c}"));
    let _ = writeln!(s, "{}: {case} ({})", v.theorem, if v.passed() { "all clauses pass" } else { "FAILED" });
    for p in &v.predictions {
        let mark = if p.pass { "pass" } else { "FAIL" };
        let _ = writeln!(s, "  {:<16} predicted {:<20} computed {:<20} {mark}", p.claim, p.predicted, p.computed);
    }
    s
}
