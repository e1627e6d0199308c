//! Command-line front end: root enumeration, truncated Verma dimensions,
//! evaluation modules, and the exact relation-verification suites.
//!
//! Exit codes: 0 on success (inconclusive cases are summarized but do not
//! fail a run), 1 when a suite reports an exact failure (the first witness is
//! printed), 2 on usage errors.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use yangian::exact::parse_rational;
use yangian::liemod::algebra::LieAlgebra;
use yangian::liemod::{Space, Verma};
use yangian::rootdata::{AlgebraId, RootKind, Weight};
use yangian::verify::{run_suite, Backend, Config, Status, Suite};
use yangian::yangops::evaluation_tower;
use yangian::Scalar;

#[derive(Parser)]
#[command(name = "yangian", version, about = "Exact computational checks for Yangians of type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate positive roots up to a height bound.
    Roots(RootsArgs),
    /// Build a depth-truncated Verma module and print its graded dimensions.
    Verma(VermaArgs),
    /// Build an evaluation module for Y(sl_n) and optionally check the
    /// defining relations on it.
    EvalModule(EvalArgs),
    /// Run a relation suite and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RootsArgs {
    /// Algebra name: A<n> or A<n>affine (n >= 2).
    #[arg(long)]
    algebra: String,
    /// Height bound.
    #[arg(long)]
    height: i64,
    /// Emit a JSON array instead of plain lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VermaArgs {
    /// Algebra name: A<n> or A<n>affine (n >= 2).
    #[arg(long)]
    algebra: String,
    /// Highest weight as a JSON array of rationals ("p/q" strings), one per
    /// Cartan basis element (the derivation value comes last for affine
    /// algebras).
    #[arg(long)]
    hw: String,
    /// Depth cap.
    #[arg(long)]
    depth: u32,
    /// Print depth-graded dimensions.
    #[arg(long)]
    dims: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// Matrix size n of sl_n (n >= 3).
    #[arg(long)]
    n: usize,
    /// Evaluation parameter, an exact rational "p/q".
    #[arg(long)]
    a: String,
    /// Level cap for the tower.
    #[arg(long, default_value_t = 4)]
    rmax: usize,
    /// Also run the defining-relation suite on the module.
    #[arg(long)]
    check_defining: bool,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Algebra name: A<n> or A<n>affine (n >= 2).
    #[arg(long)]
    algebra: String,
    /// Suite: defining|minimal|derived|lie|coproduct|coassoc|twoparam.
    #[arg(long)]
    suite: String,
    /// Verma depth cap for affine modules.
    #[arg(long, default_value_t = 4)]
    depth: u32,
    /// Level quantification bound.
    #[arg(long)]
    rmax: Option<usize>,
    /// First evaluation parameter, rational "p/q" (otherwise seeded).
    #[arg(long)]
    a: Option<String>,
    /// Second evaluation parameter, rational "p/q" (otherwise seeded).
    #[arg(long)]
    b: Option<String>,
    /// Scalar backend: rational | poly.
    #[arg(long, default_value = "rational")]
    backend: String,
    /// Seed for parameter sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<String>,
}

fn parse_algebra(name: &str) -> Result<AlgebraId> {
    AlgebraId::parse(name).map_err(|_| {
        anyhow!("unknown algebra name: {name}; supported names are A<n> (finite, n >= 2) and A<n>affine (n >= 2)")
    })
}

fn cmd_roots(args: &RootsArgs) -> Result<()> {
    let datum = parse_algebra(&args.algebra)?.datum();
    let roots = datum
        .positive_roots(args.height)
        .with_context(|| "root enumeration failed")?;
    if args.json {
        let arr: Vec<serde_json::Value> = roots
            .iter()
            .map(|r| {
                serde_json::json!({
                    "coords": r.coords,
                    "height": r.height,
                    "kind": match r.kind { RootKind::Real => "real", RootKind::Imaginary => "imaginary" },
                    "multiplicity": r.multiplicity,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&arr)?);
    } else {
        for r in &roots {
            println!(
                "{:?}  height {}  {}  multiplicity {}",
                r.coords,
                r.height,
                match r.kind {
                    RootKind::Real => "real",
                    RootKind::Imaginary => "imaginary",
                },
                r.multiplicity
            );
        }
    }
    Ok(())
}

fn cmd_verma(args: &VermaArgs) -> Result<()> {
    let id = parse_algebra(&args.algebra)?;
    let alg = LieAlgebra::new(id).map_err(|e| anyhow!("{e}"))?;
    let dim = alg.datum().cartan_dim();
    let raw: Vec<String> = serde_json::from_str(&args.hw)
        .with_context(|| "highest weight must be a JSON array of rational strings")?;
    if raw.len() != dim {
        return Err(anyhow!(
            "highest weight needs {dim} entries for {} (got {})",
            args.algebra,
            raw.len()
        ));
    }
    let vals: Vec<Scalar> = raw
        .iter()
        .map(|s| parse_rational(s).map(Scalar::from_rational))
        .collect::<Result<_, _>>()
        .map_err(|e| anyhow!("{e}"))?;
    let module = Verma::new(alg, Weight::new(vals), args.depth);
    let space = Space::single(module);
    let mut dims = vec![0usize; args.depth as usize + 1];
    for col in 0..space.dim() {
        dims[space.depth_tuple(col)[0] as usize] += 1;
    }
    let out = serde_json::json!({
        "algebra": args.algebra,
        "depth": args.depth,
        "total_dim": space.dim(),
        "dims": dims,
    });
    if args.dims {
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("{}", serde_json::to_string(&out)?);
    }
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode> {
    if args.n < 3 {
        return Err(anyhow!("evaluation modules need n >= 3"));
    }
    let a = parse_rational(&args.a).map_err(|e| anyhow!("{e}"))?;
    let (_, tower) =
        evaluation_tower(args.n, &Scalar::from_rational(a.clone()), args.rmax).map_err(|e| anyhow!("{e}"))?;
    let mut summary = serde_json::json!({
        "n": args.n,
        "a": a.to_string(),
        "rmax": args.rmax,
        "nodes": tower.nodes(),
    });
    let mut exit = ExitCode::SUCCESS;
    if args.check_defining {
        let mut cfg = Config::new(AlgebraId::FiniteA(args.n - 1), Suite::Defining);
        cfg.rmax = args.rmax;
        cfg.a = Some(a);
        let report = run_suite(&cfg);
        summary["defining"] = serde_json::json!({
            "pass": report.summary.pass,
            "fail": report.summary.fail,
            "inconclusive": report.summary.inconclusive,
        });
        if report.summary.fail > 0 {
            exit = ExitCode::from(1);
            print_first_witness(&report);
        }
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
    } else {
        println!("{summary}");
    }
    Ok(exit)
}

fn print_first_witness(report: &yangian::verify::SuiteReport) {
    if let Some(case) = report.cases.iter().find(|c| c.status == Status::Fail) {
        eprintln!("FAIL {} {:?}", case.relation, case.params);
        if let Some(w) = &case.witness {
            eprintln!("  witness: entry ({}, {}) = {}", w.row, w.col, w.value);
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let algebra = parse_algebra(&args.algebra)?;
    let suite = Suite::parse(&args.suite).ok_or_else(|| {
        anyhow!(
            "unknown suite: {}; expected one of defining|minimal|derived|lie|coproduct|coassoc|twoparam",
            args.suite
        )
    })?;
    let backend = Backend::parse(&args.backend)
        .ok_or_else(|| anyhow!("unknown backend: {}; expected rational|poly", args.backend))?;
    let mut cfg = Config::new(algebra, suite);
    cfg.depth = args.depth;
    if let Some(r) = args.rmax {
        cfg.rmax = r;
    }
    cfg.backend = backend;
    cfg.seed = args.seed;
    if let Some(a) = &args.a {
        cfg.a = Some(parse_rational(a).map_err(|e| anyhow!("{e}"))?);
    }
    if let Some(b) = &args.b {
        cfg.b = Some(parse_rational(b).map_err(|e| anyhow!("{e}"))?);
    }
    let report = run_suite(&cfg);
    println!(
        "suite {} on {}: {} pass, {} fail, {} inconclusive ({} cases)",
        report.suite,
        report.config.algebra,
        report.summary.pass,
        report.summary.fail,
        report.summary.inconclusive,
        report.cases.len()
    );
    if let Some(path) = &args.out {
        let mut f = std::fs::File::create(path).with_context(|| format!("cannot write {path}"))?;
        f.write_all(report.to_json().as_bytes())?;
        f.write_all(b"\n")?;
        println!("report written to {path}");
    }
    if report.summary.fail > 0 {
        print_first_witness(&report);
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Roots(args) => cmd_roots(args).map(|_| ExitCode::SUCCESS),
        Command::Verma(args) => cmd_verma(args).map(|_| ExitCode::SUCCESS),
        Command::EvalModule(args) => cmd_eval(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
