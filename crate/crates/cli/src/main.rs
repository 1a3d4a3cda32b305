//! `homog3`: exact homogeneous Riemannian structures on three-dimensional
//! metric Lie algebras.

mod input;
mod render;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homog3_core::report::coset_hint;
use homog3_core::{
    analyze, as_verify, build_transitive_algebra, contact_report, render_text, solve_left_invariant,
    tv_decompose, Canonical, Error, HomStructure, MetricLieAlgebra, Rational,
};
use serde_json::Value;

/// Environment variable capping denominator bit-length in sweeps.
const MAX_DENOM_VAR: &str = "HOMOG3_MAX_DENOM";

#[derive(Parser)]
#[command(name = "homog3", version, about = "Exact homogeneous Riemannian structures on 3-dimensional Lie groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AlgebraArgs {
    /// JSON algebra file: {"form":"unimodular","c":[..]}, {"form":"nonunimodular","alpha":..,"beta":..}
    /// or {"form":"generic","c":[[[..]]]}.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Unimodular constants c1,c2,c3 as exact rationals.
    #[arg(long, value_name = "C1,C2,C3", allow_hyphen_values = true)]
    unimodular: Option<String>,
    /// Non-unimodular constants alpha,beta as exact rationals.
    #[arg(long, value_name = "ALPHA,BETA", allow_hyphen_values = true)]
    nonunimodular: Option<String>,
}

impl AlgebraArgs {
    fn load(&self) -> Result<MetricLieAlgebra, Error> {
        match (&self.input, &self.unimodular, &self.nonunimodular) {
            (Some(path), _, _) => input::algebra_from_file(path),
            (_, Some(s), _) => input::unimodular(s),
            (_, _, Some(s)) => input::nonunimodular(s),
            _ => unreachable!("clap enforces one algebra source"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CanonicalArg {
    Minus,
    Plus,
    Zero,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct StructureArgs {
    /// JSON structure file: {"S":[27 rationals]} with S_{ijk} in row-major order.
    #[arg(long, value_name = "FILE")]
    structure: Option<PathBuf>,
    /// Cartan–Schouten structure of the algebra.
    #[arg(long, value_enum)]
    canonical: Option<CanonicalArg>,
}

impl StructureArgs {
    fn load(&self, g: &MetricLieAlgebra) -> Result<HomStructure, Error> {
        match (&self.structure, self.canonical) {
            (Some(path), _) => input::structure_from_file(path),
            (_, Some(c)) => Ok(input::canonical(
                g,
                match c {
                    CanonicalArg::Minus => Canonical::Minus,
                    CanonicalArg::Plus => Canonical::Plus,
                    CanonicalArg::Zero => Canonical::Zero,
                },
            )),
            _ => unreachable!("clap enforces one structure source"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classification, curvature, structures, reconstruction and contact data.
    Analyze(AlgebraArgs),
    /// Enumerate left-invariant homogeneous Riemannian structures.
    Solve(AlgebraArgs),
    /// Tricerri–Vanhecke decomposition of a structure file.
    Tv {
        #[arg(long, value_name = "FILE")]
        structure: PathBuf,
    },
    /// Check the Ambrose–Singer equations; exits 1 when they fail.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        structure: StructureArgs,
    },
    /// Build the transitive Lie algebra of a structure.
    Reconstruct {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        structure: StructureArgs,
    },
    /// Contact data for the standard almost contact structure.
    Contact(AlgebraArgs),
    /// One output line per parameter sample, ordered by parameter.
    Sweep {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// `r` sweeps the S4 or SO(2) family; the others replace a normal-form constant.
        #[arg(long, value_enum)]
        param: sweep::Param,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long, allow_hyphen_values = true)]
        step: String,
    },
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("outputs serialize")),
        Format::Text => print!("{}", text()),
    }
}

fn max_denom() -> Result<Option<u64>, Error> {
    match std::env::var(MAX_DENOM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{MAX_DENOM_VAR} must be a bit count, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let fmt = cli.format;
    match cli.command {
        Command::Analyze(a) => {
            let rep = analyze(&a.load()?)?;
            emit(fmt, &rep, || render_text(&rep));
        }
        Command::Solve(a) => {
            let out = solve_left_invariant(&a.load()?)?;
            emit(fmt, &out, || render::solver(&out));
        }
        Command::Tv { structure } => {
            let d = tv_decompose(&input::structure_from_file(&structure)?)?;
            emit(fmt, &d, || render::tv(&d));
        }
        Command::Verify { algebra, structure } => {
            let g = algebra.load()?;
            let rep = as_verify(&g, &structure.load(&g)?);
            emit(fmt, &rep, || render::verify(&rep));
            if !rep.passes() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Reconstruct { algebra, structure } => {
            let g = algebra.load()?;
            let l = build_transitive_algebra(&g, &structure.load(&g)?)?;
            let hint = coset_hint(&l);
            emit(fmt, &l, || render::reconstruct(&l, &hint));
        }
        Command::Contact(a) => {
            let c = contact_report(&a.load()?)?;
            emit(fmt, &c, || render::contact(&c));
        }
        Command::Sweep {
            algebra,
            param,
            from,
            to,
            step,
        } => return run_sweep(fmt, &algebra.load()?, param, &from, &to, &step),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_sweep(
    fmt: Format,
    g: &MetricLieAlgebra,
    param: sweep::Param,
    from: &str,
    to: &str,
    step: &str,
) -> Result<ExitCode, Error> {
    let cap = max_denom()?;
    let (from, to, step): (Rational, Rational, Rational) = (from.parse()?, to.parse()?, step.parse()?);
    let ts = sweep::samples(&from, &to, &step)?;
    let mut failed = false;
    for s in sweep::run(g, param, &ts)? {
        match s.result {
            Ok((value, line)) => {
                if let Some(cap) = cap {
                    let bits = sweep::max_denom_bits(&value).max(s.parameter.denom_bits());
                    if bits > cap {
                        eprintln!("error: {} = {}: {}", param.name(), s.parameter, Error::DenominatorTooLarge(cap));
                        return Ok(ExitCode::from(2));
                    }
                }
                match fmt {
                    Format::Json => println!("{}", serde_json::to_string(&value).expect("outputs serialize")),
                    Format::Text => println!("{line}"),
                }
            }
            Err(e) => {
                failed = true;
                match fmt {
                    Format::Json => {
                        let v: Value = serde_json::json!({
                            "param": param.name(),
                            "parameter": s.parameter,
                            "error": e.to_string(),
                        });
                        println!("{v}");
                    }
                    Format::Text => println!("{} = {}: error: {e}", param.name(), s.parameter),
                }
            }
        }
    }
    Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
