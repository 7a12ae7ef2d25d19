//! `liecas`: inspect Lie algebras, compute polynomial invariants, run
//! contractions and the full catalog verification.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liecas::algebra::io::{algebra_to_string, parse_algebra};
use liecas::algebra::LieAlgebra;
use liecas::catalog::{load_builtin, BUILTIN_NAMES};
use liecas::contraction::{
    contract_and_compare, contraction_limit, parse_relabel, parse_scale, ContractionError,
    GradedScaling, ScalingFile,
};
use liecas::invariants::{
    invariant_count, invariant_space_with, new_invariants_from, InvariantError,
};
use liecas::verify::{verify_catalog, Catalog, Status, VerificationReport, VerifyOptions};
use liecas::Parallelism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Report,
}

#[derive(Parser, Debug)]
#[command(
    name = "liecas",
    version,
    about = "Exact Lie algebra contractions and Casimir invariants"
)]
struct Cli {
    /// Output style: human-readable text, or JSON report records.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Highest invariant degree that may be requested.
    #[arg(long, global = true, default_value_t = 4)]
    degree_cap: u32,
    /// Seed for the generic-rank computation.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Run every kernel on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print generators and nonzero brackets.
    Show { source: String },
    /// Check the Jacobi identity.
    Check { source: String },
    /// List a basis of invariant polynomials of one degree.
    Casimir {
        source: String,
        #[arg(long)]
        degree: u32,
        /// Only invariants not generated by lower-degree ones.
        #[arg(long)]
        new: bool,
    },
    /// Contract an algebra and optionally compare with another.
    Contract {
        source: String,
        /// Inline exponents, e.g. `J=0,P=1,K=1,Hbar=0,M=2`.
        #[arg(
            long,
            conflicts_with = "scale_file",
            required_unless_present = "scale_file"
        )]
        scale: Option<String>,
        /// JSON scaling file.
        #[arg(long)]
        scale_file: Option<PathBuf>,
        /// Algebra to compare the limit with.
        #[arg(long)]
        compare: Option<String>,
        /// Generator renaming applied before comparing, e.g. `KP=KG,Hbar=H`.
        #[arg(long, requires = "compare")]
        map: Option<String>,
    },
    /// Number of independent invariants (generic corank of the bracket matrix).
    Rank { source: String },
    /// Run every catalog check.
    VerifyPaper {
        /// Write the report as JSON lines to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Replace a builtin algebra: `NAME=PATH`.
        #[arg(long = "replace", value_name = "NAME=PATH")]
        replace: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Check,
    IllDefined(String),
}

impl From<ContractionError> for Failure {
    fn from(e: ContractionError) -> Self {
        match e {
            ContractionError::IllDefinedContraction { .. } => Failure::IllDefined(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Contraction(c) => c.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// A builtin name, or else a path to an algebra file.
fn load_source(source: &str) -> Result<LieAlgebra, Failure> {
    if BUILTIN_NAMES.contains(&source) {
        return Ok(load_builtin(source).map_err(usage)?.algebra);
    }
    load_file(source)
}

fn load_file(path: &str) -> Result<LieAlgebra, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    parse_algebra(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

struct Ctx {
    format: Format,
    degree_cap: u32,
    seed: u64,
    par: Parallelism,
}

impl Ctx {
    fn emit(&self, report: &VerificationReport, text: &str) {
        match self.format {
            Format::Text => print!("{text}"),
            Format::Report => print!("{}", report.to_jsonl()),
        }
    }
}

fn single(id: &str, description: &str, status: Status, detail: Vec<String>) -> VerificationReport {
    let mut r = VerificationReport::default();
    r.push(id, description, "", status, detail);
    r
}

fn show(ctx: &Ctx, source: &str) -> Result<(), Failure> {
    let l = load_source(source)?;
    match ctx.format {
        Format::Text => print!("{l}"),
        Format::Report => print!("{}", algebra_to_string(&l)),
    }
    Ok(())
}

fn check(ctx: &Ctx, source: &str) -> Result<(), Failure> {
    let l = load_source(source)?;
    let bad = l.jacobi_check_with(ctx.par);
    let detail: Vec<String> = bad
        .iter()
        .map(|v| format!("[{}] residual {}", v.triple.join(", "), v.residual))
        .collect();
    let text = if bad.is_empty() {
        "valid\n".to_string()
    } else {
        detail.iter().map(|d| format!("violated: {d}\n")).collect()
    };
    let status = if bad.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    ctx.emit(
        &single(
            "jacobi",
            &format!("{} satisfies Jacobi", l.name()),
            status,
            detail,
        ),
        &text,
    );
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn casimir(ctx: &Ctx, source: &str, degree: u32, new: bool) -> Result<(), Failure> {
    if degree == 0 || degree > ctx.degree_cap {
        return Err(Failure::Usage(format!(
            "degree must lie in 1..={} (raise --degree-cap)",
            ctx.degree_cap
        )));
    }
    let l = load_source(source)?;
    let full = invariant_space_with(&l, degree, ctx.par);
    let basis = if new {
        let lower: Vec<_> = (1..degree)
            .map(|d| invariant_space_with(&l, d, ctx.par))
            .collect();
        new_invariants_from(&full, &lower)
    } else {
        full
    };
    let detail: Vec<String> = basis.polynomials.iter().map(ToString::to_string).collect();
    let text = if detail.is_empty() {
        "none\n".to_string()
    } else {
        detail.iter().map(|p| format!("{p}\n")).collect()
    };
    let kind = if new { "new invariants" } else { "invariants" };
    ctx.emit(
        &single(
            "casimir",
            &format!("degree-{degree} {kind} of {}", l.name()),
            Status::Info,
            detail,
        ),
        &text,
    );
    Ok(())
}

fn contract(
    ctx: &Ctx,
    source: &str,
    scale: Option<&str>,
    scale_file: Option<&Path>,
    compare: Option<&str>,
    map: Option<&str>,
) -> Result<(), Failure> {
    let l = load_source(source)?;
    let scaling: GradedScaling = match (scale, scale_file) {
        (Some(s), _) => parse_scale(s, &l)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            ScalingFile::parse(&text)?.scaling_for(&l)?
        }
        (None, None) => return Err(usage("--scale or --scale-file is required")),
    };
    let Some(target) = compare else {
        let limit = contraction_limit(&l, &scaling)?;
        match ctx.format {
            Format::Text => print!("{limit}"),
            Format::Report => print!("{}", algebra_to_string(&limit)),
        }
        return Ok(());
    };
    let target = load_source(target)?;
    let relabel = match map {
        Some(m) => parse_relabel(m, &l)?,
        None => Default::default(),
    };
    let cmp = contract_and_compare(&l, &scaling, &target, &relabel)?;
    let verdict = if cmp.matches { "MATCH" } else { "MISMATCH" };
    let status = if cmp.matches {
        Status::Pass
    } else {
        Status::Fail
    };
    let detail: Vec<String> = cmp.limit.to_string().lines().map(str::to_string).collect();
    ctx.emit(
        &single(
            "contract",
            &format!(
                "contraction of {} compared with {}",
                l.name(),
                target.name()
            ),
            status,
            detail,
        ),
        &format!("{}{verdict}\n", cmp.limit),
    );
    if cmp.matches {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn rank(ctx: &Ctx, source: &str) -> Result<(), Failure> {
    let l = load_source(source)?;
    let n = invariant_count(&l, ctx.seed)?;
    ctx.emit(
        &single(
            "rank",
            &format!("independent invariants of {}", l.name()),
            Status::Info,
            vec![format!("{n} (seed {})", ctx.seed)],
        ),
        &format!("{n}\n"),
    );
    Ok(())
}

fn verify_paper(ctx: &Ctx, out: Option<&Path>, replace: &[String]) -> Result<(), Failure> {
    let mut catalog = Catalog::builtin();
    for r in replace {
        let (name, path) = r
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--replace expects NAME=PATH, got `{r}`")))?;
        if !BUILTIN_NAMES.contains(&name) {
            return Err(Failure::Usage(format!("no builtin algebra named `{name}`")));
        }
        let l = load_file(path)?;
        catalog = catalog.with_algebra(name, l);
    }
    let opts = VerifyOptions {
        degree_cap: ctx.degree_cap,
        seeds: [ctx.seed, ctx.seed + 1],
        parallelism: ctx.par,
    };
    let report = verify_catalog(&catalog, &opts);
    ctx.emit(&report, &report.to_string());
    if let Some(path) = out {
        fs::write(path, report.to_jsonl())
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let ctx = Ctx {
        format: cli.format,
        degree_cap: cli.degree_cap,
        seed: cli.seed,
        par: if cli.sequential {
            Parallelism::Sequential
        } else {
            Parallelism::default()
        },
    };
    match &cli.command {
        Command::Show { source } => show(&ctx, source),
        Command::Check { source } => check(&ctx, source),
        Command::Casimir {
            source,
            degree,
            new,
        } => casimir(&ctx, source, *degree, *new),
        Command::Contract {
            source,
            scale,
            scale_file,
            compare,
            map,
        } => contract(
            &ctx,
            source,
            scale.as_deref(),
            scale_file.as_deref(),
            compare.as_deref(),
            map.as_deref(),
        ),
        Command::Rank { source } => rank(&ctx, source),
        Command::VerifyPaper { out, replace } => verify_paper(&ctx, out.as_deref(), replace),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::IllDefined(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
