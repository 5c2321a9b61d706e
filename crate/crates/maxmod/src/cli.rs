//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verified counterexample (or a failed
//! proof-chain check) is found, 2 on usage, domain or class errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use maxmod_core::bounds::{self, BoundId, BoundParams};
use maxmod_core::campaign::{CampaignConfig, CampaignReport, Structure};
use maxmod_core::generators::{derive_seed, generate, ClassId, GeneratorConfig};
use maxmod_core::verify::{
    proof_chain_check, BoundRequest, DerivativeRecord, InstanceChecker, TolSpec, Verdict, VerificationRecord, ZeroEvidence,
};
use serde::Serialize;

use crate::report::{self, fmt_sig, HUMAN_DIGITS, MACHINE_DIGITS};
use crate::{io as polyio, parallel, sweep};

#[derive(Debug, Parser)]
#[command(name = "maxmod", version, about = "Growth bounds for polynomials on circles: evaluate, generate, verify, sweep")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one bound (a multiplier, or an absolute bound for ggm).
    EvalBound(EvalBoundArgs),
    /// Generate one instance of a hypothesis class and write its coefficients.
    Gen(GenArgs),
    /// Check bounds on generated instances or on a polynomial file.
    Verify(VerifyArgs),
    /// Tabulate the multiplier bounds over a parameter grid.
    Sweep(SweepArgs),
    /// Check the integral identity behind the growth bounds along one ray.
    ProofCheck(ProofCheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

#[derive(Debug, Args)]
pub struct EvalBoundArgs {
    #[arg(long)]
    pub bound: BoundId,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub mu: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long = "K")]
    pub k: Option<f64>,
    #[arg(long = "R")]
    pub r: f64,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long = "norm-p")]
    pub norm_p: Option<f64>,
    #[arg(long = "min-m")]
    pub min_m: Option<f64>,
    #[arg(long = "abs-a0")]
    pub abs_a0: Option<f64>,
    #[arg(long = "abs-at")]
    pub abs_at: Option<f64>,
    #[arg(long = "abs-an")]
    pub abs_an: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub class: ClassId,
    #[arg(long)]
    pub n: usize,
    /// Multiplicity of the zero at the origin (lacunary class).
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    /// Gap (lacunary class) or coefficient gap index t (no-zeros-in-disk class).
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long = "K", default_value_t = 1.0)]
    pub k: f64,
    #[arg(long, default_value = "0x5EED", value_parser = parse_seed)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "poly_file", conflicts_with = "poly_file")]
    pub class: Option<ClassId>,
    /// Check a polynomial file instead of generated instances.
    #[arg(long = "poly-file")]
    pub poly_file: Option<PathBuf>,
    #[arg(long, required_unless_present = "poly_file")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    /// Gap parameter for nwaeze on a polynomial file (default: the maximal gap of its support).
    #[arg(long, requires = "poly_file")]
    pub mu: Option<usize>,
    /// Gap index for ggm on a polynomial file (default: read off the coefficients).
    #[arg(long, requires = "poly_file")]
    pub t: Option<usize>,
    #[arg(long = "K", default_value_t = 1.0)]
    pub k: f64,
    #[arg(long, value_delimiter = ',', required = true)]
    pub bound: Vec<BoundId>,
    #[arg(long = "R", value_delimiter = ',', required = true)]
    pub r: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub s: Vec<u32>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value = "0x5EED", value_parser = parse_seed)]
    pub seed: u64,
    /// Relative tolerance on the right-hand side.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Also test the derivative bound max|p′| ≤ c·max|p| on the unit circle.
    #[arg(long)]
    pub derivative: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Grid spec, e.g. "n=4;K=0.25:1:0.25;R=2;s=1".
    #[arg(long)]
    pub axes: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProofCheckArgs {
    #[arg(long = "poly-file")]
    pub poly_file: PathBuf,
    #[arg(long)]
    pub theta: f64,
    #[arg(long = "R")]
    pub r: f64,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Counterexample,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Counterexample => 1,
        }
    }
}

/// Parses `args` and runs the command, writing the human summary to `stdout`.
pub fn dispatch<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli, stdout) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome> {
    match cli.command {
        Command::EvalBound(args) => eval_bound(args, out),
        Command::Gen(args) => gen(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Sweep(args) => run_sweep(args, out),
        Command::ProofCheck(args) => proof_check(args, out),
    }
}

fn eval_bound(a: EvalBoundArgs, out: &mut dyn Write) -> Result<Outcome> {
    let params = BoundParams {
        n: a.n,
        r: a.r,
        s: a.s,
        k_radius: a.k,
        m: a.m,
        mu: a.mu,
        t: a.t,
        norm_p: a.norm_p,
        min_m: a.min_m,
        abs_a0: a.abs_a0,
        abs_at: a.abs_at,
        abs_an: a.abs_an,
    };
    let value = bounds::evaluate(a.bound, &params)?;
    writeln!(out, "{}", fmt_sig(value.multiplier, MACHINE_DIGITS))?;
    Ok(Outcome::Success)
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Result<Outcome> {
    let config = GeneratorConfig {
        class_id: a.class,
        n: a.n,
        m: a.m,
        gap: a.d,
        k_radius: a.k,
        seed: derive_seed(a.seed, 0),
    };
    let instance = generate(&config)?;
    polyio::write_poly(&a.out, &instance.poly)?;
    let c = instance.config;
    writeln!(
        out,
        "{} n={} m={} d={} K={} seed={:#x}: wrote {} coefficients to {}",
        c.class_id,
        c.n,
        c.m,
        c.gap,
        fmt_sig(c.k_radius, HUMAN_DIGITS),
        a.seed,
        instance.poly.coeffs().len(),
        a.out.display()
    )?;
    Ok(Outcome::Success)
}

fn open_out(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?))
}

#[derive(Serialize)]
struct FileReport<'a> {
    poly: Vec<[f64; 2]>,
    records: &'a [VerificationRecord],
    derivative: Option<&'a DerivativeRecord>,
}

fn summarize(out: &mut dyn Write, records: &[VerificationRecord], derivative: &[DerivativeRecord]) -> Result<Outcome> {
    let mut failed = false;
    for bound in BoundId::ALL {
        let of: Vec<_> = records.iter().filter(|r| r.bound_id == bound).collect();
        if of.is_empty() {
            continue;
        }
        let count = |v| of.iter().filter(|r| r.verdict == v).count();
        let fails = count(Verdict::Fail);
        failed |= fails > 0;
        let max_ratio = of.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max);
        writeln!(
            out,
            "{bound}: {} records, {} pass, {} inconclusive, {} fail, max ratio {}",
            of.len(),
            count(Verdict::Pass),
            count(Verdict::Inconclusive),
            fails,
            fmt_sig(max_ratio, HUMAN_DIGITS)
        )?;
    }
    if !derivative.is_empty() {
        let fails = derivative.iter().filter(|d| d.verdict == Verdict::Fail).count();
        failed |= fails > 0;
        let max_ratio = derivative.iter().map(|d| d.ratio).fold(f64::NEG_INFINITY, f64::max);
        writeln!(
            out,
            "derivative: {} records, {} fail, max ratio {}",
            derivative.len(),
            fails,
            fmt_sig(max_ratio, HUMAN_DIGITS)
        )?;
    }
    for rec in records.iter().filter(|r| r.verdict == Verdict::Fail) {
        writeln!(
            out,
            "counterexample: poly {:016x} {} n={} R={} s={} lhs={} rhs={} ratio={}",
            rec.poly_id,
            rec.bound_id,
            rec.n,
            fmt_sig(rec.r, HUMAN_DIGITS),
            rec.s,
            fmt_sig(rec.lhs, HUMAN_DIGITS),
            fmt_sig(rec.rhs, HUMAN_DIGITS),
            fmt_sig(rec.ratio, HUMAN_DIGITS)
        )?;
    }
    Ok(if failed { Outcome::Counterexample } else { Outcome::Success })
}

fn emit<F>(path: Option<&Path>, out: &mut dyn Write, write: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match path {
        Some(path) => {
            let mut file = open_out(path)?;
            write(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => write(out),
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    if !(a.tol >= 0.0) {
        bail!("--tol must be nonnegative");
    }
    let tol = TolSpec { rel_tol: a.tol, ..TolSpec::default() };
    if let Some(path) = &a.poly_file {
        return verify_file(&a, path, tol, out);
    }
    let class_id = a.class.expect("clap enforces --class or --poly-file");
    let n = a.n.expect("clap enforces --n with --class");
    let config = CampaignConfig {
        class_id,
        structures: vec![Structure { n, m: a.m, gap: a.d, k_radius: a.k }],
        bounds: a.bound.clone(),
        radii: a.r.clone(),
        powers: a.s.clone(),
        trials: a.trials,
        seed: a.seed,
        tol,
        check_derivative: a.derivative,
    };
    let report = parallel::run_campaign(&config)?;
    let outcome = summarize(out, &report.records, &report.derivative_records)?;
    emit(a.out.as_deref(), out, |w| write_report(w, a.format, &report))?;
    Ok(outcome)
}

fn write_report(w: &mut dyn Write, format: Format, report: &CampaignReport) -> Result<()> {
    match format {
        Format::Csv => report::write_csv(w, &report.records),
        Format::Json => report::write_json(w, report),
    }
}

fn verify_file(a: &VerifyArgs, path: &Path, tol: TolSpec, out: &mut dyn Write) -> Result<Outcome> {
    let p = polyio::read_poly(path)?;
    let mut checker = InstanceChecker::new(&p, p.fingerprint(), tol);
    let mut records = Vec::new();
    for &bound in &a.bound {
        for &r in &a.r {
            for &s in &a.s {
                let mut req = BoundRequest::new(bound, r).power(s);
                if matches!(bound, BoundId::DewanAhuja | BoundId::Nwaeze | BoundId::Ggm) {
                    req = req.radius(a.k);
                }
                if bound == BoundId::Nwaeze {
                    req.m = Some(a.m);
                    req.mu = a.mu;
                }
                if bound == BoundId::Ggm {
                    req.t = a.t;
                }
                records.push(checker.check(&req, ZeroEvidence::Winding)?);
            }
        }
    }
    let derivative = if a.derivative {
        let support = maxmod_core::poly::lacunary_profile(&p, tol.zero_tol)?;
        Some(checker.check_derivative(a.m, a.mu.unwrap_or(support.mu), a.k)?)
    } else {
        None
    };
    let outcome = summarize(out, &records, derivative.as_slice())?;
    emit(a.out.as_deref(), out, |w| match a.format {
        Format::Csv => report::write_csv(w, &records),
        Format::Json => {
            let doc = FileReport { poly: polyio::to_pairs(&p), records: &records, derivative: derivative.as_ref() };
            serde_json::to_writer_pretty(&mut *w, &doc)?;
            writeln!(w)?;
            Ok(())
        }
    })?;
    Ok(outcome)
}

fn run_sweep(a: SweepArgs, out: &mut dyn Write) -> Result<Outcome> {
    let axes = sweep::Axes::parse(&a.axes)?;
    let rows = sweep::run(&axes);
    emit(a.out.as_deref(), out, |w| sweep::write_csv(w, &rows))?;
    if let Some(path) = &a.out {
        writeln!(out, "{} rows written to {}", rows.len(), path.display())?;
    }
    Ok(Outcome::Success)
}

fn proof_check(a: ProofCheckArgs, out: &mut dyn Write) -> Result<Outcome> {
    let p = polyio::read_poly(&a.poly_file)?;
    let res = proof_chain_check(&p, a.theta, a.r, a.s)?;
    let h = |x: f64| fmt_sig(x, HUMAN_DIGITS);
    let c = |z: num_complex::Complex64| format!("{}{}{}i", h(z.re), if z.im < 0.0 { "-" } else { "+" }, h(z.im.abs()));
    writeln!(
        out,
        "lhs = {}, integral = {}, residual = {} (quadrature error {}), {}",
        c(res.lhs),
        c(res.integral),
        h(res.residual),
        h(res.quadrature_err),
        if res.within_tolerance { "within tolerance" } else { "OUT OF TOLERANCE" }
    )?;
    Ok(if res.within_tolerance { Outcome::Success } else { Outcome::Counterexample })
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    dispatch(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
