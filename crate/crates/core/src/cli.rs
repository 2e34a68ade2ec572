//! Command-line front end.
//!
//! ```text
//! hyperint [--json | --csv] [--timing] integral eval|definite|halfline ...
//! hyperint [--json | --csv] [--timing] identity check|sweep ...
//! hyperint [--json | --csv] [--timing] dist pdf|cdf|quantile|moment|meanvar|sample|curve ...
//! ```
//!
//! Every command writes a stream of flat records: `key=value` lines in the
//! default human mode (10 significant digits), one JSON object per line
//! with `--json` (17 significant digits, round-trip exact), or a header
//! row followed by rows with `--csv`. Within one command the key set is
//! fixed.
//!
//! Exit codes: 0 success, 2 usage error, 3 invalid parameters, domain
//! error or nonexistent moment, 4 a verification or residual tolerance was
//! exceeded, 5 a series or root finder did not converge, 1 I/O failure.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::distributions::{
    Distribution, GenGammaParams, InvGammaParams, LocScaleParams, SymmetricParams,
};
use crate::error::Error;
use crate::identities::{self, IdentityId};
use crate::integrals::{self, IntegralSpec, Kind};
use crate::oracle;
use crate::specfun::SeriesConfig;

/// Environment variable overriding [`SeriesConfig::max_terms`].
pub const MAX_TERMS_ENV: &str = "HYPERINT_MAX_TERMS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_TOLERANCE: i32 = 4;
pub const EXIT_NUMERIC: i32 = 5;

const ORACLE_ABS_TOL: f64 = 1e-13;
const ORACLE_REL_TOL: f64 = 1e-12;

#[derive(Parser, Debug)]
#[command(
    name = "hyperint",
    version,
    about = "Closed-form x^α k(η x^β) integrals, hypergeometric identities and generalized gamma/Gaussian distributions"
)]
pub struct Cli {
    /// One JSON object per line.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Header row, then one CSV row per record.
    #[arg(long, global = true)]
    csv: bool,
    /// Add an `elapsed_us` field (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Antiderivatives, definite and half-line integrals.
    #[command(subcommand)]
    Integral(IntegralCmd),
    /// Residuals of the product and hypergeometric identities.
    #[command(subcommand)]
    Identity(IdentityCmd),
    /// Generalized gamma-type and Gaussian-type distributions.
    #[command(subcommand)]
    Dist(DistCmd),
}

#[derive(Args, Debug, Clone, Copy)]
struct SpecArgs {
    #[arg(long)]
    kind: Kind,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    eta: f64,
    #[arg(long, allow_negative_numbers = true)]
    beta: f64,
}

#[derive(Args, Debug, Clone, Copy)]
struct VerifyArgs {
    /// Attach an independent quadrature value and the discrepancy.
    #[arg(long)]
    verify: bool,
    /// Largest accepted |value - oracle| under --verify.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Subcommand, Debug)]
enum IntegralCmd {
    /// Antiderivative F(x), normalized so that F(0+) = 0 when that limit is finite.
    Eval {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[command(flatten)]
        verify: VerifyArgs,
    },
    /// F(b) - F(a).
    Definite {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[command(flatten)]
        verify: VerifyArgs,
    },
    /// ∫₀^∞ x^α e^(-η x^β) dx.
    Halfline {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[command(flatten)]
        verify: VerifyArgs,
    },
}

#[derive(Subcommand, Debug)]
enum IdentityCmd {
    /// Residual at one point. L1a..L1c take --alpha --beta --j; T2..T7 take --alpha --beta --eta --x.
    Check {
        #[arg(long)]
        id: IdentityId,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        eta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        #[arg(long)]
        j: Option<u32>,
        /// Largest accepted rel_residual.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Residuals at seeded random points; reports the largest.
    Sweep {
        #[arg(long)]
        id: IdentityId,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest accepted rel_residual.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Emit every point instead of the summary.
        #[arg(long)]
        each: bool,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Gengamma,
    Invgamma,
    Symmetric,
    Locscale,
}

#[derive(Args, Debug, Clone, Copy)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Shape (invgamma) or location (locscale).
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    /// Scale (locscale).
    #[arg(long, allow_negative_numbers = true)]
    sigma: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum DistCmd {
    Pdf {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    Cdf {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[command(flatten)]
        verify: VerifyArgs,
    },
    Quantile {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        p: f64,
    },
    /// Raw moment E[X^n].
    Moment {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        verify: VerifyArgs,
    },
    Meanvar {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    /// `--n` inverse-CDF draws from a seeded generator.
    Sample {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    /// (x, pdf, cdf) rows on an even grid, for plotting.
    Curve {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
}

/// One field of an output record.
#[derive(Debug, Clone, PartialEq)]
pub enum Val {
    Num(f64),
    Int(u64),
    Bool(bool),
    Str(String),
    Null,
}

impl From<f64> for Val {
    fn from(v: f64) -> Self {
        Val::Num(v)
    }
}

impl From<Option<f64>> for Val {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Val::Null, Val::Num)
    }
}

impl From<usize> for Val {
    fn from(v: usize) -> Self {
        Val::Int(v as u64)
    }
}

impl From<u32> for Val {
    fn from(v: u32) -> Self {
        Val::Int(v as u64)
    }
}

impl From<Option<u32>> for Val {
    fn from(v: Option<u32>) -> Self {
        v.map_or(Val::Null, |v| Val::Int(v as u64))
    }
}

impl From<bool> for Val {
    fn from(v: bool) -> Self {
        Val::Bool(v)
    }
}

impl From<&str> for Val {
    fn from(v: &str) -> Self {
        Val::Str(v.to_string())
    }
}

pub type Record = Vec<(&'static str, Val)>;

/// A closed-form value with optional oracle comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationReport {
    /// The parsed request, echoed.
    pub request: Record,
    pub value: f64,
    pub oracle_value: Option<f64>,
    /// `|value - oracle_value|`, present exactly when `oracle_value` is.
    pub discrepancy: Option<f64>,
    pub terms_used: Option<usize>,
    pub trunc_err_est: Option<f64>,
    /// Command-specific fields placed after the value.
    pub extra: Record,
    pub elapsed: Duration,
}

impl EvaluationReport {
    fn new(request: Record, value: f64, oracle_value: Option<f64>) -> Self {
        Self {
            request,
            value,
            oracle_value,
            discrepancy: oracle_value.map(|o| (value - o).abs()),
            terms_used: None,
            trunc_err_est: None,
            extra: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn to_record(&self) -> Record {
        let mut r = self.request.clone();
        r.push(("value", self.value.into()));
        r.extend(self.extra.iter().cloned());
        r.push(("terms_used", self.terms_used.map_or(Val::Null, Val::from)));
        r.push(("trunc_err_est", self.trunc_err_est.into()));
        r.push(("oracle_value", self.oracle_value.into()));
        r.push(("discrepancy", self.discrepancy.into()));
        r
    }
}

/// Formats `v` with `digits` significant digits, positional for moderate
/// exponents and scientific otherwise. With `trim`, trailing fractional
/// zeros are dropped.
pub fn format_sig(v: f64, digits: usize, trim: bool) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits_only: String = mantissa.chars().filter(|c| *c != '.').collect();
    let tidy = |int: &str, frac: &str| {
        let frac = if trim {
            frac.trim_end_matches('0')
        } else {
            frac
        };
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    if (-5..digits as i32).contains(&exp) {
        let body = if exp >= 0 {
            let (int, frac) = digits_only.split_at(exp as usize + 1);
            tidy(int, frac)
        } else {
            let frac = format!("{}{}", "0".repeat((-exp - 1) as usize), digits_only);
            tidy("0", &frac)
        };
        format!("{sign}{body}")
    } else {
        let (int, frac) = digits_only.split_at(1);
        format!("{sign}{}e{exp}", tidy(int, frac))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

struct Sink<'a> {
    format: Format,
    out: &'a mut dyn Write,
    header_written: bool,
}

impl<'a> Sink<'a> {
    fn emit(&mut self, record: &Record) -> io::Result<()> {
        match self.format {
            Format::Human => {
                let line: Vec<String> = record
                    .iter()
                    .filter(|(_, v)| *v != Val::Null)
                    .map(|(k, v)| format!("{k}={}", human(v)))
                    .collect();
                writeln!(self.out, "{}", line.join(" "))
            }
            Format::Json => {
                let fields: Vec<String> = record
                    .iter()
                    .map(|(k, v)| format!("\"{k}\":{}", json(v)))
                    .collect();
                writeln!(self.out, "{{{}}}", fields.join(","))
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .has_headers(false)
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                if !self.header_written {
                    w.write_record(record.iter().map(|(k, _)| *k))?;
                    self.header_written = true;
                }
                w.write_record(record.iter().map(|(_, v)| csv_field(v)))?;
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                self.out.write_all(&bytes)
            }
        }
    }
}

fn human(v: &Val) -> String {
    match v {
        Val::Num(x) if x.is_finite() => format_sig(*x, 10, true),
        Val::Num(x) => x.to_string(),
        Val::Int(i) => i.to_string(),
        Val::Bool(b) => b.to_string(),
        Val::Str(s) => s.clone(),
        Val::Null => "-".into(),
    }
}

fn json(v: &Val) -> String {
    match v {
        Val::Num(x) if x.is_finite() => format_sig(*x, 17, true),
        Val::Num(_) | Val::Null => "null".into(),
        Val::Int(i) => i.to_string(),
        Val::Bool(b) => b.to_string(),
        Val::Str(s) => serde_json::to_string(s).expect("string serializes"),
    }
}

fn csv_field(v: &Val) -> String {
    match v {
        Val::Num(x) if x.is_finite() => format_sig(*x, 17, true),
        Val::Num(x) => x.to_string(),
        Val::Int(i) => i.to_string(),
        Val::Bool(b) => b.to_string(),
        Val::Str(s) => s.clone(),
        Val::Null => String::new(),
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Tolerance(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Lib(Error::NotConverged { .. } | Error::NoConvergence { .. }) => EXIT_NUMERIC,
            Failure::Lib(_) => EXIT_DOMAIN,
            Failure::Tolerance(_) => EXIT_TOLERANCE,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Tolerance(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
            Failure::Io(e) => format!("i/o error: {e}"),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Series configuration from the defaults and the environment.
pub fn series_config_from_env() -> std::result::Result<SeriesConfig, String> {
    let mut cfg = SeriesConfig::default();
    if let Ok(v) = std::env::var(MAX_TERMS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_TERMS_ENV} must be a positive integer, got {v:?}"))?;
        if n == 0 {
            return Err(format!("{MAX_TERMS_ENV} must be positive"));
        }
        cfg = cfg.with_max_terms(n);
    }
    Ok(cfg)
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let cfg = match series_config_from_env() {
        Ok(cfg) => cfg,
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            return EXIT_USAGE;
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    let mut ctx = Ctx {
        sink: Sink {
            format,
            out,
            header_written: false,
        },
        cfg,
        timing: cli.timing,
    };
    let outcome = match cli.command {
        Command::Integral(c) => ctx.integral(c),
        Command::Identity(c) => ctx.identity(c),
        Command::Dist(c) => ctx.dist(c),
    };
    let _ = ctx.sink.out.flush();
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

struct Ctx<'a> {
    sink: Sink<'a>,
    cfg: SeriesConfig,
    timing: bool,
}

fn spec_record(spec: &SpecArgs) -> Record {
    vec![
        ("kind", spec.kind.name().into()),
        ("alpha", spec.alpha.into()),
        ("eta", spec.eta.into()),
        ("beta", spec.beta.into()),
    ]
}

fn check_verify(report: &EvaluationReport, verify: &VerifyArgs) -> Outcome {
    match report.discrepancy {
        Some(d) if !(d <= verify.tol) => Err(Failure::Tolerance(format!(
            "discrepancy {d:e} exceeds --tol {:e}",
            verify.tol
        ))),
        _ => Ok(()),
    }
}

fn quadrature(f: impl Fn(f64) -> f64, a: f64, b: f64) -> std::result::Result<f64, Failure> {
    Ok(oracle::integrate(f, a, b, ORACLE_ABS_TOL, ORACLE_REL_TOL)?.value)
}

impl Ctx<'_> {
    fn emit(&mut self, mut record: Record, started: Instant) -> Outcome {
        if self.timing {
            record.push(("elapsed_us", Val::Int(started.elapsed().as_micros() as u64)));
        }
        self.sink.emit(&record)?;
        Ok(())
    }

    fn emit_report(&mut self, mut report: EvaluationReport, started: Instant) -> Outcome {
        report.elapsed = started.elapsed();
        self.emit(report.to_record(), started)
    }

    fn integral(&mut self, cmd: IntegralCmd) -> Outcome {
        let started = Instant::now();
        match cmd {
            IntegralCmd::Eval { spec, x, verify } => {
                let s = IntegralSpec::new(spec.kind, spec.alpha, spec.eta, spec.beta)?;
                let v = integrals::antiderivative(&s, x, &self.cfg)?;
                let oracle_value = if verify.verify {
                    if !(spec.alpha + 1.0 > 0.0 && spec.beta > 0.0) {
                        return Err(Error::Domain(
                            "--verify on eval needs alpha > -1 and beta > 0, where F(0+) = 0"
                                .into(),
                        )
                        .into());
                    }
                    Some(quadrature(|u| s.integrand(u), 0.0, x)?)
                } else {
                    None
                };
                let mut request = spec_record(&spec);
                request.push(("x", x.into()));
                let mut report = EvaluationReport::new(request, v.value, oracle_value);
                report.terms_used = Some(v.series_report.iter().map(|s| s.terms_used).sum());
                report.trunc_err_est = Some(v.err_est);
                report.extra = vec![("elementary_branch", v.elementary_branch.into())];
                let check = check_verify(&report, &verify);
                self.emit_report(report, started)?;
                check
            }
            IntegralCmd::Definite { spec, a, b, verify } => {
                let s = IntegralSpec::new(spec.kind, spec.alpha, spec.eta, spec.beta)?;
                if !(a >= 0.0 && b > a) {
                    return Err(Error::Domain(format!("need 0 <= a < b, got a={a}, b={b}")).into());
                }
                let upper = integrals::antiderivative(&s, b, &self.cfg)?;
                let lower = integrals::antiderivative(&s, a, &self.cfg)?;
                let value = upper.value - lower.value;
                let oracle_value = if verify.verify {
                    Some(quadrature(|u| s.integrand(u), a, b)?)
                } else {
                    None
                };
                let mut request = spec_record(&spec);
                request.push(("a", a.into()));
                request.push(("b", b.into()));
                let mut report = EvaluationReport::new(request, value, oracle_value);
                report.terms_used = Some(
                    upper
                        .series_report
                        .iter()
                        .chain(&lower.series_report)
                        .map(|s| s.terms_used)
                        .sum(),
                );
                report.trunc_err_est = Some(upper.err_est + lower.err_est);
                report.extra = vec![("elementary_branch", upper.elementary_branch.into())];
                let check = check_verify(&report, &verify);
                self.emit_report(report, started)?;
                check
            }
            IntegralCmd::Halfline {
                alpha,
                eta,
                beta,
                verify,
            } => {
                let value = integrals::half_line_integral(alpha, eta, beta)?;
                let oracle_value = if verify.verify {
                    let f = |u: f64| u.powf(alpha) * (-eta * u.powf(beta)).exp();
                    Some(oracle::integrate_half_line(f, ORACLE_ABS_TOL, ORACLE_REL_TOL)?.value)
                } else {
                    None
                };
                let request = vec![
                    ("alpha", alpha.into()),
                    ("eta", eta.into()),
                    ("beta", beta.into()),
                ];
                let report = EvaluationReport::new(request, value, oracle_value);
                let check = check_verify(&report, &verify);
                self.emit_report(report, started)?;
                check
            }
        }
    }

    fn identity(&mut self, cmd: IdentityCmd) -> Outcome {
        let started = Instant::now();
        match cmd {
            IdentityCmd::Check {
                id,
                alpha,
                beta,
                eta,
                x,
                j,
                tol,
            } => {
                let need = |v: Option<f64>, name: &str| {
                    v.ok_or_else(|| Failure::Usage(format!("identity {id} needs --{name}")))
                };
                let (alpha, beta) = (need(alpha, "alpha")?, need(beta, "beta")?);
                let (res, eta, x, j) = match id.lemma_variant() {
                    Some(variant) => {
                        let j =
                            j.ok_or_else(|| Failure::Usage(format!("identity {id} needs --j")))?;
                        (
                            identities::check_lemma1(variant, alpha, beta, j),
                            None,
                            None,
                            Some(j),
                        )
                    }
                    None => {
                        let (eta, x) = (need(eta, "eta")?, need(x, "x")?);
                        let r = identities::check_identity(id, alpha, beta, eta, x, &self.cfg)?;
                        (r, Some(eta), Some(x), None)
                    }
                };
                let record = vec![
                    ("id", id.name().into()),
                    ("alpha", alpha.into()),
                    ("beta", beta.into()),
                    ("eta", eta.into()),
                    ("x", x.into()),
                    ("j", j.into()),
                    ("lhs", res.lhs.into()),
                    ("rhs", res.rhs.into()),
                    ("residual", res.residual.into()),
                    ("rel_residual", res.rel_residual.into()),
                ];
                self.emit(record, started)?;
                tolerance(res.rel_residual, tol)
            }
            IdentityCmd::Sweep {
                id,
                samples,
                seed,
                tol,
                each,
            } => {
                let points = identities::sweep(id, samples, seed, &self.cfg)?;
                if each {
                    for (i, p) in points.iter().enumerate() {
                        let (eta, x, j) = if id.lemma_variant().is_some() {
                            (None, None, Some(p.j))
                        } else {
                            (Some(p.eta), Some(p.x), None)
                        };
                        let record = vec![
                            ("id", id.name().into()),
                            ("index", i.into()),
                            ("alpha", p.alpha.into()),
                            ("beta", p.beta.into()),
                            ("eta", eta.into()),
                            ("x", x.into()),
                            ("j", j.into()),
                            ("lhs", p.residual.lhs.into()),
                            ("rhs", p.residual.rhs.into()),
                            ("residual", p.residual.residual.into()),
                            ("rel_residual", p.residual.rel_residual.into()),
                        ];
                        self.emit(record, started)?;
                    }
                }
                let summary = identities::summarize(id, seed, &points);
                if !each {
                    let w = summary.worst;
                    let lemma = id.lemma_variant().is_some();
                    let record = vec![
                        ("id", id.name().into()),
                        ("samples", summary.samples.into()),
                        ("seed", Val::Int(seed)),
                        ("max_rel_residual", summary.max_rel_residual.into()),
                        ("worst_alpha", w.map(|w| w.alpha).into()),
                        ("worst_beta", w.map(|w| w.beta).into()),
                        ("worst_eta", w.filter(|_| !lemma).map(|w| w.eta).into()),
                        ("worst_x", w.filter(|_| !lemma).map(|w| w.x).into()),
                        ("worst_j", w.filter(|_| lemma).map(|w| w.j).into()),
                    ];
                    self.emit(record, started)?;
                }
                tolerance(summary.max_rel_residual, tol)
            }
        }
    }

    fn dist(&mut self, cmd: DistCmd) -> Outcome {
        let started = Instant::now();
        match cmd {
            DistCmd::Pdf { fam, x } => {
                let d = build(&fam)?;
                let mut request = fam_record(&fam);
                request.push(("x", x.into()));
                let report = EvaluationReport::new(request, d.pdf(x)?, None);
                self.emit_report(report, started)
            }
            DistCmd::Cdf { fam, x, verify } => {
                let d = build(&fam)?;
                let value = d.cdf(x, &self.cfg)?;
                let oracle_value = if verify.verify {
                    Some(cdf_oracle(&d, x)?)
                } else {
                    None
                };
                let mut request = fam_record(&fam);
                request.push(("x", x.into()));
                let report = EvaluationReport::new(request, value, oracle_value);
                let check = check_verify(&report, &verify);
                self.emit_report(report, started)?;
                check
            }
            DistCmd::Quantile { fam, p } => {
                let d = build(&fam)?;
                let value = d.quantile(p, &self.cfg)?;
                let mut request = fam_record(&fam);
                request.push(("p", p.into()));
                let mut report = EvaluationReport::new(request, value, None);
                report.extra = vec![("cdf_residual", (d.cdf(value, &self.cfg)? - p).into())];
                self.emit_report(report, started)
            }
            DistCmd::Moment { fam, n, verify } => {
                let d = build(&fam)?;
                let value = d.raw_moment(n)?;
                let oracle_value = if verify.verify {
                    Some(moment_oracle(&d, n)?)
                } else {
                    None
                };
                let mut request = fam_record(&fam);
                request.push(("n", n.into()));
                let report = EvaluationReport::new(request, value, oracle_value);
                let check = check_verify(&report, &verify);
                self.emit_report(report, started)?;
                check
            }
            DistCmd::Meanvar { fam } => {
                let d = build(&fam)?;
                let (mean, variance) = d.mean_variance()?;
                let mut record = fam_record(&fam);
                record.push(("mean", mean.into()));
                record.push(("variance", variance.into()));
                self.emit(record, started)
            }
            DistCmd::Sample { fam, n, seed } => {
                if n == 0 {
                    return Err(Failure::Usage("--n must be at least 1".into()));
                }
                let d = build(&fam)?;
                let draws = d.sample(n, seed, &self.cfg)?;
                for (i, v) in draws.into_iter().enumerate() {
                    let record = vec![
                        ("family", d.name().into()),
                        ("seed", Val::Int(seed)),
                        ("index", i.into()),
                        ("value", v.into()),
                    ];
                    self.emit(record, started)?;
                }
                Ok(())
            }
            DistCmd::Curve {
                fam,
                from,
                to,
                points,
            } => {
                if points < 2 || !(to > from) {
                    return Err(Failure::Usage(
                        "curve needs --to > --from and --points >= 2".into(),
                    ));
                }
                let d = build(&fam)?;
                let (lo, _) = d.support();
                for i in 0..points {
                    let x = if i + 1 == points {
                        to
                    } else {
                        from + (to - from) * i as f64 / (points - 1) as f64
                    };
                    let (pdf, cdf) = if x <= lo {
                        (0.0, 0.0)
                    } else {
                        (d.pdf(x)?, d.cdf(x, &self.cfg)?)
                    };
                    let record = vec![
                        ("family", d.name().into()),
                        ("x", x.into()),
                        ("pdf", pdf.into()),
                        ("cdf", cdf.into()),
                    ];
                    self.emit(record, started)?;
                }
                Ok(())
            }
        }
    }
}

fn tolerance(rel_residual: f64, tol: f64) -> Outcome {
    if rel_residual <= tol {
        Ok(())
    } else {
        Err(Failure::Tolerance(format!(
            "rel_residual {rel_residual:e} exceeds --tol {tol:e}"
        )))
    }
}

fn fam_record(fam: &FamilyArgs) -> Record {
    let name = match fam.family {
        Family::Gengamma => "gengamma",
        Family::Invgamma => "invgamma",
        Family::Symmetric => "symmetric",
        Family::Locscale => "locscale",
    };
    vec![
        ("family", name.into()),
        ("alpha", fam.alpha.into()),
        ("eta", fam.eta.into()),
        ("beta", fam.beta.into()),
        ("theta", fam.theta.into()),
        ("sigma", fam.sigma.into()),
    ]
}

fn build(fam: &FamilyArgs) -> std::result::Result<Distribution, Failure> {
    let family = fam.family;
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| Failure::Usage(format!("family {family:?} needs --{name}").to_lowercase()))
    };
    let unused = |v: Option<f64>, name: &str| match v {
        Some(_) => Err(Failure::Usage(
            format!("family {family:?} does not take --{name}").to_lowercase(),
        )),
        None => Ok(()),
    };
    let d = match family {
        Family::Gengamma | Family::Symmetric | Family::Locscale => {
            let (alpha, eta, beta) = (
                need(fam.alpha, "alpha")?,
                need(fam.eta, "eta")?,
                need(fam.beta, "beta")?,
            );
            match family {
                Family::Gengamma => {
                    unused(fam.theta, "theta")?;
                    unused(fam.sigma, "sigma")?;
                    Distribution::GenGamma(GenGammaParams::new(alpha, eta, beta)?)
                }
                Family::Symmetric => {
                    unused(fam.theta, "theta")?;
                    unused(fam.sigma, "sigma")?;
                    Distribution::Symmetric(SymmetricParams::new(alpha, eta, beta)?)
                }
                _ => {
                    let base = SymmetricParams::new(alpha, eta, beta)?;
                    let (theta, sigma) = (need(fam.theta, "theta")?, need(fam.sigma, "sigma")?);
                    Distribution::LocScale(LocScaleParams::new(base, theta, sigma)?)
                }
            }
        }
        Family::Invgamma => {
            unused(fam.alpha, "alpha")?;
            unused(fam.beta, "beta")?;
            unused(fam.sigma, "sigma")?;
            let (theta, eta) = (need(fam.theta, "theta")?, need(fam.eta, "eta")?);
            Distribution::InvGamma(InvGammaParams::new(theta, eta)?)
        }
    };
    Ok(d)
}

fn pdf_or_zero(d: &Distribution, x: f64) -> f64 {
    d.pdf(x).unwrap_or(0.0)
}

/// Quadrature of the pdf up to `x`.
fn cdf_oracle(d: &Distribution, x: f64) -> std::result::Result<f64, Failure> {
    let (lo, _) = d.support();
    let f = |u: f64| pdf_or_zero(d, u);
    let r = if lo == 0.0 {
        if !(x > 0.0) {
            return Ok(0.0);
        }
        oracle::integrate(f, 0.0, x, ORACLE_ABS_TOL, ORACLE_REL_TOL)?
    } else {
        // ∫_-∞^x f = ∫₀^∞ f(x - u) du
        oracle::integrate_half_line(|u| f(x - u), ORACLE_ABS_TOL, ORACLE_REL_TOL)?
    };
    Ok(r.value)
}

/// Quadrature of `x^n f(x)` over the support.
fn moment_oracle(d: &Distribution, n: u32) -> std::result::Result<f64, Failure> {
    let f = |u: f64| u.powi(n as i32) * pdf_or_zero(d, u);
    let r = match d {
        Distribution::GenGamma(_) | Distribution::InvGamma(_) => {
            oracle::integrate_half_line(f, ORACLE_ABS_TOL, ORACLE_REL_TOL)?
        }
        Distribution::Symmetric(_) => {
            oracle::integrate_real_line(f, 0.0, ORACLE_ABS_TOL, ORACLE_REL_TOL)?
        }
        Distribution::LocScale(l) => {
            oracle::integrate_real_line(f, l.theta, ORACLE_ABS_TOL, ORACLE_REL_TOL)?
        }
    };
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hyperint").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(0.886226925452758, 10, true), "0.8862269255");
        assert_eq!(format_sig(2.0, 10, true), "2");
        assert_eq!(format_sig(2.0, 17, false), "2.0000000000000000");
        assert_eq!(format_sig(-1.5e-7, 10, true), "-1.5e-7");
        assert_eq!(format_sig(1.0 / 3.0, 17, false), "0.33333333333333331");
        assert_eq!(format_sig(1e-5, 10, true), "0.00001");
        assert_eq!(format_sig(6.02e23, 10, true), "6.02e23");
        assert_eq!(format_sig(123456.0, 3, true), "1.23e5");
        for v in [0.1, 1.0 / 7.0, 12345.678901234567, -9.87e-300, 1e17] {
            assert_eq!(format_sig(v, 17, false).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn halfline_human() {
        let (code, out, _) = run_str(&[
            "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "alpha=0 eta=1 beta=2 value=0.8862269255\n");
    }

    #[test]
    fn negative_numbers_parse() {
        let (code, out, err) = run_str(&[
            "dist", "pdf", "--family", "locscale", "--alpha", "0", "--eta", "0.5", "--beta", "2",
            "--theta", "-1", "--sigma", "1", "--x", "-1",
        ]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("value=0.3989422804"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["integral", "frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["integral", "halfline", "--alpha", "0", "--eta", "-1", "--beta", "2"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(
            run_str(&[
                "dist", "moment", "--family", "invgamma", "--theta", "3", "--eta", "2", "--n", "3"
            ])
            .0,
            EXIT_DOMAIN
        );
        assert_eq!(
            run_str(&["dist", "pdf", "--family", "invgamma", "--theta", "3", "--x", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&[
                "integral", "halfline", "--alpha", "0", "--eta", "1", "--beta", "2", "--verify",
                "--tol", "0"
            ])
            .0,
            EXIT_TOLERANCE
        );
        assert_eq!(
            run_str(&[
                "identity", "check", "--id", "L1b", "--alpha", "0", "--beta", "1", "--j", "0"
            ])
            .0,
            EXIT_OK
        );
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("integral"));
    }
}
