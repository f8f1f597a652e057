//! Command-line front end: `moment`, `paths`, `family` and `verify`.

mod report;
mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{GaussianRational, Mode, Poly, Scalar};
use crate::error::Error;
use crate::families::{family_moment, FamilyScalar, FamilySpec, Param};
use crate::matrices::{cmv_walk_entry, u_power_entry, Determinant};
use crate::opuc::{Method, Opuc, VerblunskySequence};
use crate::paths::{enumerate, moment_gmotzkin, moment_lukasiewicz, moment_negative, moment_schroder, path_weight, Model};

pub use report::{Check, OutputRecord, Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ZERO_VERBLUNSKY: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug, Serialize)]
#[command(name = "opuc", version, about = "Generalized moments of orthogonal polynomials on the unit circle")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Serialize)]
pub struct Global {
    /// Arithmetic mode; `auto` picks numeric when a decimal literal is given.
    #[arg(long, value_enum, global = true, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    /// Named Verblunsky family, e.g. `geronimus` or `rogers-szego`.
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Family parameter as `key=value`; `value` may be `sym` in symbolic mode.
    #[arg(long = "param", global = true, value_parser = parse_key_value)]
    pub params: Vec<(String, String)>,
    /// Explicit coefficients `alpha_0,alpha_1,...`; later ones are zero.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub alphas: Vec<String>,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Omit timings so output is reproducible byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Compute mu(n, r, s) by one or all methods.
    Moment(MomentArgs),
    /// List the weighted lattice paths behind mu(n, r, s).
    Paths(PathsArgs),
    /// Verblunsky coefficients and closed-form moments of a family.
    Family(FamilyArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct MomentArgs {
    #[arg(short = 'n', allow_negative_numbers = true, default_value_t = 0)]
    pub n: i64,
    #[arg(short = 'r', default_value_t = 0)]
    pub r: usize,
    #[arg(short = 's', default_value_t = 0)]
    pub s: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Lukasiewicz)]
    pub method: MethodArg,
}

#[derive(Args, Debug, Serialize)]
pub struct PathsArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::Lukasiewicz)]
    pub model: ModelArg,
    #[arg(short = 'n', default_value_t = 0)]
    pub n: usize,
    #[arg(short = 'r', default_value_t = 0)]
    pub r: usize,
    #[arg(short = 's', default_value_t = 0)]
    pub s: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub cap: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct FamilyArgs {
    /// Largest `n + r` tabulated.
    #[arg(long, default_value_t = 4)]
    pub max: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Index bound of the suite.
    #[arg(long, default_value_t = 4)]
    pub max: usize,
    /// Random sequences per numeric suite.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Auto,
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum MethodArg {
    Lukasiewicz,
    Gmotzkin,
    Schroder,
    MatrixU,
    MatrixCmv,
    Oracle,
    Closed,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelArg {
    Lukasiewicz,
    Gmotzkin,
    Schroder,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Lukasiewicz => Model::Lukasiewicz,
            ModelArg::Gmotzkin => Model::GentleMotzkin,
            ModelArg::Schroder => Model::Schroder,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    CrossModel,
    Reciprocity,
    Determinants,
    Families,
    Linearization,
    Positivity,
    All,
}

fn parse_key_value(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected key=value, got {s:?}"))
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(Error::ZeroVerblunsky(_)) => EXIT_ZERO_VERBLUNSKY,
            CliError::Lib(Error::CapExceeded(_)) => EXIT_CAP,
            CliError::Lib(
                Error::Parse(_)
                | Error::ParameterOutOfRange(_)
                | Error::UnsupportedFamily(_)
                | Error::OutsideDisk { .. },
            ) => EXIT_USAGE,
            CliError::Lib(_) | CliError::Io(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "error: {e} [{e:?}]"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Where the Verblunsky coefficients come from.
#[derive(Clone, Debug)]
pub enum Source {
    Generic,
    Table(Vec<GaussianRational>),
    Family(FamilySpec),
}

impl Source {
    pub fn sequence<S: FamilyScalar>(&self) -> CliResult<VerblunskySequence<S>> {
        match self {
            Source::Generic => {
                if S::MODE == Mode::Numeric {
                    return Err(CliError::Usage("numeric mode needs --alphas or --family".into()));
                }
                Ok(cast(VerblunskySequence::<Poly>::generic())?)
            }
            Source::Table(values) => Ok(VerblunskySequence::padded(values.iter().map(S::from_gaussian).collect())?),
            Source::Family(spec) => Ok(spec.verblunsky()?),
        }
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        match self {
            Source::Family(f) => Some(f),
            _ => None,
        }
    }
}

/// Identity on symbolic values; fails when the mode type differs.
fn cast<A: 'static, B: 'static>(value: A) -> crate::error::Result<B> {
    let boxed: Box<dyn std::any::Any> = Box::new(value);
    boxed
        .downcast::<B>()
        .map(|b| *b)
        .map_err(|_| Error::UnsupportedFamily("symbolic values need symbolic mode".into()))
}

/// Parsed global configuration.
pub struct RunConfig {
    pub mode: Mode,
    pub source: Source,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub timing: bool,
}

impl RunConfig {
    pub fn from_global(g: &Global) -> CliResult<Self> {
        let mut decimal = false;
        let source = match (&g.family, g.alphas.is_empty()) {
            (Some(_), false) => return Err(CliError::Usage("--family and --alphas are exclusive".into())),
            (Some(name), true) => {
                for (_, v) in &g.params {
                    if v != "sym" {
                        decimal |= GaussianRational::parse_literal(v)?.1;
                    }
                }
                Source::Family(FamilySpec::parse(name, &g.params)?)
            }
            (None, false) => {
                if !g.params.is_empty() {
                    return Err(CliError::Usage("--param needs --family".into()));
                }
                let mut values = Vec::with_capacity(g.alphas.len());
                for a in &g.alphas {
                    let (v, d) = GaussianRational::parse_literal(a)?;
                    decimal |= d;
                    values.push(v);
                }
                Source::Table(values)
            }
            (None, true) => {
                if !g.params.is_empty() {
                    return Err(CliError::Usage("--param needs --family".into()));
                }
                Source::Generic
            }
        };
        let needs_float = matches!(&source, Source::Family(FamilySpec::SingleNontrivial { a: Param::Value(a) }) if !a.is_one());
        let mode = match g.mode {
            ModeArg::Symbolic if decimal => {
                return Err(CliError::Usage("decimal literals are not exact; use a/b fractions in symbolic mode".into()))
            }
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Numeric => Mode::Numeric,
            ModeArg::Auto if decimal || needs_float => Mode::Numeric,
            ModeArg::Auto => Mode::Symbolic,
        };
        Ok(Self { mode, source, format: g.format, out: g.out.clone(), seed: g.seed, timing: !g.no_timing })
    }

    fn elapsed(&self, start: Instant) -> Option<f64> {
        self.timing.then(|| start.elapsed().as_secs_f64() * 1e3)
    }

    fn render<S: Scalar>(&self, v: &S) -> CliResult<String> {
        if let (Some(spec), Mode::Symbolic) = (self.source.family(), S::MODE) {
            let p: Poly = cast(v.clone())?;
            return Ok(spec.normalize(&p)?.to_string());
        }
        Ok(v.render())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

/// Parses nothing; executes an already-parsed command and writes its report.
pub fn execute(cli: &Cli) -> CliResult<Report> {
    let config = RunConfig::from_global(&cli.global)?;
    let echo = serde_json::json!({
        "command": &cli.command,
        "mode": config.mode,
        "family": cli.global.family,
        "params": cli.global.params,
        "alphas": cli.global.alphas,
        "seed": config.seed,
    });
    let mut report = Report::new(echo);
    match (&cli.command, config.mode) {
        (Command::Moment(a), Mode::Symbolic) => cmd_moment::<Poly>(&config, a, &mut report)?,
        (Command::Moment(a), Mode::Numeric) => cmd_moment::<Complex64>(&config, a, &mut report)?,
        (Command::Paths(a), Mode::Symbolic) => cmd_paths::<Poly>(&config, a, &mut report)?,
        (Command::Paths(a), Mode::Numeric) => cmd_paths::<Complex64>(&config, a, &mut report)?,
        (Command::Family(a), Mode::Symbolic) => cmd_family::<Poly>(&config, a, &mut report)?,
        (Command::Family(a), Mode::Numeric) => cmd_family::<Complex64>(&config, a, &mut report)?,
        (Command::Verify(a), _) => verify::cmd_verify(&config, a, &mut report)?,
    }
    emit(&config, &report)?;
    Ok(report)
}

fn emit(config: &RunConfig, report: &Report) -> CliResult<()> {
    let mut sink: Box<dyn Write> = match &config.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    match config.format {
        Format::Json => report.write_json(&mut *sink)?,
        Format::Csv => report.write_csv(&mut *sink)?,
        Format::Text => report.write_text(&mut *sink)?,
    }
    sink.flush()?;
    Ok(())
}

/// `mu(n, r, s)` by one method; negative `n` is handled by the mirrored
/// Łukasiewicz model and the oracle only.
pub fn compute_moment<S: FamilyScalar>(
    method: Method,
    vs: &VerblunskySequence<S>,
    family: Option<&FamilySpec>,
    n: i64,
    r: usize,
    s: usize,
) -> CliResult<S> {
    if method == Method::Oracle {
        return Ok(Opuc::new(vs.clone()).moment_oracle(n, r, s)?);
    }
    if n < 0 {
        return match method {
            Method::Lukasiewicz => Ok(moment_negative(vs, n.unsigned_abs() as usize, r, s)?),
            _ => Err(CliError::Usage(format!("{method} needs n >= 0"))),
        };
    }
    let n = n as usize;
    Ok(match method {
        Method::Lukasiewicz => moment_lukasiewicz(vs, n, r, s)?,
        Method::Gmotzkin => moment_gmotzkin(vs, n, r, s)?,
        Method::Schroder => moment_schroder(vs, n, r, s)?,
        Method::MatrixU => u_power_entry(vs, n, r, s)?,
        Method::MatrixCmv => cmv_walk_entry(vs, n, r, s)?,
        Method::Closed => {
            let spec = family.ok_or_else(|| CliError::Usage("--method closed needs --family".into()))?;
            family_moment(spec, n, r, s)?
        }
        Method::Oracle => unreachable!("handled above"),
    })
}

fn method_of(m: MethodArg) -> Option<Method> {
    Some(match m {
        MethodArg::Lukasiewicz => Method::Lukasiewicz,
        MethodArg::Gmotzkin => Method::Gmotzkin,
        MethodArg::Schroder => Method::Schroder,
        MethodArg::MatrixU => Method::MatrixU,
        MethodArg::MatrixCmv => Method::MatrixCmv,
        MethodArg::Oracle => Method::Oracle,
        MethodArg::Closed => Method::Closed,
        MethodArg::All => return None,
    })
}

fn cmd_moment<S: FamilyScalar>(config: &RunConfig, args: &MomentArgs, report: &mut Report) -> CliResult<()> {
    let vs = config.source.sequence::<S>()?;
    let family = config.source.family();
    let (n, r, s) = (args.n, args.r, args.s);
    let record = |method: Method, value: &S, start: Instant| -> CliResult<OutputRecord> {
        Ok(OutputRecord {
            n,
            r,
            s,
            method: method.to_string(),
            value: config.render(value)?,
            path: None,
            elapsed_ms: config.elapsed(start),
            mode: S::MODE,
        })
    };
    if let Some(method) = method_of(args.method) {
        let start = Instant::now();
        let v = compute_moment(method, &vs, family, n, r, s)?;
        report.results.push(record(method, &v, start)?);
        return Ok(());
    }
    let mut values: Vec<(Method, String)> = Vec::new();
    for method in Method::ALL {
        let start = Instant::now();
        match compute_moment(method, &vs, family, n, r, s) {
            Ok(v) => {
                let rec = record(method, &v, start)?;
                values.push((method, rec.value.clone()));
                report.results.push(rec);
            }
            Err(CliError::Lib(e @ (Error::ZeroVerblunsky(_) | Error::UnsupportedFamily(_))))
            | Err(CliError::Lib(e @ Error::NotDivisible)) => {
                report.checks.push(Check::new("moment", format!("{method} skipped"), true, e.to_string()));
            }
            Err(CliError::Usage(why)) => {
                report.checks.push(Check::new("moment", format!("{method} skipped"), true, why));
            }
            Err(e) => return Err(e),
        }
    }
    let agree = agreement::<S>(&vs, family, &values, n, r, s)?;
    let names: Vec<&str> = values.iter().map(|(m, _)| m.as_str()).collect();
    report.checks.push(Check::new("moment", "agreement", agree, names.join(",")));
    Ok(())
}

/// Recomputes the values and compares them within the numeric tolerance; the
/// rendered strings are only used for symbolic equality.
fn agreement<S: FamilyScalar>(
    vs: &VerblunskySequence<S>,
    family: Option<&FamilySpec>,
    values: &[(Method, String)],
    n: i64,
    r: usize,
    s: usize,
) -> CliResult<bool> {
    if S::MODE == Mode::Symbolic {
        return Ok(values.windows(2).all(|w| w[0].1 == w[1].1));
    }
    let nums = values
        .iter()
        .map(|(m, _)| compute_moment(*m, vs, family, n, r, s))
        .collect::<CliResult<Vec<S>>>()?;
    Ok(nums.windows(2).all(|w| w[0].approx_eq(&w[1], verify::TOL)))
}

fn cmd_paths<S: FamilyScalar>(config: &RunConfig, args: &PathsArgs, report: &mut Report) -> CliResult<()> {
    let vs = config.source.sequence::<S>()?;
    let model: Model = args.model.into();
    let start = Instant::now();
    let paths = enumerate(model, args.n, args.r, args.s, args.cap)?;
    let mut total = S::zero();
    for p in &paths {
        let w = path_weight(p, &vs)?;
        total += w.clone();
        report.results.push(OutputRecord {
            n: args.n as i64,
            r: args.r,
            s: args.s,
            method: model.as_str().to_string(),
            value: config.render(&w)?,
            path: Some(p.to_string()),
            elapsed_ms: None,
            mode: S::MODE,
        });
    }
    report.results.push(OutputRecord {
        n: args.n as i64,
        r: args.r,
        s: args.s,
        method: format!("{}_total", model.as_str()),
        value: config.render(&total)?,
        path: Some("total".into()),
        elapsed_ms: config.elapsed(start),
        mode: S::MODE,
    });
    let dp = match model {
        Model::Lukasiewicz => moment_lukasiewicz(&vs, args.n, args.r, args.s)?,
        Model::GentleMotzkin => moment_gmotzkin(&vs, args.n, args.r, args.s)?,
        Model::Schroder => moment_schroder(&vs, args.n, args.r, args.s)?,
    };
    report.checks.push(Check::new(
        "paths",
        format!("{} paths, total equals dynamic program", paths.len()),
        total.approx_eq(&dp, verify::TOL),
        config.render(&dp)?,
    ));
    Ok(())
}

fn cmd_family<S: FamilyScalar + Determinant>(config: &RunConfig, args: &FamilyArgs, report: &mut Report) -> CliResult<()> {
    let spec = config
        .source
        .family()
        .ok_or_else(|| CliError::Usage("family needs --family and --param".into()))?
        .clone();
    let vs = spec.verblunsky::<S>()?;
    for j in 0..=args.max {
        report.results.push(OutputRecord {
            n: 0,
            r: j,
            s: j,
            method: "alpha".into(),
            value: config.render(&vs.alpha(j as i64)?)?,
            path: None,
            elapsed_ms: None,
            mode: S::MODE,
        });
    }
    let tol = verify::TOL;
    for n in 0..=args.max {
        for r in 0..=args.max - n {
            for s in 0..=n + r {
                let start = Instant::now();
                let closed = match family_moment::<S>(&spec, n, r, s) {
                    Ok(v) => v,
                    Err(e @ Error::UnsupportedFamily(_)) => {
                        report.checks.push(Check::new("family", "closed form", true, format!("skipped: {e}")));
                        return Ok(());
                    }
                    Err(e) => return Err(e.into()),
                };
                let elapsed = config.elapsed(start);
                let dp = moment_lukasiewicz(&vs, n, r, s)?;
                let (a, b) = (config.render(&closed)?, config.render(&dp)?);
                let ok = if S::MODE == Mode::Symbolic { a == b } else { closed.approx_eq(&dp, tol) };
                report.results.push(OutputRecord {
                    n: n as i64,
                    r,
                    s,
                    method: Method::Closed.to_string(),
                    value: a,
                    path: None,
                    elapsed_ms: elapsed,
                    mode: S::MODE,
                });
                if !ok {
                    report.checks.push(Check::new("family", format!("mu({n},{r},{s})"), false, format!("lukasiewicz gives {b}")));
                }
            }
        }
    }
    report.checks.push(Check::new("family", format!("{spec} closed form vs lukasiewicz"), report.passed(), ""));
    Ok(())
}
