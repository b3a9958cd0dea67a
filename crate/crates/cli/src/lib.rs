//! Command-line frontend for `wright-geom`.
//!
//! Exit codes: 0 success, 1 negative outcome (nothing established, a
//! violation, roots inside the disk), 2 invalid parameters, 3 I/O failure,
//! 4 numerical failure (truncation, no convergence, bad bracket).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use wright_geom::criteria::{CriterionId, FamilyPreset, Property, PropertyRegion, Region, Verdict};
use wright_geom::oracle::{
    check_bound_deviation, check_close_to_convex, check_half_plane, check_subordinating_sequence, verify_with,
    Analytic, DeviationMode, GridSpec, NormalizedWright, OracleVerdict, Polynomial, PropertyCheck, SequenceSpec,
};
use wright_geom::polyzeros::{find_roots, partial_sum_poly, verify_exterior};
use wright_geom::series::{
    bessel_normalized, eval_normalized, eval_normalized_deriv, eval_wright2, eval_wright4, DerivOrder, Wright2Params,
};
use wright_geom::sweep::{format_sharpness, format_table, run_sweep, sharpness_table, Family, Param, SweepSpec};
use wright_geom::{Error, Params64, PartialSumKind};

mod plot;

pub use plot::{render_svg, PlotSpec};

#[derive(Debug, Parser)]
#[command(
    name = "wright-geom",
    version,
    about = "Geometric properties of normalized Wright functions"
)]
pub struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Absolute truncation tolerance for series.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    grid_radii: Option<usize>,
    #[arg(long, global = true)]
    grid_angles: Option<usize>,
    #[arg(long, global = true)]
    r_max: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a function at one point.
    Eval(EvalArgs),
    /// Run the sufficient criteria and print their ledgers.
    Criteria(CriteriaArgs),
    /// Sample a property on a disk grid.
    Verify(VerifyArgs),
    /// Roots of a partial sum.
    Zeros(ZerosArgs),
    /// One-parameter sweep of criteria verdicts.
    Sweep(SweepArgs),
    /// SVG image of circles and rays under the function.
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Four,
    Two,
    Bessel,
    Confluent,
    Wright2,
    Identity,
}

#[derive(Debug, Clone, Args)]
struct FnArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Four)]
    family: FamilyArg,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    mu: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    nu: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    b: f64,
    /// Bessel order, or the second parameter of `wright2`.
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// First parameter of `wright2`.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
}

enum Selected {
    Four(Params64),
    Bessel(f64),
    Wright2(Wright2Params<f64>),
    Identity,
}

impl FnArgs {
    fn select(&self) -> Result<Selected, CliError> {
        Ok(match self.family {
            FamilyArg::Four => Selected::Four(Params64::new(self.mu, self.a, self.nu, self.b)?),
            FamilyArg::Two => Selected::Four(FamilyPreset::TwoParam { b: self.b, nu: self.nu }.params()?),
            FamilyArg::Confluent => Selected::Four(FamilyPreset::ConfluentF(self.b).params()?),
            FamilyArg::Bessel => {
                let beta = self
                    .beta
                    .ok_or_else(|| CliError::Invalid("--beta is required for bessel".into()))?;
                FamilyPreset::Bessel(beta).params()?;
                Selected::Bessel(beta)
            }
            FamilyArg::Wright2 => {
                let alpha = self
                    .alpha
                    .ok_or_else(|| CliError::Invalid("--alpha is required for wright2".into()))?;
                let beta = self
                    .beta
                    .ok_or_else(|| CliError::Invalid("--beta is required for wright2".into()))?;
                Selected::Wright2(Wright2Params::new(alpha, beta)?)
            }
            FamilyArg::Identity => Selected::Identity,
        })
    }

    /// Parameters the criteria read.
    fn criteria_params(&self) -> Result<Params64, CliError> {
        match self.select()? {
            Selected::Four(p) => Ok(p),
            Selected::Bessel(beta) => Ok(FamilyPreset::Bessel(beta).params()?),
            _ => Err(CliError::Invalid(
                "criteria need a four, two, confluent or bessel family".into(),
            )),
        }
    }

    fn analytic(&self, radius: f64, tol: f64) -> Result<Box<dyn Analytic<f64>>, CliError> {
        Ok(match self.select()? {
            Selected::Four(p) => Box::new(NormalizedWright::new(&p, radius, tol)?),
            Selected::Bessel(beta) => Box::new(NormalizedWright::bessel(beta, radius, tol)?),
            Selected::Identity => Box::new(Polynomial::identity()),
            Selected::Wright2(_) => {
                return Err(CliError::Invalid(
                    "wright2 is not normalized; use another family".into(),
                ));
            }
        })
    }
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    f: FnArgs,
    /// Point `a+bi`, `a-bi`, `a` or `bi`.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// For the four-parameter family, evaluate the normalized function.
    #[arg(long)]
    normalized: bool,
    /// Derivative order 1 or 2 of the normalized function.
    #[arg(long)]
    deriv: Option<u8>,
}

#[derive(Debug, Args)]
struct CriteriaArgs {
    #[command(flatten)]
    f: FnArgs,
    /// Criterion name; repeatable. Default: all.
    #[arg(long = "criterion")]
    criteria: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Starlike,
    StarlikeOrder,
    Convex,
    Ucv,
    Sp,
    CloseToConvex,
    HalfPlane,
    Sequence,
    Deviation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RegionArg {
    Disk,
    Half,
}

impl RegionArg {
    fn region(self) -> Region {
        match self {
            RegionArg::Disk => Region::FullDisk,
            RegionArg::Half => Region::HalfDisk,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    FOverZ,
    FPrime,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    f: FnArgs,
    #[arg(long, value_enum)]
    property: PropertyArg,
    #[arg(long, value_enum, default_value_t = RegionArg::Disk)]
    region: RegionArg,
    /// Order for `starlike-order`.
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    /// Partial-sum degree for `half-plane`.
    #[arg(long)]
    partial: Option<usize>,
    /// Witness `g = 𝕎_{(gμ,ga),(gν,gb)}` for `close-to-convex`; defaults to `(μ, a, 1, b)`.
    #[arg(long, num_args = 4, value_names = ["MU", "A", "NU", "B"])]
    witness: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value_t = ModeArg::FOverZ)]
    mode: ModeArg,
    /// Threshold for `deviation`.
    #[arg(long, default_value_t = 1.0)]
    threshold: f64,
    /// Number of stored terms for `sequence`.
    #[arg(long, default_value_t = 40)]
    cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Raw,
    Normalized,
    Qfactor,
}

impl KindArg {
    fn kind(self) -> PartialSumKind {
        match self {
            KindArg::Raw => PartialSumKind::Raw,
            KindArg::Normalized => PartialSumKind::Normalized,
            KindArg::Qfactor => PartialSumKind::QFactor,
        }
    }
}

#[derive(Debug, Args)]
struct ZerosArgs {
    #[command(flatten)]
    f: FnArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = KindArg::Raw)]
    kind: KindArg,
    /// Check the zero-free disk hypotheses and report the exterior verdict.
    #[arg(long)]
    exterior: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFamilyArg {
    Four,
    Two,
    Bessel,
    Confluent,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value_t = SweepFamilyArg::Four)]
    family: SweepFamilyArg,
    /// Varying parameter: mu, a, nu, b or beta.
    #[arg(long)]
    vary: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    lo: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    hi: Option<f64>,
    #[arg(long, default_value_t = 11)]
    steps: usize,
    /// Fixed parameter `name=value`; repeatable.
    #[arg(long = "fix")]
    fixed: Vec<String>,
    /// Criterion name; repeatable.
    #[arg(long = "criterion")]
    criteria: Vec<String>,
    /// Add oracle margins to every row (grid from the global flags).
    #[arg(long)]
    oracle: bool,
    /// Print the sharpness comparison table instead of a sweep.
    #[arg(long)]
    sharpness: bool,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[command(flatten)]
    f: FnArgs,
    #[arg(long, value_enum, default_value_t = RegionArg::Disk)]
    region: RegionArg,
    #[arg(long, default_value_t = 8)]
    circles: usize,
    #[arg(long, default_value_t = 16)]
    rays: usize,
    #[arg(long, default_value_t = 512)]
    samples: usize,
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    Io(String),
    Numeric(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Io(m) | CliError::Numeric(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Precondition(_) => CliError::Invalid(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

/// Output text and exit status of a successful command.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn to_json<S: Serialize>(v: &S) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize") + "\n"
}

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i`.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return s.parse().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |t: &str| -> Option<f64> {
        match t {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => t.parse().ok(),
        }
    };
    match split {
        Some(i) => Some(Complex64::new(body[..i].parse().ok()?, imag(&body[i..])?)),
        None => Some(Complex64::new(0.0, imag(body)?)),
    }
}

fn grid_for(g: &Global, region_radius: f64) -> Result<GridSpec, CliError> {
    let mut grid = GridSpec::for_region(region_radius);
    if let Some(n) = g.grid_radii {
        grid.n_radii = n;
    }
    if let Some(n) = g.grid_angles {
        grid.n_angles = n;
    }
    if let Some(r) = g.r_max {
        grid.r_max = r;
    }
    grid.validate(region_radius)?;
    Ok(grid)
}

#[derive(Serialize)]
struct EvalReport {
    z: Complex64,
    value: Complex64,
    terms_used: usize,
    tail_bound: f64,
}

fn cmd_eval(g: &Global, a: &EvalArgs) -> Result<Outcome, CliError> {
    let z = parse_complex(&a.z).ok_or_else(|| CliError::Invalid(format!("cannot parse --z {:?}", a.z)))?;
    let order = match a.deriv {
        None => None,
        Some(1) => Some(DerivOrder::First),
        Some(2) => Some(DerivOrder::Second),
        Some(d) => return Err(CliError::Invalid(format!("--deriv must be 1 or 2, got {d}"))),
    };
    let v = match (a.f.select()?, order) {
        (Selected::Four(p), Some(o)) => {
            if a.f.family == FamilyArg::Four && !a.normalized {
                return Err(CliError::Invalid(
                    "--deriv needs --normalized for the four family".into(),
                ));
            }
            eval_normalized_deriv(&p, z, o, g.tol)?
        }
        (Selected::Four(p), None) => {
            if a.f.family == FamilyArg::Four && !a.normalized {
                eval_wright4(&p, z, g.tol)?
            } else {
                eval_normalized(&p, z, g.tol)?
            }
        }
        (Selected::Bessel(beta), None) => bessel_normalized(beta, z, g.tol)?,
        (Selected::Wright2(p), None) => eval_wright2(&p, z, g.tol)?,
        (Selected::Identity, _) => return Err(CliError::Invalid("eval does not take the identity family".into())),
        (_, Some(_)) => {
            return Err(CliError::Invalid(
                "--deriv applies to four, two and confluent families".into(),
            ))
        }
    };
    let r = EvalReport {
        z,
        value: v.value,
        terms_used: v.terms_used,
        tail_bound: v.tail_bound,
    };
    if g.json {
        return Ok(Outcome::ok(to_json(&r)));
    }
    Ok(Outcome::ok(format!(
        "value: {:.16e} {:+.16e}i\nterms_used: {}\ntail_bound: {:.3e}\n",
        r.value.re, r.value.im, r.terms_used, r.tail_bound
    )))
}

fn parse_criteria(names: &[String]) -> Result<Vec<CriterionId>, CliError> {
    names
        .iter()
        .map(|n| CriterionId::parse(n).ok_or_else(|| CliError::Invalid(format!("unknown criterion {n:?}"))))
        .collect()
}

fn cmd_criteria(g: &Global, a: &CriteriaArgs) -> Result<Outcome, CliError> {
    let p = a.f.criteria_params()?;
    let ids = if a.criteria.is_empty() {
        CriterionId::ALL.to_vec()
    } else {
        parse_criteria(&a.criteria)?
    };
    let reports: Vec<_> = ids.iter().map(|c| c.evaluate(&p)).collect();
    let code = if reports.iter().any(|r| r.verdict == Verdict::Established) {
        0
    } else {
        1
    };
    let text = if g.json {
        to_json(&reports)
    } else {
        reports.iter().map(|r| format!("{r}\n")).collect()
    };
    Ok(Outcome { text, code })
}

fn format_check(c: &PropertyCheck) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "property: {:?}", c.property);
    let _ = writeln!(s, "region_radius: {}", c.region_radius);
    let _ = writeln!(
        s,
        "grid: r_max={} n_radii={} n_angles={} spacing={:?} angles={:?}",
        c.grid.r_max, c.grid.n_radii, c.grid.n_angles, c.grid.spacing, c.grid.angles
    );
    let _ = writeln!(s, "extremal_value: {:.12e}", c.extremal_value);
    let _ = writeln!(
        s,
        "extremal_point: {:.9} {:+.9}i",
        c.extremal_point.re, c.extremal_point.im
    );
    let _ = writeln!(s, "margin: {:.12e}", c.margin);
    let _ = writeln!(s, "verdict: {:?}", c.verdict);
    if let Some(d) = &c.diagnostic {
        let _ = writeln!(s, "diagnostic: {d}");
    }
    s
}

fn cmd_verify(g: &Global, a: &VerifyArgs) -> Result<Outcome, CliError> {
    let region = a.region.region();
    let grid = grid_for(g, region.radius())?;
    let check = match a.property {
        PropertyArg::HalfPlane => {
            let p = match a.f.select()? {
                Selected::Four(p) => p,
                _ => return Err(CliError::Invalid("half-plane needs a four-parameter function".into())),
            };
            check_half_plane(&p, a.partial, &grid, g.tol)?
        }
        PropertyArg::Sequence => {
            let s = SequenceSpec::wright_reciprocal(a.f.mu, a.f.nu, a.cap)?;
            check_subordinating_sequence(&s, &grid)?
        }
        PropertyArg::Deviation => {
            let f = a.f.analytic(grid.r_max, g.tol)?;
            let mode = match a.mode {
                ModeArg::FOverZ => DeviationMode::FOverZMinus1,
                ModeArg::FPrime => DeviationMode::FPrimeMinus1,
            };
            check_bound_deviation(f.as_ref(), mode, a.threshold, region.radius(), &grid)?
        }
        PropertyArg::CloseToConvex => {
            let f = a.f.analytic(grid.r_max, g.tol)?;
            let w = match &a.witness {
                Some(v) => Params64::new(v[0], v[1], v[2], v[3])?,
                None => Params64::new(a.f.mu, a.f.a, 1.0, a.f.b)?,
            };
            let gw = NormalizedWright::new(&w, grid.r_max, g.tol)?;
            check_close_to_convex(f.as_ref(), &gw, region.radius(), &grid)?
        }
        other => {
            let property = match other {
                PropertyArg::Starlike => Property::Starlike,
                PropertyArg::StarlikeOrder => Property::StarlikeOrder { eta: a.eta },
                PropertyArg::Convex => Property::Convex,
                PropertyArg::Ucv => Property::Ucv,
                PropertyArg::Sp => Property::Sp,
                _ => unreachable!("handled above"),
            };
            let f = a.f.analytic(grid.r_max, g.tol)?;
            verify_with(&Boxed(f), &PropertyRegion { property, region }, &grid, g.tol)?
        }
    };
    let code = if check.verdict == OracleVerdict::NoViolationFound {
        0
    } else {
        1
    };
    let text = if g.json { to_json(&check) } else { format_check(&check) };
    Ok(Outcome { text, code })
}

struct Boxed(Box<dyn Analytic<f64>>);

impl Analytic<f64> for Boxed {
    fn jet(&self, z: Complex64) -> wright_geom::oracle::Jet<f64> {
        self.0.jet(z)
    }

    fn radius(&self) -> f64 {
        self.0.radius()
    }
}

fn cmd_zeros(g: &Global, a: &ZerosArgs) -> Result<Outcome, CliError> {
    let p = match a.f.select()? {
        Selected::Four(p) => p,
        _ => return Err(CliError::Invalid("zeros need a four, two or confluent family".into())),
    };
    let kind = a.kind.kind();
    let (report, exterior) = if a.exterior {
        let e = verify_exterior(&p, a.n, kind)?;
        (e.roots, Some(e.verdict))
    } else {
        (find_roots(&partial_sum_poly(&p, a.n, kind)?)?, None)
    };
    let code = if exterior == Some(false) { 1 } else { 0 };
    if g.json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            roots: &'a wright_geom::polyzeros::RootsReport,
            exterior: Option<bool>,
        }
        return Ok(Outcome {
            text: to_json(&Out {
                roots: &report,
                exterior,
            }),
            code,
        });
    }
    let mut s = String::new();
    for r in &report.roots {
        let _ = writeln!(s, "{:+.12e} {:+.12e}i  |z| = {:.12e}", r.re, r.im, r.norm());
    }
    let _ = writeln!(s, "min_modulus: {:.12e}", report.min_modulus);
    let _ = writeln!(s, "zero_roots: {}", report.zero_roots);
    let _ = writeln!(s, "kakeya_applicable: {}", report.kakeya_applicable);
    let _ = writeln!(s, "residual_max: {:.3e}", report.residual_max);
    let _ = writeln!(s, "iterations: {}", report.iterations);
    if let Some(v) = exterior {
        let _ = writeln!(s, "exterior: {v}");
    }
    Ok(Outcome { text: s, code })
}

fn cmd_sweep(g: &Global, a: &SweepArgs) -> Result<Outcome, CliError> {
    if a.sharpness {
        let t = sharpness_table()?;
        let text = if g.json { to_json(&t) } else { format_sharpness(&t) };
        return Ok(Outcome::ok(text));
    }
    let need = |o: Option<f64>, n: &str| o.ok_or_else(|| CliError::Invalid(format!("--{n} is required")));
    let family = match a.family {
        SweepFamilyArg::Four => Family::FourParam,
        SweepFamilyArg::Two => Family::TwoParam,
        SweepFamilyArg::Bessel => Family::Bessel,
        SweepFamilyArg::Confluent => Family::ConfluentF,
    };
    let vary = a
        .vary
        .as_deref()
        .ok_or_else(|| CliError::Invalid("--vary is required".into()))?;
    let varying = Param::parse(vary).ok_or_else(|| CliError::Invalid(format!("unknown parameter {vary:?}")))?;
    let mut spec = SweepSpec::new(family, varying, need(a.lo, "lo")?, need(a.hi, "hi")?, a.steps);
    for f in &a.fixed {
        let (k, v) = f
            .split_once('=')
            .ok_or_else(|| CliError::Invalid(format!("--fix expects name=value, got {f:?}")))?;
        let p = Param::parse(k.trim()).ok_or_else(|| CliError::Invalid(format!("unknown parameter {k:?}")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("bad value in --fix {f:?}")))?;
        spec = spec.fix(p, v);
    }
    spec.criteria = parse_criteria(&a.criteria)?;
    if a.oracle {
        // grid flags apply to the unit disk; half-disk conclusions get their own default
        spec.oracle = Some(grid_for(g, 1.0)?);
    }
    let report = run_sweep(&spec)?;
    let text = if g.json {
        to_json(&report)
    } else {
        format_table(&report)
    };
    Ok(Outcome::ok(text))
}

fn cmd_plot(g: &Global, a: &PlotArgs) -> Result<Outcome, CliError> {
    let spec = PlotSpec {
        radius: a.region.region().radius(),
        n_circles: a.circles,
        n_rays: a.rays,
        samples: a.samples,
    };
    spec.validate().map_err(CliError::Invalid)?;
    let f = a.f.analytic(spec.radius, g.tol)?;
    let title = plot_title(&a.f, spec.radius);
    Ok(Outcome::ok(render_svg(f.as_ref(), &spec, &title)))
}

fn plot_title(f: &FnArgs, radius: f64) -> String {
    let what = match f.family {
        FamilyArg::Four => format!("W(mu={}, a={}, nu={}, b={})", f.mu, f.a, f.nu, f.b),
        FamilyArg::Two => format!("W(b={}, nu={})", f.b, f.nu),
        FamilyArg::Confluent => format!("F(b={})", f.b),
        FamilyArg::Bessel => format!("J(beta={})", f.beta.unwrap_or(f64::NAN)),
        FamilyArg::Wright2 => "wright2".into(),
        FamilyArg::Identity => "identity".into(),
    };
    format!("{what} on |z| < {radius}")
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    2
                }
            };
            return code;
        }
    };
    let g = &cli.global;
    if g.tol.is_nan() || g.tol <= 0.0 {
        let _ = writeln!(stderr, "error: --tol must be > 0");
        return 2;
    }
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(g, a),
        Command::Criteria(a) => cmd_criteria(g, a),
        Command::Verify(a) => cmd_verify(g, a),
        Command::Zeros(a) => cmd_zeros(g, a),
        Command::Sweep(a) => cmd_sweep(g, a),
        Command::Plot(a) => cmd_plot(g, a),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            return e.code();
        }
    };
    let written = match &g.out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(outcome.text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {}", e.message());
        return e.code();
    }
    outcome.code
}
