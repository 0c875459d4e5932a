//! Command implementations behind the `bohrlab` binary.
//!
//! Each command returns an [`Outcome`]: a [`ReportEnvelope`] plus a status
//! that maps onto the process exit code. Output is a pure function of the
//! flags, so equal flags and seed give byte-identical reports.

use std::collections::BTreeMap;
use std::fmt;

use clap::{Args, ValueEnum};
use num_complex::Complex64;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::atlas::ExtremalFamily;
use crate::engine::{
    a0_grid_towards_one, c_grid, ratio_limit, sharpness_scan, solve_radius, spherical_lambda, Codomain, PuncturedGap,
    RadiusRule, SpherePoint, DEFAULT_TOL,
};
use crate::error::{Error, Result};
use crate::oracles::{
    caratheodory_from_measure, caratheodory_suite, debranges_suite, herglotz_positivity, koebe_subordinate,
    HerglotzMeasure, SuiteOutcome,
};
use crate::series::TruncatedSeries;
use crate::slices::{
    boundary_sample, build_witness, theorem_codomains, verify_multidim_bohr, BalancedBall, NormExponent, WitnessParams,
};

/// Margin slack accepted at the theorem radius.
pub const MULTIDIM_SLACK: f64 = 1e-10;
/// How far past the theorem radius the witnesses must fail.
pub const RADIUS_OFFSET: f64 = 0.05;

/// A report cell. Floats print with 17 significant digits; non-finite floats become `null`.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_owned())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Text(x)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Float(x) if x.is_finite() => write!(f, "{x:.16e}"),
            Cell::Float(_) => Ok(()),
            Cell::Int(n) => write!(f, "{n}"),
            Cell::Text(s) => f.write_str(s),
            Cell::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cell::Float(x) if x.is_finite() => {
                let raw = RawValue::from_string(format!("{x:.16e}")).map_err(serde::ser::Error::custom)?;
                raw.serialize(s)
            }
            Cell::Float(_) => s.serialize_none(),
            Cell::Int(n) => s.serialize_i64(*n),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
        }
    }
}

/// An ordered record.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Row(Vec<(String, Cell)>);

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.0.push((key.to_owned(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Cell> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn float(&self, key: &str) -> Option<f64> {
        match self.get(key) {
            Some(Cell::Float(x)) => Some(*x),
            _ => None,
        }
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub params: BTreeMap<String, Cell>,
    pub seed: u64,
    pub certified: bool,
    pub rows: Vec<Row>,
}

impl ReportEnvelope {
    fn new(command: &str, seed: u64) -> Self {
        Self {
            command: command.to_owned(),
            params: BTreeMap::new(),
            seed,
            certified: true,
            rows: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.params.insert(key.to_owned(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report cells always serialize");
        out.push('\n');
        out
    }

    /// CSV with `# key=value` metadata lines ahead of the header.
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# command={}\n# seed={}\n# certified={}\n",
            self.command, self.seed, self.certified
        );
        for (k, v) in &self.params {
            out.push_str(&format!("# {k}={v}\n"));
        }
        let mut columns: Vec<&str> = Vec::new();
        for row in &self.rows {
            for (k, _) in &row.0 {
                if !columns.contains(&k.as_str()) {
                    columns.push(k);
                }
            }
        }
        let mut writer = csv::Writer::from_writer(Vec::new());
        let written = (|| -> csv::Result<()> {
            if !columns.is_empty() {
                writer.write_record(&columns)?;
            }
            for row in &self.rows {
                writer.write_record(
                    columns
                        .iter()
                        .map(|c| row.get(c).map(Cell::to_string).unwrap_or_default()),
                )?;
            }
            writer.flush()?;
            Ok(())
        })();
        written.expect("writing CSV to memory cannot fail");
        let body = writer.into_inner().expect("in-memory CSV writer has no pending I/O");
        out.push_str(&String::from_utf8(body).expect("CSV built from UTF-8 cells"));
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    PropertyFailure,
    NoViolation,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::PropertyFailure => 1,
            Status::NoViolation => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub envelope: ReportEnvelope,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodomainArg {
    Halfplane,
    Slit,
    Punctured,
    Exterior,
    Convex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GapArg {
    Literal,
    Euclidean,
}

#[derive(Debug, Clone, Args)]
pub struct CodomainOpts {
    #[arg(long, value_enum)]
    pub codomain: CodomainArg,
    /// Distance rule for the punctured disk.
    #[arg(long, value_enum, default_value = "euclidean")]
    pub gap: GapArg,
    /// Real part of the nearest boundary point of a convex codomain.
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub u_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub u_im: f64,
    /// Rotation angle taking the convex codomain onto the right half-plane.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub rotation: f64,
}

impl CodomainOpts {
    pub fn plain(codomain: CodomainArg) -> Self {
        Self {
            codomain,
            gap: GapArg::Euclidean,
            u_re: -1.0,
            u_im: 0.0,
            rotation: 0.0,
        }
    }

    pub fn resolve(&self) -> Result<Codomain> {
        Ok(match self.codomain {
            CodomainArg::Halfplane => Codomain::HalfPlane,
            CodomainArg::Slit => Codomain::Slit,
            CodomainArg::Exterior => Codomain::ExteriorDisk,
            CodomainArg::Punctured => Codomain::PuncturedDisk {
                gap: match self.gap {
                    GapArg::Literal => PuncturedGap::Literal,
                    GapArg::Euclidean => PuncturedGap::Euclidean,
                },
            },
            CodomainArg::Convex => Codomain::convex_via(Complex64::new(self.u_re, self.u_im), self.rotation)?,
        })
    }

    fn echo(&self, env: ReportEnvelope) -> ReportEnvelope {
        let env = env.param("codomain", format!("{:?}", self.codomain).to_lowercase());
        match self.codomain {
            CodomainArg::Punctured => env.param("gap", format!("{:?}", self.gap).to_lowercase()),
            CodomainArg::Convex => env
                .param("u_re", self.u_re)
                .param("u_im", self.u_im)
                .param("rotation", self.rotation),
            _ => env,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub codomain: CodomainOpts,
    /// Target bracket width.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

pub fn cmd_radius(args: &RadiusArgs, seed: u64) -> Result<Outcome> {
    let kind = args.codomain.resolve()?;
    let report = solve_radius(&RadiusRule::WorstCase(kind), args.tol)?;
    let exact = kind.theorem_radius();
    let mut env = args
        .codomain
        .echo(ReportEnvelope::new("radius", seed))
        .param("tol", args.tol);
    env.rows.push(
        Row::new()
            .with("codomain", kind.name())
            .with("radius_lo", report.radius_lo)
            .with("radius_hi", report.radius_hi)
            .with("width", report.width())
            .with("closed_form", exact)
            .with("bracketed", report.radius_lo <= exact && exact <= report.radius_hi)
            .with("iterations", report.iterations)
            .with("saturated", report.saturated),
    );
    Ok(Outcome {
        envelope: env,
        status: Status::Success,
    })
}

#[derive(Debug, Clone, Args)]
pub struct SharpnessArgs {
    #[command(flatten)]
    pub codomain: CodomainOpts,
    /// Radius beyond the theorem radius at which to look for violations.
    #[arg(long)]
    pub r0: f64,
    #[arg(long, default_value_t = 0.5)]
    pub c_min: f64,
    #[arg(long, default_value_t = 0.999)]
    pub c_max: f64,
    #[arg(long, default_value_t = 50)]
    pub c_steps: usize,
    /// Singular inner parameter grid, punctured disk only.
    #[arg(long, default_value_t = 0.001)]
    pub t_min: f64,
    #[arg(long, default_value_t = 0.1)]
    pub t_max: f64,
    #[arg(long, default_value_t = 12)]
    pub t_steps: usize,
    /// Value at the origin of the exterior-disk witness.
    #[arg(long, default_value_t = 1.01)]
    pub a0: f64,
}

impl SharpnessArgs {
    pub fn new(codomain: CodomainArg, r0: f64) -> Self {
        Self {
            codomain: CodomainOpts::plain(codomain),
            r0,
            c_min: 0.5,
            c_max: 0.999,
            c_steps: 50,
            t_min: 0.001,
            t_max: 0.1,
            t_steps: 12,
            a0: 1.01,
        }
    }
}

pub fn cmd_sharpness(args: &SharpnessArgs, seed: u64) -> Result<Outcome> {
    let kind = args.codomain.resolve()?;
    let cs = c_grid(args.c_min, args.c_max, args.c_steps);
    let families: Vec<ExtremalFamily> = match kind {
        Codomain::PuncturedDisk { .. } => c_grid(args.t_min, args.t_max, args.t_steps)
            .into_iter()
            .map(|t| ExtremalFamily::SingularInnerH { t })
            .collect(),
        Codomain::ExteriorDisk => vec![ExtremalFamily::ExteriorW { a0: args.a0 }],
        _ => vec![kind.natural_family()],
    };
    let mut env = args
        .codomain
        .echo(ReportEnvelope::new("sharpness", seed))
        .param("r0", args.r0)
        .param("c_min", args.c_min)
        .param("c_max", args.c_max)
        .param("c_steps", args.c_steps);
    env = match kind {
        Codomain::PuncturedDisk { .. } => env
            .param("t_min", args.t_min)
            .param("t_max", args.t_max)
            .param("t_steps", args.t_steps),
        Codomain::ExteriorDisk => env.param("a0", args.a0),
        _ => env,
    };
    for family in &families {
        match sharpness_scan(family, &kind, args.r0, &cs) {
            Ok(report) => {
                for v in &report.violations {
                    env.rows.push(
                        Row::new()
                            .with("family", family.name())
                            .with("parameter", family_parameter(family))
                            .with("c", v.c)
                            .with("lhs", v.lhs)
                            .with("rhs", v.rhs)
                            .with("margin", v.rhs - v.lhs),
                    );
                }
            }
            Err(Error::NoViolationFound) => {}
            Err(e) => return Err(e),
        }
    }
    let status = if env.rows.is_empty() {
        Status::NoViolation
    } else {
        Status::Success
    };
    Ok(Outcome { envelope: env, status })
}

fn family_parameter(family: &ExtremalFamily) -> f64 {
    match *family {
        ExtremalFamily::SingularInnerH { t } => t,
        ExtremalFamily::ExteriorW { a0 } => a0,
        ExtremalFamily::MoebiusL | ExtremalFamily::KoebeSquareU => f64::NAN,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Caratheodory,
    Debranges,
    Multidim,
    ExteriorLimit,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Random samples; each suite has its own default.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Coefficient order for the coefficient suites.
    #[arg(long, default_value_t = 50)]
    pub max_terms: usize,
    /// Dimension for the multidimensional suite; default runs 2, 8 and 64.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Norm exponent for the multidimensional suite; default runs 1, 2 and inf.
    #[arg(long)]
    pub p: Option<NormExponent>,
    /// Witness scale `c`.
    #[arg(long, default_value_t = 0.99)]
    pub c: f64,
    /// Radius for the exterior ratio table; the table uses `c·r0`.
    #[arg(long, default_value_t = 0.4)]
    pub r0: f64,
}

impl VerifyArgs {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            samples: None,
            max_terms: 50,
            dim: None,
            p: None,
            c: 0.99,
            r0: 0.4,
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, seed: u64) -> Result<Outcome> {
    let mut env = ReportEnvelope::new("verify", seed);
    match args.suite {
        Suite::Caratheodory => {
            let samples = args.samples.unwrap_or(1000);
            env = env
                .param("suite", "caratheodory")
                .param("samples", samples)
                .param("max_terms", args.max_terms);
            let outcome = caratheodory_suite(samples, args.max_terms, seed)?;
            env.rows.push(suite_row("coefficients_at_most_two", &outcome));

            let extremal = caratheodory_from_measure(&HerglotzMeasure::point_mass(0.7), args.max_terms);
            let deviation = extremal.coeffs()[1..]
                .iter()
                .map(|c| (c.norm() - 2.0).abs())
                .fold(0.0, f64::max);
            env.rows.push(
                Row::new()
                    .with("property", "single_atom_attains_two")
                    .with("worst", deviation)
                    .with("passed", deviation <= 1e-12),
            );
            let min_re = herglotz_positivity(samples.min(200), 20, 0.99, seed);
            env.rows.push(
                Row::new()
                    .with("property", "positive_real_part")
                    .with("worst", min_re)
                    .with("passed", min_re > 0.0),
            );
        }
        Suite::Debranges => {
            let samples = args.samples.unwrap_or(500);
            env = env
                .param("suite", "debranges")
                .param("samples", samples)
                .param("max_terms", args.max_terms);
            let outcome = debranges_suite(samples, args.max_terms, seed)?;
            env.rows
                .push(suite_row("subordinate_coefficients_at_most_4m", &outcome));

            let identity = TruncatedSeries::identity().truncated(args.max_terms);
            let u = koebe_subordinate(&identity)?;
            let deviation = u.coeffs()[1..]
                .iter()
                .enumerate()
                .map(|(k, a)| (a.norm() - 4.0 * (k + 1) as f64).abs())
                .fold(0.0, f64::max);
            env.rows.push(
                Row::new()
                    .with("property", "identity_attains_4m")
                    .with("worst", deviation)
                    .with("passed", deviation <= 1e-10),
            );
        }
        Suite::Multidim => {
            let samples = args.samples.unwrap_or(200);
            env = env
                .param("suite", "multidim")
                .param("samples", samples)
                .param("c", args.c);
            if let Some(n) = args.dim {
                env = env.param("dim", n);
            }
            if let Some(p) = args.p {
                env = env.param("p", p.to_string());
            }
            env.rows = multidim_rows(args, samples, seed)?;
        }
        Suite::ExteriorLimit => {
            env = env
                .param("suite", "exterior-limit")
                .param("c", args.c)
                .param("r0", args.r0);
            let rows = ratio_limit(args.c, args.r0, &a0_grid_towards_one(8))?;
            let mut previous = f64::INFINITY;
            for row in rows {
                let error = (row.ratio - row.limit).abs();
                env.rows.push(
                    Row::new()
                        .with("a0", row.a0)
                        .with("ratio", row.ratio)
                        .with("direct", row.direct)
                        .with("limit", row.limit)
                        .with("error", error)
                        .with("passed", error <= previous),
                );
                previous = error;
            }
        }
    }
    let failed = env.rows.iter().any(|r| r.get("passed") == Some(&Cell::Bool(false)));
    Ok(Outcome {
        envelope: env,
        status: if failed {
            Status::PropertyFailure
        } else {
            Status::Success
        },
    })
}

fn suite_row(property: &str, outcome: &SuiteOutcome) -> Row {
    Row::new()
        .with("property", property)
        .with("samples", outcome.samples)
        .with("order", outcome.order)
        .with("checked", outcome.coefficients_checked)
        .with("violations", outcome.violations)
        .with("worst", outcome.worst_ratio)
        .with("passed", outcome.passed())
}

fn multidim_rows(args: &VerifyArgs, samples: usize, seed: u64) -> Result<Vec<Row>> {
    let dims = args.dim.map_or_else(|| vec![2, 8, 64], |n| vec![n]);
    let ps = args.p.map_or_else(
        || vec![NormExponent::One, NormExponent::Finite(2.0), NormExponent::Infinity],
        |p| vec![p],
    );
    let params = WitnessParams::default();
    let mut rows = Vec::new();
    let mut case = 0u64;
    for kind in theorem_codomains() {
        for &n in &dims {
            for &p in &ps {
                let ball = BalancedBall::new(n, p)?;
                let case_seed = seed.wrapping_add(case);
                case += 1;
                let v = boundary_sample(&ball, 1, case_seed ^ 0x5eed).remove(0);
                let f = build_witness(&kind, &ball, &v, args.c, &params)?;
                let radius = kind.theorem_radius();
                for (r, expect_hold) in [(radius, true), (radius + RADIUS_OFFSET, false)] {
                    let report = verify_multidim_bohr(&f, &kind, r, samples, case_seed)?;
                    let passed = if expect_hold {
                        report.holds(MULTIDIM_SLACK)
                    } else {
                        report.anchor_margin < 0.0
                    };
                    rows.push(
                        Row::new()
                            .with("codomain", kind.name())
                            .with("family", f.family.name())
                            .with("n", n)
                            .with("p", p.to_string())
                            .with("r", r)
                            .with("expect", if expect_hold { "holds" } else { "fails" })
                            .with("min_margin", report.min_margin)
                            .with("anchor_margin", report.anchor_margin)
                            .with("argmin", report.argmin)
                            .with("directions", report.directions)
                            .with("passed", passed),
                    );
                }
            }
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Moebius,
    Koebe,
    SingularInner,
    Exterior,
}

#[derive(Debug, Clone, Args)]
pub struct CoeffsArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    /// Value at the origin for the Koebe-square and exterior families.
    #[arg(long, default_value_t = 2.0)]
    pub a0: f64,
    #[arg(long, default_value_t = 20)]
    pub max_terms: usize,
}

pub fn cmd_coeffs(args: &CoeffsArgs, seed: u64) -> Result<Outcome> {
    let mut env = ReportEnvelope::new("coeffs", seed)
        .param("family", format!("{:?}", args.family).to_lowercase())
        .param("max_terms", args.max_terms);
    let series = match args.family {
        FamilyArg::Moebius => ExtremalFamily::MoebiusL.series(args.max_terms)?,
        FamilyArg::Koebe => {
            env = env.param("a0", args.a0);
            crate::atlas::koebe_square_series(args.max_terms, args.a0)?
        }
        FamilyArg::SingularInner => {
            env = env.param("t", args.t);
            ExtremalFamily::SingularInnerH { t: args.t }.series(args.max_terms)?
        }
        FamilyArg::Exterior => {
            env = env.param("a0", args.a0);
            ExtremalFamily::ExteriorW { a0: args.a0 }.series(args.max_terms)?
        }
    };
    if let Some(tail) = series.tail() {
        env = env.param("tail_c", tail.c).param("tail_rho", tail.rho);
    }
    env.certified = series.tail().is_some();
    for (n, a) in series.coeffs().iter().enumerate() {
        env.rows.push(
            Row::new()
                .with("n", n)
                .with("re", a.re)
                .with("im", a.im)
                .with("abs", a.norm()),
        );
    }
    Ok(Outcome {
        envelope: env,
        status: Status::Success,
    })
}

/// Parses `inf`, `x` or `x:y` (for `x + iy`).
pub fn parse_sphere_point(s: &str) -> Result<SpherePoint> {
    let s = s.trim();
    if matches!(s.to_ascii_lowercase().as_str(), "inf" | "infinity" | "∞") {
        return Ok(SpherePoint::Infinity);
    }
    let bad = || Error::InvalidParameter(format!("cannot parse point {s:?}"));
    let (re, im) = match s.split_once(':') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => (s.parse().map_err(|_| bad())?, 0.0),
    };
    let z = Complex64::new(re, im);
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(bad());
    }
    Ok(SpherePoint::Finite(z))
}

fn sphere_label(p: &SpherePoint) -> String {
    match p {
        SpherePoint::Infinity => "inf".into(),
        SpherePoint::Finite(z) if z.im == 0.0 => format!("{}", z.re),
        SpherePoint::Finite(z) => format!("{}:{}", z.re, z.im),
    }
}

#[derive(Debug, Clone, Args)]
pub struct MetricArgs {
    /// Comma-separated points: `inf`, `x`, or `x:y` for `x + iy`.
    #[arg(long, default_value = "0,1,-1,0:1,2,10,inf", allow_hyphen_values = true)]
    pub points: String,
}

pub fn cmd_metric(args: &MetricArgs, seed: u64) -> Result<Outcome> {
    let points: Vec<SpherePoint> = args.points.split(',').map(parse_sphere_point).collect::<Result<_>>()?;
    let mut env = ReportEnvelope::new("metric", seed).param("points", args.points.clone());
    for (i, z) in points.iter().enumerate() {
        for w in &points[i..] {
            env.rows.push(
                Row::new()
                    .with("z", sphere_label(z))
                    .with("w", sphere_label(w))
                    .with("lambda", spherical_lambda(*z, *w)),
            );
        }
    }
    Ok(Outcome {
        envelope: env,
        status: Status::Success,
    })
}
