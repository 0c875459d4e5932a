//! Boundary gaps, Bohr margins, certified radius bisection and sharpness scans.
//!
//! A *margin* is `gap − majorant`: positive means the Bohr inequality holds.
//! Certified margins use the majorant plus its tail bound, so they are lower
//! bounds of the true margin. Violation evidence uses the stored partial sum
//! alone, which is a lower bound of the majorant because every term is
//! nonnegative.

use num_complex::Complex64;
use serde::Serialize;

use crate::atlas::ExtremalFamily;
use crate::error::{Error, Result};
use crate::series::{TruncatedSeries, DEFAULT_ORDER};

/// Sharp radius for the half-plane, convex, punctured-disk and exterior-disk cases.
pub const ONE_THIRD: f64 = 1.0 / 3.0;

/// Sharp radius for the slit plane, `3 − 2√2`.
pub fn slit_radius() -> f64 {
    3.0 - 2.0 * std::f64::consts::SQRT_2
}

pub const MAX_BISECTIONS: usize = 80;
pub const DEFAULT_TOL: f64 = 1e-12;
/// Right end of the initial bisection bracket.
pub const BRACKET_TOP: f64 = 1.0 - 1e-9;

/// How the distance from `f(0)` to the boundary of the punctured disk is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PuncturedGap {
    /// The constant threshold 1 as stated for the punctured disk.
    Literal,
    /// The Euclidean distance `min(|a0|, 1 − |a0|)` to `{0} ∪ {|w| = 1}`.
    Euclidean,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Codomain {
    HalfPlane,
    Slit,
    PuncturedDisk {
        gap: PuncturedGap,
    },
    ExteriorDisk,
    /// A convex domain reduced to the half-plane through its nearest boundary
    /// point `u` and rotation `e^{it}`.
    ConvexVia {
        u_re: f64,
        u_im: f64,
        t: f64,
    },
}

impl Codomain {
    pub fn punctured() -> Self {
        Codomain::PuncturedDisk {
            gap: PuncturedGap::Literal,
        }
    }

    pub fn convex_via(u: Complex64, t: f64) -> Result<Self> {
        if !(u.re.is_finite() && u.im.is_finite() && t.is_finite()) {
            return Err(Error::InvalidParameter("convex reduction needs finite u and t".into()));
        }
        Ok(Codomain::ConvexVia {
            u_re: u.re,
            u_im: u.im,
            t,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Codomain::HalfPlane => "halfplane",
            Codomain::Slit => "slit",
            Codomain::PuncturedDisk { .. } => "punctured",
            Codomain::ExteriorDisk => "exterior",
            Codomain::ConvexVia { .. } => "convex",
        }
    }

    /// The sharp Bohr radius for this codomain.
    pub fn theorem_radius(&self) -> f64 {
        match self {
            Codomain::Slit => slit_radius(),
            _ => ONE_THIRD,
        }
    }

    /// Closed-form margin of the extremal family in the limit `c → 1⁻`.
    ///
    /// Half-plane and convex: `1 − 2r/(1−r)` from `|c_n| ≤ 2`. Slit:
    /// `1 − 4r/(1−r)²` from `|a_n| ≤ 4n`. Punctured disk: disk-valued maps obey
    /// `|a0| + (1−|a0|²) r/(1−r) ≤ 1`, whose worst case `|a0| → 1` is again
    /// `1 − 2r/(1−r)`. Exterior disk: the chordal ratio tends to `2r/(1−r)`
    /// as `|a0| → 1⁺`.
    pub fn worst_case_margin(&self, r: f64) -> f64 {
        match self {
            Codomain::Slit => 1.0 - 4.0 * r / ((1.0 - r) * (1.0 - r)),
            _ => 1.0 - 2.0 * r / (1.0 - r),
        }
    }

    /// The family whose slices witness sharpness for this codomain.
    pub fn natural_family(&self) -> ExtremalFamily {
        match self {
            Codomain::Slit => ExtremalFamily::KoebeSquareU,
            Codomain::PuncturedDisk { .. } => ExtremalFamily::SingularInnerH { t: 0.02 },
            Codomain::ExteriorDisk => ExtremalFamily::ExteriorW { a0: 1.01 },
            Codomain::HalfPlane | Codomain::ConvexVia { .. } => ExtremalFamily::MoebiusL,
        }
    }
}

fn outside(codomain: &'static str, a0: Complex64) -> Error {
    Error::OutsideCodomain {
        codomain,
        value: format!("{a0}"),
    }
}

/// Distance from `a0 = f(0)` to the boundary of the codomain.
pub fn boundary_gap(kind: &Codomain, a0: Complex64) -> Result<f64> {
    match *kind {
        Codomain::HalfPlane if a0.re > 0.0 => Ok(a0.re),
        Codomain::HalfPlane => Err(outside("halfplane", a0)),
        Codomain::Slit if a0.re > 0.0 && a0.im.abs() <= 1e-12 * a0.re.max(1.0) => Ok(a0.re),
        Codomain::Slit => Err(outside("slit", a0)),
        Codomain::PuncturedDisk { gap } => {
            let m = a0.norm();
            if !(m > 0.0 && m < 1.0) {
                return Err(outside("punctured", a0));
            }
            Ok(match gap {
                PuncturedGap::Literal => 1.0,
                PuncturedGap::Euclidean => m.min(1.0 - m),
            })
        }
        Codomain::ExteriorDisk => Err(Error::SphericalCodomain),
        Codomain::ConvexVia { u_re, u_im, .. } => Ok((a0 - Complex64::new(u_re, u_im)).norm()),
    }
}

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl From<Complex64> for SpherePoint {
    fn from(z: Complex64) -> Self {
        SpherePoint::Finite(z)
    }
}

impl From<f64> for SpherePoint {
    fn from(x: f64) -> Self {
        SpherePoint::Finite(Complex64::new(x, 0.0))
    }
}

/// Chordal distance `|z−w| / (√(1+|z|²)√(1+|w|²))`, and `1/√(1+|z|²)` to ∞.
pub fn spherical_lambda(z: impl Into<SpherePoint>, w: impl Into<SpherePoint>) -> f64 {
    match (z.into(), w.into()) {
        (SpherePoint::Infinity, SpherePoint::Infinity) => 0.0,
        (SpherePoint::Finite(z), SpherePoint::Infinity) | (SpherePoint::Infinity, SpherePoint::Finite(z)) => {
            (1.0 / (1.0 + z.norm_sqr())).sqrt()
        }
        (SpherePoint::Finite(z), SpherePoint::Finite(w)) => {
            (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
        }
    }
}

/// Certified `gap − Σ_{m≥1}|a_m| r^m`, tail included.
pub fn euclidean_margin(f: &TruncatedSeries, kind: &Codomain, r: f64) -> Result<f64> {
    let gap = boundary_gap(kind, f.coeffs()[0])?;
    let sum = f.majorant_sum(r, false)?;
    let upper = sum.upper().ok_or(Error::UncertifiedTail(r))?;
    Ok(gap - upper)
}

/// Where the spherical majorant starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MajorantStart {
    /// `Σ_{m≥0}`, the running quantity of the inequality chain.
    Zero,
    /// `Σ_{m≥1}`, as the exterior-disk inequality is displayed.
    One,
}

/// Certified `λ(|a0|, 1) − λ(M(r), |a0|)` with `M(r) = Σ_{m≥0}|a_m| r^m`.
pub fn spherical_margin(f: &TruncatedSeries, r: f64) -> Result<f64> {
    spherical_margin_from(f, r, MajorantStart::Zero)
}

pub fn spherical_margin_from(f: &TruncatedSeries, r: f64, start: MajorantStart) -> Result<f64> {
    let a0 = f.coeffs()[0].norm();
    if !(a0 > 1.0) {
        return Err(outside("exterior", f.coeffs()[0]));
    }
    let sum = f.majorant_sum(r, start == MajorantStart::Zero)?;
    let upper = sum.upper().ok_or(Error::UncertifiedTail(r))?;
    // λ(·, a0) is monotone on each side of a0, so the worst case over
    // [value, upper] sits at an endpoint.
    let distance = spherical_lambda(sum.value, a0).max(spherical_lambda(upper, a0));
    Ok(spherical_lambda(a0, 1.0) - distance)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MarginRow {
    pub r: f64,
    pub margin: f64,
}

/// Evidence that the Bohr inequality fails: `lhs > rhs` at radius `r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Violation {
    pub family: ExtremalFamily,
    pub c: f64,
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BohrReport {
    pub radius_lo: f64,
    pub radius_hi: f64,
    pub margin_table: Vec<MarginRow>,
    pub violations: Vec<Violation>,
    pub iterations: usize,
    /// The inequality held on the whole searched interval.
    pub saturated: bool,
}

impl BohrReport {
    pub fn width(&self) -> f64 {
        self.radius_hi - self.radius_lo
    }

    pub fn witness(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Bisects a nonincreasing margin on `[0, BRACKET_TOP]` until the bracket is
/// at most `tol` wide, keeping `margin(lo) ≥ 0 > margin(hi)`.
pub fn bisect_margin(margin: impl Fn(f64) -> Result<f64>, tol: f64) -> Result<BohrReport> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut table = Vec::new();
    let mut eval = |r: f64| -> Result<f64> {
        let m = margin(r)?;
        table.push(MarginRow { r, margin: m });
        Ok(m)
    };
    let at_zero = eval(0.0)?;
    if at_zero < 0.0 {
        return Err(Error::NoBracket(at_zero));
    }
    let (mut lo, mut hi) = (0.0, BRACKET_TOP);
    if eval(hi)? >= 0.0 {
        table.sort_by(|a, b| a.r.total_cmp(&b.r));
        return Ok(BohrReport {
            radius_lo: hi,
            radius_hi: hi,
            margin_table: table,
            violations: Vec::new(),
            iterations: 0,
            saturated: true,
        });
    }
    let mut iterations = 0;
    while hi - lo > tol && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if eval(mid)? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    table.sort_by(|a, b| a.r.total_cmp(&b.r));
    Ok(BohrReport {
        radius_lo: lo,
        radius_hi: hi,
        margin_table: table,
        violations: Vec::new(),
        iterations,
        saturated: false,
    })
}

/// What `solve_radius` bisects.
#[derive(Debug, Clone)]
pub enum RadiusRule {
    /// The closed-form worst case of the codomain.
    WorstCase(Codomain),
    /// A concrete series; uncertified tails count as failure.
    Series { series: TruncatedSeries, kind: Codomain },
}

pub fn solve_radius(rule: &RadiusRule, tol: f64) -> Result<BohrReport> {
    match rule {
        RadiusRule::WorstCase(kind) => bisect_margin(|r| Ok(kind.worst_case_margin(r)), tol),
        RadiusRule::Series { series, kind } => bisect_margin(
            |r| {
                let m = match kind {
                    Codomain::ExteriorDisk => spherical_margin(series, r),
                    _ => euclidean_margin(series, kind, r),
                };
                match m {
                    Err(Error::UncertifiedTail(_)) => Ok(f64::NEG_INFINITY),
                    other => other,
                }
            },
            tol,
        ),
    }
}

/// Lower-bound comparison at a single scalar radius `rho = c·r0`.
fn scan_point(series: &TruncatedSeries, kind: &Codomain, rho: f64) -> Result<(f64, f64)> {
    let a0 = series.coeffs()[0];
    match kind {
        Codomain::ExteriorDisk => {
            let modulus = a0.norm();
            if !(modulus > 1.0) {
                return Err(outside("exterior", a0));
            }
            let total = series.majorant_sum(rho, true)?.value;
            Ok((spherical_lambda(total, modulus), spherical_lambda(modulus, 1.0)))
        }
        _ => {
            let gap = boundary_gap(kind, a0)?;
            let sum = series.majorant_sum(rho, false)?.value;
            Ok((a0.norm() + sum, a0.norm() + gap))
        }
    }
}

/// Evaluates the witness `family(c·ψ_v(x)/‖v‖)` at `x = r0·v` for each `c`,
/// i.e. the scalar family at `c·r0`, and records every `lhs > rhs`.
pub fn sharpness_scan(family: &ExtremalFamily, kind: &Codomain, r0: f64, c_grid: &[f64]) -> Result<BohrReport> {
    if !(r0 > 0.0 && r0 < 1.0) {
        return Err(Error::RadiusOutOfRange(r0));
    }
    if let Some(c) = c_grid.iter().find(|&&c| !(c > 0.0 && c < 1.0)) {
        return Err(Error::InvalidParameter(format!("scale c = {c} must lie in (0, 1)")));
    }
    let series = family.series(DEFAULT_ORDER)?;
    let mut table = Vec::with_capacity(c_grid.len());
    let mut violations = Vec::new();
    for &c in c_grid {
        let rho = c * r0;
        let (lhs, rhs) = scan_point(&series, kind, rho)?;
        table.push(MarginRow {
            r: rho,
            margin: rhs - lhs,
        });
        if lhs > rhs {
            violations.push(Violation {
                family: *family,
                c,
                r: r0,
                lhs,
                rhs,
            });
        }
    }
    if violations.is_empty() {
        return Err(Error::NoViolationFound);
    }
    Ok(BohrReport {
        radius_lo: 0.0,
        radius_hi: r0,
        margin_table: table,
        violations,
        iterations: 0,
        saturated: false,
    })
}

/// Evenly spaced `c` values in `[lo, hi]`.
pub fn c_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![hi],
        _ => (0..steps)
            .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
            .collect(),
    }
}

/// The ratio `λ(a, a^{(1+x)/(1−x)}) / λ(a, 1)` in its simplified form
/// `√2·a(a^{2x/(1−x)} − 1) / ((a−1)√(1 + a^{2(1+x)/(1−x)}))`.
pub fn exterior_ratio(a0: f64, x: f64) -> f64 {
    // expm1/ln_1p keep the numerator accurate as a0 → 1⁺.
    let inner = (2.0 * x / (1.0 - x) * (a0 - 1.0).ln_1p()).exp_m1();
    let outer = (1.0 + a0.powf(2.0 * (1.0 + x) / (1.0 - x))).sqrt();
    std::f64::consts::SQRT_2 * a0 * inner / ((a0 - 1.0) * outer)
}

/// The limit of [`exterior_ratio`] as `a0 → 1⁺`.
pub fn exterior_ratio_limit(x: f64) -> f64 {
    2.0 * x / (1.0 - x)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioRow {
    pub a0: f64,
    /// Simplified closed form.
    pub ratio: f64,
    /// The same ratio from two chordal distances.
    pub direct: f64,
    pub limit: f64,
}

pub fn ratio_limit(c: f64, r0: f64, a0_grid: &[f64]) -> Result<Vec<RatioRow>> {
    let x = c * r0;
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::InvalidParameter(format!("c·r0 = {x} must lie in (0, 1)")));
    }
    if let Some(a) = a0_grid.iter().find(|&&a| !(a > 1.0)) {
        return Err(Error::InvalidParameter(format!("a0 = {a} must exceed 1")));
    }
    let limit = exterior_ratio_limit(x);
    Ok(a0_grid
        .iter()
        .map(|&a0| {
            let image = a0.powf((1.0 + x) / (1.0 - x));
            RatioRow {
                a0,
                ratio: exterior_ratio(a0, x),
                direct: spherical_lambda(a0, image) / spherical_lambda(a0, 1.0),
                limit,
            }
        })
        .collect())
}

/// `1 + 10^{-k}` for `k = 1..=depth`.
pub fn a0_grid_towards_one(depth: u32) -> Vec<f64> {
    (1..=depth).map(|k| 1.0 + 10f64.powi(-(k as i32))).collect()
}
