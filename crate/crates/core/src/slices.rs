//! Balanced ℓ^p balls in ℂⁿ, norming functionals and slice witnesses.
//!
//! Every witness here factors through one linear functional,
//! `f(x) = h(c·ψ_v(x)/‖v‖)`, so its restriction to a complex line
//! `z ↦ f(z·y)` is the scalar series of `h` with its argument rescaled by
//! `c·ψ_v(y)/‖v‖`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::atlas::ExtremalFamily;
use crate::engine::{euclidean_margin, spherical_margin, Codomain, PuncturedGap};
use crate::error::{Error, Result};
use crate::oracles::seeded_rng;
use crate::series::{TruncatedSeries, DEFAULT_ORDER};

/// Relative slack when checking that a direction lies in the closed ball.
const BALL_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(into = "String")]
pub enum NormExponent {
    One,
    Finite(f64),
    Infinity,
}

impl NormExponent {
    pub fn new(p: f64) -> Result<Self> {
        if p == 1.0 {
            Ok(NormExponent::One)
        } else if p == f64::INFINITY {
            Ok(NormExponent::Infinity)
        } else if p.is_finite() && p > 1.0 {
            Ok(NormExponent::Finite(p))
        } else {
            Err(Error::InvalidParameter(format!(
                "norm exponent must be in [1, ∞], got {p}"
            )))
        }
    }

    /// The conjugate exponent `q` with `1/p + 1/q = 1`.
    pub fn conjugate(self) -> Self {
        match self {
            NormExponent::One => NormExponent::Infinity,
            NormExponent::Infinity => NormExponent::One,
            NormExponent::Finite(p) => NormExponent::new(p / (p - 1.0)).unwrap_or(NormExponent::Infinity),
        }
    }

    pub fn norm(self, x: &[Complex64]) -> f64 {
        match self {
            NormExponent::One => x.iter().map(|z| z.norm()).sum(),
            NormExponent::Infinity => x.iter().map(|z| z.norm()).fold(0.0, f64::max),
            NormExponent::Finite(p) => {
                // Scale by the largest entry so high powers neither overflow nor underflow.
                let top = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
                if top == 0.0 {
                    return 0.0;
                }
                let s: f64 = x.iter().map(|z| (z.norm() / top).powf(p)).sum();
                top * s.powf(1.0 / p)
            }
        }
    }
}

impl fmt::Display for NormExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormExponent::One => write!(f, "1"),
            NormExponent::Finite(p) => write!(f, "{p}"),
            NormExponent::Infinity => write!(f, "inf"),
        }
    }
}

impl From<NormExponent> for String {
    fn from(p: NormExponent) -> Self {
        p.to_string()
    }
}

impl FromStr for NormExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(NormExponent::Infinity),
            other => {
                let p: f64 = other
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("cannot parse norm exponent {s:?}")))?;
                NormExponent::new(p)
            }
        }
    }
}

/// The open unit ball of `(ℂⁿ, ‖·‖_p)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BalancedBall {
    pub n: usize,
    pub p: NormExponent,
}

impl BalancedBall {
    pub fn new(n: usize, p: NormExponent) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        Ok(Self { n, p })
    }

    pub fn norm(&self, x: &[Complex64]) -> Result<f64> {
        self.check_dim(x)?;
        Ok(self.p.norm(x))
    }

    fn check_dim(&self, x: &[Complex64]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(())
    }
}

/// `count` points of the unit sphere: complex Gaussian directions scaled to norm 1.
pub fn boundary_sample(ball: &BalancedBall, count: usize, seed: u64) -> Vec<Vec<Complex64>> {
    let mut rng = seeded_rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x: Vec<Complex64> = (0..ball.n)
            .map(|_| Complex64::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)))
            .collect();
        let norm = ball.p.norm(&x);
        if norm > 0.0 {
            out.push(x.into_iter().map(|z| z / norm).collect());
        }
    }
    out
}

/// A norm-one linear functional `ψ(x) = Σ coeffs_i·x_i` with `ψ(anchor) = ‖anchor‖`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportFunctional {
    pub coeffs: Vec<Complex64>,
    pub anchor: Vec<Complex64>,
    pub anchor_norm: f64,
    pub p: NormExponent,
}

impl SupportFunctional {
    pub fn apply(&self, x: &[Complex64]) -> Result<Complex64> {
        if x.len() != self.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: x.len(),
            });
        }
        Ok(self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum())
    }

    /// Norm of the coefficient vector in the conjugate exponent.
    pub fn dual_norm(&self) -> f64 {
        self.p.conjugate().norm(&self.coeffs)
    }
}

fn phase_conj(z: Complex64) -> Complex64 {
    z.conj() / z.norm()
}

pub fn support_functional(ball: &BalancedBall, v: &[Complex64]) -> Result<SupportFunctional> {
    ball.check_dim(v)?;
    let norm = ball.p.norm(v);
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    let zero = Complex64::new(0.0, 0.0);
    let coeffs = match ball.p {
        NormExponent::One => v
            .iter()
            .map(|&z| if z == zero { zero } else { phase_conj(z) })
            .collect(),
        NormExponent::Infinity => {
            let mut j = 0;
            for (i, z) in v.iter().enumerate() {
                if z.norm() > v[j].norm() {
                    j = i;
                }
            }
            let mut c = vec![zero; v.len()];
            c[j] = phase_conj(v[j]);
            c
        }
        NormExponent::Finite(p) => v
            .iter()
            .map(|&z| {
                if z == zero {
                    zero
                } else {
                    // v̄_i |v_i|^{p−2} / ‖v‖^{p−1}, written as a phase times a ratio power.
                    phase_conj(z) * (z.norm() / norm).powf(p - 1.0)
                }
            })
            .collect(),
    };
    Ok(SupportFunctional {
        coeffs,
        anchor: v.to_vec(),
        anchor_norm: norm,
        p: ball.p,
    })
}

/// Parameters of the scalar generators used by [`build_witness`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WitnessParams {
    /// Time parameter of the singular inner function.
    pub t: f64,
    /// Value at the origin of the exterior-disk witness.
    pub a0: f64,
}

impl Default for WitnessParams {
    fn default() -> Self {
        Self { t: 0.02, a0: 1.01 }
    }
}

/// `x ↦ shift + rotation·h(c·ψ(x)/‖v‖)` on the unit ball.
#[derive(Debug, Clone)]
pub struct SliceFunction {
    pub family: ExtremalFamily,
    pub ball: BalancedBall,
    pub scalar_part: TruncatedSeries,
    pub functional: SupportFunctional,
    pub c: f64,
    shift: Complex64,
    rotation: Complex64,
}

impl SliceFunction {
    fn inner(&self, x: &[Complex64]) -> Result<Complex64> {
        Ok(self.functional.apply(x)? * (self.c / self.functional.anchor_norm))
    }

    /// Value at `x`, from the closed form of the generator.
    pub fn eval(&self, x: &[Complex64]) -> Result<Complex64> {
        Ok(self.shift + self.rotation * self.family.eval(self.inner(x)?))
    }

    /// Value at the origin.
    pub fn value_at_origin(&self) -> Complex64 {
        self.scalar_part.coeffs()[0]
    }
}

/// Builds the sharpness witness for `kind` anchored at `v`.
///
/// Half-plane uses `L`, the slit plane `U`, the punctured disk `H_t` and the
/// exterior disk `W`. A convex codomain `ConvexVia{u, t}` gets
/// `u + e^{−it}·L`, the half-plane witness pulled back through the reduction.
pub fn build_witness(
    kind: &Codomain,
    ball: &BalancedBall,
    v: &[Complex64],
    c: f64,
    params: &WitnessParams,
) -> Result<SliceFunction> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::InvalidParameter(format!("scale c = {c} must lie in (0, 1)")));
    }
    let family = match kind {
        Codomain::HalfPlane | Codomain::ConvexVia { .. } => ExtremalFamily::MoebiusL,
        Codomain::Slit => ExtremalFamily::KoebeSquareU,
        Codomain::PuncturedDisk { .. } => ExtremalFamily::SingularInnerH { t: params.t },
        Codomain::ExteriorDisk => ExtremalFamily::ExteriorW { a0: params.a0 },
    };
    let (shift, rotation) = match *kind {
        Codomain::ConvexVia { u_re, u_im, t } => (Complex64::new(u_re, u_im), Complex64::from_polar(1.0, -t)),
        _ => (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
    };
    let scalar_part = family.series(DEFAULT_ORDER)?.scale(rotation).shift_constant(shift);
    let functional = support_functional(ball, v)?;
    Ok(SliceFunction {
        family,
        ball: *ball,
        scalar_part,
        functional,
        c,
        shift,
        rotation,
    })
}

/// The expansion of `z ↦ f(z·y)` at the origin.
pub fn slice_series(f: &SliceFunction, y: &[Complex64]) -> Result<TruncatedSeries> {
    let norm = f.ball.norm(y)?;
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    if norm > 1.0 + BALL_SLACK {
        return Err(Error::OutsideBall(norm));
    }
    Ok(f.scalar_part.scale_argument(f.inner(y)?))
}

/// Minimum certified slice margin over sampled boundary directions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultidimReport {
    pub family: ExtremalFamily,
    pub n: usize,
    pub p: NormExponent,
    pub c: f64,
    pub r: f64,
    pub seed: u64,
    /// Sampled directions plus the anchor.
    pub directions: usize,
    pub anchor_margin: f64,
    pub min_margin: f64,
    /// Index of the minimizing direction; 0 is the anchor.
    pub argmin: usize,
}

impl MultidimReport {
    pub fn holds(&self, slack: f64) -> bool {
        self.min_margin >= -slack
    }
}

fn slice_margin(series: &TruncatedSeries, kind: &Codomain, r: f64) -> Result<f64> {
    match kind {
        Codomain::ExteriorDisk => spherical_margin(series, r),
        _ => euclidean_margin(series, kind, r),
    }
}

/// Checks the Bohr inequality for `f` on `r·G` along the anchor and `samples`
/// seeded boundary directions.
pub fn verify_multidim_bohr(
    f: &SliceFunction,
    kind: &Codomain,
    r: f64,
    samples: usize,
    seed: u64,
) -> Result<MultidimReport> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::RadiusOutOfRange(r));
    }
    let mut directions = vec![f.functional.anchor.clone()];
    directions.extend(boundary_sample(&f.ball, samples, seed));
    let mut anchor_margin = f64::NAN;
    let (mut min_margin, mut argmin) = (f64::INFINITY, 0);
    for (k, y) in directions.iter().enumerate() {
        let y = if k == 0 {
            let norm = f.functional.anchor_norm;
            y.iter().map(|z| z / norm).collect()
        } else {
            y.clone()
        };
        let margin = slice_margin(&slice_series(f, &y)?, kind, r)?;
        if k == 0 {
            anchor_margin = margin;
        }
        if margin < min_margin {
            min_margin = margin;
            argmin = k;
        }
    }
    Ok(MultidimReport {
        family: f.family,
        n: f.ball.n,
        p: f.ball.p,
        c: f.c,
        r,
        seed,
        directions: directions.len(),
        anchor_margin,
        min_margin,
        argmin,
    })
}

/// The codomains of the four multidimensional theorems, with the punctured
/// disk read through its Euclidean gap so the witness is sharp.
pub fn theorem_codomains() -> [Codomain; 4] {
    [
        Codomain::HalfPlane,
        Codomain::PuncturedDisk {
            gap: PuncturedGap::Euclidean,
        },
        Codomain::Slit,
        Codomain::ExteriorDisk,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e1(n: usize) -> Vec<Complex64> {
        let mut v = vec![cx(0.0, 0.0); n];
        v[0] = cx(1.0, 0.0);
        v
    }

    #[test]
    fn exponent_parsing() {
        assert_eq!("inf".parse::<NormExponent>().unwrap(), NormExponent::Infinity);
        assert_eq!("1".parse::<NormExponent>().unwrap(), NormExponent::One);
        assert_eq!("2".parse::<NormExponent>().unwrap(), NormExponent::Finite(2.0));
        assert!("0.5".parse::<NormExponent>().is_err());
        assert_eq!(NormExponent::Finite(2.0).conjugate(), NormExponent::Finite(2.0));
    }

    #[test]
    fn samples_are_unit_vectors() {
        for p in [NormExponent::One, NormExponent::Finite(2.0), NormExponent::Infinity] {
            let ball = BalancedBall::new(5, p).unwrap();
            for v in boundary_sample(&ball, 20, 3) {
                assert_abs_diff_eq!(p.norm(&v), 1.0, epsilon = 1e-12);
            }
        }
        let ball = BalancedBall::new(1, NormExponent::Finite(3.0)).unwrap();
        for v in boundary_sample(&ball, 5, 1) {
            assert_abs_diff_eq!(v[0].norm(), 1.0, epsilon = 1e-15);
        }
        assert_eq!(boundary_sample(&ball, 4, 9), boundary_sample(&ball, 4, 9));
    }

    #[test]
    fn functional_examples() {
        let ball = BalancedBall::new(3, NormExponent::Finite(2.0)).unwrap();
        let psi = support_functional(&ball, &e1(3)).unwrap();
        assert_eq!(psi.coeffs, e1(3));

        let ball = BalancedBall::new(2, NormExponent::One).unwrap();
        let v = [cx(0.5, 0.0), cx(0.0, 0.5)];
        let psi = support_functional(&ball, &v).unwrap();
        assert_abs_diff_eq!((psi.coeffs[0] - cx(1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((psi.coeffs[1] - cx(0.0, -1.0)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(psi.apply(&v).unwrap().re, 1.0, epsilon = 1e-15);
        assert_eq!(psi.dual_norm(), 1.0);

        let ball = BalancedBall::new(3, NormExponent::Infinity).unwrap();
        let v = [cx(0.5, 0.0), cx(0.0, 1.0), cx(-1.0, 0.0)];
        let psi = support_functional(&ball, &v).unwrap();
        assert_eq!(psi.coeffs, vec![cx(0.0, 0.0), cx(0.0, -1.0), cx(0.0, 0.0)]);

        assert_eq!(
            support_functional(&ball, &[cx(0.0, 0.0); 3]).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn functional_invariants() {
        for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
            let ball = BalancedBall::new(8, NormExponent::new(p).unwrap()).unwrap();
            for v in boundary_sample(&ball, 10, 11) {
                let v: Vec<_> = v.iter().map(|z| z * 0.7).collect();
                let psi = support_functional(&ball, &v).unwrap();
                let at_v = psi.apply(&v).unwrap();
                assert_abs_diff_eq!(at_v.re, psi.anchor_norm, epsilon = 1e-12);
                assert_abs_diff_eq!(at_v.im, 0.0, epsilon = 1e-12);
                assert_abs_diff_eq!(psi.dual_norm(), 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn witness_values_at_anchor() {
        let ball = BalancedBall::new(4, NormExponent::Finite(2.0)).unwrap();
        let v = boundary_sample(&ball, 1, 5).remove(0);
        let (c, r0) = (0.9, 0.4);
        let x: Vec<_> = v.iter().map(|z| z * r0).collect();
        let params = WitnessParams { t: 0.5, a0: 2.0 };
        let q = (1.0 + c * r0) / (1.0 - c * r0);

        let f = build_witness(&Codomain::HalfPlane, &ball, &v, c, &params).unwrap();
        assert_abs_diff_eq!((f.eval(&x).unwrap() - q).norm(), 0.0, epsilon = 1e-13);
        let f = build_witness(&Codomain::Slit, &ball, &v, c, &params).unwrap();
        assert_abs_diff_eq!((f.eval(&x).unwrap() - q * q).norm(), 0.0, epsilon = 1e-12);
        let f = build_witness(&Codomain::ExteriorDisk, &ball, &v, c, &params).unwrap();
        assert_abs_diff_eq!((f.eval(&x).unwrap() - 2f64.powf(q)).norm(), 0.0, epsilon = 1e-12);
        let f = build_witness(&Codomain::punctured(), &ball, &v, c, &params).unwrap();
        assert_abs_diff_eq!((f.eval(&x).unwrap() - (-0.5 * q).exp()).norm(), 0.0, epsilon = 1e-14);

        let convex = Codomain::convex_via(cx(-1.0, 0.0), 0.3).unwrap();
        let f = build_witness(&convex, &ball, &v, c, &params).unwrap();
        let expected = cx(-1.0, 0.0) + Complex64::from_polar(q, -0.3);
        assert_abs_diff_eq!((f.eval(&x).unwrap() - expected).norm(), 0.0, epsilon = 1e-13);

        assert!(build_witness(&Codomain::HalfPlane, &ball, &v, 1.0, &params).is_err());
    }

    #[test]
    fn slices() {
        let ball = BalancedBall::new(2, NormExponent::Finite(2.0)).unwrap();
        let v = e1(2);
        let f = build_witness(&Codomain::HalfPlane, &ball, &v, 0.5, &WitnessParams::default()).unwrap();
        let along = slice_series(&f, &v).unwrap();
        assert_abs_diff_eq!(along.coeffs()[3].re, 2.0 * 0.125, epsilon = 1e-15);
        let across = slice_series(&f, &[cx(0.0, 0.0), cx(0.0, 1.0)]).unwrap();
        assert!(across.coeffs()[1..].iter().all(|a| a.norm() == 0.0));
        assert_eq!(slice_series(&f, &[cx(0.0, 0.0); 2]).unwrap_err(), Error::ZeroVector);
        assert!(matches!(
            slice_series(&f, &[cx(1.0, 0.0), cx(1.0, 0.0)]),
            Err(Error::OutsideBall(_))
        ));
        assert!(matches!(
            slice_series(&f, &v[..1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn multidim_half_plane() {
        let ball = BalancedBall::new(3, NormExponent::Finite(2.0)).unwrap();
        let v = boundary_sample(&ball, 1, 2).remove(0);
        let f = build_witness(&Codomain::HalfPlane, &ball, &v, 0.9, &WitnessParams::default()).unwrap();
        let at_third = verify_multidim_bohr(&f, &Codomain::HalfPlane, 1.0 / 3.0, 50, 4).unwrap();
        assert!(at_third.holds(0.0));
        assert_eq!(at_third.argmin, 0);
        let beyond = verify_multidim_bohr(&f, &Codomain::HalfPlane, 0.4, 50, 4).unwrap();
        assert_abs_diff_eq!(beyond.anchor_margin, -0.125, epsilon = 1e-12);
        let origin = verify_multidim_bohr(&f, &Codomain::HalfPlane, 0.0, 5, 4).unwrap();
        assert_eq!(origin.min_margin, 1.0);
    }
}
