//! Generators and checkers for the two coefficient-bound lemmas.
//!
//! Carathéodory functions are generated from discrete Herglotz measures,
//! whose coefficients `c_n = 2Σ w_j e^{−inθ_j}` come out in closed form, and
//! checked against `|c_n| ≤ 2`. Self-maps `w` of the disk with `w(0) = 0` are
//! generated from Schur parameters; composing a univalent `g` with them gives
//! subordinate functions to check against `|a_n| ≤ n|b_1|`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use serde::Serialize;

use crate::atlas::{koebe_square_series, moebius_l_series};
use crate::error::{Error, Result};
use crate::series::{TailBound, TruncatedSeries};

/// Slack for coefficient bounds on closed-form inputs.
pub const EXACT_SLACK: f64 = 1e-12;
/// Slack for coefficient bounds on composed or truncated inputs.
pub const COMPOSED_SLACK: f64 = 1e-10;

/// Most atoms drawn for a random Herglotz measure.
pub const MAX_ATOMS: usize = 16;
/// Most parameters drawn for a random Schur self-map.
pub const MAX_SCHUR_PARAMS: usize = 8;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Probability measure `Σ w_j δ_{θ_j}` on the circle.
#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzMeasure {
    atoms: Vec<(f64, f64)>,
}

impl HerglotzMeasure {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidParameter("measure needs at least one atom".into()));
        }
        if atoms
            .iter()
            .any(|&(theta, w)| !(theta.is_finite() && w.is_finite() && w > 0.0))
        {
            return Err(Error::InvalidParameter(
                "atoms need finite phases and positive weights".into(),
            ));
        }
        let total: f64 = atoms.iter().map(|a| a.1).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("weights sum to {total}, not 1")));
        }
        let atoms = atoms.into_iter().map(|(theta, w)| (theta.rem_euclid(TAU), w)).collect();
        Ok(HerglotzMeasure { atoms })
    }

    pub fn point_mass(theta: f64) -> Self {
        HerglotzMeasure {
            atoms: vec![(theta.rem_euclid(TAU), 1.0)],
        }
    }

    /// Up to [`MAX_ATOMS`] atoms, Dirichlet(1, …, 1) weights, uniform phases.
    pub fn random(rng: &mut impl Rng) -> Self {
        let k = rng.random_range(1..=MAX_ATOMS);
        let raw: Vec<f64> = (0..k).map(|_| Exp1.sample(rng)).collect();
        let total: f64 = raw.iter().sum();
        let atoms = raw
            .into_iter()
            .map(|g| (rng.random_range(0.0..TAU), g / total))
            .collect();
        HerglotzMeasure { atoms }
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    /// `p(z) = Σ_j w_j (1 + e^{−iθ_j} z)/(1 − e^{−iθ_j} z)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        self.atoms
            .iter()
            .map(|&(theta, w)| {
                let u = Complex64::from_polar(1.0, -theta) * z;
                (one + u) / (one - u) * w
            })
            .sum()
    }
}

/// Taylor series of the Carathéodory function of `mu`; tail `(2, 1)`.
pub fn caratheodory_from_measure(mu: &HerglotzMeasure, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(1.0, 0.0));
    for n in 1..=order {
        let c: Complex64 = mu
            .atoms
            .iter()
            .map(|&(theta, w)| Complex64::from_polar(2.0 * w, -(n as f64) * theta))
            .sum();
        coeffs.push(c);
    }
    TruncatedSeries::new(coeffs, Some(TailBound { c: 2.0, rho: 1.0 })).expect("Herglotz coefficients are finite")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientViolation {
    pub n: usize,
    pub abs: f64,
    pub bound: f64,
}

/// Indices `n ≥ 1` with `|c_n| > 2 + slack`.
pub fn caratheodory_bound_check_with_slack(p: &TruncatedSeries, slack: f64) -> Result<Vec<CoefficientViolation>> {
    let p0 = p.coeffs()[0];
    if (p0 - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return Err(Error::NotNormalized(format!("{p0}")));
    }
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| c.norm() > 2.0 + slack)
        .map(|(n, c)| CoefficientViolation {
            n,
            abs: c.norm(),
            bound: 2.0,
        })
        .collect())
}

pub fn caratheodory_bound_check(p: &TruncatedSeries) -> Result<Vec<CoefficientViolation>> {
    caratheodory_bound_check_with_slack(p, EXACT_SLACK)
}

/// Indices `n ≥ 1` with `|a_n| > n·b1_abs + 1e−10`.
pub fn debranges_check(f: &TruncatedSeries, b1_abs: f64) -> Vec<CoefficientViolation> {
    f.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(n, a)| a.norm() > n as f64 * b1_abs + COMPOSED_SLACK)
        .map(|(n, a)| CoefficientViolation {
            n,
            abs: a.norm(),
            bound: n as f64 * b1_abs,
        })
        .collect()
}

/// Schur parameters `γ_1, …, γ_K` with `|γ_k| ≤ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurParams {
    gammas: Vec<Complex64>,
}

impl SchurParams {
    pub fn new(gammas: Vec<Complex64>) -> Result<Self> {
        if let Some(g) = gammas.iter().find(|g| !(g.norm() <= 1.0 + 1e-15)) {
            return Err(Error::ParameterOutOfDisk(format!("Schur parameter {g}")));
        }
        Ok(SchurParams { gammas })
    }

    /// Up to [`MAX_SCHUR_PARAMS`] parameters, uniform in the disk; one in ten
    /// is pushed onto the circle, which ends the recursion there.
    pub fn random(rng: &mut impl Rng) -> Self {
        let k = rng.random_range(1..=MAX_SCHUR_PARAMS);
        let gammas = (0..k)
            .map(|_| {
                let theta = rng.random_range(0.0..TAU);
                let radius = if rng.random_bool(0.1) {
                    1.0
                } else {
                    rng.random::<f64>().sqrt()
                };
                Complex64::from_polar(radius, theta)
            })
            .collect();
        SchurParams { gammas }
    }

    pub fn gammas(&self) -> &[Complex64] {
        &self.gammas
    }
}

/// `w(z) = z·s_1(z)` with `s_k = (γ_k + z s_{k+1})/(1 + γ̄_k z s_{k+1})` and
/// `s_{K+1} = 0`; a unimodular `γ_k` makes `s_k ≡ γ_k`. Every `s_k` is a
/// Schur function, so `|w(z)| ≤ |z|` and the coefficients obey the tail `(1, 1)`.
pub fn schur_self_map(params: &SchurParams, order: usize) -> Result<TruncatedSeries> {
    let bounded = Some(TailBound { c: 1.0, rho: 1.0 });
    let z = TruncatedSeries::identity();
    let mut s = TruncatedSeries::constant(Complex64::new(0.0, 0.0)).truncated(order);
    for &gamma in params.gammas.iter().rev() {
        if gamma.norm() >= 1.0 {
            s = TruncatedSeries::constant(gamma / gamma.norm()).truncated(order);
            continue;
        }
        let shifted = (&z * &s).truncated(order);
        s = TruncatedSeries::new(automorphism_quotient(gamma, shifted.coeffs()), bounded)?;
    }
    Ok((&z * &s).truncated(order).with_tail(bounded))
}

/// Coefficients of `(γ + h)/(1 + γ̄h)` for `h(0) = 0`, from
/// `q_n = γδ_{n0} + h_n − γ̄ Σ_{j=1}^{n} h_j q_{n−j}`.
fn automorphism_quotient(gamma: Complex64, h: &[Complex64]) -> Vec<Complex64> {
    let mut q: Vec<Complex64> = Vec::with_capacity(h.len());
    for n in 0..h.len() {
        let conv: Complex64 = (1..=n).map(|j| h[j] * q[n - j]).sum();
        let lead = if n == 0 { gamma } else { h[n] };
        q.push(lead - gamma.conj() * conv);
    }
    q
}

/// `L∘w`, a Carathéodory function subordinate to `L`.
pub fn moebius_subordinate(w: &TruncatedSeries) -> Result<TruncatedSeries> {
    moebius_l_series(w.order()).compose(w)
}

/// `U∘w` with `U = L²`.
pub fn koebe_subordinate(w: &TruncatedSeries) -> Result<TruncatedSeries> {
    koebe_square_series(w.order(), 1.0)?.compose(w)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub seed: u64,
    pub samples: usize,
    pub order: usize,
    pub coefficients_checked: usize,
    pub violations: usize,
    /// Largest `|coefficient| / bound` seen.
    pub worst_ratio: f64,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// `|c_n| ≤ 2` across `samples` random Herglotz measures.
pub fn caratheodory_suite(samples: usize, order: usize, seed: u64) -> Result<SuiteOutcome> {
    let mut rng = seeded_rng(seed);
    let mut outcome = SuiteOutcome {
        seed,
        samples,
        order,
        coefficients_checked: 0,
        violations: 0,
        worst_ratio: 0.0,
    };
    for _ in 0..samples {
        let p = caratheodory_from_measure(&HerglotzMeasure::random(&mut rng), order);
        outcome.violations += caratheodory_bound_check(&p)?.len();
        outcome.coefficients_checked += order;
        for c in &p.coeffs()[1..] {
            outcome.worst_ratio = outcome.worst_ratio.max(c.norm() / 2.0);
        }
    }
    Ok(outcome)
}

/// Smallest `Re p(z)` over random measures and random points `|z| ≤ radius`.
pub fn herglotz_positivity(samples: usize, points: usize, radius: f64, seed: u64) -> f64 {
    let mut rng = seeded_rng(seed);
    let mut worst = f64::INFINITY;
    for _ in 0..samples {
        let mu = HerglotzMeasure::random(&mut rng);
        for _ in 0..points {
            let z = random_disk_point(&mut rng, radius);
            worst = worst.min(mu.eval(z).re);
        }
    }
    worst
}

/// `|a_m| ≤ 4m` across `samples` subordinates `U∘w`.
pub fn debranges_suite(samples: usize, order: usize, seed: u64) -> Result<SuiteOutcome> {
    let mut rng = seeded_rng(seed);
    let mut outcome = SuiteOutcome {
        seed,
        samples,
        order,
        coefficients_checked: 0,
        violations: 0,
        worst_ratio: 0.0,
    };
    for _ in 0..samples {
        let w = schur_self_map(&SchurParams::random(&mut rng), order)?;
        let f = koebe_subordinate(&w)?;
        outcome.violations += debranges_check(&f, 4.0).len();
        outcome.coefficients_checked += order;
        for (n, a) in f.coeffs().iter().enumerate().skip(1) {
            outcome.worst_ratio = outcome.worst_ratio.max(a.norm() / (4.0 * n as f64));
        }
    }
    Ok(outcome)
}

pub fn random_disk_point(rng: &mut impl Rng, radius: f64) -> Complex64 {
    let r = radius * rng.random::<f64>().sqrt();
    Complex64::from_polar(r, rng.random_range(0.0..TAU))
}
