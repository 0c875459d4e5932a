//! Truncated complex power series with certified geometric tail bounds.
//!
//! A [`TruncatedSeries`] stores `a_0..=a_N` exactly (up to floating point)
//! and optionally a [`TailBound`] `(C, ρ)` asserting `|a_m| ≤ C·ρ^m` for every
//! `m > N`. Every operation either propagates a valid tail bound or drops it,
//! in which case majorant sums are reported as uncertified.
//!
//! Tail ratios are not restricted to `ρ < 1`: the Carathéodory family needs
//! `ρ = 1` and coefficients growing like `4n` need `ρ` slightly above one.
//! The geometric tail sum only exists when `ρ·r < 1`, which is checked where
//! the bound is used.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 200;

/// Largest constant term accepted for the inner function of a composition.
pub const INNER_CONSTANT_TOL: f64 = 1e-14;

/// Certificate `|a_m| ≤ c·rho^m` for all `m` beyond the stored order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound {
    pub c: f64,
    pub rho: f64,
}

impl TailBound {
    /// The tail of an exactly known polynomial.
    pub const ZERO: TailBound = TailBound { c: 0.0, rho: 0.0 };

    pub fn new(c: f64, rho: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0 && rho.is_finite() && rho >= 0.0) {
            return Err(Error::InvalidTail { c, rho });
        }
        Ok(TailBound { c, rho })
    }

    /// True when the bound forces every coefficient past the order to vanish.
    pub fn is_exact(&self) -> bool {
        self.c == 0.0 || self.rho == 0.0
    }

    /// Upper bound for `Σ_{m>order} |a_m| r^m`, or `None` when `ρ·r ≥ 1`.
    pub fn bound_at(&self, order: usize, r: f64) -> Option<f64> {
        if self.is_exact() {
            return Some(0.0);
        }
        let q = self.rho * r;
        if q >= 1.0 {
            return None;
        }
        let exponent = (order + 1) as f64;
        Some(self.c * q.powf(exponent) / (1.0 - q))
    }
}

/// Result of a Bohr majorant evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MajorantSum {
    /// `Σ |a_m| r^m` over the stored coefficients.
    pub value: f64,
    /// Bound on the omitted tail; `None` when the tail is not certified at `r`.
    pub tail_bound: Option<f64>,
}

impl MajorantSum {
    /// Certified upper bound of the full majorant, if any.
    pub fn upper(&self) -> Option<f64> {
        self.tail_bound.map(|t| self.value + t)
    }

    pub fn is_certified(&self) -> bool {
        self.tail_bound.is_some()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
    tail: Option<TailBound>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Complex64>, tail: Option<TailBound>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("a series needs at least a_0".into()));
        }
        if let Some(index) = coeffs.iter().position(|a| !(a.re.is_finite() && a.im.is_finite())) {
            return Err(Error::NonFiniteCoefficient { index });
        }
        if let Some(t) = tail {
            TailBound::new(t.c, t.rho)?;
        }
        Ok(TruncatedSeries { coeffs, tail })
    }

    /// Real coefficients with an optional tail.
    pub fn from_real(coeffs: &[f64], tail: Option<TailBound>) -> Result<Self> {
        Self::new(coeffs.iter().map(|&a| Complex64::new(a, 0.0)).collect(), tail)
    }

    /// An exactly known polynomial (zero tail).
    pub fn polynomial(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::new(coeffs, Some(TailBound::ZERO))
    }

    pub fn constant(a0: Complex64) -> Self {
        TruncatedSeries {
            coeffs: vec![a0],
            tail: Some(TailBound::ZERO),
        }
    }

    /// The identity map `z`.
    pub fn identity() -> Self {
        TruncatedSeries {
            coeffs: vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            tail: Some(TailBound::ZERO),
        }
    }

    /// Highest stored index `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `a_n`; zero past the order of an exact polynomial.
    pub fn coeff(&self, n: usize) -> Option<Complex64> {
        match self.coeffs.get(n) {
            Some(&a) => Some(a),
            None if self.is_exact() => Some(Complex64::new(0.0, 0.0)),
            None => None,
        }
    }

    pub fn tail(&self) -> Option<TailBound> {
        self.tail
    }

    /// True when the stored coefficients are the whole series.
    pub fn is_exact(&self) -> bool {
        self.tail.is_some_and(|t| t.is_exact())
    }

    pub fn with_tail(mut self, tail: Option<TailBound>) -> Self {
        self.tail = tail;
        self
    }

    /// Truncates to `order`, folding the dropped coefficients into the tail.
    /// Exact polynomials are zero-padded when `order` exceeds their degree.
    pub fn truncated(&self, order: usize) -> Self {
        let n = self.order();
        if order >= n {
            if self.is_exact() {
                let mut coeffs = self.coeffs.clone();
                coeffs.resize(order + 1, Complex64::new(0.0, 0.0));
                return TruncatedSeries {
                    coeffs,
                    tail: Some(TailBound::ZERO),
                };
            }
            return self.clone();
        }
        let dropped = &self.coeffs[order + 1..];
        let tail = self.tail.and_then(|t| {
            let tau = if t.is_exact() { 1.0 } else { t.rho };
            let c = if t.is_exact() { 0.0 } else { t.c };
            let c = c.max(envelope(dropped, order + 1, tau));
            if dropped.iter().all(|a| a.norm() == 0.0) && t.is_exact() {
                return Some(TailBound::ZERO);
            }
            TailBound::new(c, tau).ok()
        });
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            tail,
        }
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: Complex64) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|&a| a * k).collect(),
            tail: self.tail.map(|t| TailBound {
                c: t.c * k.norm(),
                rho: t.rho,
            }),
        }
    }

    /// The series of `z ↦ f(λz)`.
    pub fn scale_argument(&self, lambda: Complex64) -> Self {
        let mut power = Complex64::new(1.0, 0.0);
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let term = a * power;
                power *= lambda;
                term
            })
            .collect();
        TruncatedSeries {
            coeffs,
            tail: self.tail.map(|t| TailBound {
                c: t.c,
                rho: t.rho * lambda.norm(),
            }),
        }
    }

    /// Adds `delta` to the constant term.
    pub fn shift_constant(&self, delta: Complex64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += delta;
        out
    }

    /// Horner evaluation of the stored polynomial part.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// Bound on `|f(z) − eval(z)|` for `|z| = r`, if the tail is certified there.
    pub fn eval_error_bound(&self, r: f64) -> Option<f64> {
        self.tail.and_then(|t| t.bound_at(self.order(), r))
    }

    /// Bohr majorant `Σ |a_m| r^m`, starting at `m = 0` or `m = 1`.
    pub fn majorant_sum(&self, r: f64, include_constant: bool) -> Result<MajorantSum> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::RadiusOutOfRange(r));
        }
        let start = usize::from(!include_constant);
        let mut value = 0.0;
        let mut power = 1.0;
        for (m, a) in self.coeffs.iter().enumerate() {
            if m >= start {
                value += a.norm() * power;
            }
            power *= r;
        }
        Ok(MajorantSum {
            value,
            tail_bound: self.eval_error_bound(r),
        })
    }

    /// Upper bound on the majorant series at `s`, counting the tail; `start`
    /// skips the leading coefficients.
    fn majorant_upper(&self, s: f64, start: usize) -> Option<f64> {
        let tail = self.tail?.bound_at(self.order(), s)?;
        let mut value = 0.0;
        let mut power = 1.0;
        for (m, a) in self.coeffs.iter().enumerate() {
            if m >= start {
                value += a.norm() * power;
            }
            power *= s;
        }
        Some(value + tail)
    }

    /// Composition `self ∘ inner`; requires `inner(0) = 0`.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
        let b0 = inner.coeffs[0].norm();
        if b0 > INNER_CONSTANT_TOL {
            return Err(Error::NonzeroInnerConstant(b0));
        }
        let (outer, inner) = align(self, inner);
        let n = outer.order();

        // z ↦ b·z composes coefficient-wise.
        if n >= 1 && inner.is_exact() && inner.coeffs[2..].iter().all(|a| a.norm() == 0.0) {
            return Ok(outer.scale_argument(inner.coeffs[1]));
        }

        let mut inner_coeffs = inner.coeffs.clone();
        inner_coeffs[0] = Complex64::new(0.0, 0.0);
        let mut acc = vec![Complex64::new(0.0, 0.0); n + 1];
        acc[0] = outer.coeffs[n];
        for k in (0..n).rev() {
            acc = truncated_product(&acc, &inner_coeffs, n);
            acc[0] += outer.coeffs[k];
        }
        check_finite(&acc)?;

        let tail = match (outer.tail, inner.tail) {
            (Some(_), Some(_)) => cauchy_tail(n, |s| {
                let w = inner.majorant_upper(s, 1)?;
                outer.majorant_upper(w, 0)
            }),
            _ => None,
        };
        Ok(TruncatedSeries { coeffs: acc, tail })
    }

    /// `exp(f)` via `n·e_n = Σ_{k=1}^{n} k·f_k·e_{n−k}`.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        let n = self.order();
        let f = &self.coeffs;
        let mut e = Vec::with_capacity(n + 1);
        e.push(f[0].exp());
        for m in 1..=n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 1..=m {
                acc += f[k] * e[m - k] * k as f64;
            }
            e.push(acc / m as f64);
        }
        check_finite(&e)?;
        let scale = e[0].norm();
        let tail = self.tail.and_then(|_| {
            cauchy_tail(n, |s| {
                let g = self.majorant_upper(s, 1)?;
                let v = scale * g.exp();
                v.is_finite().then_some(v)
            })
        });
        Ok(TruncatedSeries { coeffs: e, tail })
    }
}

/// Brings two operands to a common order; exact polynomials are zero-padded.
fn align(f: &TruncatedSeries, g: &TruncatedSeries) -> (TruncatedSeries, TruncatedSeries) {
    let order = match (f.is_exact(), g.is_exact()) {
        (true, true) => f.order().max(g.order()),
        (true, false) => g.order(),
        (false, true) => f.order(),
        (false, false) => f.order().min(g.order()),
    };
    (f.truncated(order), g.truncated(order))
}

fn check_finite(coeffs: &[Complex64]) -> Result<()> {
    match coeffs.iter().position(|a| !(a.re.is_finite() && a.im.is_finite())) {
        Some(index) => Err(Error::NonFiniteCoefficient { index }),
        None => Ok(()),
    }
}

/// Cauchy product truncated at degree `n`.
fn truncated_product(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
    for (i, &ai) in a.iter().enumerate().take(n + 1) {
        if ai.re == 0.0 && ai.im == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `max_{k} |a_k| τ^{-(start+k)}` evaluated in log space.
fn envelope(coeffs: &[Complex64], start: usize, tau: f64) -> f64 {
    let ln_tau = tau.ln();
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 0.0)
        .map(|(k, a)| (a.norm().ln() - (start + k) as f64 * ln_tau).exp())
        .fold(0.0, f64::max)
}

/// `Σ_k |a_k| τ^{-k}` evaluated termwise in log space.
fn weighted_abs_sum(coeffs: &[Complex64], tau: f64) -> f64 {
    let ln_tau = tau.ln();
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 0.0)
        .map(|(k, a)| (a.norm().ln() - k as f64 * ln_tau).exp())
        .sum()
}

const CAUCHY_RADII: [f64; 12] = [0.99, 0.95, 0.9, 0.85, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1];

/// Picks a Cauchy radius `s` for a positive-coefficient majorant `G` and
/// returns the tail `(G(s), 1/s)`. Radii above 0.4 are ranked by the tail
/// they certify at `r = 1/3`; otherwise the largest admissible one wins.
fn cauchy_tail(order: usize, majorant: impl Fn(f64) -> Option<f64>) -> Option<TailBound> {
    let r_ref = 1.0 / 3.0;
    let exponent = (order + 1) as f64;
    let mut best: Option<(f64, f64, f64)> = None;
    for &s in CAUCHY_RADII.iter().filter(|&&s| s > 0.4) {
        let Some(c) = majorant(s).filter(|c| c.is_finite()) else {
            continue;
        };
        let q = r_ref / s;
        let score = c.max(f64::MIN_POSITIVE).ln() + exponent * q.ln() - (1.0 - q).ln();
        if best.is_none_or(|(b, _, _)| score < b) {
            best = Some((score, s, c));
        }
    }
    if let Some((_, s, c)) = best {
        return TailBound::new(c, 1.0 / s).ok();
    }
    CAUCHY_RADII
        .iter()
        .filter(|&&s| s <= 0.4)
        .find_map(|&s| majorant(s).filter(|c| c.is_finite()).map(|c| (s, c)))
        .and_then(|(s, c)| TailBound::new(c, 1.0 / s).ok())
}

/// Tail of `f + g` after both are aligned to a common order.
fn sum_tail(f: &TruncatedSeries, g: &TruncatedSeries) -> Option<TailBound> {
    let (tf, tg) = (f.tail?, g.tail?);
    if tf.is_exact() && tg.is_exact() {
        return Some(TailBound::ZERO);
    }
    let c = if tf.is_exact() { 0.0 } else { tf.c } + if tg.is_exact() { 0.0 } else { tg.c };
    TailBound::new(c, tf.rho.max(tg.rho)).ok()
}

/// Tail of `f·g` for operands of common order `n`. With `ρ = max(ρ_f, ρ_g)`
/// and `τ = ρ(1 + 1/(n+1))`, coefficient `n' > n` of the product splits into
/// stored×stored terms (bounded directly), stored×tail terms (bounded by
/// `C_g Σ|a_k|τ^{-k}` and symmetrically) and tail×tail terms (at most
/// `C_f C_g n'ρ^{n'} ≤ C_f C_g τ^{n'}/(e·ln(τ/ρ))`).
fn product_tail(f: &TruncatedSeries, g: &TruncatedSeries, n: usize) -> Option<TailBound> {
    let (tf, tg) = (f.tail?, g.tail?);
    let (cf, rf) = if tf.is_exact() { (0.0, 0.0) } else { (tf.c, tf.rho) };
    let (cg, rg) = if tg.is_exact() { (0.0, 0.0) } else { (tg.c, tg.rho) };
    let rho = rf.max(rg);

    // stored × stored coefficients beyond n
    let mut high = vec![Complex64::new(0.0, 0.0); n];
    for (i, &a) in f.coeffs.iter().enumerate() {
        for (j, &b) in g.coeffs.iter().enumerate() {
            if i + j > n {
                high[i + j - n - 1] += a * b;
            }
        }
    }
    if rho == 0.0 {
        if high.iter().all(|c| c.norm() == 0.0) {
            return Some(TailBound::ZERO);
        }
        return TailBound::new(envelope(&high, n + 1, 1.0), 1.0).ok();
    }
    let tau = rho * (1.0 + 1.0 / (n as f64 + 1.0));
    let stored = envelope(&high, n + 1, tau);
    let cross = cg * weighted_abs_sum(&f.coeffs, tau) + cf * weighted_abs_sum(&g.coeffs, tau);
    let tail_tail = if cf > 0.0 && cg > 0.0 {
        cf * cg / (std::f64::consts::E * (tau / rho).ln())
    } else {
        0.0
    };
    TailBound::new(stored + cross + tail_tail, tau).ok()
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (f, g) = align(self, rhs);
        let coeffs = f.coeffs.iter().zip(&g.coeffs).map(|(a, b)| a + b).collect();
        TruncatedSeries {
            coeffs,
            tail: sum_tail(&f, &g),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
            tail: self.tail,
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product. Two exact polynomials multiply exactly to full degree;
    /// otherwise the result keeps the common order.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        if self.is_exact() && rhs.is_exact() {
            let n = self.order() + rhs.order();
            let coeffs = truncated_product(&self.coeffs, &rhs.coeffs, n);
            return TruncatedSeries {
                coeffs,
                tail: Some(TailBound::ZERO),
            };
        }
        let (f, g) = align(self, rhs);
        let n = f.order();
        let coeffs = truncated_product(&f.coeffs, &g.coeffs, n);
        let tail = product_tail(&f, &g, n);
        TruncatedSeries { coeffs, tail }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn geometric(order: usize, first: f64, rest: f64) -> TruncatedSeries {
        let mut coeffs = vec![c(first)];
        coeffs.extend(std::iter::repeat_n(c(rest), order));
        TruncatedSeries::new(
            coeffs,
            Some(TailBound {
                c: rest.abs(),
                rho: 1.0,
            }),
        )
        .unwrap()
    }

    #[test]
    fn additive_identity_and_inverse() {
        let f = TruncatedSeries::polynomial(vec![c(1.0), c(2.0)]).unwrap();
        let zero = TruncatedSeries::constant(c(0.0));
        assert_eq!((&f + &zero).coeffs(), f.coeffs());

        let l = geometric(20, 1.0, 2.0);
        let diff = &l + &(-&l);
        assert!(diff.coeffs().iter().all(|a| a.norm() == 0.0));
        assert_eq!(diff.order(), 20);
    }

    #[test]
    fn cancellation() {
        let p = TruncatedSeries::polynomial(vec![c(1.0), c(1.0)]).unwrap();
        let q = TruncatedSeries::polynomial(vec![c(1.0), c(-1.0)]).unwrap();
        let s = &p + &q;
        assert_eq!(s.coeffs(), &[c(2.0), c(0.0)]);
        let prod = &p * &q;
        assert_eq!(prod.coeffs(), &[c(1.0), c(0.0), c(-1.0)]);
        assert!(prod.is_exact());
    }

    #[test]
    fn square_of_moebius_has_linear_coefficients() {
        let l = geometric(30, 1.0, 2.0);
        let u = &l * &l;
        assert_eq!(u.order(), 30);
        assert_eq!(u.coeffs()[0], c(1.0));
        for n in 1..=30 {
            assert_abs_diff_eq!(u.coeffs()[n].re, 4.0 * n as f64, epsilon = 1e-12);
        }
        // 4m ≤ C τ^m must hold past the order
        let t = u.tail().unwrap();
        for m in 31..2000 {
            assert!(4.0 * m as f64 <= t.c * t.rho.powi(m) * (1.0 + 1e-12));
        }
    }

    #[test]
    fn multiplicative_identity() {
        let l = geometric(10, 1.0, 2.0);
        let one = TruncatedSeries::constant(c(1.0));
        assert_eq!((&l * &one).coeffs(), l.coeffs());
    }

    #[test]
    fn compose_with_scaling_and_identity() {
        let l = geometric(40, 1.0, 2.0);
        let inner = TruncatedSeries::polynomial(vec![c(0.0), c(0.9)]).unwrap();
        let lc = l.compose(&inner).unwrap();
        for m in 1..=40 {
            assert_abs_diff_eq!(lc.coeffs()[m].re, 2.0 * 0.9f64.powi(m as i32), epsilon = 1e-14);
        }
        let z = TruncatedSeries::identity();
        assert_eq!(l.compose(&z).unwrap().coeffs(), l.coeffs());
    }

    #[test]
    fn compose_rejects_inner_constant() {
        let l = geometric(5, 1.0, 2.0);
        let bad = TruncatedSeries::polynomial(vec![c(0.1), c(1.0)]).unwrap();
        assert!(matches!(l.compose(&bad), Err(Error::NonzeroInnerConstant(_))));
    }

    #[test]
    fn exp_of_zero_and_identity() {
        let e0 = TruncatedSeries::constant(c(0.0)).exp().unwrap();
        assert_eq!(e0.coeffs(), &[c(1.0)]);

        let z = TruncatedSeries::identity().truncated(20);
        let ez = z.exp().unwrap();
        let mut fact = 1.0;
        for n in 0..=20 {
            if n > 0 {
                fact *= n as f64;
            }
            assert_abs_diff_eq!(ez.coeffs()[n].re, 1.0 / fact, epsilon = 1e-15);
        }
    }

    #[test]
    fn majorant_of_moebius_at_one_third() {
        let l = geometric(DEFAULT_ORDER, 1.0, 2.0);
        let m = l.majorant_sum(1.0 / 3.0, false).unwrap();
        assert_abs_diff_eq!(m.value, 1.0, epsilon = 1e-15);
        let tail = m.tail_bound.unwrap();
        assert!(tail < 1e-90);
        let zero = TruncatedSeries::constant(c(0.0));
        assert_eq!(zero.majorant_sum(0.7, true).unwrap().value, 0.0);
    }

    #[test]
    fn majorant_of_koebe_square_at_slit_radius() {
        let l = geometric(DEFAULT_ORDER, 1.0, 2.0);
        let u = &l * &l;
        let r = 3.0 - 2.0 * 2f64.sqrt();
        let m = u.majorant_sum(r, false).unwrap();
        assert_abs_diff_eq!(m.value, 1.0, epsilon = 1e-14);
        assert!(m.tail_bound.unwrap() < 1e-100);
    }

    #[test]
    fn majorant_rejects_bad_radius() {
        let l = geometric(3, 1.0, 2.0);
        assert!(matches!(l.majorant_sum(-0.1, false), Err(Error::RadiusOutOfRange(_))));
        assert!(matches!(l.majorant_sum(1.0, false), Err(Error::RadiusOutOfRange(_))));
    }

    #[test]
    fn uncertified_when_tail_ratio_too_large() {
        let l = geometric(3, 1.0, 2.0);
        let u = &l * &l;
        // ρ slightly above 1 cannot certify arbitrarily close to r = 1.
        assert!(u.majorant_sum(0.999, false).unwrap().tail_bound.is_none());
        let bare = l.clone().with_tail(None);
        assert!(!bare.majorant_sum(0.1, false).unwrap().is_certified());
    }

    #[test]
    fn truncation_folds_coefficients_into_tail() {
        let f = TruncatedSeries::polynomial(vec![c(1.0), c(0.5), c(3.0), c(0.25)]).unwrap();
        let t = f.truncated(1);
        let tail = t.tail().unwrap();
        assert!(tail.c * tail.rho.powi(2) >= 3.0);
        assert!(tail.c * tail.rho.powi(3) >= 0.25);
        let padded = f.truncated(6);
        assert_eq!(padded.order(), 6);
        assert!(padded.is_exact());
    }

    #[test]
    fn rejects_non_finite() {
        let err = TruncatedSeries::new(vec![c(1.0), c(f64::NAN)], None).unwrap_err();
        assert_eq!(err, Error::NonFiniteCoefficient { index: 1 });
        assert!(TailBound::new(-1.0, 0.5).is_err());
    }
}
