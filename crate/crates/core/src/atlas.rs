//! Closed-form generators for the extremal functions and codomain maps.
//!
//! * `L(z) = (1+z)/(1−z)`, the extremal Carathéodory function;
//! * `U(z) = a0·L(z)²`, the Koebe-type square onto the slit plane;
//! * `H_t(z) = exp(−t·L(z))`, a singular inner function omitting zero;
//! * `W(z) = a0·exp(log(a0²)·z/(1−z))`, mapping onto `|w| > 1`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{TailBound, TruncatedSeries};

/// Cauchy radii tried when bounding the coefficients of `W`.
const EXTERIOR_TAIL_RADII: [f64; 6] = [0.95, 0.9, 0.8, 0.7, 0.6, 0.5];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ExtremalFamily {
    MoebiusL,
    KoebeSquareU,
    SingularInnerH { t: f64 },
    ExteriorW { a0: f64 },
}

impl ExtremalFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ExtremalFamily::SingularInnerH { t } if !(t.is_finite() && t > 0.0) => {
                Err(Error::InvalidParameter(format!("H_t needs t > 0, got {t}")))
            }
            ExtremalFamily::ExteriorW { a0 } if !(a0.is_finite() && a0 > 1.0) => {
                Err(Error::InvalidParameter(format!("W needs a0 > 1, got {a0}")))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ExtremalFamily::MoebiusL => "moebius_l",
            ExtremalFamily::KoebeSquareU => "koebe_square_u",
            ExtremalFamily::SingularInnerH { .. } => "singular_inner_h",
            ExtremalFamily::ExteriorW { .. } => "exterior_w",
        }
    }

    /// Taylor series at the origin to the given order.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        self.validate()?;
        match *self {
            ExtremalFamily::MoebiusL => Ok(moebius_l_series(order)),
            ExtremalFamily::KoebeSquareU => koebe_square_series(order, 1.0),
            ExtremalFamily::SingularInnerH { t } => h_t_series(t, order),
            ExtremalFamily::ExteriorW { a0 } => exterior_w_series(a0, order),
        }
    }

    /// Closed-form value at `z` in the open unit disk.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let l = (one + z) / (one - z);
        match *self {
            ExtremalFamily::MoebiusL => l,
            ExtremalFamily::KoebeSquareU => l * l,
            ExtremalFamily::SingularInnerH { t } => (-l * t).exp(),
            ExtremalFamily::ExteriorW { a0 } => {
                let s = (a0 * a0).ln();
                (z / (one - z) * s).exp() * a0
            }
        }
    }
}

/// `L(z) = 1 + 2Σ z^n`, tail `(2, 1)`.
pub fn moebius_l_series(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Complex64::new(2.0, 0.0); order + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    TruncatedSeries::new(coeffs, Some(TailBound { c: 2.0, rho: 1.0 })).expect("constant coefficients are finite")
}

/// `a0·((1+z)/(1−z))² = a0 + 4a0 Σ n z^n`.
///
/// The tail uses `n·τ^{-n} ≤ 1/(e·ln τ)` with `τ = 1 + 1/(order+1)`.
pub fn koebe_square_series(order: usize, a0: f64) -> Result<TruncatedSeries> {
    if !(a0.is_finite() && a0 > 0.0) {
        return Err(Error::InvalidParameter(format!("a0 must be positive, got {a0}")));
    }
    let coeffs = (0..=order)
        .map(|n| Complex64::new(if n == 0 { a0 } else { 4.0 * a0 * n as f64 }, 0.0))
        .collect();
    let tau = 1.0 + 1.0 / (order as f64 + 1.0);
    let c = 4.0 * a0 / (std::f64::consts::E * tau.ln());
    TruncatedSeries::new(coeffs, Some(TailBound::new(c, tau)?))
}

/// `H_t(z) = exp(−t(1+z)/(1−z))` from the explicit coefficient formula
///
/// `a_n = e^{−t} Σ_{m=1}^{n} (−2t)^m/m! · C(n−1, m−1)`.
///
/// The alternating sum cancels catastrophically in floating point (terms
/// reach `1e34` for `t = 5`, `n = 200` while `|a_n| ≤ 1`), so each inner sum
/// is evaluated exactly in rational arithmetic, with `t` taken as the dyadic
/// rational its `f64` encodes, and rounded once. `|H_t| < 1` on the disk gives
/// the tail `(1, 1)`.
pub fn h_t_series(t: f64, order: usize) -> Result<TruncatedSeries> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidParameter(format!("H_t needs t > 0, got {t}")));
    }
    let scale = (-t).exp();
    let (p, q) = dyadic(-2.0 * t);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(scale, 0.0));
    for n in 1..=order {
        coeffs.push(Complex64::new(scale * binomial_sum(n, &p, &q), 0.0));
    }
    TruncatedSeries::new(coeffs, Some(TailBound { c: 1.0, rho: 1.0 }))
}

/// Writes a finite `x` as `p/q` with `q` a power of two.
fn dyadic(x: f64) -> (BigInt, BigInt) {
    if x == 0.0 {
        return (BigInt::zero(), BigInt::one());
    }
    let bits = x.to_bits();
    let negative = bits >> 63 == 1;
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let fraction = bits & ((1u64 << 52) - 1);
    let (mantissa, exponent) = if biased == 0 {
        (fraction, -1074)
    } else {
        (fraction | (1u64 << 52), biased - 1075)
    };
    let mut p = BigInt::from(mantissa);
    let mut q = BigInt::one();
    if exponent >= 0 {
        p <<= exponent as usize;
    } else {
        q <<= (-exponent) as usize;
    }
    if negative {
        p = -p;
    }
    (p, q)
}

/// `Σ_{m=1}^{n} x^m/m! · C(n−1, m−1)` for `x = p/q`, exact until the final rounding.
///
/// Scaled by `n!·q^n` every term is the integer
/// `T_m = p^m q^{n−m} C(n−1, m−1) n!/m!`, and
/// `T_{m+1} = T_m · p (n−m) / (q m (m+1))` divides exactly.
fn binomial_sum(n: usize, p: &BigInt, q: &BigInt) -> f64 {
    let mut factorial = BigInt::one();
    for k in 2..=n {
        factorial *= k;
    }
    let mut q_power = BigInt::one();
    for _ in 0..n - 1 {
        q_power *= q;
    }
    let mut term = p * &q_power * &factorial;
    let mut total = term.clone();
    for m in 1..n {
        term = term * p * (n - m);
        term /= q;
        term /= m * (m + 1);
        total += &term;
    }
    let denominator = factorial * q_power * q;
    let ratio = Ratio::new_raw(total.abs(), denominator);
    let magnitude = ratio.to_f64().unwrap_or(f64::INFINITY);
    if total.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

/// `W(z) = a0·exp(s·z/(1−z))` with `s = log(a0²)`, via `exp` and a product.
///
/// Coefficients are nonnegative, so `a_m ≤ W(ρ)/ρ^m = a0^{(1+ρ)/(1−ρ)}/ρ^m`;
/// the radius `ρ` giving the smallest tail at `r = 1/3` is kept.
pub fn exterior_w_series(a0: f64, order: usize) -> Result<TruncatedSeries> {
    if !(a0.is_finite() && a0 > 1.0) {
        return Err(Error::InvalidParameter(format!("W needs a0 > 1, got {a0}")));
    }
    let s = (a0 * a0).ln();
    let mut inner = vec![Complex64::new(s, 0.0); order + 1];
    inner[0] = Complex64::new(0.0, 0.0);
    let exponent = TruncatedSeries::new(inner, Some(TailBound { c: s, rho: 1.0 }))?;
    let w = &TruncatedSeries::constant(Complex64::new(a0, 0.0)) * &exponent.exp()?;

    let tail = EXTERIOR_TAIL_RADII
        .iter()
        .filter_map(|&rho| {
            let c = a0.powf((1.0 + rho) / (1.0 - rho));
            let q = 1.0 / (3.0 * rho);
            let score = c.ln() + (order as f64 + 1.0) * q.ln() - (1.0 - q).ln();
            c.is_finite().then_some((score, TailBound { c, rho: 1.0 / rho }))
        })
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, t)| t);
    Ok(w.with_tail(tail))
}

/// Closed form of `W` through the disk automorphism: `exp((1+φ)/(1−φ))` with
/// `φ(z) = (z+b)/(1+b̄z)` and `b = (log a0 − 1)/(log a0 + 1)`.
pub fn exterior_w_via_automorphism(a0: f64, z: Complex64) -> Complex64 {
    let la = a0.ln();
    let b = Complex64::new((la - 1.0) / (la + 1.0), 0.0);
    let one = Complex64::new(1.0, 0.0);
    let phi = (z + b) / (one + b.conj() * z);
    ((one + phi) / (one - phi)).exp()
}

/// Taylor series of the disk automorphism `(z+b)/(1+b̄z)`:
/// `a_0 = b`, `a_n = (1−|b|²)(−b̄)^{n−1}`.
pub fn disk_automorphism(b: Complex64, order: usize) -> Result<TruncatedSeries> {
    let modulus = b.norm();
    if !(modulus < 1.0) {
        return Err(Error::ParameterOutOfDisk(format!("b = {b}")));
    }
    let factor = 1.0 - modulus * modulus;
    let ratio = -b.conj();
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(b);
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 1..=order {
        coeffs.push(power * factor);
        power *= ratio;
    }
    let tail = if modulus == 0.0 {
        TailBound::ZERO
    } else {
        TailBound::new(factor / modulus, modulus)?
    };
    TruncatedSeries::new(coeffs, Some(tail))
}

/// `g(z) = (f(z) − u)·e^{it}`: translate the nearest boundary point `u` to
/// the origin and rotate the supporting half-plane onto `Re w > 0`.
pub fn convex_to_halfplane(f: &TruncatedSeries, u: Complex64, t: f64) -> TruncatedSeries {
    let rotation = Complex64::from_polar(1.0, t);
    f.shift_constant(-u).scale(rotation)
}
