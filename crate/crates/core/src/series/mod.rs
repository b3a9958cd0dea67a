//! Series evaluation with certified truncation.
//!
//! Every evaluator returns a [`SeriesValue`] whose `tail_bound` majorizes the
//! modulus of the discarded tail. For the Wright-type families the ratio of
//! consecutive coefficients is non-increasing in the index (log-convexity of
//! `Γ`), so the ratio at the cut-off index bounds every later ratio and the
//! tail is dominated by a geometric series.

mod fox_wright;
mod truncate;

pub use fox_wright::{eval_fox_wright, fox_wright_series, FoxWrightSpec};
pub use truncate::{TruncatedSeries, K_MAX};

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::{ln_gamma_pos, log_coeff_alpha, WrightParams};
use crate::scalar::Scalar;

/// A series value together with the number of terms summed and a certified
/// bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue<T> {
    pub value: Complex<T>,
    pub terms_used: usize,
    pub tail_bound: T,
}

impl<T: Scalar> SeriesValue<T> {
    fn from_series(series: &TruncatedSeries<T>, z: Complex<T>) -> Self {
        Self {
            value: series.eval(z),
            terms_used: series.terms_used(),
            tail_bound: series.tail_bound(),
        }
    }
}

/// Parameters of the classical Wright function `W_{α,β}(z) = Σ z^k / (k! Γ(αk + β))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Wright2Params<T> {
    alpha: T,
    beta: T,
}

impl<T: Scalar> Wright2Params<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        if !(alpha >= T::zero()) || !alpha.is_finite() {
            return Err(Error::Domain(format!("alpha must be finite and >= 0, got {alpha}")));
        }
        if !(beta > T::zero()) || !beta.is_finite() {
            return Err(Error::Domain(format!("beta must be finite and > 0, got {beta}")));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn beta(&self) -> T {
        self.beta
    }
}

/// Derivative order for [`eval_normalized_deriv`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DerivOrder {
    First,
    Second,
}

/// Which partial sum to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PartialSumKind {
    /// `𝒲^N(z) = Σ_{k=0}^{N} z^k / (Γ(a+kμ)Γ(b+kν))`.
    Raw,
    /// `𝕎^N(z) = z + Σ_{k=2}^{N} α_{k−1} z^k`.
    Normalized,
    /// `Q_N(z) = 𝕎^N(z) / z = 1 + Σ_{k=1}^{N−1} α_k z^k`.
    QFactor,
}

fn check_point<T: Scalar>(z: Complex<T>) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("evaluation point must be finite, got {z}")))
    }
}

fn ratio_from_logs<T: Scalar>(ln_next: T, ln_cur: T) -> T {
    (ln_next - ln_cur).exp()
}

/// Certified series for `W_{α,β}` on `|z| ≤ radius`.
pub fn wright2_series<T: Scalar>(p: &Wright2Params<T>, radius: T, tol: T) -> Result<TruncatedSeries<T>> {
    let ln_c = |k: usize| {
        let kk = T::idx(k);
        -(ln_gamma_pos(kk + T::one()) + ln_gamma_pos(p.alpha * kk + p.beta))
    };
    TruncatedSeries::build(
        |k| ln_c(k).exp(),
        |k| Some(ratio_from_logs(ln_c(k + 1), ln_c(k))),
        0,
        radius,
        tol,
    )
}

/// Certified series for the unnormalized `𝒲_{(μ,a),(ν,b)}` on `|z| ≤ radius`.
pub fn wright4_series<T: Scalar>(p: &WrightParams<T>, radius: T, tol: T) -> Result<TruncatedSeries<T>> {
    TruncatedSeries::build(
        |k| (-p.ln_denominator(k)).exp(),
        |k| Some(ratio_from_logs(p.ln_denominator(k), p.ln_denominator(k + 1))),
        0,
        radius,
        tol,
    )
}

/// Certified series for the normalized `𝕎`, or for `Σ (−1)^k α_k z^{k+1}`
/// when `alternating`, on `|z| ≤ radius`.
pub(crate) fn normalized_series_signed<T: Scalar>(
    p: &WrightParams<T>,
    alternating: bool,
    radius: T,
    tol: T,
) -> Result<TruncatedSeries<T>> {
    let norm = p.ln_norm();
    let ln_alpha = |k: usize| if k == 0 { T::zero() } else { norm - p.ln_denominator(k) };
    TruncatedSeries::build(
        |k| {
            let v = if k == 0 { T::one() } else { ln_alpha(k).exp() };
            if alternating && k % 2 == 1 {
                -v
            } else {
                v
            }
        },
        |k| Some(ratio_from_logs(ln_alpha(k + 1), ln_alpha(k))),
        1,
        radius,
        tol,
    )
}

/// Certified series for `𝕎 = Σ α_k z^{k+1}` on `|z| ≤ radius`.
pub fn normalized_series<T: Scalar>(p: &WrightParams<T>, radius: T, tol: T) -> Result<TruncatedSeries<T>> {
    normalized_series_signed(p, false, radius, tol)
}

/// Certified series for `𝕎′` or `𝕎″` on `|z| ≤ radius`.
pub fn normalized_deriv_series<T: Scalar>(
    p: &WrightParams<T>,
    order: DerivOrder,
    radius: T,
    tol: T,
) -> Result<TruncatedSeries<T>> {
    normalized_deriv_series_signed(p, order, false, radius, tol)
}

pub(crate) fn normalized_deriv_series_signed<T: Scalar>(
    p: &WrightParams<T>,
    order: DerivOrder,
    alternating: bool,
    radius: T,
    tol: T,
) -> Result<TruncatedSeries<T>> {
    // coefficient of z^m:
    //   first:  (m+1) α_m
    //   second: (m+2)(m+1) α_{m+1}
    let offset = match order {
        DerivOrder::First => 0,
        DerivOrder::Second => 1,
    };
    let ln_coeff = |m: usize| {
        let k = m + offset;
        let mult = match order {
            DerivOrder::First => T::idx(m + 1),
            DerivOrder::Second => T::idx((m + 2) * (m + 1)),
        };
        mult.ln() + log_coeff_alpha(p, k)
    };
    TruncatedSeries::build(
        |m| {
            let v = ln_coeff(m).exp();
            let k = m + offset;
            // d/dz of (−1)^k α_k z^{k+1} keeps the sign of the original term
            if alternating && k % 2 == 1 {
                -v
            } else {
                v
            }
        },
        |m| Some(ratio_from_logs(ln_coeff(m + 1), ln_coeff(m))),
        0,
        radius,
        tol,
    )
}

/// `W_{α,β}(z)`.
pub fn eval_wright2<T: Scalar>(p: &Wright2Params<T>, z: Complex<T>, tol: T) -> Result<SeriesValue<T>> {
    check_point(z)?;
    let s = wright2_series(p, z.norm(), tol)?;
    Ok(SeriesValue::from_series(&s, z))
}

/// `𝒲_{(μ,a),(ν,b)}(z)`.
pub fn eval_wright4<T: Scalar>(p: &WrightParams<T>, z: Complex<T>, tol: T) -> Result<SeriesValue<T>> {
    check_point(z)?;
    let s = wright4_series(p, z.norm(), tol)?;
    Ok(SeriesValue::from_series(&s, z))
}

/// `𝕎_{(μ,a),(ν,b)}(z) = z Γ(a) Γ(b) 𝒲_{(μ,a),(ν,b)}(z)`.
pub fn eval_normalized<T: Scalar>(p: &WrightParams<T>, z: Complex<T>, tol: T) -> Result<SeriesValue<T>> {
    check_point(z)?;
    let s = normalized_series(p, z.norm(), tol)?;
    Ok(SeriesValue::from_series(&s, z))
}

/// `𝕎′(z)` or `𝕎″(z)` by term-wise differentiation.
pub fn eval_normalized_deriv<T: Scalar>(
    p: &WrightParams<T>,
    z: Complex<T>,
    order: DerivOrder,
    tol: T,
) -> Result<SeriesValue<T>> {
    check_point(z)?;
    let s = normalized_deriv_series(p, order, z.norm(), tol)?;
    Ok(SeriesValue::from_series(&s, z))
}

/// Certified series for `₁F₂(c; a, b; x)` on `0 ≤ x ≤ radius`.
pub fn hyp1f2_series<T: Scalar>(c: T, a: T, b: T, radius: T, tol: T) -> Result<TruncatedSeries<T>> {
    if !(a > T::zero()) || !(b > T::zero()) {
        return Err(Error::Domain(format!("1F2 requires a, b > 0, got a={a}, b={b}")));
    }
    if !c.is_finite() {
        return Err(Error::Domain("1F2 requires finite c".into()));
    }
    let mut last_k = 0usize;
    let mut last = T::one();
    let coeff = move |k: usize| {
        // coefficients are requested in order; advance the running product
        while last_k < k {
            let j = T::idx(last_k);
            last = last * (c + j) / ((a + j) * (b + j) * (j + T::one()));
            last_k += 1;
        }
        last
    };
    let ca = c.abs();
    let ratio_sup = move |k: usize| {
        let kk = T::idx(k);
        let top = if ca >= a { (ca + kk) / (a + kk) } else { T::one() };
        Some(top / ((b + kk) * (kk + T::one())))
    };
    TruncatedSeries::build(coeff, ratio_sup, 0, radius, tol)
}

/// `₁F₂(c; a, b; x) = Σ (c)_k / ((a)_k (b)_k) x^k / k!` for `x ≥ 0`.
pub fn eval_1f2<T: Scalar>(c: T, a: T, b: T, x: T, tol: T) -> Result<SeriesValue<T>> {
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!("1F2 argument must be finite and >= 0, got {x}")));
    }
    let s = hyp1f2_series(c, a, b, x, tol)?;
    Ok(SeriesValue {
        value: Complex::new(s.eval_real(x), T::zero()),
        terms_used: s.terms_used(),
        tail_bound: s.tail_bound(),
    })
}

/// Ascending coefficients of the requested partial sum.
pub fn partial_sum_coeffs<T: Scalar>(p: &WrightParams<T>, n: usize, which: PartialSumKind) -> Result<Vec<T>> {
    if n < 1 {
        return Err(Error::Domain("partial sums need N >= 1".into()));
    }
    Ok(match which {
        PartialSumKind::Raw => (0..=n).map(|k| (-p.ln_denominator(k)).exp()).collect(),
        PartialSumKind::Normalized => {
            let mut c = vec![T::zero()];
            c.extend((0..n).map(|k| crate::gamma::coeff_alpha(p, k)));
            c
        }
        PartialSumKind::QFactor => (0..n).map(|k| crate::gamma::coeff_alpha(p, k)).collect(),
    })
}

/// Exact finite partial sum `𝒲^N` or `𝕎^N` at `z`.
pub fn partial_sum<T: Scalar>(
    p: &WrightParams<T>,
    n: usize,
    which: PartialSumKind,
    z: Complex<T>,
) -> Result<Complex<T>> {
    let c = partial_sum_coeffs(p, n, which)?;
    Ok(horner(&c, z))
}

/// Horner evaluation of ascending real coefficients at a complex point.
pub fn horner<T: Scalar>(coeffs: &[T], z: Complex<T>) -> Complex<T> {
    coeffs
        .iter()
        .rev()
        .fold(Complex::new(T::zero(), T::zero()), |acc, c| acc * z + *c)
}

fn bessel_params<T: Scalar>(beta: T) -> Result<WrightParams<T>> {
    if !(beta > -T::one()) || !beta.is_finite() {
        return Err(Error::Domain(format!("beta must be > -1, got {beta}")));
    }
    WrightParams::new(T::one(), beta + T::one(), T::one(), T::one())
}

/// Certified series for the normalized Bessel function
/// `𝕁_β(z) = Σ (−1)^k Γ(β+1) z^{k+1} / (k! Γ(β+k+1))` on `|z| ≤ radius`.
pub fn bessel_series<T: Scalar>(beta: T, radius: T, tol: T) -> Result<TruncatedSeries<T>> {
    let p = bessel_params(beta)?;
    normalized_series_signed(&p, true, radius, tol)
}

/// Normalized Bessel function `𝕁_β(z) = Γ(β+1) z^{1−β/2} J_β(2√z)`, the
/// normalized Wright function with `(μ, a, ν, b) = (1, β+1, 1, 1)` evaluated
/// at `−z` and sign-adjusted to the class normalization `f′(0) = 1`.
pub fn bessel_normalized<T: Scalar>(beta: T, z: Complex<T>, tol: T) -> Result<SeriesValue<T>> {
    check_point(z)?;
    let s = bessel_series(beta, z.norm(), tol)?;
    Ok(SeriesValue::from_series(&s, z))
}

/// Parameters of the normalized two-parameter Wright function
/// `𝕎_{b,ν} = 𝕎_{(1,1),(ν,b)}`.
pub fn two_param_params<T: Scalar>(b: T, nu: T) -> Result<WrightParams<T>> {
    if !(b > T::zero()) || !(nu > T::zero()) {
        return Err(Error::Domain(format!(
            "two-parameter family needs b, nu > 0, got b={b}, nu={nu}"
        )));
    }
    WrightParams::new(T::one(), T::one(), nu, b)
}

/// `𝕎_{b,ν}(z) = z Γ(b) W_{ν,b}(z)`.
pub fn two_param_normalized<T: Scalar>(b: T, nu: T, z: Complex<T>, tol: T) -> Result<SeriesValue<T>> {
    let p = two_param_params(b, nu)?;
    eval_normalized(&p, z, tol)
}
