//! Falsification-grade checks of geometric properties by sampling a disk.
//!
//! Every check evaluates a pointwise quantity on a polar grid, reduces to
//! the extremal value, and subtracts the propagated series-truncation error
//! from the margin. `NoViolationFound` is a sampling statement, not a proof.

use std::f64::consts::PI;

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{Property, PropertyRegion, Region};
use crate::error::{Error, Result};
use crate::gamma::WrightParams;
use crate::scalar::Scalar;
use crate::series::{
    bessel_series, horner, normalized_deriv_series_signed, normalized_series_signed, partial_sum_coeffs,
    wright4_series, DerivOrder, PartialSumKind, TruncatedSeries,
};

/// Value, `f(z)/z`, first and second derivative of a normalized analytic
/// function at one point, each with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T> {
    pub f: Complex<T>,
    pub f_over_z: Complex<T>,
    pub df: Complex<T>,
    pub d2f: Complex<T>,
    pub err_f: T,
    pub err_f_over_z: T,
    pub err_df: T,
    pub err_d2f: T,
}

impl<T: Scalar> Jet<T> {
    /// A jet with no truncation error.
    pub fn exact(f: Complex<T>, f_over_z: Complex<T>, df: Complex<T>, d2f: Complex<T>) -> Self {
        Self {
            f,
            f_over_z,
            df,
            d2f,
            err_f: T::zero(),
            err_f_over_z: T::zero(),
            err_df: T::zero(),
            err_d2f: T::zero(),
        }
    }
}

/// A function in the class `f(0) = 0`, `f′(0) = 1` that can be sampled.
pub trait Analytic<T>: Sync {
    /// Jet at `z`; error bounds are valid for `|z| ≤ self.radius()`.
    fn jet(&self, z: Complex<T>) -> Jet<T>;

    /// Radius up to which [`jet`](Self::jet) is certified.
    fn radius(&self) -> T;
}

/// `𝕎_{(μ,a),(ν,b)}` (or `𝕁_β` when alternating), with the series for the
/// value and both derivatives certified once on `|z| ≤ radius`.
#[derive(Debug, Clone)]
pub struct NormalizedWright<T> {
    value: TruncatedSeries<T>,
    first: TruncatedSeries<T>,
    second: TruncatedSeries<T>,
    radius: T,
}

impl<T: Scalar> NormalizedWright<T> {
    pub fn new(p: &WrightParams<T>, radius: T, tol: T) -> Result<Self> {
        Self::build(p, false, radius, tol)
    }

    /// Normalized Bessel function `𝕁_β`.
    pub fn bessel(beta: T, radius: T, tol: T) -> Result<Self> {
        let value = bessel_series(beta, radius, tol)?;
        let p = WrightParams::new(T::one(), beta + T::one(), T::one(), T::one())?;
        Ok(Self {
            value,
            first: normalized_deriv_series_signed(&p, DerivOrder::First, true, radius, tol)?,
            second: normalized_deriv_series_signed(&p, DerivOrder::Second, true, radius, tol)?,
            radius,
        })
    }

    fn build(p: &WrightParams<T>, alternating: bool, radius: T, tol: T) -> Result<Self> {
        Ok(Self {
            value: normalized_series_signed(p, alternating, radius, tol)?,
            first: normalized_deriv_series_signed(p, DerivOrder::First, alternating, radius, tol)?,
            second: normalized_deriv_series_signed(p, DerivOrder::Second, alternating, radius, tol)?,
            radius,
        })
    }
}

impl<T: Scalar> Analytic<T> for NormalizedWright<T> {
    fn jet(&self, z: Complex<T>) -> Jet<T> {
        let g = self.value.eval_reduced(z);
        Jet {
            f: g * z,
            f_over_z: g,
            df: self.first.eval(z),
            d2f: self.second.eval(z),
            err_f: self.value.tail_bound(),
            err_f_over_z: self.value.reduced_tail_bound(),
            err_df: self.first.tail_bound(),
            err_d2f: self.second.tail_bound(),
        }
    }

    fn radius(&self) -> T {
        self.radius
    }
}

/// A normalized polynomial `Σ c_k z^k` with `c_0 = 0`, `c_1 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
    d1: Vec<T>,
    d2: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() < 2 || coeffs[0] != T::zero() || coeffs[1] != T::one() {
            return Err(Error::Precondition(
                "polynomial must satisfy f(0) = 0 and f'(0) = 1".into(),
            ));
        }
        let d1: Vec<T> = coeffs.iter().enumerate().skip(1).map(|(k, c)| *c * T::idx(k)).collect();
        let d2: Vec<T> = d1.iter().enumerate().skip(1).map(|(k, c)| *c * T::idx(k)).collect();
        Ok(Self { coeffs, d1, d2 })
    }

    /// `z ↦ z`.
    pub fn identity() -> Self {
        Self::new(vec![T::zero(), T::one()]).expect("identity is normalized")
    }

    /// Normalized partial sum `𝕎^N`.
    pub fn partial_sum(p: &WrightParams<T>, n: usize) -> Result<Self> {
        Self::new(partial_sum_coeffs(p, n, PartialSumKind::Normalized)?)
    }
}

impl<T: Scalar> Analytic<T> for Polynomial<T> {
    fn jet(&self, z: Complex<T>) -> Jet<T> {
        let g = horner(&self.coeffs[1..], z);
        Jet::exact(g * z, g, horner(&self.d1, z), horner(&self.d2, z))
    }

    fn radius(&self) -> T {
        T::infinity()
    }
}

/// Any closure returning a jet, trusted on `|z| ≤ radius`.
pub struct FromFn<F, T> {
    f: F,
    radius: T,
}

impl<F, T> FromFn<F, T> {
    pub fn new(f: F, radius: T) -> Self {
        Self { f, radius }
    }
}

impl<T: Scalar, F: Fn(Complex<T>) -> Jet<T> + Sync> Analytic<T> for FromFn<F, T> {
    fn jet(&self, z: Complex<T>) -> Jet<T> {
        (self.f)(z)
    }

    fn radius(&self) -> T {
        self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RadialSpacing {
    Uniform,
    /// `r_i = r_max sin(π/2 · (i+1)/n)`, dense near the boundary.
    BoundaryClustered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AngularRange {
    Full,
    /// `[0, π]` inclusive; enough for functions with real coefficients.
    UpperHalf,
}

/// Polar sampling grid. The origin is always included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub r_max: f64,
    pub n_radii: usize,
    pub n_angles: usize,
    pub spacing: RadialSpacing,
    pub angles: AngularRange,
}

impl GridSpec {
    /// Default grid for a disk of the given radius: `r_max = radius − 10⁻³`,
    /// 64 boundary-clustered radii, 256 angles.
    pub fn for_region(radius: f64) -> Self {
        Self {
            r_max: radius - 1e-3,
            n_radii: 64,
            n_angles: 256,
            spacing: RadialSpacing::BoundaryClustered,
            angles: AngularRange::Full,
        }
    }

    pub fn validate(&self, region_radius: f64) -> Result<()> {
        if !(self.r_max > 0.0 && self.r_max < region_radius) {
            return Err(Error::Domain(format!(
                "r_max must lie in (0, {region_radius}), got {}",
                self.r_max
            )));
        }
        if self.n_radii < 2 || self.n_angles < 8 {
            return Err(Error::Domain(format!(
                "grid needs n_radii >= 2 and n_angles >= 8, got {} and {}",
                self.n_radii, self.n_angles
            )));
        }
        Ok(())
    }

    pub fn radii(&self) -> Vec<f64> {
        let n = self.n_radii as f64;
        (0..self.n_radii)
            .map(|i| {
                let t = (i + 1) as f64 / n;
                match self.spacing {
                    RadialSpacing::Uniform => self.r_max * t,
                    RadialSpacing::BoundaryClustered => self.r_max * (0.5 * PI * t).sin(),
                }
            })
            .collect()
    }

    pub fn thetas(&self) -> Vec<f64> {
        let n = self.n_angles;
        (0..n)
            .map(|j| match self.angles {
                AngularRange::Full => 2.0 * PI * j as f64 / n as f64,
                AngularRange::UpperHalf => PI * j as f64 / (n - 1) as f64,
            })
            .collect()
    }

    /// Grid points in a fixed order, origin first.
    pub fn points<T: Scalar>(&self) -> Vec<Complex<T>> {
        let thetas = self.thetas();
        let mut pts = Vec::with_capacity(1 + self.n_radii * self.n_angles);
        pts.push(Complex::new(T::zero(), T::zero()));
        for r in self.radii() {
            for &t in &thetas {
                pts.push(Complex::new(T::c(r * t.cos()), T::c(r * t.sin())));
            }
        }
        pts
    }
}

/// What an oracle run measured.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum CheckKind {
    /// min Re(z f′/f) against `eta`.
    Starlike { eta: f64 },
    /// min Re(1 + z f″/f′).
    Convex,
    /// max |z f″/f′| against 1/2.
    Ucv,
    /// max |z f′/f − 1| against 1/2.
    Sp,
    /// min Re(z f′/g).
    CloseToConvex,
    /// min Re 𝒲 (or its partial sum) against 1/2.
    HalfPlaneRe { partial: Option<usize> },
    /// min Re(1 + 2 Σ γ_k z^k).
    SubordinatingSequence,
    /// max of the deviation against `threshold`.
    BoundDeviation { mode: DeviationMode, threshold: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeviationMode {
    /// `|f(z)/z − 1|`.
    FOverZMinus1,
    /// `|f′(z) − 1|`.
    FPrimeMinus1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OracleVerdict {
    NoViolationFound,
    ViolationFound,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyCheck {
    pub property: CheckKind,
    pub region_radius: f64,
    pub grid: GridSpec,
    /// Extremal sampled value of the measured quantity.
    pub extremal_value: f64,
    pub extremal_point: Complex<f64>,
    /// Signed distance to the threshold, reduced by the truncation error.
    pub margin: f64,
    pub verdict: OracleVerdict,
    pub diagnostic: Option<String>,
}

/// Per-point sample: measured value, conservative margin, diagnostic.
struct Sample {
    value: f64,
    margin: f64,
    degenerate: bool,
}

/// Bound on `|n/d − ñ/d̃|` given `|n − ñ| ≤ en`, `|d − d̃| ≤ ed`.
fn quotient_error<T: Scalar>(n: Complex<T>, en: T, d: Complex<T>, ed: T) -> T {
    let dn = d.norm();
    if en == T::zero() && ed == T::zero() {
        return T::zero();
    }
    if dn <= ed {
        return T::infinity();
    }
    (en * dn + n.norm() * ed) / (dn * (dn - ed))
}

fn run_grid<T, S>(kind: CheckKind, region: f64, grid: &GridSpec, sample: S) -> Result<PropertyCheck>
where
    T: Scalar,
    S: Fn(Complex<T>) -> Sample + Sync,
{
    grid.validate(region)?;
    let pts = grid.points::<T>();
    let best = pts
        .par_iter()
        .enumerate()
        .map(|(i, z)| (i, sample(*z)))
        .reduce_with(|x, y| {
            // smallest margin wins, ties by index
            match x.1.margin.total_cmp(&y.1.margin) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Greater => y,
                std::cmp::Ordering::Equal => {
                    if x.0 <= y.0 {
                        x
                    } else {
                        y
                    }
                }
            }
        })
        .expect("grid is never empty");
    let (idx, s) = best;
    let z = pts[idx];
    let margin = if s.margin.is_nan() { f64::NEG_INFINITY } else { s.margin };
    let verdict = if margin < 0.0 {
        OracleVerdict::ViolationFound
    } else {
        OracleVerdict::NoViolationFound
    };
    Ok(PropertyCheck {
        property: kind,
        region_radius: region,
        grid: *grid,
        extremal_value: s.value,
        extremal_point: Complex::new(z.re.f64(), z.im.f64()),
        margin,
        verdict,
        diagnostic: s
            .degenerate
            .then(|| "function vanishes or is indeterminate at a sampled point".to_string()),
    })
}

fn check_radius<T: Scalar, F: Analytic<T> + ?Sized>(f: &F, grid: &GridSpec) -> Result<()> {
    if T::c(grid.r_max) > f.radius() {
        return Err(Error::Domain(format!(
            "grid radius {} exceeds the certified radius {} of the function",
            grid.r_max,
            f.radius()
        )));
    }
    Ok(())
}

fn lower_sample(value: f64, err: f64, threshold: f64) -> Sample {
    let degenerate = !value.is_finite() || !err.is_finite();
    Sample {
        value,
        margin: if degenerate {
            f64::NEG_INFINITY
        } else {
            value - err - threshold
        },
        degenerate,
    }
}

fn upper_sample(value: f64, err: f64, threshold: f64) -> Sample {
    let degenerate = !value.is_finite() || !err.is_finite();
    Sample {
        value,
        margin: if degenerate {
            f64::NEG_INFINITY
        } else {
            threshold - value - err
        },
        degenerate,
    }
}

/// `min Re(z f′/f) > η`, computed as `f′ / (f/z)` so the origin needs no
/// special case.
pub fn check_starlike<T: Scalar, F: Analytic<T> + ?Sized>(
    f: &F,
    region_radius: f64,
    grid: &GridSpec,
    eta: f64,
) -> Result<PropertyCheck> {
    if !(0.0..1.0).contains(&eta) {
        return Err(Error::Domain(format!("eta must lie in [0, 1), got {eta}")));
    }
    check_radius(f, grid)?;
    run_grid(CheckKind::Starlike { eta }, region_radius, grid, |z| {
        let j = f.jet(z);
        let q = j.df / j.f_over_z;
        let err = quotient_error(j.df, j.err_df, j.f_over_z, j.err_f_over_z);
        lower_sample(q.re.f64(), err.f64(), eta)
    })
}

/// `min Re(1 + z f″/f′) > 0`.
pub fn check_convex<T: Scalar, F: Analytic<T> + ?Sized>(
    f: &F,
    region_radius: f64,
    grid: &GridSpec,
) -> Result<PropertyCheck> {
    check_radius(f, grid)?;
    run_grid(CheckKind::Convex, region_radius, grid, |z| {
        let j = f.jet(z);
        let q = j.d2f / j.df;
        let err = z.norm() * quotient_error(j.d2f, j.err_d2f, j.df, j.err_df);
        lower_sample((T::one() + (z * q).re).f64(), err.f64(), 0.0)
    })
}

/// `max |z f″/f′| < 1/2` on the unit disk.
pub fn check_ucv<T: Scalar, F: Analytic<T> + ?Sized>(f: &F, grid: &GridSpec) -> Result<PropertyCheck> {
    check_radius(f, grid)?;
    run_grid(CheckKind::Ucv, 1.0, grid, |z| {
        let j = f.jet(z);
        let v = (z * j.d2f / j.df).norm();
        let err = z.norm() * quotient_error(j.d2f, j.err_d2f, j.df, j.err_df);
        upper_sample(v.f64(), err.f64(), 0.5)
    })
}

/// `max |z f′/f − 1| < 1/2` on the unit disk.
pub fn check_sp<T: Scalar, F: Analytic<T> + ?Sized>(f: &F, grid: &GridSpec) -> Result<PropertyCheck> {
    check_radius(f, grid)?;
    run_grid(CheckKind::Sp, 1.0, grid, |z| {
        let j = f.jet(z);
        let v = (j.df / j.f_over_z - T::one()).norm();
        let err = quotient_error(j.df, j.err_df, j.f_over_z, j.err_f_over_z);
        upper_sample(v.f64(), err.f64(), 0.5)
    })
}

fn is_normalized<T: Scalar, F: Analytic<T> + ?Sized>(f: &F) -> bool {
    let j = f.jet(Complex::new(T::zero(), T::zero()));
    let tol = T::c(1e-12).max(T::epsilon() * T::c(8.0));
    j.f.norm() <= tol && (j.df - T::one()).norm() <= tol
}

/// `min Re(z f′/g) > 0` for a starlike witness `g`.
pub fn check_close_to_convex<T: Scalar, F: Analytic<T> + ?Sized, G: Analytic<T> + ?Sized>(
    f: &F,
    g: &G,
    region_radius: f64,
    grid: &GridSpec,
) -> Result<PropertyCheck> {
    if !is_normalized(f) || !is_normalized(g) {
        return Err(Error::Precondition(
            "close-to-convexity needs normalized f and g".into(),
        ));
    }
    check_radius(f, grid)?;
    check_radius(g, grid)?;
    run_grid(CheckKind::CloseToConvex, region_radius, grid, |z| {
        let jf = f.jet(z);
        let jg = g.jet(z);
        let q = jf.df / jg.f_over_z;
        let err = quotient_error(jf.df, jf.err_df, jg.f_over_z, jg.err_f_over_z);
        lower_sample(q.re.f64(), err.f64(), 0.0)
    })
}

/// `min Re 𝒲_{(μ,1),(ν,1)} > 1/2`, or the same for the partial sum `𝒲^N`.
pub fn check_half_plane<T: Scalar>(
    p: &WrightParams<T>,
    partial: Option<usize>,
    grid: &GridSpec,
    tol: T,
) -> Result<PropertyCheck> {
    if p.a() != T::one() || p.b() != T::one() {
        return Err(Error::Precondition(format!(
            "half-plane check needs a = b = 1, got a={}, b={}",
            p.a(),
            p.b()
        )));
    }
    let kind = CheckKind::HalfPlaneRe { partial };
    match partial {
        Some(n) => {
            let c = partial_sum_coeffs(p, n, PartialSumKind::Raw)?;
            run_grid(kind, 1.0, grid, |z: Complex<T>| {
                lower_sample(horner(&c, z).re.f64(), 0.0, 0.5)
            })
        }
        None => {
            let s = wright4_series(p, T::c(grid.r_max), tol)?;
            let err = s.tail_bound().f64();
            run_grid(kind, 1.0, grid, |z: Complex<T>| {
                lower_sample(s.eval(z).re.f64(), err, 0.5)
            })
        }
    }
}

/// Coefficients `γ_1, γ_2, …` with a bound on `Σ_{k>cap} |γ_k|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequenceSpec<T> {
    gamma: Vec<T>,
    tail_bound: T,
}

impl<T: Scalar> SequenceSpec<T> {
    /// A finite sequence `γ_1..γ_n`.
    pub fn finite(gamma: Vec<T>) -> Self {
        Self {
            gamma,
            tail_bound: T::zero(),
        }
    }

    /// The first `cap ≥ 8` terms of an infinite sequence together with a
    /// caller-certified bound on the absolute tail sum.
    pub fn generated(cap: usize, gen: impl Fn(usize) -> T, tail_bound: T) -> Result<Self> {
        if cap < 8 {
            return Err(Error::Domain(format!("sequence cap must be >= 8, got {cap}")));
        }
        Ok(Self {
            gamma: (1..=cap).map(gen).collect(),
            tail_bound,
        })
    }

    /// `γ_k = 1/(Γ(1+kμ)Γ(1+kν))`, `k ≥ 1`. The consecutive ratio is
    /// non-increasing, which certifies a geometric bound on the tail.
    pub fn wright_reciprocal(mu: T, nu: T, cap: usize) -> Result<Self> {
        let p = WrightParams::new(mu, T::one(), nu, T::one())?;
        let ln = |k: usize| -p.ln_denominator(k);
        let q = (ln(cap + 1) - ln(cap)).exp();
        if !(q < T::one()) {
            return Err(Error::Domain("sequence ratio must be < 1 at the cap".into()));
        }
        let tail = ln(cap).exp() * q / (T::one() - q);
        Self::generated(cap, |k| ln(k).exp(), tail)
    }

    /// `a_1, a_2, …` as stored.
    pub fn terms(&self) -> &[T] {
        &self.gamma
    }

    pub fn tail_bound(&self) -> T {
        self.tail_bound
    }
}

/// `min Re(1 + 2 Σ γ_k z^k) > 0`.
pub fn check_subordinating_sequence<T: Scalar>(s: &SequenceSpec<T>, grid: &GridSpec) -> Result<PropertyCheck> {
    let two = T::c(2.0);
    let mut c = vec![T::one()];
    c.extend(s.gamma.iter().map(|g| two * *g));
    let err = (two * s.tail_bound).f64();
    run_grid(CheckKind::SubordinatingSequence, 1.0, grid, |z: Complex<T>| {
        lower_sample(horner(&c, z).re.f64(), err, 0.0)
    })
}

/// `max |f/z − 1|` or `max |f′ − 1|` against `threshold`.
pub fn check_bound_deviation<T: Scalar, F: Analytic<T> + ?Sized>(
    f: &F,
    mode: DeviationMode,
    threshold: f64,
    region_radius: f64,
    grid: &GridSpec,
) -> Result<PropertyCheck> {
    check_radius(f, grid)?;
    run_grid(
        CheckKind::BoundDeviation { mode, threshold },
        region_radius,
        grid,
        |z| {
            let j = f.jet(z);
            let (v, e) = match mode {
                DeviationMode::FOverZMinus1 => ((j.f_over_z - T::one()).norm(), j.err_f_over_z),
                DeviationMode::FPrimeMinus1 => ((j.df - T::one()).norm(), j.err_df),
            };
            upper_sample(v.f64(), e.f64(), threshold)
        },
    )
}

/// `0 ≥ a_{k+2} − a_{k+1} ≥ a_{k+1} − a_k` for every stored index.
pub fn check_convex_decreasing<T: Scalar>(s: &SequenceSpec<T>) -> bool {
    let a = &s.gamma;
    let decreasing = a.windows(2).all(|w| w[1] - w[0] <= T::zero());
    let convex = a.windows(3).all(|w| w[2] - w[1] >= w[1] - w[0]);
    decreasing && convex
}

/// Oracle check matching a criterion conclusion for `𝕎_{(μ,a),(ν,b)}`.
///
/// With `grid = None` the default grid for the conclusion's region is used.
pub fn verify_property<T: Scalar>(
    p: &WrightParams<T>,
    pr: &PropertyRegion<T>,
    grid: Option<GridSpec>,
    tol: T,
) -> Result<PropertyCheck> {
    let region = pr.region.radius();
    let grid = grid.unwrap_or_else(|| GridSpec::for_region(region));
    let f = NormalizedWright::new(p, T::c(grid.r_max), tol)?;
    verify_with(&f, pr, &grid, tol)
}

/// As [`verify_property`] for an already-built function.
pub fn verify_with<T: Scalar, F: Analytic<T>>(
    f: &F,
    pr: &PropertyRegion<T>,
    grid: &GridSpec,
    tol: T,
) -> Result<PropertyCheck> {
    let region = pr.region.radius();
    match pr.property {
        Property::Starlike => check_starlike(f, region, grid, 0.0),
        Property::StarlikeOrder { eta } => check_starlike(f, region, grid, eta.f64()),
        Property::Convex => check_convex(f, region, grid),
        Property::Ucv => {
            full_disk(pr.region)?;
            check_ucv(f, grid)
        }
        Property::Sp => {
            full_disk(pr.region)?;
            check_sp(f, grid)
        }
        Property::CloseToConvex { witness } => {
            let g = NormalizedWright::new(&witness, T::c(grid.r_max), tol)?;
            check_close_to_convex(f, &g, region, grid)
        }
        Property::HalfPlaneRe => Err(Error::Precondition(
            "the half-plane property concerns the unnormalized function; use check_half_plane".into(),
        )),
    }
}

fn full_disk(r: Region) -> Result<()> {
    match r {
        Region::FullDisk => Ok(()),
        Region::HalfDisk => Err(Error::Precondition("this check is defined on the unit disk".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid(r: f64) -> GridSpec {
        GridSpec {
            r_max: r,
            n_radii: 16,
            n_angles: 64,
            spacing: RadialSpacing::BoundaryClustered,
            angles: AngularRange::Full,
        }
    }

    fn koebe() -> FromFn<impl Fn(Complex<f64>) -> Jet<f64> + Sync, f64> {
        FromFn::new(
            |z: Complex<f64>| {
                let w = Complex::new(1.0, 0.0) - z;
                Jet::exact(
                    z / (w * w),
                    1.0 / (w * w),
                    (1.0 + z) / (w * w * w),
                    (2.0 * z + 4.0) / (w * w * w * w),
                )
            },
            0.95,
        )
    }

    fn half_plane_map() -> FromFn<impl Fn(Complex<f64>) -> Jet<f64> + Sync, f64> {
        FromFn::new(
            |z: Complex<f64>| {
                let w = Complex::new(1.0, 0.0) - z;
                Jet::exact(z / w, 1.0 / w, 1.0 / (w * w), 2.0 / (w * w * w))
            },
            0.95,
        )
    }

    #[test]
    fn identity_checks() {
        let id = Polynomial::<f64>::identity();
        let g = small_grid(0.9);
        let c = check_starlike(&id, 1.0, &g, 0.25).unwrap();
        assert_eq!(c.extremal_value, 1.0);
        assert_eq!(c.margin, 0.75);
        assert_eq!(check_convex(&id, 1.0, &g).unwrap().extremal_value, 1.0);
        assert_eq!(check_ucv(&id, &g).unwrap().margin, 0.5);
        assert_eq!(check_sp(&id, &g).unwrap().margin, 0.5);
        assert_eq!(check_close_to_convex(&id, &id, 1.0, &g).unwrap().extremal_value, 1.0);
        let d = check_bound_deviation(&id, DeviationMode::FOverZMinus1, 1.0, 1.0, &g).unwrap();
        assert_eq!(d.extremal_value, 0.0);
    }

    #[test]
    fn koebe_is_starlike_on_grid() {
        let g = small_grid(0.9);
        let c = check_starlike(&koebe(), 1.0, &g, 0.0).unwrap();
        assert_eq!(c.verdict, OracleVerdict::NoViolationFound);
        // Re((1+z)/(1−z)) is minimized at z = −r_max
        let want = (1.0 - 0.9) / (1.0 + 0.9);
        assert!((c.extremal_value - want).abs() < 1e-12, "{}", c.extremal_value);
        assert!((c.extremal_point - Complex::new(-0.9, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn half_plane_map_is_convex() {
        let g = small_grid(0.9);
        let c = check_convex(&half_plane_map(), 1.0, &g).unwrap();
        let want = (1.0 - 0.9) / (1.0 + 0.9);
        assert!((c.extremal_value - want).abs() < 1e-12);
    }

    #[test]
    fn wright_examples() {
        let f =
            |a: f64, b: f64, r: f64| NormalizedWright::new(&WrightParams::unit_steps(a, b).unwrap(), r, 1e-14).unwrap();
        let half = GridSpec::for_region(0.5);
        let c = check_starlike(&f(1.0, 2.5, half.r_max), 0.5, &half, 0.0).unwrap();
        assert_eq!(c.verdict, OracleVerdict::NoViolationFound);
        let c = check_convex(&f(14.0, 0.6, half.r_max), 0.5, &half).unwrap();
        assert_eq!(c.verdict, OracleVerdict::NoViolationFound);
        let full = GridSpec::for_region(1.0);
        assert!(check_ucv(&f(4.0, 15.0, full.r_max), &full).unwrap().margin > 0.0);
        assert!(check_sp(&f(1.0, 3.7, full.r_max), &full).unwrap().margin > 0.0);
        let d = check_bound_deviation(
            &f(2f64.sqrt(), 3f64.sqrt(), full.r_max),
            DeviationMode::FOverZMinus1,
            1.0,
            1.0,
            &full,
        )
        .unwrap();
        assert!(d.margin > 0.0);
    }

    #[test]
    fn close_to_convex_wrt_witness() {
        let grid = GridSpec::for_region(1.0);
        let f = NormalizedWright::new(&WrightParams::new(1.0, 1.0, 2.0, 2.5).unwrap(), grid.r_max, 1e-14).unwrap();
        let g = NormalizedWright::new(&WrightParams::new(1.0, 1.0, 1.0, 2.5).unwrap(), grid.r_max, 1e-14).unwrap();
        let c = check_close_to_convex(&f, &g, 1.0, &grid).unwrap();
        assert_eq!(c.verdict, OracleVerdict::NoViolationFound);
        let shifted = FromFn::new(
            |z: Complex<f64>| Jet::exact(z + 1.0, z, Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)),
            1.0,
        );
        assert!(matches!(
            check_close_to_convex(&f, &shifted, 1.0, &grid),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn half_plane_examples() {
        let p = WrightParams::new(2.0, 1.0, 2.0, 1.0).unwrap();
        let g = GridSpec::for_region(1.0);
        let c = check_half_plane(&p, None, &g, 1e-14).unwrap();
        assert_eq!(c.verdict, OracleVerdict::NoViolationFound);
        let c = check_half_plane(&p, Some(6), &g, 1e-14).unwrap();
        assert_eq!(c.verdict, OracleVerdict::NoViolationFound);
        let bad = WrightParams::new(2.0, 1.5, 2.0, 1.0).unwrap();
        assert!(check_half_plane(&bad, None, &g, 1e-14).is_err());
    }

    #[test]
    fn sequence_examples() {
        let g = GridSpec::for_region(1.0);
        let zero = SequenceSpec::finite(vec![0.0; 4]);
        assert_eq!(check_subordinating_sequence(&zero, &g).unwrap().extremal_value, 1.0);
        let s = SequenceSpec::wright_reciprocal(2.0, 2.0, 20).unwrap();
        assert_eq!(
            check_subordinating_sequence(&s, &g).unwrap().verdict,
            OracleVerdict::NoViolationFound
        );
        let bad = SequenceSpec::finite(vec![-1.0]);
        let c = check_subordinating_sequence(&bad, &g).unwrap();
        assert_eq!(c.verdict, OracleVerdict::ViolationFound);
        assert!(c.extremal_point.re > 0.9 && c.extremal_point.im.abs() < 1e-12);
        assert!(SequenceSpec::generated(4, |_| 0.0, 0.0).is_err());
    }

    #[test]
    fn convex_decreasing_examples() {
        let harmonic = SequenceSpec::finite((1..40).map(|k| 1.0 / k as f64).collect());
        assert!(check_convex_decreasing(&harmonic));
        let wright = SequenceSpec::finite(
            (1..12)
                .map(|k| {
                    let g = crate::gamma::log_gamma(1.0 + 2.0 * (k as f64 - 1.0)).unwrap().exp();
                    1.0 / (g * g)
                })
                .collect(),
        );
        assert!(check_convex_decreasing(&wright));
        let inc = SequenceSpec::finite((1..10).map(|k| k as f64).collect());
        assert!(!check_convex_decreasing(&inc));
    }

    #[test]
    fn vanishing_function_is_a_violation() {
        // f(z) = z − z², zero at z = 1 lies inside the sampled disk's closure only
        // when r_max reaches it; use z(1 − 2z) which vanishes at 1/2
        let f = Polynomial::new(vec![0.0, 1.0, -2.0]).unwrap();
        let grid = GridSpec {
            r_max: 0.5,
            n_radii: 4,
            n_angles: 8,
            spacing: RadialSpacing::Uniform,
            angles: AngularRange::Full,
        };
        let c = check_starlike(&f, 1.0, &grid, 0.0).unwrap();
        assert_eq!(c.verdict, OracleVerdict::ViolationFound);
        assert!(c.diagnostic.is_some());
    }

    #[test]
    fn grid_validation() {
        let mut g = GridSpec::for_region(0.5);
        assert!(g.validate(0.5).is_ok());
        g.r_max = 0.5;
        assert!(g.validate(0.5).is_err());
        g.r_max = 0.4;
        g.n_angles = 4;
        assert!(g.validate(0.5).is_err());
        let pts = GridSpec::for_region(1.0).points::<f64>();
        assert_eq!(pts.len(), 1 + 64 * 256);
        assert!(pts.iter().all(|z| z.norm() <= 1.0 - 1e-3 + 1e-15));
    }

    #[test]
    fn upper_half_grid_gives_same_extremum() {
        let p = WrightParams::new(1.5, 2.0, 1.0, 1.5).unwrap();
        let full = GridSpec::for_region(1.0);
        let half = GridSpec {
            angles: AngularRange::UpperHalf,
            n_angles: full.n_angles / 2 + 1,
            ..full
        };
        let f = NormalizedWright::new(&p, full.r_max, 1e-14).unwrap();
        let a = check_starlike(&f, 1.0, &full, 0.0).unwrap();
        let b = check_starlike(&f, 1.0, &half, 0.0).unwrap();
        assert!((a.extremal_value - b.extremal_value).abs() < 1e-12);
    }
}
