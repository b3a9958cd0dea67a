//! Zeros of partial sums.
//!
//! Roots are found by Aberth-Ehrlich simultaneous iteration started from the
//! Newton polygon of `ln|c_k|`, so that coefficients spread over many
//! orders of magnitude still get starting radii of the right size. Points
//! outside the unit circle are evaluated through the reversed polynomial.

use std::f64::consts::PI;

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::WrightParams;
use crate::series::{partial_sum_coeffs, PartialSumKind};

type C64 = Complex<f64>;

pub const MAX_ITERATIONS: usize = 200;
pub const CORRECTION_TOL: f64 = 1e-12;
/// Corrections that stagnate below this are at the rounding floor of clustered roots.
pub const STALL_TOL: f64 = 1e-8;

/// Ascending coefficients `c_0..c_N` of a partial sum, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolyCoeffs {
    pub coeffs: Vec<f64>,
    pub source: PartialSumKind,
}

impl PolyCoeffs {
    pub fn new(mut coeffs: Vec<f64>, source: PartialSumKind) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("polynomial coefficients must be finite".into()));
        }
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::Domain("zero polynomial".into()));
        }
        Ok(Self { coeffs, source })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Coefficients of `𝒲^N`, `𝕎^N` or `Q_N`.
pub fn partial_sum_poly(p: &WrightParams<f64>, n: usize, which: PartialSumKind) -> Result<PolyCoeffs> {
    PolyCoeffs::new(partial_sum_coeffs(p, n, which)?, which)
}

/// `c_0 > c_1 > … > c_N > 0`.
pub fn kakeya_applicable(c: &PolyCoeffs) -> bool {
    c.coeffs.iter().all(|&x| x > 0.0) && c.coeffs.windows(2).all(|w| w[1] < w[0])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootsReport {
    /// All roots including those at the origin, sorted by (modulus, argument).
    pub roots: Vec<C64>,
    pub min_modulus: f64,
    /// Smallest modulus among roots not at the origin; `inf` if there are none.
    pub min_nonzero_modulus: f64,
    pub zero_roots: usize,
    pub kakeya_applicable: bool,
    /// `max |p(r)| / Σ|c_k||r|^k` over the roots.
    pub residual_max: f64,
    pub iterations: usize,
}

/// `p(z)/p′(z)`, evaluated through the reversed polynomial when `|z| > 1`.
fn newton_ratio(c: &[f64], z: C64) -> C64 {
    let n = c.len() - 1;
    if z.norm() <= 1.0 {
        let mut p = C64::new(c[n], 0.0);
        let mut d = C64::new(0.0, 0.0);
        for &ck in c[..n].iter().rev() {
            d = d * z + p;
            p = p * z + ck;
        }
        p / d
    } else {
        // p(z) = z^n R(y), y = 1/z, R(y) = Σ c_{n−k} y^k
        let y = z.inv();
        let mut r = C64::new(c[0], 0.0);
        let mut dr = C64::new(0.0, 0.0);
        for &ck in c[1..].iter() {
            dr = dr * y + r;
            r = r * y + ck;
        }
        // p′/p = y (n − y R′/R)
        let lp = y * (n as f64 - y * dr / r);
        lp.inv()
    }
}

fn relative_residual(c: &[f64], z: C64) -> f64 {
    // for |z| > 1 numerator and scale are both divided by |z|^n
    let (w, coeffs): (C64, Box<dyn Iterator<Item = &f64>>) = if z.norm() <= 1.0 {
        (z, Box::new(c.iter().rev()))
    } else {
        (z.inv(), Box::new(c.iter()))
    };
    let r = w.norm();
    let (p, scale) = coeffs.fold((C64::new(0.0, 0.0), 0.0), |(p, s), ck| (p * w + ck, s * r + ck.abs()));
    p.norm() / scale
}

/// Upper convex hull of `(k, ln|c_k|)` gives one starting radius per edge.
fn newton_polygon_start(c: &[f64]) -> Vec<C64> {
    let n = c.len() - 1;
    let pts: Vec<(usize, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, x)| **x != 0.0)
        .map(|(k, x)| (k, x.abs().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &q in &pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 as f64 - o.0 as f64) * (q.1 - o.1) - (a.1 - o.1) * (q.0 as f64 - o.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(q);
    }
    let mut z = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (i, li) = w[0];
        let (j, lj) = w[1];
        let m = j - i;
        let radius = ((li - lj) / m as f64).exp();
        for k in 0..m {
            let theta = 2.0 * PI * k as f64 / m as f64 + 2.0 * PI * i as f64 / n as f64 + sigma;
            z.push(C64::from_polar(radius, theta));
        }
    }
    z
}

/// All roots of the polynomial.
pub fn find_roots(c: &PolyCoeffs) -> Result<RootsReport> {
    let deg = c.degree();
    if deg < 1 {
        return Err(Error::Domain("root finding needs degree >= 1".into()));
    }
    let zero_roots = c.coeffs.iter().take_while(|x| **x == 0.0).count();
    let reduced = &c.coeffs[zero_roots..];
    let mut z = if reduced.len() > 1 {
        newton_polygon_start(reduced)
    } else {
        Vec::new()
    };
    let m = z.len();
    let mut iterations = 0;
    let mut converged = m == 0;
    let mut max_corr = 0.0;
    let mut done = vec![false; m];
    // rounding floor: corrections that stop shrinking below this count as converged
    let mut best = f64::INFINITY;
    let mut stalled = 0;
    while !converged && iterations < MAX_ITERATIONS {
        iterations += 1;
        max_corr = 0.0_f64;
        for i in 0..m {
            if done[i] {
                continue;
            }
            let w = newton_ratio(reduced, z[i]);
            let s: C64 = (0..m).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let corr = w / (C64::new(1.0, 0.0) - w * s);
            if corr.re.is_finite() && corr.im.is_finite() {
                z[i] -= corr;
                let rel = corr.norm() / z[i].norm().max(1e-300);
                done[i] = rel <= CORRECTION_TOL;
                max_corr = max_corr.max(rel);
            }
        }
        if max_corr < 0.5 * best {
            best = max_corr;
            stalled = 0;
        } else {
            stalled += 1;
        }
        converged = max_corr <= CORRECTION_TOL || (max_corr <= STALL_TOL && stalled >= 5);
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations,
            max_correction: max_corr,
            partial: z.iter().map(|r| (r.re, r.im)).collect(),
        });
    }
    let residual_max = z.iter().map(|r| relative_residual(reduced, *r)).fold(0.0, f64::max);
    let min_nonzero_modulus = z.iter().map(|r| r.norm()).fold(f64::INFINITY, f64::min);
    let mut roots: Vec<C64> = std::iter::repeat_n(C64::new(0.0, 0.0), zero_roots).chain(z).collect();
    roots.sort_by(|x, y| x.norm().total_cmp(&y.norm()).then(x.arg().total_cmp(&y.arg())));
    Ok(RootsReport {
        min_modulus: roots.first().map(|r| r.norm()).unwrap_or(f64::INFINITY),
        min_nonzero_modulus,
        zero_roots,
        kakeya_applicable: kakeya_applicable(c),
        residual_max,
        iterations,
        roots,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExteriorReport {
    pub roots: RootsReport,
    /// Every nonzero root lies strictly outside the closed unit disk.
    pub verdict: bool,
}

/// Checks that the nonzero roots of a partial sum lie outside the unit disk,
/// under the hypotheses for which that is claimed: `a = b = 1`, `μ, ν > 1`
/// for the raw sum; `a, b > 1`, `μ, ν ≥ 1` for `Q_N` and `𝕎^N`.
pub fn verify_exterior(p: &WrightParams<f64>, n: usize, which: PartialSumKind) -> Result<ExteriorReport> {
    let ok = match which {
        PartialSumKind::Raw => p.a() == 1.0 && p.b() == 1.0 && p.mu() > 1.0 && p.nu() > 1.0,
        PartialSumKind::QFactor | PartialSumKind::Normalized => {
            p.a() > 1.0 && p.b() > 1.0 && p.mu() >= 1.0 && p.nu() >= 1.0
        }
    };
    if !ok {
        let need = match which {
            PartialSumKind::Raw => "a = b = 1 and mu, nu > 1",
            _ => "a, b > 1 and mu, nu >= 1",
        };
        return Err(Error::Precondition(format!(
            "zero-location hypotheses not met ({need}); got mu={}, a={}, nu={}, b={}",
            p.mu(),
            p.a(),
            p.nu(),
            p.b()
        )));
    }
    let roots = find_roots(&partial_sum_poly(p, n, which)?)?;
    Ok(ExteriorReport {
        verdict: roots.min_nonzero_modulus > 1.0,
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> PolyCoeffs {
        PolyCoeffs::new(c.to_vec(), PartialSumKind::Raw).unwrap()
    }

    #[test]
    fn simple_roots() {
        let r = find_roots(&poly(&[-1.0, 0.0, 1.0])).unwrap();
        assert!((r.min_modulus - 1.0).abs() < 1e-14);
        assert!((r.roots[0] - C64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((r.roots[1] - C64::new(-1.0, 0.0)).norm() < 1e-14);
        let r = find_roots(&poly(&[1.0, 1.0])).unwrap();
        assert!((r.roots[0] + 1.0).norm() < 1e-15);
    }

    #[test]
    fn trailing_zeros_trimmed_and_origin_roots_counted() {
        let c = PolyCoeffs::new(vec![0.0, 0.0, 2.0, 1.0, 0.0], PartialSumKind::Normalized).unwrap();
        assert_eq!(c.degree(), 3);
        let r = find_roots(&c).unwrap();
        assert_eq!(r.zero_roots, 2);
        assert_eq!(r.min_modulus, 0.0);
        assert!((r.min_nonzero_modulus - 2.0).abs() < 1e-13);
    }

    #[test]
    fn kakeya_examples() {
        assert!(kakeya_applicable(&poly(&[1.0, 0.5, 0.1])));
        assert!(!kakeya_applicable(&poly(&[1.0, 1.0, 0.5])));
        let p = WrightParams::new(1.5, 1.0, 1.5, 1.0).unwrap();
        assert!(kakeya_applicable(
            &partial_sum_poly(&p, 8, PartialSumKind::Raw).unwrap()
        ));
    }

    #[test]
    fn partial_sum_coefficient_examples() {
        let p = WrightParams::unit_steps(1.0, 1.0).unwrap();
        assert_eq!(
            partial_sum_poly(&p, 1, PartialSumKind::Raw).unwrap().coeffs,
            vec![1.0, 1.0]
        );
        let p = WrightParams::unit_steps(2.0, 2.0).unwrap();
        let q = partial_sum_poly(&p, 3, PartialSumKind::QFactor).unwrap().coeffs;
        assert_eq!(q.len(), 3);
        assert_eq!(q[0], 1.0);
        assert!((q[1] - 0.25).abs() < 1e-15 && (q[2] - 1.0 / 36.0).abs() < 1e-15);
        let n = partial_sum_poly(&p, 2, PartialSumKind::Normalized).unwrap().coeffs;
        assert_eq!(n[..2], [0.0, 1.0]);
    }

    #[test]
    fn raw_family_exterior() {
        let p = WrightParams::new(1.5, 1.0, 1.5, 1.0).unwrap();
        let r = verify_exterior(&p, 8, PartialSumKind::Raw).unwrap();
        assert!(r.verdict, "{}", r.roots.min_modulus);
        let p = WrightParams::new(2.0, 1.0, 2.0, 1.0).unwrap();
        assert!(verify_exterior(&p, 10, PartialSumKind::Raw).unwrap().verdict);
    }

    #[test]
    fn qfactor_family_and_preconditions() {
        let p = WrightParams::unit_steps(1.5, 1.5).unwrap();
        assert!(verify_exterior(&p, 10, PartialSumKind::QFactor).unwrap().verdict);
        let r = verify_exterior(&p, 10, PartialSumKind::Normalized).unwrap();
        assert_eq!(r.roots.zero_roots, 1);
        assert!(r.verdict);
        let bad = WrightParams::unit_steps(0.5, 0.5).unwrap();
        assert!(matches!(
            verify_exterior(&bad, 10, PartialSumKind::QFactor),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn widely_spread_coefficients_converge() {
        let p = WrightParams::new(2.0, 1.0, 2.0, 1.0).unwrap();
        let c = partial_sum_poly(&p, 24, PartialSumKind::Raw).unwrap();
        let r = find_roots(&c).unwrap();
        assert!(r.residual_max <= 1e-9, "{}", r.residual_max);
        assert_eq!(r.roots.len(), 24);
    }

    #[test]
    fn output_is_deterministic() {
        let p = WrightParams::new(1.2, 1.0, 1.2, 1.0).unwrap();
        let c = partial_sum_poly(&p, 16, PartialSumKind::Raw).unwrap();
        assert_eq!(find_roots(&c).unwrap(), find_roots(&c).unwrap());
    }
}
