use serde::Serialize;

use num_complex::Complex;

use super::{SeriesValue, TruncatedSeries};
use crate::error::{Error, Result};
use crate::gamma::ln_gamma_pos;
use crate::scalar::Scalar;

/// Parameters of the Fox-Wright function
/// `pΨq(x) = Σ Π Γ(a_i + kA_i) / Π Γ(b_j + kB_j) · x^k / k!`.
///
/// Invariants: every `a_i, b_j > 0` and `A_i, B_j > 0`, so all gamma
/// arguments stay positive; `ε = 1 + ΣB_j − ΣA_i > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoxWrightSpec<T> {
    upper: Vec<(T, T)>,
    lower: Vec<(T, T)>,
}

impl<T: Scalar> FoxWrightSpec<T> {
    pub fn new(upper: Vec<(T, T)>, lower: Vec<(T, T)>) -> Result<Self> {
        for &(a, big_a) in upper.iter().chain(lower.iter()) {
            if !(a > T::zero()) || !a.is_finite() {
                return Err(Error::Domain(format!("gamma argument offset must be > 0, got {a}")));
            }
            if !(big_a > T::zero()) || !big_a.is_finite() {
                return Err(Error::Domain(format!("gamma argument step must be > 0, got {big_a}")));
            }
        }
        let spec = Self { upper, lower };
        let eps = spec.epsilon();
        if !(eps > T::zero()) {
            return Err(Error::Domain(format!("Fox-Wright series needs epsilon > 0, got {eps}")));
        }
        Ok(spec)
    }

    pub fn upper(&self) -> &[(T, T)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(T, T)] {
        &self.lower
    }

    /// `ε = 1 + Σ B_j − Σ A_i`.
    pub fn epsilon(&self) -> T {
        let sa: T = self.upper.iter().map(|p| p.1).sum();
        let sb: T = self.lower.iter().map(|p| p.1).sum();
        T::one() + sb - sa
    }

    /// `ln ψ_k = Σ ln Γ(a_i + kA_i) − Σ ln Γ(b_j + kB_j)`.
    pub fn ln_psi(&self, k: usize) -> T {
        let kk = T::idx(k);
        let up: T = self.upper.iter().map(|&(a, s)| ln_gamma_pos(a + kk * s)).sum();
        let lo: T = self.lower.iter().map(|&(b, s)| ln_gamma_pos(b + kk * s)).sum();
        up - lo
    }

    /// Index from which the elementary majorant of the coefficient ratio
    /// is non-increasing.
    fn monotone_from(&self) -> usize {
        if self.upper.is_empty() {
            return 0;
        }
        let sa: T = self.upper.iter().map(|p| p.1).sum();
        let sb: T = self.lower.iter().map(|p| p.1).sum();
        let c_min = self.upper.iter().map(|&(a, s)| (a + s) / s).fold(T::infinity(), T::min);
        let d_max = self.lower.iter().map(|&(b, s)| b / s).fold(T::one(), T::max);
        let k = (sa * d_max - (sb + T::one()) * c_min) / self.epsilon();
        if k <= T::zero() {
            0
        } else {
            k.ceil().to_usize().unwrap_or(usize::MAX)
        }
    }

    /// Upper bound on `c_{k+1} / c_k` (with `c_k = ψ_k / k!`) built from
    /// `Γ(x+A)/Γ(x) ≤ (x+A)^A` and `Γ(y+B)/Γ(y) ≥ y^B e^{−B/y}`.
    fn ratio_majorant(&self, k: usize) -> T {
        let kk = T::idx(k);
        let mut ln = -(kk + T::one()).ln();
        for &(a, s) in &self.upper {
            ln = ln + s * (a + (kk + T::one()) * s).ln();
        }
        for &(b, s) in &self.lower {
            let y = b + kk * s;
            ln = ln - s * y.ln() + s / y;
        }
        ln.exp()
    }
}

/// Certified series for `pΨq` on `|x| ≤ radius`.
pub fn fox_wright_series<T: Scalar>(s: &FoxWrightSpec<T>, radius: T, tol: T) -> Result<TruncatedSeries<T>> {
    let start = s.monotone_from();
    let ln_c = |k: usize| s.ln_psi(k) - ln_gamma_pos(T::idx(k) + T::one());
    TruncatedSeries::build(
        |k| ln_c(k).exp(),
        |k| (k >= start).then(|| s.ratio_majorant(k)),
        0,
        radius,
        tol,
    )
}

/// `pΨq(x)` at a real argument.
pub fn eval_fox_wright<T: Scalar>(s: &FoxWrightSpec<T>, x: T, tol: T) -> Result<SeriesValue<T>> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("Fox-Wright argument must be finite, got {x}")));
    }
    let series = fox_wright_series(s, x.abs(), tol)?;
    Ok(SeriesValue {
        value: Complex::new(series.eval_real(x), T::zero()),
        terms_used: series.terms_used(),
        tail_bound: series.tail_bound(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn fact(k: usize) -> f64 {
        (1..=k).map(|j| j as f64).product()
    }

    #[test]
    fn exponential_spec() {
        let s = FoxWrightSpec::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)]).unwrap();
        let v = eval_fox_wright(&s, 1.0, 1e-15).unwrap();
        assert_relative_eq!(v.value.re, std::f64::consts::E, max_relative = 1e-14);
    }

    #[test]
    fn derivative_bound_spec_matches_brute_force() {
        // [(2,1)] / [(2,1),(2,1)] at x = 1: Σ (k+1)/((k+1)!)^2
        let s = FoxWrightSpec::new(vec![(2.0, 1.0)], vec![(2.0, 1.0), (2.0, 1.0)]).unwrap();
        let want: f64 = (0..60).map(|k| (k as f64 + 1.0) / (fact(k + 1) * fact(k + 1))).sum();
        let got = eval_fox_wright(&s, 1.0, 1e-15).unwrap();
        assert_relative_eq!(got.value.re, want, max_relative = 1e-14);
    }

    #[test]
    fn value_at_zero_is_psi0() {
        let s = FoxWrightSpec::new(
            vec![(1.0_f64, 1.0), (3.0, 1.0)],
            vec![(2.0, 1.0), (2.5, 1.5), (4.0, 1.0)],
        )
        .unwrap();
        let v = eval_fox_wright(&s, 0.0, 1e-12).unwrap();
        assert_relative_eq!(v.value.re, s.ln_psi(0).exp(), max_relative = 1e-15);
    }

    #[test]
    fn rejects_non_positive_epsilon() {
        let err = FoxWrightSpec::new(vec![(1.0, 1.0), (1.0, 1.0)], vec![(1.0, 1.0)]).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        assert!(FoxWrightSpec::new(vec![(0.0, 1.0)], vec![(1.0, 1.0)]).is_err());
    }

    #[test]
    fn majorant_dominates_true_ratios() {
        let s = FoxWrightSpec::new(
            vec![(1.0_f64, 1.0), (3.0, 1.0)],
            vec![(2.0, 1.0), (2.5, 1.5), (4.0, 1.0)],
        )
        .unwrap();
        for k in 0..200 {
            let ln_c = |k: usize| s.ln_psi(k) - ln_gamma_pos(k as f64 + 1.0);
            let exact = (ln_c(k + 1) - ln_c(k)).exp();
            assert!(s.ratio_majorant(k) >= exact * (1.0 - 1e-12), "k={k}");
        }
        // non-increasing from the certified start index on
        let start = s.monotone_from();
        for k in start..start + 300 {
            assert!(s.ratio_majorant(k + 1) <= s.ratio_majorant(k) * (1.0 + 1e-12));
        }
    }

    #[test]
    fn slowly_converging_spec_still_certifies() {
        let s = FoxWrightSpec::new(vec![(1.0, 1.2)], vec![(1.0, 0.5)]).unwrap();
        let v = eval_fox_wright(&s, 1.0, 1e-10).unwrap();
        assert!(v.tail_bound <= 1e-10);
        let brute: f64 = (0..200)
            .map(|k| (s.ln_psi(k) - ln_gamma_pos(k as f64 + 1.0)).exp())
            .sum();
        assert!((v.value.re - brute).abs() <= 1e-10 + 1e-13 * brute);
    }
}
