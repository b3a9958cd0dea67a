//! ψ-moments of a Fox-Wright series and the exponential two-sided enclosure
//! `ψ0 exp(ψ1 x / ψ0) ≤ pΨq(x) ≤ ψ0 + (e^x − 1) ψ1` for `x ≥ 0`, valid when
//! `ψ1 > ψ2` and `ψ1² < ψ0 ψ2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::WrightParams;
use crate::ledger::{Hypothesis, Relation};
use crate::scalar::Scalar;
use crate::series::FoxWrightSpec;

/// `ψ_0, ψ_1, ψ_2` together with their logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PsiMoments<T> {
    pub psi0: T,
    pub psi1: T,
    pub psi2: T,
    pub ln_psi0: T,
    pub ln_psi1: T,
    pub ln_psi2: T,
}

impl<T: Scalar> PsiMoments<T> {
    /// Moments given directly by value; all must be positive.
    pub fn from_values(psi0: T, psi1: T, psi2: T) -> Result<Self> {
        for v in [psi0, psi1, psi2] {
            if !(v > T::zero()) || !v.is_finite() {
                return Err(Error::Domain(format!("psi moments must be finite and > 0, got {v}")));
            }
        }
        Ok(Self {
            psi0,
            psi1,
            psi2,
            ln_psi0: psi0.ln(),
            ln_psi1: psi1.ln(),
            ln_psi2: psi2.ln(),
        })
    }

    fn from_logs(ln_psi0: T, ln_psi1: T, ln_psi2: T) -> Self {
        Self {
            psi0: ln_psi0.exp(),
            psi1: ln_psi1.exp(),
            psi2: ln_psi2.exp(),
            ln_psi0,
            ln_psi1,
            ln_psi2,
        }
    }
}

/// The first three coefficients `ψ_k` (without the `1/k!`), computed in log-space.
///
/// Gamma arguments are positive by construction of [`FoxWrightSpec`].
pub fn psi_moments<T: Scalar>(s: &FoxWrightSpec<T>) -> PsiMoments<T> {
    PsiMoments::from_logs(s.ln_psi(0), s.ln_psi(1), s.ln_psi(2))
}

/// Checks `ψ1 > ψ2` and `ψ1² < ψ0 ψ2`.
pub fn bound_conditions<T: Scalar>(m: &PsiMoments<T>) -> (bool, Vec<Hypothesis>) {
    let ledger = vec![
        Hypothesis::compare_ln("psi1 > psi2", m.ln_psi1, Relation::Gt, m.ln_psi2),
        Hypothesis::compare_ln(
            "psi1^2 < psi0*psi2",
            m.ln_psi1 + m.ln_psi1,
            Relation::Lt,
            m.ln_psi0 + m.ln_psi2,
        ),
    ];
    (ledger.iter().all(|h| h.holds), ledger)
}

/// Two-sided enclosure of `pΨq(x)`.
///
/// When `conditions_hold` is false the two formula values are still
/// returned but carry no guarantee.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult<T> {
    pub lower: T,
    pub upper: T,
    pub conditions_hold: bool,
    pub ledger: Vec<Hypothesis>,
}

pub fn two_sided_bound<T: Scalar>(s: &FoxWrightSpec<T>, x: T) -> Result<BoundResult<T>> {
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "enclosure is provided for finite x >= 0, got {x}"
        )));
    }
    let m = psi_moments(s);
    Ok(bound_from_moments(&m, x))
}

pub(crate) fn bound_from_moments<T: Scalar>(m: &PsiMoments<T>, x: T) -> BoundResult<T> {
    let (conditions_hold, ledger) = bound_conditions(m);
    // ψ0 exp(ψ1 x / ψ0) with the ratio formed in log-space
    let lower = (m.ln_psi0 + (m.ln_psi1 - m.ln_psi0).exp() * x).exp();
    let upper = m.psi0 + x.exp_m1() * m.psi1;
    BoundResult {
        lower,
        upper,
        conditions_hold,
        ledger,
    }
}

fn shifted_lower<T: Scalar>(p: &WrightParams<T>) -> Vec<(T, T)> {
    vec![(p.a() + p.mu(), p.mu()), (p.b() + p.nu(), p.nu())]
}

/// `1Ψ2[(2,1); (a+μ,μ), (b+ν,ν)]`, majorizing `|𝕎′ − 𝕎/z|` on the disk.
pub fn spec_quotient<T: Scalar>(p: &WrightParams<T>) -> Result<FoxWrightSpec<T>> {
    FoxWrightSpec::new(vec![(T::c(2.0), T::one())], shifted_lower(p))
}

/// `2Ψ3[(1,1),(3,1); (2,1),(a+μ,μ),(b+ν,ν)]`, majorizing `|𝕎′ − 1|`.
pub fn spec_derivative<T: Scalar>(p: &WrightParams<T>) -> Result<FoxWrightSpec<T>> {
    let mut lower = vec![(T::c(2.0), T::one())];
    lower.extend(shifted_lower(p));
    FoxWrightSpec::new(vec![(T::one(), T::one()), (T::c(3.0), T::one())], lower)
}

/// `1Ψ2[(1,1); (a+μ,μ),(b+ν,ν)]`, majorizing `|𝕎/z − 1|`.
pub fn spec_value<T: Scalar>(p: &WrightParams<T>) -> Result<FoxWrightSpec<T>> {
    FoxWrightSpec::new(vec![(T::one(), T::one())], shifted_lower(p))
}

/// `1Ψ2[(3,1); (a+μ,μ),(b+ν,ν)]`, majorizing `|z𝕎″|`.
pub fn spec_second_derivative<T: Scalar>(p: &WrightParams<T>) -> Result<FoxWrightSpec<T>> {
    FoxWrightSpec::new(vec![(T::c(3.0), T::one())], shifted_lower(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::eval_fox_wright;
    use approx::assert_relative_eq;

    #[test]
    fn moments_of_quotient_spec() {
        let s = FoxWrightSpec::new(vec![(2.0, 1.0)], vec![(2.0, 1.0), (2.0, 1.0)]).unwrap();
        let m = psi_moments(&s);
        assert_relative_eq!(m.psi0, 1.0, max_relative = 1e-14);
        assert_relative_eq!(m.psi1, 0.5, max_relative = 1e-14);
        assert_relative_eq!(m.psi2, 1.0 / 6.0, max_relative = 1e-14);
        let (ok, ledger) = bound_conditions(&m);
        assert!(!ok);
        assert!(ledger[0].holds);
        assert!(!ledger[1].holds);
    }

    #[test]
    fn conditions_on_hand_values() {
        let m = PsiMoments::from_values(1.0, 0.3, 0.2).unwrap();
        assert!(bound_conditions(&m).0);
        let m = PsiMoments::from_values(1.0, 0.1, 0.2).unwrap();
        let (ok, ledger) = bound_conditions(&m);
        assert!(!ok);
        assert!(!ledger[0].holds);
        assert!(PsiMoments::from_values(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn bound_collapses_at_zero() {
        let p = WrightParams::unit_steps(2.0, 3.0).unwrap();
        let s = spec_quotient(&p).unwrap();
        let b = two_sided_bound(&s, 0.0).unwrap();
        let psi0 = psi_moments(&s).psi0;
        assert_relative_eq!(b.lower, psi0, max_relative = 1e-15);
        assert_relative_eq!(b.upper, psi0, max_relative = 1e-15);
        assert!(two_sided_bound(&s, -1.0).is_err());
    }

    #[test]
    fn enclosure_on_theorem_specs() {
        let p = WrightParams::unit_steps(1.0, 3.0).unwrap();
        let s = spec_value(&p).unwrap();
        let r = two_sided_bound(&s, 1.0).unwrap();
        assert!(r.conditions_hold);
        let v = eval_fox_wright(&s, 1.0, 1e-15).unwrap().value.re;
        assert!(r.lower <= v && v <= r.upper, "{} <= {v} <= {}", r.lower, r.upper);

        // ψ1² > ψ0ψ2 here, and the lower formula indeed overshoots
        let p = WrightParams::unit_steps(2.0, 3.0).unwrap();
        let s = spec_quotient(&p).unwrap();
        let r = two_sided_bound(&s, 1.0).unwrap();
        assert!(!r.conditions_hold);
        assert!(r.ledger[0].holds && !r.ledger[1].holds);
        let v = eval_fox_wright(&s, 1.0, 1e-15).unwrap().value.re;
        assert!(r.lower > v);
    }

    #[test]
    fn spec_moments_match_closed_forms() {
        use crate::gamma::log_gamma;
        let p = WrightParams::new(1.5, 2.0, 1.2, 3.0).unwrap();
        let lg = |x: f64| log_gamma(x).unwrap();
        let den = |k: f64| lg(2.0 + (k + 1.0) * 1.5) + lg(3.0 + (k + 1.0) * 1.2);
        let m = psi_moments(&spec_derivative(&p).unwrap());
        for (k, (got, num)) in [(m.ln_psi0, 2.0_f64), (m.ln_psi1, 3.0), (m.ln_psi2, 8.0)]
            .into_iter()
            .enumerate()
        {
            assert_relative_eq!(got, num.ln() - den(k as f64), max_relative = 1e-13);
        }
        let m = psi_moments(&spec_second_derivative(&p).unwrap());
        assert_relative_eq!(m.ln_psi1, 6.0_f64.ln() - den(1.0), max_relative = 1e-13);
    }
}
