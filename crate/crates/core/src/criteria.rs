//! Sufficient conditions for geometric properties of the normalized
//! four-parameter Wright function.
//!
//! Each criterion evaluates every hypothesis, records both sides, and
//! reports `Established` only when all of them hold. `NotEstablished` says
//! nothing about whether the property is actually false.

use std::f64::consts::E;
use std::fmt;

use serde::Serialize;

use crate::gamma::{ln_gamma_pos, log_coeff_alpha, WrightParams};
use crate::ledger::{Hypothesis, Relation};
use crate::scalar::Scalar;
use crate::series::two_param_params;

/// The disk a property is asserted on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    /// The unit disk.
    FullDisk,
    /// The disk of radius 1/2.
    HalfDisk,
}

impl Region {
    pub fn radius(self) -> f64 {
        match self {
            Region::FullDisk => 1.0,
            Region::HalfDisk => 0.5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Property<T> {
    Starlike,
    StarlikeOrder {
        eta: T,
    },
    Convex,
    Ucv,
    Sp,
    /// Close-to-convex with respect to the normalized function with these parameters.
    CloseToConvex {
        witness: WrightParams<T>,
    },
    HalfPlaneRe,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PropertyRegion<T> {
    pub property: Property<T>,
    pub region: Region,
}

impl<T: Scalar> PropertyRegion<T> {
    pub fn starlike_disk() -> Self {
        Self {
            property: Property::Starlike,
            region: Region::FullDisk,
        }
    }
    pub fn starlike_half() -> Self {
        Self {
            property: Property::Starlike,
            region: Region::HalfDisk,
        }
    }
    pub fn starlike_order(eta: T) -> Self {
        Self {
            property: Property::StarlikeOrder { eta },
            region: Region::FullDisk,
        }
    }
    pub fn convex_half() -> Self {
        Self {
            property: Property::Convex,
            region: Region::HalfDisk,
        }
    }
    pub fn ucv() -> Self {
        Self {
            property: Property::Ucv,
            region: Region::FullDisk,
        }
    }
    pub fn sp() -> Self {
        Self {
            property: Property::Sp,
            region: Region::FullDisk,
        }
    }
    pub fn close_to_convex(witness: WrightParams<T>) -> Self {
        Self {
            property: Property::CloseToConvex { witness },
            region: Region::FullDisk,
        }
    }
}

impl<T: Scalar> fmt::Display for PropertyRegion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let disk = match self.region {
            Region::FullDisk => "D",
            Region::HalfDisk => "D_1/2",
        };
        match self.property {
            Property::Starlike => write!(f, "starlike in {disk}"),
            Property::StarlikeOrder { eta } => write!(f, "starlike of order {eta} in {disk}"),
            Property::Convex => write!(f, "convex in {disk}"),
            Property::Ucv => write!(f, "uniformly convex in {disk}"),
            Property::Sp => write!(f, "in S_p on {disk}"),
            Property::CloseToConvex { witness } => write!(
                f,
                "close-to-convex in {disk} w.r.t. W(({}, {}), ({}, {}))",
                witness.mu(),
                witness.a(),
                witness.nu(),
                witness.b()
            ),
            Property::HalfPlaneRe => write!(f, "Re > 1/2 in {disk}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Established,
    NotEstablished,
}

pub const SEMANTICS_NOTE: &str = "sufficient condition only: NotEstablished does not mean the property fails";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport<T> {
    pub theorem_id: String,
    pub params: WrightParams<T>,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusions: Vec<PropertyRegion<T>>,
    pub verdict: Verdict,
    pub note: &'static str,
}

impl<T: Scalar> CriterionReport<T> {
    fn new(
        id: &str,
        params: WrightParams<T>,
        hypotheses: Vec<Hypothesis>,
        conclusions: Vec<PropertyRegion<T>>,
    ) -> Self {
        let verdict = if hypotheses.iter().all(|h| h.holds) {
            Verdict::Established
        } else {
            Verdict::NotEstablished
        };
        Self {
            theorem_id: id.to_string(),
            params,
            hypotheses,
            conclusions,
            verdict,
            note: SEMANTICS_NOTE,
        }
    }

    pub fn established(&self) -> bool {
        self.verdict == Verdict::Established
    }

    /// First failing hypothesis, if any.
    pub fn first_failure(&self) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| !h.holds)
    }
}

impl<T: Scalar> fmt::Display for CriterionReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        writeln!(
            f,
            "{} (mu={}, a={}, nu={}, b={}): {:?}",
            self.theorem_id,
            p.mu(),
            p.a(),
            p.nu(),
            p.b(),
            self.verdict
        )?;
        for c in &self.conclusions {
            writeln!(f, "  conclusion: {c}")?;
        }
        for h in &self.hypotheses {
            writeln!(f, "  {h}")?;
        }
        Ok(())
    }
}

fn lg<T: Scalar>(x: T) -> T {
    ln_gamma_pos(x)
}

fn at_least_one<T: Scalar>(p: &WrightParams<T>) -> Vec<Hypothesis> {
    let one = T::one();
    vec![
        Hypothesis::compare("a >= 1", p.a(), Relation::Ge, one),
        Hypothesis::compare("b >= 1", p.b(), Relation::Ge, one),
        Hypothesis::compare("mu >= 1", p.mu(), Relation::Ge, one),
        Hypothesis::compare("nu >= 1", p.nu(), Relation::Ge, one),
    ]
}

fn positive_steps<T: Scalar>(p: &WrightParams<T>) -> Vec<Hypothesis> {
    vec![
        Hypothesis::compare("mu > 0", p.mu(), Relation::Gt, T::zero()),
        Hypothesis::compare("nu > 0", p.nu(), Relation::Gt, T::zero()),
    ]
}

/// `ln Γ(x + kμ)` shorthand bound to the `a` or `b` side.
struct Side<T> {
    base: T,
    step: T,
}

impl<T: Scalar> Side<T> {
    fn a(p: &WrightParams<T>) -> Self {
        Self {
            base: p.a(),
            step: p.mu(),
        }
    }
    fn b(p: &WrightParams<T>) -> Self {
        Self {
            base: p.b(),
            step: p.nu(),
        }
    }
    fn lg(&self, k: usize) -> T {
        lg(self.base + T::idx(k) * self.step)
    }
}

/// `Γ(a+2μ)/Γ(a+3μ) < Γ(b+3ν) / (c Γ(b+2ν))`.
fn ratio_condition<T: Scalar>(name: &str, p: &WrightParams<T>, c: T) -> Hypothesis {
    let (sa, sb) = (Side::a(p), Side::b(p));
    Hypothesis::compare_ln(name, sa.lg(2) - sa.lg(3), Relation::Lt, sb.lg(3) - sb.lg(2) - c.ln())
}

/// `Γ(a+μ)Γ(a+3μ)/Γ²(a+2μ) < c Γ²(b+2ν) / (Γ(b+ν)Γ(b+3ν))`.
fn log_convexity_condition<T: Scalar>(name: &str, p: &WrightParams<T>, c: T) -> Hypothesis {
    let (sa, sb) = (Side::a(p), Side::b(p));
    let two = T::c(2.0);
    Hypothesis::compare_ln(
        name,
        sa.lg(1) + sa.lg(3) - two * sa.lg(2),
        Relation::Lt,
        c.ln() + two * sb.lg(2) - sb.lg(1) - sb.lg(3),
    )
}

/// `c1 α_1 + c2 (e − 1) α_2 < rhs`.
fn moment_condition<T: Scalar>(name: &str, p: &WrightParams<T>, c1: T, c2: T, rhs: T) -> Hypothesis {
    let a1 = log_coeff_alpha(p, 1).exp();
    let a2 = log_coeff_alpha(p, 2).exp();
    let lhs = c1 * a1 + c2 * T::c(E - 1.0) * a2;
    Hypothesis::compare(name, lhs, Relation::Lt, rhs)
}

/// The `b` threshold for starlikeness through the quotient bound: the
/// positive root of `(a²+a) b² + (a²−a−1) b − (a+1) = 0`.
pub fn kt1_b_threshold<T: Scalar>(a: T) -> T {
    let q = a * a - a - T::one();
    let lead = a * a + a;
    (-q + (q * q + T::c(4.0) * (a + T::one()) * lead).sqrt()) / (T::c(2.0) * lead)
}

/// Starlikeness in the unit disk via the quotient `𝕎′ − 𝕎/z`.
pub fn kt1_starlike<T: Scalar>(p: &WrightParams<T>) -> CriterionReport<T> {
    let (a, b) = (p.a(), p.b());
    let mut h = at_least_one(p);
    h.extend(positive_steps(p));
    h.push(Hypothesis::compare(
        "b > b_threshold(a)",
        b,
        Relation::Gt,
        kt1_b_threshold(a),
    ));
    h.push(ratio_condition(
        "(i) G(a+2mu)/G(a+3mu) < G(b+3nu)/(3G(b+2nu))",
        p,
        T::c(3.0),
    ));
    h.push(log_convexity_condition(
        "(ii) G(a+mu)G(a+3mu)/G(a+2mu)^2 < 3G(b+2nu)^2/(2G(b+nu)G(b+3nu))",
        p,
        T::c(1.5),
    ));
    let s = a * b * (a + b + a * b);
    let rhs = (s - (a + T::one()) * (b + T::one())) / s;
    h.push(moment_condition(
        "(iii) alpha1 + 2(e-1)alpha2 < 1 - (a+1)(b+1)/(ab(a+b+ab))",
        p,
        T::one(),
        T::c(2.0),
        rhs,
    ));
    CriterionReport::new("kt1_starlike", *p, h, vec![PropertyRegion::starlike_disk()])
}

fn h2_first_two<T: Scalar>(p: &WrightParams<T>) -> Vec<Hypothesis> {
    vec![
        ratio_condition("(i) G(a+2mu)/G(a+3mu) < 3G(b+3nu)/(8G(b+2nu))", p, T::c(8.0 / 3.0)),
        log_convexity_condition(
            "(ii) G(a+mu)G(a+3mu)/G(a+2mu)^2 < 16G(b+2nu)^2/(9G(b+nu)G(b+3nu))",
            p,
            T::c(16.0 / 9.0),
        ),
    ]
}

/// Convexity in the disk of radius 1/2 via `|𝕎′ − 1| < 1`.
pub fn kt2_convex_half<T: Scalar>(p: &WrightParams<T>) -> CriterionReport<T> {
    let mut h = positive_steps(p);
    h.extend(h2_first_two(p));
    h.push(moment_condition(
        "(iii) 2alpha1 + 3(e-1)alpha2 < 1",
        p,
        T::c(2.0),
        T::c(3.0),
        T::one(),
    ));
    CriterionReport::new("kt2_convex_half", *p, h, vec![PropertyRegion::convex_half()])
}

/// Starlikeness in the unit disk via `|𝕎′ − 1| < 2/√5`.
pub fn kt3_starlike_via_deriv<T: Scalar>(p: &WrightParams<T>) -> CriterionReport<T> {
    let mut h = positive_steps(p);
    h.extend(h2_first_two(p));
    h.push(moment_condition(
        "2alpha1 + 3(e-1)alpha2 < 2/sqrt(5)",
        p,
        T::c(2.0),
        T::c(3.0),
        T::c(2.0) / T::c(5.0).sqrt(),
    ));
    CriterionReport::new("kt3_starlike_via_deriv", *p, h, vec![PropertyRegion::starlike_disk()])
}

/// Starlikeness in the disk of radius 1/2 via `|𝕎/z − 1| < 1`.
pub fn kt4_starlike_half<T: Scalar>(p: &WrightParams<T>) -> CriterionReport<T> {
    let mut h = positive_steps(p);
    h.push(ratio_condition(
        "(i) G(a+2mu)/G(a+3mu) < G(b+3nu)/(2G(b+2nu))",
        p,
        T::c(2.0),
    ));
    h.push(log_convexity_condition(
        "(ii) G(a+mu)G(a+3mu)/G(a+2mu)^2 < 2G(b+2nu)^2/(G(b+nu)G(b+3nu))",
        p,
        T::c(2.0),
    ));
    h.push(moment_condition(
        "(iii) alpha1 + (e-1)alpha2 < 1",
        p,
        T::one(),
        T::one(),
        T::one(),
    ));
    CriterionReport::new("kt4_starlike_half", *p, h, vec![PropertyRegion::starlike_half()])
}

/// Uniform convexity via bounds on `|z𝕎″|` and `|𝕎′|`.
///
/// Besides the three stated conditions, the two pairs of conditions that
/// make the underlying Fox-Wright enclosures valid are also required.
pub fn yyy5_ucv<T: Scalar>(p: &WrightParams<T>) -> CriterionReport<T> {
    let (sa, sb) = (Side::a(p), Side::b(p));
    let two = T::c(2.0);
    let mut h = positive_steps(p);
    let first = Hypothesis::compare_ln(
        "(i) G(a+mu)/G(a+2mu) < G(b+2nu)/(4G(b+nu))",
        sa.lg(1) - sa.lg(2),
        Relation::Lt,
        sb.lg(2) - sb.lg(1) - T::c(4.0).ln(),
    );
    h.push(first.clone());
    h.push(Hypothesis::compare_ln(
        "(ii) G(a)G(a+2mu)/G(a+mu)^2 < 4G(b+2nu)^2/(3G(b+nu)G(b+3nu))",
        sa.lg(0) + sa.lg(2) - two * sa.lg(1),
        Relation::Lt,
        T::c(4.0 / 3.0).ln() + two * sb.lg(2) - sb.lg(1) - sb.lg(3),
    ));
    h.push(moment_condition(
        "(iii) alpha1 + 3(e-1)alpha2 < 1/4",
        p,
        T::one(),
        T::c(3.0),
        T::c(0.25),
    ));
    h.push(Hypothesis {
        name: format!("(H4') {}", &first.name[4..]),
        ..first
    });
    h.push(log_convexity_condition(
        "(H4') G(a+mu)G(a+3mu)/G(a+2mu)^2 < 4G(b+2nu)^2/(3G(b+nu)G(b+3nu))",
        p,
        T::c(4.0 / 3.0),
    ));
    for mut x in h2_first_two(p) {
        x.name = format!("(H4'') {}", x.name.split_once(' ').map(|s| s.1).unwrap_or(&x.name));
        h.push(x);
    }
    CriterionReport::new("yyy5_ucv", *p, h, vec![PropertyRegion::ucv()])
}

/// `φ(a) = (3a+2) / (a(a+1))`.
pub fn phi<T: Scalar>(a: T) -> T {
    (T::c(3.0) * a + T::c(2.0)) / (a * (a + T::one()))
}

/// Positive root of `s a(a+1) b² − B b − (s(a+1) + 2a + 1) = 0` with
/// `s = 1 − η`, `B = (a+1) + s(a+1−a²)`; `None` if `η ∉ [0, 1)`.
///
/// Returns the value and the discriminant.
pub fn psi_eta<T: Scalar>(a: T, eta: T) -> Option<(T, T)> {
    if !(eta >= T::zero() && eta < T::one()) {
        return None;
    }
    let one = T::one();
    let two = T::c(2.0);
    let s = one - eta;
    let big_b = (a + one) + s * (a + one - a * a);
    let disc = big_b * big_b + T::c(4.0) * a * s * (a + one) * (s * (a + one) + two * a + one);
    Some(((big_b + disc.sqrt()) / (two * a * s * (a + one)), disc))
}

/// `τ(a) = (3(a+1) − a² + √(a⁴+14a³+35a²+30a+9)) / (2a(a+1))`.
pub fn tau<T: Scalar>(a: T) -> T {
    let a2 = a * a;
    let root = (a2 * a2 + T::c(14.0) * a2 * a + T::c(35.0) * a2 + T::c(30.0) * a + T::c(9.0)).sqrt();
    (T::c(3.0) * (a + T::one()) - a2 + root) / (T::c(2.0) * a * (a + T::one()))
}

/// `φ₁(a) = ((a+1−a²) + √(a⁴+2a³+7a²+6a+1)) / (2a(a+1))`.
pub fn phi1<T: Scalar>(a: T) -> T {
    let a2 = a * a;
    let root = (a2 * a2 + T::c(2.0) * a2 * a + T::c(7.0) * a2 + T::c(6.0) * a + T::one()).sqrt();
    (a + T::one() - a2 + root) / (T::c(2.0) * a * (a + T::one()))
}

/// `φ₂(a)`, the `b` threshold for `|𝕎/z − 1| < 2/√5` on the disk.
pub fn phi2<T: Scalar>(a: T) -> T {
    let r5 = T::c(5.0).sqrt();
    let a2 = a * a;
    let root = (T::c(4.0) * a2 * a2
        + T::c(4.0) * r5 * a2 * a
        + (T::c(5.0) + T::c(12.0) * r5) * a2
        + T::c(2.0) * (T::c(5.0) + T::c(4.0) * r5) * a
        + T::c(5.0))
    .sqrt();
    (r5 * (a + T::one()) - T::c(2.0) * a2 + root) / (T::c(4.0) * a * (a + T::one()))
}

/// `ψ₁(a) = ((3−a) + √(a²+2a+9)) / (2a)`.
pub fn psi1<T: Scalar>(a: T) -> T {
    (T::c(3.0) - a + (a * a + T::c(2.0) * a + T::c(9.0)).sqrt()) / (T::c(2.0) * a)
}

/// `ψ₂(a)`, the `b` threshold for `|𝕎′ − 1| < 2/√5` on the disk.
pub fn psi2<T: Scalar>(a: T) -> T {
    let r5 = T::c(5.0).sqrt();
    let a2 = a * a;
    let root = (T::c(4.0) * a2 * a2
        + T::c(8.0) * r5 * a2 * a
        + T::c(20.0) * (T::one() + r5) * a2
        + T::c(4.0) * (T::c(15.0) + T::c(4.0) * r5) * a
        + T::c(45.0))
    .sqrt();
    (r5 * (T::c(2.0) * a + T::c(3.0)) - T::c(2.0) * a2 + root) / (T::c(4.0) * a * (a + T::one()))
}

fn threshold_report<T: Scalar>(
    id: &str,
    p: &WrightParams<T>,
    label: &str,
    threshold: T,
    conclusions: Vec<PropertyRegion<T>>,
) -> CriterionReport<T> {
    let mut h = at_least_one(p);
    h.push(Hypothesis::compare(label, p.b(), Relation::Ge, threshold));
    CriterionReport::new(id, *p, h, conclusions)
}

/// `b ≥ φ(a)`: starlike in the disk, and close-to-convex with respect to
/// `𝕎_{(μ,a),(1,b)}`.
pub fn threshold_starlike<T: Scalar>(p: &WrightParams<T>) -> CriterionReport<T> {
    let witness = WrightParams::new(p.mu(), p.a(), T::one(), p.b()).expect("witness inherits valid parameters");
    threshold_report(
        "threshold_starlike",
        p,
        "b >= phi(a)",
        phi(p.a()),
        vec![
            PropertyRegion::starlike_disk(),
            PropertyRegion::close_to_convex(witness),
        ],
    )
}

/// `b ≥ ψ(a, η)`: starlike of order `η` in the disk.
pub fn threshold_starlike_order<T: Scalar>(p: &WrightParams<T>, eta: T) -> CriterionReport<T> {
    let mut h = at_least_one(p);
    h.push(Hypothesis::compare("eta >= 0", eta, Relation::Ge, T::zero()));
    h.push(Hypothesis::compare("eta < 1", eta, Relation::Lt, T::one()));
    match psi_eta(p.a(), eta) {
        Some((thr, disc)) => {
            h.push(Hypothesis::compare("discriminant >= 0", disc, Relation::Ge, T::zero()));
            h.push(Hypothesis::compare("b >= psi(a, eta)", p.b(), Relation::Ge, thr));
        }
        None => h.push(Hypothesis::compare(
            "b >= psi(a, eta)",
            p.b(),
            Relation::Ge,
            T::infinity(),
        )),
    }
    CriterionReport::new(
        "threshold_starlike_order",
        *p,
        h,
        vec![PropertyRegion::starlike_order(eta)],
    )
}

/// `b ≥ τ(a)`: member of `S_p`.
pub fn threshold_sp<T: Scalar>(p: &WrightParams<T>) -> CriterionReport<T> {
    threshold_report("threshold_sp", p, "b >= tau(a)", tau(p.a()), vec![PropertyRegion::sp()])
}

/// `(b ≥ φ₁(a) ⇒ starlike in D_1/2, b ≥ φ₂(a) ⇒ starlike in D)`.
pub fn threshold_th4<T: Scalar>(p: &WrightParams<T>) -> (CriterionReport<T>, CriterionReport<T>) {
    (
        threshold_report(
            "threshold_th4_i",
            p,
            "b >= phi1(a)",
            phi1(p.a()),
            vec![PropertyRegion::starlike_half()],
        ),
        threshold_report(
            "threshold_th4_ii",
            p,
            "b >= phi2(a)",
            phi2(p.a()),
            vec![PropertyRegion::starlike_disk()],
        ),
    )
}

/// `(b ≥ ψ₁(a) ⇒ convex in D_1/2, b ≥ ψ₂(a) ⇒ starlike in D)`.
pub fn threshold_convex<T: Scalar>(p: &WrightParams<T>) -> (CriterionReport<T>, CriterionReport<T>) {
    (
        threshold_report(
            "threshold_convex_i",
            p,
            "b >= psi1(a)",
            psi1(p.a()),
            vec![PropertyRegion::convex_half()],
        ),
        threshold_report(
            "threshold_convex_ii",
            p,
            "b >= psi2(a)",
            psi2(p.a()),
            vec![PropertyRegion::starlike_disk()],
        ),
    )
}

/// Named criterion, for sweeps and command-line selection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum CriterionId {
    Kt1Starlike,
    Kt2ConvexHalf,
    Kt3StarlikeViaDeriv,
    Kt4StarlikeHalf,
    Yyy5Ucv,
    ThresholdStarlike,
    ThresholdStarlikeOrder(f64),
    ThresholdSp,
    ThresholdTh4I,
    ThresholdTh4Ii,
    ThresholdConvexI,
    ThresholdConvexIi,
}

impl CriterionId {
    /// Every criterion without extra arguments, in report order.
    pub const ALL: [CriterionId; 11] = [
        CriterionId::Kt1Starlike,
        CriterionId::Kt2ConvexHalf,
        CriterionId::Kt3StarlikeViaDeriv,
        CriterionId::Kt4StarlikeHalf,
        CriterionId::Yyy5Ucv,
        CriterionId::ThresholdStarlike,
        CriterionId::ThresholdSp,
        CriterionId::ThresholdTh4I,
        CriterionId::ThresholdTh4Ii,
        CriterionId::ThresholdConvexI,
        CriterionId::ThresholdConvexIi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CriterionId::Kt1Starlike => "kt1_starlike",
            CriterionId::Kt2ConvexHalf => "kt2_convex_half",
            CriterionId::Kt3StarlikeViaDeriv => "kt3_starlike_via_deriv",
            CriterionId::Kt4StarlikeHalf => "kt4_starlike_half",
            CriterionId::Yyy5Ucv => "yyy5_ucv",
            CriterionId::ThresholdStarlike => "threshold_starlike",
            CriterionId::ThresholdStarlikeOrder(_) => "threshold_starlike_order",
            CriterionId::ThresholdSp => "threshold_sp",
            CriterionId::ThresholdTh4I => "threshold_th4_i",
            CriterionId::ThresholdTh4Ii => "threshold_th4_ii",
            CriterionId::ThresholdConvexI => "threshold_convex_i",
            CriterionId::ThresholdConvexIi => "threshold_convex_ii",
        }
    }

    /// Parses a criterion name; the order criterion is written
    /// `threshold_starlike_order:<eta>`.
    pub fn parse(s: &str) -> Option<Self> {
        if let Some(eta) = s.strip_prefix("threshold_starlike_order:") {
            return eta.parse().ok().map(CriterionId::ThresholdStarlikeOrder);
        }
        Self::ALL.iter().copied().find(|c| c.name() == s)
    }

    pub fn evaluate<T: Scalar>(&self, p: &WrightParams<T>) -> CriterionReport<T> {
        match *self {
            CriterionId::Kt1Starlike => kt1_starlike(p),
            CriterionId::Kt2ConvexHalf => kt2_convex_half(p),
            CriterionId::Kt3StarlikeViaDeriv => kt3_starlike_via_deriv(p),
            CriterionId::Kt4StarlikeHalf => kt4_starlike_half(p),
            CriterionId::Yyy5Ucv => yyy5_ucv(p),
            CriterionId::ThresholdStarlike => threshold_starlike(p),
            CriterionId::ThresholdStarlikeOrder(eta) => threshold_starlike_order(p, T::c(eta)),
            CriterionId::ThresholdSp => threshold_sp(p),
            CriterionId::ThresholdTh4I => threshold_th4(p).0,
            CriterionId::ThresholdTh4Ii => threshold_th4(p).1,
            CriterionId::ThresholdConvexI => threshold_convex(p).0,
            CriterionId::ThresholdConvexIi => threshold_convex(p).1,
        }
    }
}

/// Runs every criterion in [`CriterionId::ALL`].
pub fn all_criteria<T: Scalar>(p: &WrightParams<T>) -> Vec<CriterionReport<T>> {
    CriterionId::ALL.iter().map(|c| c.evaluate(p)).collect()
}

/// Special families of the normalized four-parameter function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum FamilyPreset<T> {
    /// `𝔽(b, z) = z ₀F₁(; b; z)`, i.e. `(μ, a, ν, b) = (1, 1, 1, b)`.
    ConfluentF(T),
    /// Normalized Bessel function `𝕁_β`.
    Bessel(T),
    /// Normalized two-parameter Wright function `𝕎_{b,ν}`.
    TwoParam { b: T, nu: T },
}

impl<T: Scalar> FamilyPreset<T> {
    /// Parameters the criteria are evaluated at.
    ///
    /// `𝕁_β(z) = −𝕎(−z)` for `(μ, a, ν, b) = (1, β+1, 1, 1)`; with `μ = ν = 1`
    /// the function is symmetric in `a` and `b`, and the criteria are read with
    /// `a = 1`, `b = β + 1` so that the `b` thresholds apply to `β`. Rotation
    /// `f(z) ↦ −f(−z)` preserves every property checked here.
    pub fn params(&self) -> crate::error::Result<WrightParams<T>> {
        match *self {
            FamilyPreset::ConfluentF(b) => WrightParams::unit_steps(T::one(), b),
            FamilyPreset::Bessel(beta) => {
                if !(beta > -T::one()) {
                    return Err(crate::error::Error::Domain(format!("beta must be > -1, got {beta}")));
                }
                WrightParams::unit_steps(T::one(), beta + T::one())
            }
            FamilyPreset::TwoParam { b, nu } => two_param_params(b, nu),
        }
    }
}

/// Maps a family to its parameters and runs every criterion.
pub fn family_preset<T: Scalar>(f: FamilyPreset<T>) -> crate::error::Result<Vec<CriterionReport<T>>> {
    Ok(all_criteria(&f.params()?))
}
