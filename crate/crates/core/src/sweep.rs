//! One-parameter sweeps of the criteria, boundary location by bisection,
//! and the tables built from them.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{phi, psi1, CriterionId, FamilyPreset, Verdict};
use crate::error::{Error, Result};
use crate::gamma::WrightParams;
use crate::oracle::{verify_property, GridSpec};
use crate::series::two_param_params;

/// Width of the final bisection bracket.
pub const BISECT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    FourParam,
    TwoParam,
    Bessel,
    ConfluentF,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::FourParam => "four_param",
            Family::TwoParam => "two_param",
            Family::Bessel => "bessel",
            Family::ConfluentF => "confluent_f",
        }
    }

    /// Parameters this family reads; anything else in a spec is rejected.
    pub fn accepts(self) -> &'static [Param] {
        match self {
            Family::FourParam => &[Param::Mu, Param::A, Param::Nu, Param::B],
            Family::TwoParam => &[Param::Nu, Param::B],
            Family::Bessel => &[Param::Beta],
            Family::ConfluentF => &[Param::A, Param::B],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    Mu,
    A,
    Nu,
    B,
    Beta,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Mu => "mu",
            Param::A => "a",
            Param::Nu => "nu",
            Param::B => "b",
            Param::Beta => "beta",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Param::Mu, Param::A, Param::Nu, Param::B, Param::Beta]
            .into_iter()
            .find(|p| p.name() == s)
    }

    fn default_value(self) -> f64 {
        match self {
            Param::Beta => 0.5,
            _ => 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub family: Family,
    pub varying: Param,
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
    /// Values of the remaining parameters; unset ones default to 1 (`β` to 1/2).
    pub fixed: Vec<(Param, f64)>,
    pub criteria: Vec<CriterionId>,
    /// Run the matching oracle check on every row.
    pub oracle: Option<GridSpec>,
}

impl SweepSpec {
    pub fn new(family: Family, varying: Param, lo: f64, hi: f64, steps: usize) -> Self {
        Self {
            family,
            varying,
            lo,
            hi,
            steps,
            fixed: Vec::new(),
            criteria: Vec::new(),
            oracle: None,
        }
    }

    pub fn fix(mut self, p: Param, v: f64) -> Self {
        self.fixed.retain(|(q, _)| *q != p);
        self.fixed.push((p, v));
        self
    }

    pub fn criterion(mut self, c: CriterionId) -> Self {
        self.criteria.push(c);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lo < self.hi) || !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(Error::Domain(format!(
                "sweep range needs lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.steps < 2 {
            return Err(Error::Domain("sweep needs at least 2 steps".into()));
        }
        if self.criteria.is_empty() {
            return Err(Error::Domain("sweep needs at least one criterion".into()));
        }
        let accepts = self.family.accepts();
        for p in std::iter::once(&self.varying).chain(self.fixed.iter().map(|(p, _)| p)) {
            if !accepts.contains(p) {
                return Err(Error::Domain(format!(
                    "parameter {} does not belong to family {}",
                    p.name(),
                    self.family.name()
                )));
            }
        }
        if self.fixed.iter().any(|(p, _)| *p == self.varying) {
            return Err(Error::Domain(format!(
                "{} is both varying and fixed",
                self.varying.name()
            )));
        }
        // domain of the fixed values, checked at both ends
        self.params_at(self.lo)?;
        self.params_at(self.hi)?;
        Ok(())
    }

    fn value(&self, p: Param, x: f64) -> f64 {
        if p == self.varying {
            return x;
        }
        self.fixed
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, v)| *v)
            .unwrap_or(p.default_value())
    }

    /// Four-parameter point for value `x` of the varying parameter.
    pub fn params_at(&self, x: f64) -> Result<WrightParams<f64>> {
        let v = |p| self.value(p, x);
        match self.family {
            Family::FourParam => WrightParams::new(v(Param::Mu), v(Param::A), v(Param::Nu), v(Param::B)),
            Family::TwoParam => two_param_params(v(Param::B), v(Param::Nu)),
            Family::Bessel => FamilyPreset::Bessel(v(Param::Beta)).params(),
            Family::ConfluentF => WrightParams::unit_steps(v(Param::A), v(Param::B)),
        }
    }

    pub fn grid_values(&self) -> Vec<f64> {
        let n = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == n {
                    self.hi
                } else {
                    self.lo + (self.hi - self.lo) * i as f64 / n as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowEntry {
    pub criterion: String,
    pub verdict: Verdict,
    /// Oracle margin for the first conclusion; `None` without an oracle or
    /// when the oracle does not cover that property.
    pub margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub value: f64,
    pub entries: Vec<RowEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Boundary {
    pub criterion: String,
    pub value: f64,
    /// Established above the boundary (true) or below it (false).
    pub established_above: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub family: &'static str,
    pub varying: &'static str,
    pub rows: Vec<SweepRow>,
    pub boundaries: Vec<Boundary>,
}

fn established(c: CriterionId, s: &SweepSpec, x: f64) -> Result<bool> {
    Ok(c.evaluate(&s.params_at(x)?).established())
}

fn sweep_row(s: &SweepSpec, x: f64) -> Result<SweepRow> {
    let p = s.params_at(x)?;
    let entries = s
        .criteria
        .iter()
        .map(|c| {
            let report = c.evaluate(&p);
            let margin = s.oracle.and_then(|g| {
                let pr = report.conclusions.first()?;
                verify_property(&p, pr, Some(g), 1e-14)
                    .ok()
                    .map(|chk| chk.margin)
                    .filter(|m| m.is_finite())
            });
            RowEntry {
                criterion: c.name().to_string(),
                verdict: report.verdict,
                margin,
            }
        })
        .collect();
    Ok(SweepRow { value: x, entries })
}

/// Evaluates every criterion on the grid and bisects each verdict change.
///
/// Verdicts must be interval shaped along the sweep: more than two changes
/// gives [`Error::NotMonotone`].
pub fn run_sweep(s: &SweepSpec) -> Result<SweepReport> {
    s.validate()?;
    let xs = s.grid_values();
    let rows = xs.par_iter().map(|&x| sweep_row(s, x)).collect::<Result<Vec<_>>>()?;
    let mut boundaries = Vec::new();
    for (j, c) in s.criteria.iter().enumerate() {
        let est: Vec<bool> = rows
            .iter()
            .map(|r| r.entries[j].verdict == Verdict::Established)
            .collect();
        let changes: Vec<usize> = (1..est.len()).filter(|&i| est[i] != est[i - 1]).collect();
        if changes.len() > 2 {
            return Err(Error::NotMonotone {
                criterion: c.name().to_string(),
                transitions: changes.len(),
            });
        }
        for i in changes {
            let value = boundary_bisect(|x| established(*c, s, x), xs[i - 1], xs[i], BISECT_TOL)?;
            boundaries.push(Boundary {
                criterion: c.name().to_string(),
                value,
                established_above: est[i],
            });
        }
    }
    Ok(SweepReport {
        family: s.family.name(),
        varying: s.varying.name(),
        rows,
        boundaries,
    })
}

/// Bisects a verdict change of `f` in `[lo, hi]` down to width `tol` and
/// returns the end of the final bracket on which `f` agrees with `f(hi)`.
pub fn boundary_bisect(f: impl Fn(f64) -> Result<bool>, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == f_hi {
        return Err(Error::Bracket { lo, hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid)? == f_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// Boundary of one criterion along a sweep direction, bracketed by `[lo, hi]`.
pub fn criterion_boundary(s: &SweepSpec, c: CriterionId) -> Result<f64> {
    s.params_at(s.lo)?;
    s.params_at(s.hi)?;
    boundary_bisect(|x| established(c, s, x), s.lo, s.hi, BISECT_TOL)
}

pub fn format_table(r: &SweepReport) -> String {
    let mut header = vec![r.varying.to_string()];
    if let Some(row) = r.rows.first() {
        for e in &row.entries {
            header.push(e.criterion.clone());
            if e.margin.is_some() {
                header.push(format!("{} margin", e.criterion));
            }
        }
    }
    let body: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| {
            let mut cells = vec![format!("{:.6}", row.value)];
            for e in &row.entries {
                cells.push(match e.verdict {
                    Verdict::Established => "Established".into(),
                    Verdict::NotEstablished => "NotEstablished".into(),
                });
                if let Some(m) = e.margin {
                    cells.push(format!("{m:.6e}"));
                }
            }
            cells
        })
        .collect();
    let mut out = format!("family: {}\n", r.family);
    out.push_str(&align(&header, &body));
    if !r.boundaries.is_empty() {
        out.push_str("\nboundaries:\n");
        for b in &r.boundaries {
            let side = if b.established_above { "above" } else { "below" };
            let _ = writeln!(
                out,
                "  {}: {} = {:.6} (established {side})",
                b.criterion, r.varying, b.value
            );
        }
    }
    out
}

fn align(header: &[String], body: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|j| {
            body.iter()
                .filter_map(|r| r.get(j))
                .chain(std::iter::once(&header[j]))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let s: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        s.join("  ") + "\n"
    };
    let mut out = line(header);
    out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for r in body {
        out.push_str(&line(r));
    }
    out
}

/// Computed boundary set against the previously known bound for the same property.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessRow {
    pub family: &'static str,
    pub property: &'static str,
    pub parameter: &'static str,
    /// Located by bisection.
    pub computed: f64,
    /// Closed form of the computed threshold.
    pub exact: f64,
    pub prior: f64,
}

impl SharpnessRow {
    pub fn sharper(&self) -> bool {
        self.computed < self.prior
    }
}

/// Starlike and convex thresholds for the Bessel and two-parameter
/// families, next to the earlier bounds `√3` and `1 + √3`.
pub fn sharpness_table() -> Result<Vec<SharpnessRow>> {
    let s3 = 3f64.sqrt();
    let bessel = SweepSpec::new(Family::Bessel, Param::Beta, 0.0, 3.0, 2);
    let two = SweepSpec::new(Family::TwoParam, Param::B, 1.0, 4.0, 2).fix(Param::Nu, 1.0);
    let row = |family, property, parameter, s: &SweepSpec, c, exact, prior| -> Result<SharpnessRow> {
        Ok(SharpnessRow {
            family,
            property,
            parameter,
            computed: criterion_boundary(s, c)?,
            exact,
            prior,
        })
    };
    Ok(vec![
        row(
            "bessel",
            "starlike in D",
            "beta",
            &bessel,
            CriterionId::ThresholdStarlike,
            phi(1.0) - 1.0,
            s3,
        )?,
        row(
            "bessel",
            "convex in D_1/2",
            "beta",
            &bessel,
            CriterionId::ThresholdConvexI,
            psi1(1.0) - 1.0,
            s3,
        )?,
        row(
            "two_param",
            "starlike in D",
            "b",
            &two,
            CriterionId::ThresholdStarlike,
            phi(1.0),
            1.0 + s3,
        )?,
        row(
            "two_param",
            "convex in D_1/2",
            "b",
            &two,
            CriterionId::ThresholdConvexI,
            psi1(1.0),
            1.0 + s3,
        )?,
    ])
}

pub fn format_sharpness(rows: &[SharpnessRow]) -> String {
    let header: Vec<String> = [
        "family",
        "property",
        "parameter",
        "computed",
        "exact",
        "prior",
        "sharper",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.family.to_string(),
                r.property.to_string(),
                r.parameter.to_string(),
                format!("{:.6}", r.computed),
                format!("{:.10}", r.exact),
                format!("{:.10}", r.prior),
                if r.sharper() { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    align(&header, &body)
}
