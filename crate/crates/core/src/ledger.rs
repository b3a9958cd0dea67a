//! Evaluated inequalities with both sides recorded.

use std::fmt;

use serde::Serialize;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    fn eval_with_ties(self, lhs: f64, rhs: f64, tie: f64) -> bool {
        if (lhs - rhs).abs() <= tie {
            return matches!(self, Relation::Le | Relation::Ge);
        }
        self.eval(lhs, rhs)
    }

    fn eval(self, lhs: f64, rhs: f64) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }
}

/// One hypothesis `lhs REL rhs`, evaluated.
///
/// `lhs` and `rhs` are the values as displayed; when the comparison was
/// decided in log-space they may have under- or overflowed while `holds`
/// is still exact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl Hypothesis {
    /// Compares two values directly. NaN on either side fails.
    pub fn compare<T: Scalar>(name: impl Into<String>, lhs: T, relation: Relation, rhs: T) -> Self {
        let (l, r) = (lhs.f64(), rhs.f64());
        Self {
            name: name.into(),
            relation,
            lhs: l,
            rhs: r,
            holds: relation.eval(l, r),
        }
    }

    /// Compares `exp(ln_lhs)` with `exp(ln_rhs)` by comparing the logarithms.
    ///
    /// Logarithms within a few rounding units of each other are an exact tie
    /// as far as this arithmetic can tell: strict relations fail on a tie and
    /// non-strict ones hold.
    pub fn compare_ln<T: Scalar>(name: impl Into<String>, ln_lhs: T, relation: Relation, ln_rhs: T) -> Self {
        let (l, r) = (ln_lhs.f64(), ln_rhs.f64());
        let tie = 16.0 * T::epsilon().f64() * l.abs().max(r.abs()).max(1.0);
        Self {
            name: name.into(),
            relation,
            lhs: ln_lhs.exp().f64(),
            rhs: ln_rhs.exp().f64(),
            holds: relation.eval_with_ties(l, r, tie),
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {:.12e} {} {:.12e}",
            if self.holds { "ok" } else { "FAIL" },
            self.name,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )
    }
}
