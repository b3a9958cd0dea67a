//! Normalized Wright and Fox-Wright functions: series with certified
//! truncation, sufficient criteria for geometric properties, a sampling
//! oracle on disks, and zeros of partial sums.
//!
//! The numerical core is generic over [`Scalar`] (`f32`, `f64`); root finding
//! and sweeps work in `f64`.

// `!(x > 0)` rejects NaN together with the out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod criteria;
pub mod error;
pub mod foxwright_bounds;
pub mod gamma;
pub mod ledger;
pub mod oracle;
pub mod polyzeros;
pub mod scalar;
pub mod series;
pub mod sweep;

pub use criteria::{CriterionId, CriterionReport, FamilyPreset, Property, PropertyRegion, Region, Verdict};
pub use error::{Error, Result};
pub use gamma::{log_gamma, WrightParams};
pub use ledger::{Hypothesis, Relation};
pub use oracle::{GridSpec, OracleVerdict, PropertyCheck};
pub use scalar::Scalar;
pub use series::{FoxWrightSpec, PartialSumKind, SeriesValue};

pub type Params64 = WrightParams<f64>;
pub type Params32 = WrightParams<f32>;
pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;
