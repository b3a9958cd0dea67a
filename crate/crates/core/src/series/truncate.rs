use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Hard cap on the number of retained terms.
pub const K_MAX: usize = 500;

/// A power series `z^shift · Σ_{k=0}^{n} c_k z^k` truncated so that the
/// discarded tail is certified to be at most `tail_bound` for every
/// `|z| ≤ radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
    shift: usize,
    radius: T,
    tail_bound: T,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Sums coefficients until the geometric tail majorant drops below `tol`.
    ///
    /// `ratio_sup(k)` must return an upper bound on `|c_{j+1} / c_j|` valid for
    /// every `j ≥ k`, or `None` while no such bound is available yet. The
    /// tail after index `k` is then bounded by `t_k · r / (1 − r)` with
    /// `t_k = |c_k| radius^{k+shift}` and `r = radius · ratio_sup(k)`.
    pub fn build<C, R>(mut coeff: C, mut ratio_sup: R, shift: usize, radius: T, tol: T) -> Result<Self>
    where
        C: FnMut(usize) -> T,
        R: FnMut(usize) -> Option<T>,
    {
        if !(tol > T::zero()) {
            return Err(Error::Domain(format!("tolerance must be > 0, got {tol}")));
        }
        if !(radius >= T::zero()) || !radius.is_finite() {
            return Err(Error::Domain(format!("radius must be finite and >= 0, got {radius}")));
        }
        let mut coeffs = Vec::new();
        let mut last_tail = T::infinity();
        for k in 0..K_MAX {
            let c = coeff(k);
            coeffs.push(c);
            if radius == T::zero() {
                // only the constant term survives at the origin
                return Ok(Self {
                    coeffs,
                    shift,
                    radius,
                    tail_bound: T::zero(),
                });
            }
            let Some(q) = ratio_sup(k) else { continue };
            let r = radius * q;
            if !(r < T::one()) {
                continue;
            }
            let t_k = c.abs() * radius.powi((k + shift) as i32);
            let tail = t_k * r / (T::one() - r);
            last_tail = tail;
            if tail <= tol {
                return Ok(Self {
                    coeffs,
                    shift,
                    radius,
                    tail_bound: tail,
                });
            }
        }
        Err(Error::Truncation {
            terms: K_MAX,
            tail_bound: last_tail.f64(),
            tol: tol.f64(),
        })
    }

    /// Evaluates the retained polynomial at `z` (Horner).
    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * z + *c;
        }
        match self.shift {
            0 => acc,
            s => acc * z.powi(s as i32),
        }
    }

    /// Evaluates the series divided by `z^shift`, i.e. without the power prefactor.
    pub fn eval_reduced(&self, z: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * z + *c;
        }
        acc
    }

    /// Tail bound for [`eval_reduced`](Self::eval_reduced) on `|z| ≤ radius`.
    pub fn reduced_tail_bound(&self) -> T {
        if self.shift == 0 || self.radius == T::zero() {
            self.tail_bound
        } else {
            self.tail_bound / self.radius.powi(self.shift as i32)
        }
    }

    /// Evaluates at a real argument.
    pub fn eval_real(&self, x: T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + *c;
        }
        acc * x.powi(self.shift as i32)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn terms_used(&self) -> usize {
        self.coeffs.len()
    }

    pub fn tail_bound(&self) -> T {
        self.tail_bound
    }

    pub fn radius(&self) -> T {
        self.radius
    }
}
