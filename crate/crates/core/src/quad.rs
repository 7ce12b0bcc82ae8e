//! Adaptive Simpson quadrature over finite intervals.

use crate::error::{Error, Result};

/// Controls for the numerical integration of entropy integrands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Absolute tolerance for the integral value.
    pub abs_tol: f64,
    /// Integration range extends this many noise standard deviations beyond
    /// the extreme mixture means.
    pub truncation_sigmas: f64,
    /// Hard cap on the number of interval subdivisions.
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            abs_tol: 1e-10,
            truncation_sigmas: 10.0,
            max_subdivisions: 1 << 20,
        }
    }
}

impl QuadratureSettings {
    pub fn new(abs_tol: f64, truncation_sigmas: f64, max_subdivisions: usize) -> Result<Self> {
        if !(abs_tol > 0.0) {
            return Err(Error::BadConfig("abs_tol must be positive".into()));
        }
        if !(truncation_sigmas >= 6.0) {
            return Err(Error::BadConfig("truncation_sigmas must be at least 6".into()));
        }
        Ok(QuadratureSettings { abs_tol, truncation_sigmas, max_subdivisions })
    }

    /// A copy with a tighter absolute tolerance, never looser than `self`.
    pub fn tightened(&self, abs_tol: f64) -> Self {
        QuadratureSettings { abs_tol: self.abs_tol.min(abs_tol), ..*self }
    }
}

// Do not accept a converged panel before this depth; multimodal integrands can
// fool the first few error estimates.
const MIN_DEPTH: u32 = 8;
const MAX_DEPTH: u32 = 60;

struct Adapt<'a, F> {
    f: &'a F,
    subdivisions: usize,
    max_subdivisions: usize,
}

impl<F: Fn(f64) -> f64> Adapt<'_, F> {
    fn run(&mut self, a: f64, m: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> Result<f64> {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.f)(lm);
        let frm = (self.f)(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth >= MIN_DEPTH && delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth >= MAX_DEPTH {
            return Err(Error::QuadratureNoConvergence(self.subdivisions));
        }
        self.subdivisions += 2;
        if self.subdivisions > self.max_subdivisions {
            return Err(Error::QuadratureNoConvergence(self.max_subdivisions));
        }
        let half = 0.5 * tol;
        Ok(self.run(a, lm, m, fa, flm, fm, left, half, depth + 1)?
            + self.run(m, rm, b, fm, frm, fb, right, half, depth + 1)?)
    }
}

/// Integrates `f` over `[a, b]` to absolute tolerance `abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, max_subdivisions: usize) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut ctx = Adapt { f: &f, subdivisions: 1, max_subdivisions };
    ctx.run(a, m, b, fa, fm, fb, whole, abs_tol, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let v = integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12, 1 << 20).unwrap();
        // antiderivative x^4/4 - x^2 + x
        let exact = (81.0 / 4.0 - 9.0 + 3.0) - (0.25 - 1.0 - 1.0);
        assert!((v - exact).abs() < 1e-10, "{v} vs {exact}");
    }

    #[test]
    fn gaussian_density_normalizes() {
        let v = integrate(
            |x| (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt(),
            -10.0,
            10.0,
            1e-12,
            1 << 20,
        )
        .unwrap();
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn empty_interval_is_zero() {
        assert_eq!(integrate(|x| x, 2.0, 2.0, 1e-10, 1024).unwrap(), 0.0);
    }

    #[test]
    fn subdivision_cap_is_enforced() {
        // An oscillatory integrand with a tiny budget must fail rather than
        // silently return garbage.
        let r = integrate(|x| (50.0 * x).sin().abs(), 0.0, 20.0, 1e-13, 64);
        assert!(matches!(r, Err(Error::QuadratureNoConvergence(_))));
    }
}
