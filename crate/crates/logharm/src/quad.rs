//! Composite Gauss–Legendre quadrature along radial segments.
//!
//! Every integral in this crate is of the form ∫₀ᶻ g(s) ds with g analytic on
//! the straight segment {tz : t in \[0,1\]}, so the path is parametrized as
//! s = tz and the rule is applied to g(tz)·z on \[0,1\]. The panel count doubles
//! until two successive refinements agree; there are no endpoint nodes, so
//! removable behavior at s = 0 needs no special-casing.

use num_complex::Complex64;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Nodes per panel.
pub const GL_ORDER: usize = 32;

/// Panel budget: doubling stops after 2^10 panels.
pub const MAX_PANELS: usize = 1 << 10;

/// Default convergence tolerance for successive refinements.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Gauss–Legendre nodes and weights on [-1, 1], computed once by Newton
/// iteration on the Legendre recurrence.
fn gl_rule() -> &'static [(f64, f64); GL_ORDER] {
    static RULE: OnceLock<[(f64, f64); GL_ORDER]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_ORDER;
        let mut rule = [(0.0, 0.0); GL_ORDER];
        for i in 0..n.div_ceil(2) {
            // Chebyshev initial guess, then Newton.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() < 1e-15 {
                    let (_, d2) = legendre_with_derivative(n, x);
                    dp = d2;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            rule[i] = (-x, w);
            rule[n - 1 - i] = (x, w);
        }
        rule
    })
}

/// Legendre polynomial P_n and its derivative via the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let d = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite rule with `panels` equal panels on [0, 1] applied to f(t).
fn composite<F>(f: &F, panels: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let rule = gl_rule();
    let h = 1.0 / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        let mut panel = Complex64::new(0.0, 0.0);
        for &(x, w) in rule.iter() {
            panel += w * f(mid + half * x);
        }
        acc += panel * half;
    }
    acc
}

/// ∫₀¹ f(t) dt with panel doubling until two refinements differ by less than
/// `tol` (with a 1e-13 relative floor so large integrals near the guard edge
/// still converge).
pub fn integrate_unit_interval<F>(f: F, tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let mut prev = composite(&f, 1);
    let mut panels = 2;
    let mut gap = f64::INFINITY;
    while panels <= MAX_PANELS {
        let cur = composite(&f, panels);
        gap = (cur - prev).norm();
        if gap < tol || gap < 1e-13 * cur.norm() {
            return Ok(cur);
        }
        prev = cur;
        panels *= 2;
    }
    Err(Error::QuadratureDidNotConverge {
        gap,
        tol,
        panels: MAX_PANELS,
    })
}

/// ∫₀ᶻ g(s) ds along the radial segment, i.e. ∫₀¹ g(tz)·z dt.
///
/// The integrand must be analytic on the segment; with all integrands used
/// here that is guaranteed by the a(0) = 0 checks upstream.
pub fn radial_integral<F>(integrand: F, z: Complex64, tol: f64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if z.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    // Errors inside the integrand are rare (guarded upstream); poison the
    // value with NaN and surface the first error afterwards.
    let first_err = std::cell::RefCell::new(None);
    let value = integrate_unit_interval(
        |t| match integrand(t * z) {
            Ok(v) => v * z,
            Err(e) => {
                first_err.borrow_mut().get_or_insert(e);
                Complex64::new(f64::NAN, f64::NAN)
            }
        },
        tol,
    );
    if let Some(e) = first_err.into_inner() {
        return Err(e);
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constant_integrand_returns_z() {
        let z = c(0.0, 0.7);
        let got = radial_integral(|_| Ok(c(1.0, 0.0)), z, DEFAULT_TOL).unwrap();
        assert!((got - z).norm() < 1e-14);
    }

    #[test]
    fn polynomial_integrand() {
        // ∫₀^{1/2} s ds = 1/8
        let got = radial_integral(Ok, c(0.5, 0.0), DEFAULT_TOL).unwrap();
        assert!((got - c(0.125, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn geometric_integrand_matches_antiderivative() {
        // ∫₀^{0.5} ds/(1-s) = -Log(0.5) = ln 2
        let got = radial_integral(|s| Ok(1.0 / (1.0 - s)), c(0.5, 0.0), DEFAULT_TOL).unwrap();
        assert!((got - c(std::f64::consts::LN_2, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn complex_endpoint_against_principal_log() {
        // ∫₀^z ds/(1-s) = -Log(1-z), principal branch (Re(1-s) > 0 on the segment)
        let z = c(0.3, 0.4);
        let got = radial_integral(|s| Ok(1.0 / (1.0 - s)), z, DEFAULT_TOL).unwrap();
        let want = -(1.0 - z).ln();
        assert!((got - want).norm() < 1e-12);
    }

    #[test]
    fn gl_rule_integrates_high_degree_polynomial_exactly() {
        // order 32 is exact through degree 63 on a single panel
        let got = integrate_unit_interval(|t| c(t.powi(20), 0.0), 1e-14).unwrap();
        assert!((got.re - 1.0 / 21.0).abs() < 1e-15);
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn error_surfaces_from_integrand() {
        let got = radial_integral(
            |_| Err(crate::error::Error::PointAtOrigin),
            c(0.5, 0.0),
            DEFAULT_TOL,
        );
        assert!(got.is_err());
    }
}
