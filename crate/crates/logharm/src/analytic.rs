//! Analytic functions on the unit disk with exact first derivatives.
//!
//! The catalog covers what the theory needs: the identity and the
//! order-α Koebe function `z/(1−z)^{2−2α}` as starlike generators, the
//! half-plane function `(1+z)/(1−z)` and `1−z` as positive-real-part
//! generators, constants, scaled identities, truncated power series, and
//! product/quotient/rotation combinators. Every instance reports value and
//! derivative symbolically — finite differences are reserved for the
//! independent verification layer.
//!
//! Two normalization flags ride along with each instance: `phi_like`
//! (φ(0) = 0, φ′(0) = 1, the ST(α) normalization) and `p_like` (p(0) = 1).
//! They are set structurally by the constructors.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quad;
use crate::MAX_ABS;

pub use crate::quad::radial_integral;

/// Tolerance below which a(0) counts as vanishing.
pub const A0_ZERO_TOL: f64 = 1e-12;

/// Default validation grid: 32 radii x 128 angles.
pub const GRID_RADII: usize = 32;
pub const GRID_ANGLES: usize = 128;

#[derive(Debug, Clone)]
enum Kind {
    Identity,
    Constant(Complex64),
    ScaledIdentity(Complex64),
    /// z / (1-z)^(2-2a)
    KoebeAlpha(f64),
    /// (1+z) / (1-z)
    HalfPlaneP,
    /// 1 - z
    OneMinusZ,
    Product(Arc<AnalyticFunction>, Arc<AnalyticFunction>),
    Quotient(Arc<AnalyticFunction>, Arc<AnalyticFunction>),
    /// Coefficient sequence c_0 + c_1 z + ... truncated at len
    Series(Arc<[Complex64]>),
    /// inner(e^{-i theta} z)
    Rotated {
        theta: f64,
        inner: Arc<AnalyticFunction>,
    },
}

/// An evaluable analytic function on the guarded disk |z| <= 1 - 1e-3.
#[derive(Debug, Clone)]
pub struct AnalyticFunction {
    kind: Kind,
    phi_like: bool,
    p_like: bool,
}

#[cfg(test)]
fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl AnalyticFunction {
    pub fn identity() -> Self {
        Self {
            kind: Kind::Identity,
            phi_like: true,
            p_like: false,
        }
    }

    pub fn constant(c: Complex64) -> Self {
        Self {
            kind: Kind::Constant(c),
            phi_like: false,
            p_like: c == ONE,
        }
    }

    pub fn scaled_identity(c: Complex64) -> Self {
        Self {
            kind: Kind::ScaledIdentity(c),
            phi_like: c == ONE,
            p_like: false,
        }
    }

    /// The order-α Koebe function z/(1−z)^{2−2α}, the ST(α) extremal.
    pub fn koebe(alpha: f64) -> Self {
        Self {
            kind: Kind::KoebeAlpha(alpha),
            phi_like: true,
            p_like: false,
        }
    }

    /// (1+z)/(1−z); maps the disk onto the right half-plane, p(0) = 1.
    pub fn half_plane_p() -> Self {
        Self {
            kind: Kind::HalfPlaneP,
            phi_like: false,
            p_like: true,
        }
    }

    pub fn one_minus_z() -> Self {
        Self {
            kind: Kind::OneMinusZ,
            phi_like: false,
            p_like: true,
        }
    }

    pub fn one_plus_z() -> Self {
        Self::series(vec![ONE, ONE])
    }

    pub fn product(f: Self, g: Self) -> Self {
        let phi_like = (f.phi_like && g.p_like) || (f.p_like && g.phi_like);
        let p_like = f.p_like && g.p_like;
        Self {
            kind: Kind::Product(Arc::new(f), Arc::new(g)),
            phi_like,
            p_like,
        }
    }

    pub fn quotient(f: Self, g: Self) -> Self {
        let phi_like = f.phi_like && g.p_like;
        let p_like = f.p_like && g.p_like;
        Self {
            kind: Kind::Quotient(Arc::new(f), Arc::new(g)),
            phi_like,
            p_like,
        }
    }

    /// Truncated power series Σ c_k z^k.
    pub fn series(coeffs: Vec<Complex64>) -> Self {
        let phi_like = coeffs.first().map(|&c| c == ZERO).unwrap_or(false)
            && coeffs.get(1).map(|&c| c == ONE).unwrap_or(false);
        let p_like = coeffs.first().map(|&c| c == ONE).unwrap_or(false);
        Self {
            kind: Kind::Series(coeffs.into()),
            phi_like,
            p_like,
        }
    }

    /// Pure precomposition z ↦ f(e^{−iθ} z). Preserves p-likeness.
    pub fn precompose_rotation(self, theta: f64) -> Self {
        if theta == 0.0 {
            return self;
        }
        let p_like = self.p_like;
        Self {
            kind: Kind::Rotated {
                theta,
                inner: Arc::new(self),
            },
            phi_like: false,
            p_like,
        }
    }

    /// The φ-conjugation e^{iθ} φ(e^{−iθ} z); preserves φ-likeness since the
    /// outer phase cancels the inner chain-rule factor at the origin.
    pub fn rotate_phi(self, theta: f64) -> Result<Self> {
        if !self.phi_like {
            return Err(Error::NotPhiLike);
        }
        if theta == 0.0 {
            return Ok(self);
        }
        let rotated = Self {
            kind: Kind::Rotated {
                theta,
                inner: Arc::new(self),
            },
            phi_like: false,
            p_like: false,
        };
        Ok(Self {
            kind: Kind::Product(
                Arc::new(Self::constant(Complex64::from_polar(1.0, theta))),
                Arc::new(rotated),
            ),
            phi_like: true,
            p_like: false,
        })
    }

    /// φ(0) = 0 and φ′(0) = 1.
    pub fn is_phi_like(&self) -> bool {
        self.phi_like
    }

    /// p(0) = 1.
    pub fn is_p_like(&self) -> bool {
        self.p_like
    }

    /// Value and exact first derivative at z, |z| <= 1 − 1e-3.
    pub fn eval_with_derivative(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        require_in_disk(z)?;
        self.eval_raw(z)
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.eval_with_derivative(z)?.0)
    }

    // Recursion without re-checking the guard: all nodes evaluate at the same
    // modulus (rotation preserves |z|).
    fn eval_raw(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        match &self.kind {
            Kind::Identity => Ok((z, ONE)),
            Kind::Constant(c) => Ok((*c, ZERO)),
            Kind::ScaledIdentity(c) => Ok((c * z, *c)),
            Kind::KoebeAlpha(alpha) => {
                let e = 2.0 - 2.0 * alpha;
                let base = ONE - z;
                // (1-z)^(-e), principal branch; Re(1-z) > 0 on the disk.
                let pw = (-e * base.ln()).exp();
                Ok((z * pw, pw * (ONE + e * z / base)))
            }
            Kind::HalfPlaneP => {
                let d = ONE - z;
                Ok(((ONE + z) / d, 2.0 / (d * d)))
            }
            Kind::OneMinusZ => Ok((ONE - z, -ONE)),
            Kind::Product(f, g) => {
                let (fv, fd) = f.eval_raw(z)?;
                let (gv, gd) = g.eval_raw(z)?;
                Ok((fv * gv, fd * gv + fv * gd))
            }
            Kind::Quotient(f, g) => {
                let (fv, fd) = f.eval_raw(z)?;
                let (gv, gd) = g.eval_raw(z)?;
                if gv == ZERO {
                    return Err(Error::DivisionByZero { at: z });
                }
                Ok((fv / gv, (fd * gv - fv * gd) / (gv * gv)))
            }
            Kind::Series(coeffs) => {
                let mut v = ZERO;
                let mut d = ZERO;
                // Horner on value and derivative together.
                for &c in coeffs.iter().rev() {
                    d = d * z + v;
                    v = v * z + c;
                }
                Ok((v, d))
            }
            Kind::Rotated { theta, inner } => {
                let phase = Complex64::from_polar(1.0, -theta);
                let (v, d) = inner.eval_raw(phase * z)?;
                Ok((v, phase * d))
            }
        }
    }

    /// Short human-readable form, used by the catalog and map descriptions.
    pub fn label(&self) -> String {
        match &self.kind {
            Kind::Identity => "z".to_string(),
            Kind::Constant(c) => format_c(*c),
            Kind::ScaledIdentity(c) => format!("{}*z", format_c(*c)),
            Kind::KoebeAlpha(alpha) => {
                // trim float noise like 0.19999999999999996 out of the label
                let e = ((2.0 - 2.0 * alpha) * 1e12).round() / 1e12;
                format!("z/(1-z)^{e}")
            }
            Kind::HalfPlaneP => "(1+z)/(1-z)".to_string(),
            Kind::OneMinusZ => "1-z".to_string(),
            Kind::Product(f, g) => format!("({})*({})", f.label(), g.label()),
            Kind::Quotient(f, g) => format!("({})/({})", f.label(), g.label()),
            Kind::Series(coeffs) => format_series(coeffs),
            Kind::Rotated { theta, inner } => format!("rot({:.4}; {})", theta, inner.label()),
        }
    }
}

fn format_c(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else {
        format!("({}{:+}i)", c.re, c.im)
    }
}

fn format_series(coeffs: &[Complex64]) -> String {
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == ZERO {
            continue;
        }
        let coeff = if c == ONE && k > 0 {
            String::new()
        } else {
            format_c(c)
        };
        let term = match k {
            0 => coeff,
            1 => format!("{coeff}z"),
            _ => format!("{coeff}z^{k}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Guard check shared by every evaluation entry point. A one-ulp slack keeps
/// polar-constructed points at exactly the guard radius evaluable.
pub fn require_in_disk(z: Complex64) -> Result<()> {
    if z.norm() <= MAX_ABS * (1.0 + 4.0 * f64::EPSILON) {
        Ok(())
    } else {
        Err(Error::OutsideGuardedDisk {
            z,
            max_abs: MAX_ABS,
        })
    }
}

/// Single-valued branch of log(φ(z)/z), fixed by the value 0 at the origin,
/// computed as ∫₀ᶻ (φ′/φ − 1/s) ds along the radial segment. The integrand is
/// analytic on the simply connected disk so the path choice is free; this
/// branch is what keeps real powers of starlike factors single-valued.
pub fn log_quotient_over_z(phi: &AnalyticFunction, z: Complex64) -> Result<Complex64> {
    if !phi.is_phi_like() {
        return Err(Error::NotPhiLike);
    }
    require_in_disk(z)?;
    if z == ZERO {
        return Ok(ZERO);
    }
    quad::radial_integral(
        |s| {
            let (v, d) = phi.eval_raw(s)?;
            if v == ZERO {
                return Err(Error::MapVanishes { at: s });
            }
            Ok(d / v - 1.0 / s)
        },
        z,
        quad::DEFAULT_TOL,
    )
}

/// β = conj(a0)·(1+a0)/(1−|a0|²), the exponent of the |z|^{2βm} factor in the
/// general vanishing-at-0 representation. Only the m = 1, β = 0 branch is
/// constructible here (all constructions require a(0) = 0); this is the
/// formula itself, with its ℜβ > −1/2 guarantee.
pub fn beta_from_a0(a0: Complex64) -> Result<Complex64> {
    let m = a0.norm();
    if m >= 1.0 {
        return Err(Error::A0OutsideDisk { modulus: m });
    }
    Ok(a0.conj() * (ONE + a0) / (1.0 - m * m))
}

/// Sampled-validation report for a candidate dilatation.
#[derive(Debug, Clone)]
pub struct DilatationReport {
    pub max_modulus: f64,
    pub worst_point: Complex64,
    pub a0: Complex64,
    pub passes: bool,
}

/// Sample |a| on a radii x angles polar grid (radii up to the guard edge) and
/// report the maximum against the |a| < 1 requirement. Sampling, not proof —
/// the soundness caveat is inherent to opaque evaluables.
pub fn validate_dilatation(
    a: &AnalyticFunction,
    radii: usize,
    angles: usize,
) -> Result<DilatationReport> {
    let mut max_modulus = f64::NEG_INFINITY;
    let mut worst = ZERO;
    for i in 0..radii {
        let r = (i + 1) as f64 / radii as f64 * MAX_ABS;
        for j in 0..angles {
            let theta = -PI + 2.0 * PI * (j + 1) as f64 / angles as f64;
            let z = Complex64::from_polar(r, theta);
            let m = a.eval(z)?.norm();
            if m > max_modulus {
                max_modulus = m;
                worst = z;
            }
        }
    }
    let a0 = a.eval(ZERO)?;
    Ok(DilatationReport {
        max_modulus,
        worst_point: worst,
        a0,
        passes: max_modulus < 1.0,
    })
}

/// An analytic function a with |a| < 1 on the disk (sampled) — the second
/// dilatation of a logharmonic mapping.
#[derive(Debug, Clone)]
pub struct Dilatation {
    inner: AnalyticFunction,
    zero_at_origin: bool,
    grid: (usize, usize),
}

impl Dilatation {
    /// Validates |a| < 1 on the default 32x128 grid.
    pub fn new(inner: AnalyticFunction) -> Result<Self> {
        Self::with_grid(inner, GRID_RADII, GRID_ANGLES)
    }

    pub fn with_grid(inner: AnalyticFunction, radii: usize, angles: usize) -> Result<Self> {
        let report = validate_dilatation(&inner, radii, angles)?;
        if !report.passes {
            return Err(Error::DilatationModulus {
                max_modulus: report.max_modulus,
                at: report.worst_point,
            });
        }
        Ok(Self {
            zero_at_origin: report.a0.norm() < A0_ZERO_TOL,
            inner,
            grid: (radii, angles),
        })
    }

    /// a ≡ 0: the analytic case.
    pub fn zero() -> Self {
        Self {
            inner: AnalyticFunction::constant(ZERO),
            zero_at_origin: true,
            grid: (GRID_RADII, GRID_ANGLES),
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.inner.eval(z)
    }

    pub fn zero_at_origin(&self) -> bool {
        self.zero_at_origin
    }

    pub fn grid(&self) -> (usize, usize) {
        self.grid
    }

    pub fn inner(&self) -> &AnalyticFunction {
        &self.inner
    }

    pub fn label(&self) -> String {
        self.inner.label()
    }

    /// Precompose with e^{−iθ}z; modulus bounds and the origin value are
    /// unchanged, so no revalidation.
    pub fn rotated(&self, theta: f64) -> Self {
        Self {
            inner: self.inner.clone().precompose_rotation(theta),
            zero_at_origin: self.zero_at_origin,
            grid: self.grid,
        }
    }

    /// Max |a₁ − a₂| over the shared validation grid.
    pub fn max_gap_on_grid(&self, other: &Dilatation) -> Result<f64> {
        let (radii, angles) = self.grid;
        let mut max_gap: f64 = (self.eval(ZERO)? - other.eval(ZERO)?).norm();
        for i in 0..radii {
            let r = (i + 1) as f64 / radii as f64 * MAX_ABS;
            for j in 0..angles {
                let theta = -PI + 2.0 * PI * (j + 1) as f64 / angles as f64;
                let z = Complex64::from_polar(r, theta);
                let gap = (self.eval(z)? - other.eval(z)?).norm();
                max_gap = max_gap.max(gap);
            }
        }
        Ok(max_gap)
    }
}
