//! Logharmonic mappings built from analytic data.
//!
//! A map is stored in log-space as a weighted multiplicative composite
//!
//! ```text
//!   f(z) = z · exp( Σᵢ wᵢ [log(φᵢ/z) + 2ℜIᵢ(z)] + Σⱼ vⱼ [Log pⱼ(z) + 2ℜJⱼ(z)] )
//!   Iᵢ(z) = ∫₀ᶻ a φᵢ′ / ((1−a) φᵢ) ds,   Jⱼ(z) = ∫₀ᶻ a pⱼ′ / ((1−a) pⱼ) ds
//! ```
//!
//! with one shared dilatation a, a(0) = 0. The log(φ/z) branch is fixed at 0
//! in the origin and Log p is principal (ℜp > 0 keeps p off the cut), so real
//! powers and products are single-valued by construction; the star weights
//! must sum to 1 so the lone z factor never gets exponentiated.
//!
//! Wirtinger derivatives come out of the same representation exactly:
//!
//! ```text
//!   z f_z / f   = Σᵢ wᵢ zφᵢ′/φᵢ + Σⱼ vⱼ zpⱼ′/pⱼ + zS′(z) = z·T(z)/(1−a)
//!   z̄ f_z̄ / f = conj(zS′(z)),    S′ = a/(1−a) · T,
//!   T = Σᵢ wᵢ φᵢ′/φᵢ + Σⱼ vⱼ pⱼ′/pⱼ,
//! ```
//!
//! which satisfies conj(f_z̄)/conj(f) = a·f_z/f identically.

use num_complex::Complex64;

use crate::analytic::{self, AnalyticFunction, Dilatation};
use crate::error::{Error, Result};
use crate::quad;
use crate::MAX_ABS;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Central-difference step used by the independent residual checks.
pub const FD_STEP: f64 = 1e-5;

/// Tolerance on |Σ star weights − 1|.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// Tolerance for the sampled same-dilatation comparison.
pub const DILATATION_MATCH_TOL: f64 = 1e-10;

/// A starlike factor φ^weight with φ(0) = 0, φ′(0) = 1.
#[derive(Debug, Clone)]
pub struct StarFactor {
    pub phi: AnalyticFunction,
    pub weight: f64,
}

/// A positive-real-part factor p^weight with p(0) = 1, ℜp > 0.
#[derive(Debug, Clone)]
pub struct PFactor {
    pub p: AnalyticFunction,
    pub weight: f64,
}

/// A logharmonic mapping; the sharp distortion maps, the kernel K, the
/// close-to-starlike composites F = f·R and the Q-products are all instances.
#[derive(Debug, Clone)]
pub struct LogharmonicMap {
    star: Vec<StarFactor>,
    pfs: Vec<PFactor>,
    dilatation: Dilatation,
}

impl LogharmonicMap {
    /// Representation-theorem constructor: the unique f with analytic part φ
    /// and dilatation a, f = φ · exp 2ℜ∫₀ᶻ a φ′/((1−a)φ) ds.
    ///
    /// a(0) = 0 is required: with φ(0) = 0 the integrand behaves like
    /// a(s)/s near the origin and the integral diverges otherwise.
    pub fn from_representation(phi: AnalyticFunction, a: Dilatation) -> Result<Self> {
        if !phi.is_phi_like() {
            return Err(Error::NotPhiLike);
        }
        if !a.zero_at_origin() {
            return Err(Error::DilatationNotVanishing { a0: a.eval(ZERO)? });
        }
        Ok(Self {
            star: vec![StarFactor { phi, weight: 1.0 }],
            pfs: Vec::new(),
            dilatation: a,
        })
    }

    /// The kernel K = z · exp 2ℜ∫₀ᶻ a/((1−a)s) ds; σ ≡ 1, so K ∈ ST_Lh(0)
    /// whatever the dilatation. Weighted powers of K shift the order of the
    /// other factors without disturbing the shared dilatation.
    pub fn k_kernel(a: Dilatation) -> Result<Self> {
        Self::from_representation(AnalyticFunction::identity(), a)
    }

    /// Weighted multiplicative combination Π fₖ^{wₖ}. All members must share
    /// one dilatation (checked numerically on the validation grid) and the
    /// star weights must total 1 after expansion.
    pub fn weighted_product(factors: &[(&LogharmonicMap, f64)]) -> Result<Self> {
        let (first, _) = factors
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty factor list".into()))?;
        for (f, _) in factors.iter().skip(1) {
            let gap = first.dilatation.max_gap_on_grid(&f.dilatation)?;
            if gap > DILATATION_MATCH_TOL {
                return Err(Error::DilatationMismatch {
                    max_gap: gap,
                    tol: DILATATION_MATCH_TOL,
                });
            }
        }
        let mut star = Vec::new();
        let mut pfs = Vec::new();
        for (f, w) in factors {
            for sf in &f.star {
                star.push(StarFactor {
                    phi: sf.phi.clone(),
                    weight: w * sf.weight,
                });
            }
            for pf in &f.pfs {
                pfs.push(PFactor {
                    p: pf.p.clone(),
                    weight: w * pf.weight,
                });
            }
        }
        let sum: f64 = star.iter().map(|s| s.weight).sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::StarWeightSum {
                sum,
                tol: WEIGHT_SUM_TOL,
            });
        }
        Ok(Self {
            star,
            pfs,
            dilatation: first.dilatation.clone(),
        })
    }

    /// Close-to-starlike composite F = f · R with R = p · exp 2ℜ∫ the
    /// positive-real-part factor sharing f's dilatation.
    pub fn close_to_starlike(f: &LogharmonicMap, p: AnalyticFunction) -> Result<Self> {
        if !f.pfs.is_empty() {
            return Err(Error::MapHasPFactors);
        }
        if !p.is_p_like() {
            return Err(Error::NotPLike);
        }
        let (radii, angles) = f.dilatation.grid();
        let mut min_re = f64::INFINITY;
        let mut worst = ZERO;
        for i in 0..radii {
            let r = (i + 1) as f64 / radii as f64 * MAX_ABS;
            for j in 0..angles {
                let theta = -std::f64::consts::PI
                    + 2.0 * std::f64::consts::PI * (j + 1) as f64 / angles as f64;
                let z = Complex64::from_polar(r, theta);
                let re = p.eval(z)?.re;
                if re < min_re {
                    min_re = re;
                    worst = z;
                }
            }
        }
        if min_re <= 0.0 {
            return Err(Error::PNotPositiveRealPart { min_re, at: worst });
        }
        let mut out = f.clone();
        out.pfs.push(PFactor { p, weight: 1.0 });
        Ok(out)
    }

    /// The rotation e^{iθ} f(e^{−iθ} z), realized by conjugating every star
    /// factor and precomposing the p-factors and the dilatation. Stays in the
    /// same class: σ of the rotated map at z equals σ of f at e^{−iθ}z.
    pub fn rotate(&self, theta: f64) -> Self {
        let star = self
            .star
            .iter()
            .map(|sf| StarFactor {
                phi: sf
                    .phi
                    .clone()
                    .rotate_phi(theta)
                    .expect("star factors are phi-like by construction"),
                weight: sf.weight,
            })
            .collect();
        let pfs = self
            .pfs
            .iter()
            .map(|pf| PFactor {
                p: pf.p.clone().precompose_rotation(theta),
                weight: pf.weight,
            })
            .collect();
        Self {
            star,
            pfs,
            dilatation: self.dilatation.rotated(theta),
        }
    }

    pub fn star_factors(&self) -> &[StarFactor] {
        &self.star
    }

    pub fn p_factors(&self) -> &[PFactor] {
        &self.pfs
    }

    pub fn dilatation(&self) -> &Dilatation {
        &self.dilatation
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self
            .star
            .iter()
            .map(|sf| format!("[{}]^{}", sf.phi.label(), sf.weight))
            .collect();
        parts.extend(
            self.pfs
                .iter()
                .map(|pf| format!("[{}]^{}", pf.p.label(), pf.weight)),
        );
        format!("{} | a = {}", parts.join(" * "), self.dilatation.label())
    }

    /// Map value by the representation formula. f(0) = 0.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        analytic::require_in_disk(z)?;
        if z == ZERO {
            return Ok(ZERO);
        }
        let mut expo = ZERO;
        for sf in &self.star {
            let lq = analytic::log_quotient_over_z(&sf.phi, z)?;
            let i_int = self.factor_integral(&sf.phi, z)?;
            expo += sf.weight * (lq + Complex64::new(2.0 * i_int.re, 0.0));
        }
        for pf in &self.pfs {
            let pv = pf.p.eval(z)?;
            let j_int = self.factor_integral(&pf.p, z)?;
            expo += pf.weight * (pv.ln() + Complex64::new(2.0 * j_int.re, 0.0));
        }
        // ln(f64::MAX) ~ 709.8; the sharp maps reach that just inside the guard
        if expo.re > 709.0 {
            return Err(Error::ValueOverflow {
                at: z,
                exponent: expo.re,
            });
        }
        Ok(z * expo.exp())
    }

    /// ∫₀ᶻ a g′/((1−a) g) ds for one factor g.
    fn factor_integral(&self, g: &AnalyticFunction, z: Complex64) -> Result<Complex64> {
        quad::radial_integral(
            |s| {
                let a = self.dilatation.eval(s)?;
                let (gv, gd) = g.eval_with_derivative(s)?;
                if gv == ZERO {
                    return Err(Error::MapVanishes { at: s });
                }
                Ok(a * gd / ((ONE - a) * gv))
            },
            z,
            quad::DEFAULT_TOL,
        )
    }

    /// T(z) = Σᵢ wᵢ φᵢ′/φᵢ + Σⱼ vⱼ pⱼ′/pⱼ, the weighted logarithmic
    /// derivative of the analytic factor data.
    pub(crate) fn ratio_sum(&self, z: Complex64) -> Result<Complex64> {
        let mut t = ZERO;
        for sf in &self.star {
            let (v, d) = sf.phi.eval_with_derivative(z)?;
            if v == ZERO {
                return Err(Error::MapVanishes { at: z });
            }
            t += sf.weight * d / v;
        }
        for pf in &self.pfs {
            let (v, d) = pf.p.eval_with_derivative(z)?;
            if v == ZERO {
                return Err(Error::MapVanishes { at: z });
            }
            t += pf.weight * d / v;
        }
        Ok(t)
    }

    /// Exact Wirtinger ratios (z f_z / f, z̄ f_z̄ / f), no finite differences.
    pub fn wirtinger_analytic(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        analytic::require_in_disk(z)?;
        if z == ZERO {
            return Err(Error::PointAtOrigin);
        }
        let t = self.ratio_sum(z)?;
        let a = self.dilatation.eval(z)?;
        let zs = z * t * a / (ONE - a);
        Ok((z * t + zs, zs.conj()))
    }

    /// |f_z|² (1 − |a|²): positive everywhere for a valid construction, the
    /// sense-preserving statement.
    pub fn jacobian(&self, z: Complex64) -> Result<f64> {
        if z == ZERO {
            return Err(Error::PointAtOrigin);
        }
        let f = self.eval(z)?;
        let (a_ratio, _) = self.wirtinger_analytic(z)?;
        let f_z = f * a_ratio / z;
        let a = self.dilatation.eval(z)?.norm();
        Ok(f_z.norm_sqr() * (1.0 - a * a))
    }

    /// |conj(f_z̄)/conj(f) − a·f_z/f| measured with central differences —
    /// the independent check that the construction solves the defining
    /// equation. Near zero for valid maps.
    pub fn pde_residual(&self, z: Complex64) -> Result<f64> {
        if z == ZERO {
            return Err(Error::PointAtOrigin);
        }
        let f = self.eval(z)?;
        if f == ZERO {
            return Err(Error::MapVanishes { at: z });
        }
        let (f_z, f_zbar) = wirtinger_fd(|w| self.eval(w), z, FD_STEP)?;
        let a = self.dilatation.eval(z)?;
        // fdiv: naive complex division overflows once |f| passes ~1e154
        Ok((f_zbar.conj().fdiv(f.conj()) - a * f_z.fdiv(f)).norm())
    }
}

/// Central-difference Wirtinger derivatives of an arbitrary evaluable plane
/// map: f_z = (f_x − i f_y)/2, f_z̄ = (f_x + i f_y)/2.
pub fn wirtinger_fd<F>(f: F, z: Complex64, h: f64) -> Result<(Complex64, Complex64)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if h <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "step h = {h} must be positive"
        )));
    }
    if z.norm() + h > MAX_ABS {
        return Err(Error::StepTooLarge { h, abs_z: z.norm() });
    }
    let i = Complex64::new(0.0, 1.0);
    let f_x = (f(z + h)? - f(z - h)?) / (2.0 * h);
    let f_y = (f(z + i * h)? - f(z - i * h)?) / (2.0 * h);
    Ok(((f_x - i * f_y) / 2.0, (f_x + i * f_y) / 2.0))
}
