//! Geometric functionals: starlikeness density, circle minima, radius
//! searches, distortion bounds, the Ψ functional and the Ω_r radius.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exec;
use crate::map::LogharmonicMap;
use crate::optimize::golden_min;
use crate::radii;
use crate::MAX_ABS;

/// Grid size for the inner θ scans of radius searches.
pub const CIRCLE_GRID: usize = 512;

/// Bisection tolerance (in r) for radius-of-starlikeness searches.
pub const RADIUS_TOL: f64 = 1e-6;

/// Radii sampled by `starlike_order`.
const ORDER_RADII: usize = 32;

/// Reported value of the order-0 Ω radius, 8.7462e-2; kept verbatim for the
/// discrepancy report.
pub const REPORTED_OMEGA_LAMBDA: f64 = 8.7462e-2;

/// Starlikeness density σ = ℜ[(z f_z − z̄ f_z̄)/f] — the angular speed of the
/// image argument. By the representation this collapses to
/// Σᵢ wᵢ ℜ(zφᵢ′/φᵢ) + Σⱼ vⱼ ℜ(zpⱼ′/pⱼ): the dilatation terms cancel, which is
/// the computational content of the representation theorem. The z = 0 limit
/// is Σᵢ wᵢ (normalized factors give zφ′/φ → 1).
pub fn sigma(f: &LogharmonicMap, z: Complex64) -> Result<f64> {
    crate::analytic::require_in_disk(z)?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(f.star_factors().iter().map(|s| s.weight).sum());
    }
    Ok((z * f.ratio_sum(z)?).re)
}

fn theta_at(k: usize, n: usize) -> f64 {
    -PI + 2.0 * PI * (k + 1) as f64 / n as f64
}

fn sigma_on_circle(f: &LogharmonicMap, r: f64, theta: f64) -> Result<f64> {
    sigma(f, Complex64::from_polar(r, theta))
}

fn refine_circle_min(
    f: &LogharmonicMap,
    r: f64,
    grid: Vec<Result<f64>>,
    n: usize,
) -> Result<(f64, f64)> {
    let mut best_val = f64::INFINITY;
    let mut best_theta = 0.0;
    for (k, v) in grid.into_iter().enumerate() {
        let v = v?;
        let theta = theta_at(k, n);
        // deterministic reduction: min by value, tie -> smaller theta
        if v < best_val || (v == best_val && theta < best_theta) {
            best_val = v;
            best_theta = theta;
        }
    }
    let cell = 2.0 * PI / n as f64;
    let (theta_ref, val_ref) = golden_min(
        |t| sigma_on_circle(f, r, t).unwrap_or(f64::INFINITY),
        best_theta - cell,
        best_theta + cell,
        1e-10,
        120,
    );
    if val_ref < best_val {
        best_val = val_ref;
        best_theta = theta_ref;
    }
    // normalize into (-pi, pi]
    while best_theta <= -PI {
        best_theta += 2.0 * PI;
    }
    while best_theta > PI {
        best_theta -= 2.0 * PI;
    }
    Ok((best_val, best_theta))
}

fn check_circle_args(r: f64, n: usize) -> Result<()> {
    if !(r > 0.0 && r <= MAX_ABS) {
        return Err(Error::InvalidParameter(format!(
            "circle radius {r} outside (0, {MAX_ABS}]"
        )));
    }
    if n < 64 {
        return Err(Error::InvalidParameter(format!(
            "circle grid {n} too coarse; need at least 64"
        )));
    }
    Ok(())
}

/// Minimum of σ on |z| = r: coarse grid scan followed by golden-section
/// refinement around the best cell. Returns (min value, argmin θ). The
/// minimum is not assumed to occur on the real axis.
pub fn min_sigma_on_circle(f: &LogharmonicMap, r: f64, n: usize) -> Result<(f64, f64)> {
    check_circle_args(r, n)?;
    let grid = exec::sweep(n, |k| sigma_on_circle(f, r, theta_at(k, n)));
    refine_circle_min(f, r, grid, n)
}

/// Sequential sibling of [`min_sigma_on_circle`], for benchmarks and nested
/// parallel contexts.
pub fn min_sigma_on_circle_seq(f: &LogharmonicMap, r: f64, n: usize) -> Result<(f64, f64)> {
    check_circle_args(r, n)?;
    let grid = exec::sweep_seq(n, |k| sigma_on_circle(f, r, theta_at(k, n)));
    refine_circle_min(f, r, grid, n)
}

/// The largest α such that f is starlike of order α on |z| <= r: the infimum
/// of the circle minima over 32 geometrically spaced radii r′ ≤ r.
pub fn starlike_order(f: &LogharmonicMap, r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= MAX_ABS) {
        return Err(Error::InvalidParameter(format!(
            "radius {r} outside (0, {MAX_ABS}]"
        )));
    }
    let r_min = 1e-3_f64.min(r);
    let ratio = (r_min / r).powf(1.0 / (ORDER_RADII as f64 - 1.0));
    let mut inf = f64::INFINITY;
    let mut rk = r;
    for _ in 0..ORDER_RADII {
        let (m, _) = min_sigma_on_circle(f, rk, CIRCLE_GRID)?;
        inf = inf.min(m);
        rk *= ratio;
    }
    Ok(inf)
}

/// Bisection for the first radius at which the circle minimum of σ crosses
/// `threshold`; returns 1−ε when no crossing is found (starlike of that order
/// on the whole sampled disk). Tolerance 1e-6 in r.
pub fn numeric_radius(f: &LogharmonicMap, threshold: f64) -> Result<f64> {
    let r_start = 1e-3;
    let (m_start, _) = min_sigma_on_circle(f, r_start, CIRCLE_GRID)?;
    if m_start <= threshold {
        return Err(Error::DegenerateRadiusSearch {
            sigma: m_start,
            threshold,
            r: r_start,
        });
    }
    let min_at = |r: f64| -> Result<f64> { Ok(min_sigma_on_circle(f, r, CIRCLE_GRID)?.0) };
    const SCAN: usize = 64;
    let mut lo = r_start;
    let mut hi = None;
    for j in 1..=SCAN {
        let rj = r_start + (MAX_ABS - r_start) * j as f64 / SCAN as f64;
        if min_at(rj)? <= threshold {
            hi = Some(rj);
            break;
        }
        lo = rj;
    }
    let Some(mut hi) = hi else {
        return Ok(MAX_ABS);
    };
    while hi - lo > RADIUS_TOL {
        let mid = 0.5 * (lo + hi);
        if min_at(mid)? <= threshold {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Distortion bounds at |z| = r for maps of order α with a(0) = 0:
/// (r/(1+r)^{2α}) exp(−4(1−α)r/(1+r)) ≤ |f| ≤ (r/(1−r)^{2α}) exp(4(1−α)r/(1−r)).
pub fn distortion_bounds(r: f64, alpha: f64) -> (f64, f64) {
    let lower = r / (1.0 + r).powf(2.0 * alpha) * (-4.0 * (1.0 - alpha) * r / (1.0 + r)).exp();
    let upper = r / (1.0 - r).powf(2.0 * alpha) * (4.0 * (1.0 - alpha) * r / (1.0 - r)).exp();
    (lower, upper)
}

/// The Ψ functional |f|²·σ/|z f_z − z̄ f_z̄| = |f|·σ/|zf_z/f − z̄f_z̄/f|,
/// whose class minimum over ST_Lh(α) gives the Ω_r radius.
pub fn psi(f: &LogharmonicMap, z: Complex64) -> Result<f64> {
    let (a_ratio, b_ratio) = f.wirtinger_analytic(z)?;
    let denom = (a_ratio - b_ratio).norm();
    if denom < 1e-14 {
        return Err(Error::StationaryPhase {
            magnitude: denom,
            at: z,
        });
    }
    let value = f.eval(z)?.norm();
    let s = (z * f.ratio_sum(z)?).re;
    Ok(value * s / denom)
}

/// λ_α(r), the Ω_r center-radius function, written exactly as its closed form.
pub fn lambda_alpha(r: f64, alpha: f64) -> f64 {
    let head = r / (1.0 + r).powf(2.0 * alpha) * (-4.0 * (1.0 - alpha) * r / (1.0 + r)).exp();
    let numer = alpha + (1.0 - alpha) * (1.0 - r) / (1.0 + r);
    let denom = (alpha + (1.0 - alpha) * (1.0 + r) / (1.0 - r)) * ((1.0 + r) / (1.0 - r));
    head * numer / denom
}

/// The alternative published expression for the order-0 radius:
/// r·exp(−4r(1−r)³/(1+r)⁴). Not equal to [`lambda_alpha`] at α = 0 — the two
/// published forms disagree and the reported 8.7462e-2 matches only this one;
/// both are kept and compared, never silently reconciled.
pub fn lambda_alt_order_zero(r: f64) -> f64 {
    r * (-4.0 * r * (1.0 - r).powi(3) / (1.0 + r).powi(4)).exp()
}

/// One Ω_r radius question: the quintic root r₀, its λ_α(r₀), and for α = 0
/// the alternative published value with the discrepancy surfaced.
#[derive(Debug, Clone)]
pub struct OmegaReport {
    pub alpha: f64,
    pub r0: f64,
    pub lambda_omega: f64,
    pub lambda_alt: Option<f64>,
    pub reported_value: Option<f64>,
    pub discrepancy_flag: bool,
}

/// Build the Ω_r report for a given order: r₀ is the smallest positive root
/// of the order-α quintic on (0,1).
pub fn omega_report(alpha: f64) -> Result<OmegaReport> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} outside [0, 1)"
        )));
    }
    let quintic = radii::quintic_coeffs(alpha);
    let r0 = radii::smallest_positive_root(&quintic, 0.0, 1.0)?;
    let lambda_omega = lambda_alpha(r0, alpha);
    if alpha.abs() < 1e-12 {
        let alt = lambda_alt_order_zero(r0);
        Ok(OmegaReport {
            alpha,
            r0,
            lambda_omega,
            lambda_alt: Some(alt),
            reported_value: Some(REPORTED_OMEGA_LAMBDA),
            discrepancy_flag: (lambda_omega - REPORTED_OMEGA_LAMBDA).abs() > 1e-4,
        })
    } else {
        Ok(OmegaReport {
            alpha,
            r0,
            lambda_omega,
            lambda_alt: None,
            reported_value: None,
            discrepancy_flag: false,
        })
    }
}

/// Starlikeness of the image of |z| = r with respect to a shifted center w₀:
/// ℜ[(f(z) − w₀)/(z f_z − z̄ f_z̄)] > 0 at all n grid points.
pub fn starlike_wrt_point(f: &LogharmonicMap, r: f64, w0: Complex64, n: usize) -> Result<bool> {
    if !(r > 0.0 && r <= MAX_ABS) {
        return Err(Error::InvalidParameter(format!(
            "circle radius {r} outside (0, {MAX_ABS}]"
        )));
    }
    let results = exec::sweep(n, |k| -> Result<bool> {
        let z = Complex64::from_polar(r, theta_at(k, n));
        let value = f.eval(z)?;
        let (a_ratio, b_ratio) = f.wirtinger_analytic(z)?;
        let d = value * (a_ratio - b_ratio);
        if d.norm() < 1e-14 {
            return Err(Error::StationaryPhase {
                magnitude: d.norm(),
                at: z,
            });
        }
        Ok((value - w0).fdiv(d).re > 0.0)
    });
    let mut all = true;
    for r in results {
        all &= r?;
    }
    Ok(all)
}

/// Sampled image of the circle |z| = r under the map.
#[derive(Debug, Clone)]
pub struct ImageCurve {
    pub r: f64,
    pub samples: Vec<(f64, Complex64)>,
    pub map_id: String,
}

fn check_curve_args(r: f64, n: usize) -> Result<()> {
    if !(r > 0.0 && r <= MAX_ABS) {
        return Err(Error::InvalidParameter(format!(
            "curve radius {r} outside (0, {MAX_ABS}]"
        )));
    }
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "curve needs at least 4 samples, got {n}"
        )));
    }
    Ok(())
}

/// Sample w = f(r e^{iθ}) on the uniform θ grid over (−π, π].
pub fn image_curve(f: &LogharmonicMap, r: f64, n: usize) -> Result<ImageCurve> {
    check_curve_args(r, n)?;
    let samples = exec::sweep(n, |k| -> Result<(f64, Complex64)> {
        let theta = theta_at(k, n);
        Ok((theta, f.eval(Complex64::from_polar(r, theta))?))
    });
    let samples = samples.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(ImageCurve {
        r,
        samples,
        map_id: f.describe(),
    })
}

/// Sequential sibling of [`image_curve`].
pub fn image_curve_seq(f: &LogharmonicMap, r: f64, n: usize) -> Result<ImageCurve> {
    check_curve_args(r, n)?;
    let samples = exec::sweep_seq(n, |k| -> Result<(f64, Complex64)> {
        let theta = theta_at(k, n);
        Ok((theta, f.eval(Complex64::from_polar(r, theta))?))
    });
    let samples = samples.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(ImageCurve {
        r,
        samples,
        map_id: f.describe(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{AnalyticFunction, Dilatation};
    use crate::sampling;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn identity_map() -> LogharmonicMap {
        LogharmonicMap::from_representation(AnalyticFunction::identity(), Dilatation::zero())
            .unwrap()
    }

    fn koebe_map(alpha: f64, a_of_z: bool) -> LogharmonicMap {
        let dil = if a_of_z {
            Dilatation::new(AnalyticFunction::identity()).unwrap()
        } else {
            Dilatation::zero()
        };
        LogharmonicMap::from_representation(AnalyticFunction::koebe(alpha), dil).unwrap()
    }

    fn cst_extremal(alpha: f64) -> LogharmonicMap {
        LogharmonicMap::close_to_starlike(
            &koebe_map(alpha, false),
            AnalyticFunction::half_plane_p(),
        )
        .unwrap()
    }

    fn z_one_minus_z() -> LogharmonicMap {
        LogharmonicMap::close_to_starlike(&identity_map(), AnalyticFunction::one_minus_z()).unwrap()
    }

    #[test]
    fn sigma_of_identity_is_one() {
        let id = identity_map();
        for z in sampling::disk_points(1, 20, 0.9) {
            assert!((sigma(&id, z).unwrap() - 1.0).abs() < 1e-13);
        }
        assert!((sigma(&id, c(0.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sigma_of_koebe_on_negative_axis() {
        // at z = -r: alpha + (1-alpha)(1-r)/(1+r), independent of the dilatation
        for &alpha in &[0.0, 0.25, 0.5, 0.75] {
            let f = koebe_map(alpha, true);
            for &r in &[0.2, 0.5, 0.8] {
                let got = sigma(&f, c(-r, 0.0)).unwrap();
                let want = alpha + (1.0 - alpha) * (1.0 - r) / (1.0 + r);
                assert!((got - want).abs() < 1e-12, "alpha={alpha} r={r}");
            }
        }
    }

    #[test]
    fn kernel_density_is_identically_one() {
        let k = LogharmonicMap::k_kernel(Dilatation::new(AnalyticFunction::identity()).unwrap())
            .unwrap();
        for z in sampling::disk_points(23, 25, 0.9) {
            assert!((sigma(&k, z).unwrap() - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn sigma_of_rotated_map_is_sigma_at_rotated_point() {
        let dz = Dilatation::new(AnalyticFunction::identity()).unwrap();
        let f = LogharmonicMap::close_to_starlike(
            &LogharmonicMap::from_representation(AnalyticFunction::koebe(0.25), dz).unwrap(),
            AnalyticFunction::one_minus_z(),
        )
        .unwrap();
        let theta = -1.3;
        let rot = f.rotate(theta);
        let phase = Complex64::from_polar(1.0, -theta);
        for z in sampling::annulus_points(29, 25, 0.05, 0.85) {
            let got = sigma(&rot, z).unwrap();
            let want = sigma(&f, phase * z).unwrap();
            assert!((got - want).abs() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn sigma_of_z_one_minus_z_on_real_axis() {
        let f = z_one_minus_z();
        for &r in &[0.1, 0.3, 0.499, 0.5, 0.7] {
            let got = sigma(&f, c(r, 0.0)).unwrap();
            let want = (1.0 - 2.0 * r) / (1.0 - r);
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn sigma_equals_wirtinger_difference() {
        // Re(zf_z/f − z̄f_z̄/f) computed from the exact Wirtinger ratios
        // collapses to sigma: the dilatation part cancels identically
        let dz = Dilatation::new(AnalyticFunction::identity()).unwrap();
        let f = LogharmonicMap::close_to_starlike(
            &LogharmonicMap::from_representation(AnalyticFunction::koebe(0.3), dz).unwrap(),
            AnalyticFunction::half_plane_p(),
        )
        .unwrap();
        for z in sampling::annulus_points(19, 30, 0.05, 0.85) {
            let (a, b) = f.wirtinger_analytic(z).unwrap();
            let direct = (a - b).re;
            assert!((direct - sigma(&f, z).unwrap()).abs() < 1e-13);
        }
    }

    #[test]
    fn min_sigma_identity_and_extremal() {
        let (m, _) = min_sigma_on_circle(&identity_map(), 0.5, 64).unwrap();
        assert!((m - 1.0).abs() < 1e-12);

        // the close-to-starlike extremal of order 0 bottoms out at theta = pi,
        // reaching 0 at r = 2 - sqrt(3)
        let f = cst_extremal(0.0);
        let rho = 2.0 - 3.0_f64.sqrt();
        let (m, theta) = min_sigma_on_circle(&f, rho, CIRCLE_GRID).unwrap();
        assert!(m.abs() < 1e-9, "min sigma {m}");
        assert!((theta.abs() - std::f64::consts::PI).abs() < 1e-3);

        // f0's circle minimum depends only on phi
        let f0 = koebe_map(0.25, true);
        for &r in &[0.3, 0.6] {
            let (m, _) = min_sigma_on_circle(&f0, r, CIRCLE_GRID).unwrap();
            let want = 0.25 + 0.75 * (1.0 - r) / (1.0 + r);
            assert!((m - want).abs() < 1e-10);
        }
    }

    #[test]
    fn min_sigma_matches_sequential() {
        let f = cst_extremal(0.25);
        let par = min_sigma_on_circle(&f, 0.4, 256).unwrap();
        let seq = min_sigma_on_circle_seq(&f, 0.4, 256).unwrap();
        assert_eq!(par.0.to_bits(), seq.0.to_bits());
        assert_eq!(par.1.to_bits(), seq.1.to_bits());
    }

    #[test]
    fn min_sigma_rejects_coarse_grid() {
        assert!(min_sigma_on_circle(&identity_map(), 0.5, 32).is_err());
    }

    #[test]
    fn starlike_order_examples() {
        assert!((starlike_order(&identity_map(), 0.9).unwrap() - 1.0).abs() < 1e-12);

        // koebe order approaches alpha from above as r -> 1-eps
        let f = koebe_map(0.5, false);
        let got = starlike_order(&f, MAX_ABS).unwrap();
        let want = 0.5 + 0.5 * (1.0 - MAX_ABS) / (1.0 + MAX_ABS);
        assert!((got - want).abs() < 1e-9);
        assert!(got > 0.5);

        let got = starlike_order(&z_one_minus_z(), 0.5).unwrap();
        assert!(got.abs() < 1e-9);
    }

    #[test]
    fn numeric_radius_examples() {
        assert!((numeric_radius(&identity_map(), 0.0).unwrap() - MAX_ABS).abs() < 1e-12);

        let got = numeric_radius(&z_one_minus_z(), 0.0).unwrap();
        assert!((got - 0.5).abs() < 1e-5, "got {got}");

        let got = numeric_radius(&cst_extremal(0.0), 0.0).unwrap();
        assert!((got - (2.0 - 3.0_f64.sqrt())).abs() < 1e-4, "got {got}");
    }

    #[test]
    fn numeric_radius_degenerate_input() {
        // sigma of z(1-z) is below 0.999 immediately
        let err = numeric_radius(&z_one_minus_z(), 0.9999);
        assert!(matches!(err, Err(Error::DegenerateRadiusSearch { .. })));
    }

    #[test]
    fn distortion_examples() {
        assert_eq!(distortion_bounds(0.0, 0.3), (0.0, 0.0));
        let (lo, hi) = distortion_bounds(0.5, 0.0);
        assert!((lo - 0.5 * (-4.0 / 3.0_f64).exp()).abs() < 1e-15);
        assert!((hi - 0.5 * 4.0_f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn distortion_sharp_on_f0() {
        for &alpha in &[0.0, 0.5] {
            let f0 = koebe_map(alpha, true);
            for &r in &[0.3, 0.6] {
                let (lo, hi) = distortion_bounds(r, alpha);
                let at_minus = f0.eval(c(-r, 0.0)).unwrap().norm();
                let at_plus = f0.eval(c(r, 0.0)).unwrap().norm();
                assert!((at_minus - lo).abs() < 1e-8, "alpha={alpha} r={r}");
                assert!(
                    (at_plus - hi).abs() < 1e-8 * hi.max(1.0),
                    "alpha={alpha} r={r}"
                );
            }
        }
    }

    #[test]
    fn psi_examples() {
        let id = identity_map();
        for &r in &[0.2, 0.6] {
            for &theta in &[0.0, 1.0, -2.0] {
                let z = Complex64::from_polar(r, theta);
                assert!((psi(&id, z).unwrap() - r).abs() < 1e-12);
            }
        }
        // K with a = z at z = 0.5: zI' = z/(1-z) is real there, so psi = |K| = 2
        let k = LogharmonicMap::k_kernel(Dilatation::new(AnalyticFunction::identity()).unwrap())
            .unwrap();
        assert!((psi(&k, c(0.5, 0.0)).unwrap() - 2.0).abs() < 1e-9);

        // lower-bound direction of the omega chain at the critical radius
        let f0 = koebe_map(0.0, true);
        let report = omega_report(0.0).unwrap();
        let got = psi(&f0, c(-report.r0, 0.0)).unwrap();
        assert!(got >= report.lambda_omega - 1e-8);
    }

    #[test]
    fn lambda_values_frozen() {
        // independent evaluations of the two published forms (cross-checked
        // against a high-resolution external computation)
        assert!((lambda_alpha(0.10715, 0.0) - 0.038157874490726475).abs() < 1e-12);
        assert!((lambda_alt_order_zero(0.10715) - 0.08746152412084596).abs() < 1e-12);
        assert!((lambda_alt_order_zero(0.10715) - REPORTED_OMEGA_LAMBDA).abs() < 1e-5);
        assert!((lambda_alpha(0.10715, 0.0) - REPORTED_OMEGA_LAMBDA).abs() > 4e-2);
        let quad_root = (-3.0 + 2.0 * 3.0_f64.sqrt()) / 3.0;
        assert!((lambda_alpha(quad_root, 0.5) - 0.05492069813658174).abs() < 1e-10);
    }

    #[test]
    fn omega_reports() {
        let rep = omega_report(0.0).unwrap();
        assert!((rep.r0 - 0.10715).abs() < 1e-5);
        assert!((rep.r0 - 0.10714756443533285).abs() < 1e-9);
        assert!(rep.discrepancy_flag);
        assert!((rep.lambda_alt.unwrap() - REPORTED_OMEGA_LAMBDA).abs() < 1e-5);

        let rep = omega_report(0.5).unwrap();
        assert!((rep.r0 - 0.15470053837925146).abs() < 1e-9);
        assert!(rep.lambda_alt.is_none());
        assert!(!rep.discrepancy_flag);

        let rep = omega_report(0.9).unwrap();
        assert!(rep.r0 > 0.0 && rep.r0 < 1.0);
    }

    #[test]
    fn starlike_wrt_point_checks() {
        let f0 = koebe_map(0.0, true);
        assert!(starlike_wrt_point(&f0, 0.5, c(0.0, 0.0), 64).unwrap());

        let rep = omega_report(0.0).unwrap();
        let radius = 0.99 * rep.lambda_omega;
        for k in 0..64 {
            let w0 = Complex64::from_polar(radius, -PI + 2.0 * PI * (k + 1) as f64 / 64.0);
            assert!(
                starlike_wrt_point(&f0, rep.r0, w0, 64).unwrap(),
                "failed at w0 = {w0}"
            );
        }

        assert!(!starlike_wrt_point(&z_one_minus_z(), 0.9, c(0.0, 0.0), 128).unwrap());
    }

    #[test]
    fn image_curve_cardinal_points() {
        let curve = image_curve(&identity_map(), 0.5, 4).unwrap();
        assert_eq!(curve.samples.len(), 4);
        let expect = [c(0.0, -0.5), c(0.5, 0.0), c(0.0, 0.5), c(-0.5, 0.0)];
        for ((theta, w), want) in curve.samples.iter().zip(expect) {
            assert!((w - want).norm() < 1e-12, "theta={theta}");
        }
        // thetas strictly increasing over (-pi, pi]
        for pair in curve.samples.windows(2) {
            assert!(pair[0].0 < pair[1].0);
        }
        assert!(curve.samples.last().unwrap().0 <= PI + 1e-15);
    }

    #[test]
    fn image_curve_closes() {
        let f0 = koebe_map(0.0, true);
        let n = 90;
        let curve = image_curve(&f0, 0.3, n).unwrap();
        // wrap: value at theta_0 equals value at theta_{n-1} + 2pi/n
        let first = curve.samples[0].1;
        let wrapped = f0
            .eval(Complex64::from_polar(
                0.3,
                curve.samples[n - 1].0 + 2.0 * PI / n as f64,
            ))
            .unwrap();
        assert!((first - wrapped).norm() < 1e-8);
        assert_eq!(image_curve_seq(&f0, 0.3, 16).unwrap().samples.len(), 16);
    }

    #[test]
    fn winding_of_z_one_minus_z_at_outer_radius() {
        // total winding of arg about 0 stays 2pi but the angular speed changes
        // sign: close-to-starlike, not starlike
        let f = z_one_minus_z();
        let n = 1024;
        let curve = image_curve(&f, 0.7, n).unwrap();
        let mut winding = 0.0;
        let mut sign_changes = 0;
        let mut prev_arg = curve.samples[n - 1].1.arg();
        let mut prev_sign = 0i8;
        for &(_, w) in &curve.samples {
            let arg = w.arg();
            let mut d = arg - prev_arg;
            while d > PI {
                d -= 2.0 * PI;
            }
            while d < -PI {
                d += 2.0 * PI;
            }
            winding += d;
            let s = if d > 0.0 { 1 } else { -1 };
            if prev_sign != 0 && s != prev_sign {
                sign_changes += 1;
            }
            prev_sign = s;
            prev_arg = arg;
        }
        assert!((winding - 2.0 * PI).abs() < 1e-9, "winding = {winding}");
        assert!(sign_changes >= 2, "expected direction reversals");
    }
}
