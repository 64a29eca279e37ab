//! Radius machinery: the order-α quintic, real-root isolation on (0,1) by
//! Sturm counts, the closed-form radii of the close-to-starlike theory, and
//! 1-D extremization of λ_α.

use crate::error::{Error, Result};
use crate::geometry;
use crate::map::LogharmonicMap;
use crate::optimize::golden_max;
use crate::AnalyticFunction;
use crate::Dilatation;

/// Bisection tolerance for isolated roots.
pub const ROOT_TOL: f64 = 1e-10;

/// A real polynomial with degree-descending coefficients. Leading zeros are
/// tolerated (degenerate degrees appear when the quintic collapses).
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    /// Degree-descending coefficients as given.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficients with exact leading zeros removed.
    pub fn trimmed(&self) -> Vec<f64> {
        let first = self.coeffs.iter().position(|&c| c != 0.0);
        match first {
            Some(i) => self.coeffs[i..].to_vec(),
            None => vec![0.0],
        }
    }

    pub fn degree(&self) -> usize {
        self.trimmed().len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> RealPolynomial {
        let t = self.trimmed();
        let n = t.len();
        if n <= 1 {
            return RealPolynomial::new(vec![0.0]);
        }
        let coeffs = t[..n - 1]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (n - 1 - i) as f64)
            .collect();
        RealPolynomial::new(coeffs)
    }

    pub fn multiply(&self, other: &RealPolynomial) -> RealPolynomial {
        let a = self.trimmed();
        let b = other.trimmed();
        let mut out = vec![0.0; a.len() + b.len() - 1];
        for (i, &ca) in a.iter().enumerate() {
            for (j, &cb) in b.iter().enumerate() {
                out[i + j] += ca * cb;
            }
        }
        RealPolynomial::new(out)
    }
}

/// Euclidean remainder of num / den (degree-descending, den lead nonzero).
fn poly_rem(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut rem = num.to_vec();
    let dn = den.len();
    while rem.len() >= dn {
        let factor = rem[0] / den[0];
        for j in 0..dn {
            rem[j] -= factor * den[j];
        }
        rem.remove(0);
    }
    if rem.is_empty() {
        rem.push(0.0);
    }
    rem
}

fn trim_small(mut coeffs: Vec<f64>, scale: f64) -> Vec<f64> {
    let tol = 1e-11 * scale.max(1.0);
    while coeffs.len() > 1 && coeffs[0].abs() <= tol {
        coeffs.remove(0);
    }
    if coeffs.len() == 1 && coeffs[0].abs() <= tol {
        coeffs[0] = 0.0;
    }
    coeffs
}

/// Canonical Sturm chain p, p′, −rem(...), ... with small-coefficient trimming.
fn sturm_chain(p: &RealPolynomial) -> Vec<Vec<f64>> {
    let scale = p.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let p0 = trim_small(p.trimmed(), scale);
    let mut chain = vec![p0.clone()];
    if p0.len() <= 1 {
        return chain;
    }
    let p1 = trim_small(
        RealPolynomial::new(p0.clone())
            .derivative()
            .coeffs()
            .to_vec(),
        scale,
    );
    chain.push(p1);
    loop {
        let n = chain.len();
        let prev = &chain[n - 2];
        let cur = &chain[n - 1];
        if cur.len() <= 1 && cur[0] == 0.0 {
            break;
        }
        if cur.len() == 1 {
            break;
        }
        let mut rem = trim_small(poly_rem(prev, cur), scale);
        if rem.len() == 1 && rem[0] == 0.0 {
            break;
        }
        for c in rem.iter_mut() {
            *c = -*c;
        }
        chain.push(rem);
    }
    chain
}

fn sign_variations(chain: &[Vec<f64>], x: f64) -> usize {
    let mut count = 0;
    let mut last = 0.0f64;
    for poly in chain {
        let v = poly.iter().fold(0.0, |acc, &c| acc * x + c);
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// Number of distinct real roots in the half-open interval (a, b].
pub(crate) fn count_roots(chain: &[Vec<f64>], a: f64, b: f64) -> usize {
    sign_variations(chain, a).saturating_sub(sign_variations(chain, b))
}

/// Smallest root of `p` strictly inside (lo, hi), isolated by Sturm-count
/// bisection and refined to 1e-10 absolute. A root sitting exactly at `hi`
/// (the α = 0 quintic has one at r = 1) is excluded.
pub fn smallest_positive_root(p: &RealPolynomial, lo: f64, hi: f64) -> Result<f64> {
    if p.trimmed() == [0.0] {
        return Err(Error::InvalidParameter("zero polynomial".into()));
    }
    let chain = sturm_chain(p);
    let mut a = lo;
    let mut b = hi - 1e-9;
    // Sturm variations need non-root endpoints; nudge if we are unlucky.
    for _ in 0..8 {
        if p.eval(a) != 0.0 {
            break;
        }
        a += 1e-12;
    }
    if count_roots(&chain, a, b) == 0 {
        return Err(Error::NoRootInInterval { lo, hi });
    }
    while b - a > ROOT_TOL {
        let mid = 0.5 * (a + b);
        if p.eval(mid) == 0.0 {
            // landed exactly on a root: make sure none precedes it
            let probe = mid - (b - a) * 1e-6;
            if count_roots(&chain, a, probe) >= 1 {
                b = probe;
                continue;
            }
            return Ok(mid);
        }
        if count_roots(&chain, a, mid) >= 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Degree-descending coefficients of the Ω_r quintic as a polynomial in r,
/// generated from its α-coefficient polynomials (validated at α = 0 against
/// the expanded integer form):
/// [(2α−1)³, −16α³+12α²+4α−3, 8α³−36α²+32α−8, 4α²−4α+4, −6α+9, −1].
pub fn quintic_coeffs(alpha: f64) -> RealPolynomial {
    let a = alpha;
    RealPolynomial::new(vec![
        (2.0 * a - 1.0).powi(3),
        -16.0 * a.powi(3) + 12.0 * a * a + 4.0 * a - 3.0,
        8.0 * a.powi(3) - 36.0 * a * a + 32.0 * a - 8.0,
        4.0 * a * a - 4.0 * a + 4.0,
        -6.0 * a + 9.0,
        -1.0,
    ])
}

/// The α = 0 critical cubic r³ + 3r² + 9r − 1.
pub fn omega_critical_cubic() -> RealPolynomial {
    RealPolynomial::new(vec![1.0, 3.0, 9.0, -1.0])
}

/// Which radius question a report answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusKind {
    /// Ω_r center radius (quintic root r₀).
    Omega,
    /// Radius of univalence/starlikeness for CST_Lh(α).
    CloseToStarlike,
    /// Radius inside which CST_Lh(α) maps stay in ST_Lh(α).
    OrderAlpha,
    /// Q = F^λ f*^{1−λ} with f* of order α.
    QProduct,
    /// Q = F^λ f*^{1−λ} with f* of order 0.
    QProductOrder0,
}

impl RadiusKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RadiusKind::Omega => "omega",
            RadiusKind::CloseToStarlike => "close_to_starlike",
            RadiusKind::OrderAlpha => "order_alpha",
            RadiusKind::QProduct => "q_product",
            RadiusKind::QProductOrder0 => "q_product_order0",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "omega" => Some(RadiusKind::Omega),
            "close_to_starlike" => Some(RadiusKind::CloseToStarlike),
            "order_alpha" => Some(RadiusKind::OrderAlpha),
            "q_product" => Some(RadiusKind::QProduct),
            "q_product_order0" => Some(RadiusKind::QProductOrder0),
            _ => None,
        }
    }

    fn needs_lambda(&self) -> bool {
        matches!(self, RadiusKind::QProduct | RadiusKind::QProductOrder0)
    }
}

/// One radius question with its closed-form answer and an optional numeric
/// cross-check.
#[derive(Debug, Clone)]
pub struct RadiusReport {
    pub kind: RadiusKind,
    pub alpha: f64,
    pub lambda_weight: Option<f64>,
    pub closed_form: f64,
    pub numeric_check: Option<f64>,
    pub abs_gap: Option<f64>,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} outside [0, 1)"
        )));
    }
    Ok(())
}

/// Closed-form radius per kind. Removable singularities (α = 1/2, resp.
/// α = 1/(2λ)) return the stated limits 1/3 and 1/(2λ+1) directly; λ = 0
/// degenerates Q to f* and returns radius 1 exactly.
pub fn closed_form_radius(
    kind: RadiusKind,
    alpha: f64,
    lambda: Option<f64>,
) -> Result<RadiusReport> {
    check_alpha(alpha)?;
    if kind.needs_lambda() {
        let l = lambda.ok_or_else(|| {
            Error::InvalidParameter(format!("kind {} requires lambda", kind.as_str()))
        })?;
        if !(0.0..=1.0).contains(&l) {
            return Err(Error::InvalidParameter(format!(
                "lambda = {l} outside [0, 1]"
            )));
        }
    } else if lambda.is_some() {
        return Err(Error::InvalidParameter(format!(
            "kind {} takes no lambda",
            kind.as_str()
        )));
    }
    let closed_form = match kind {
        RadiusKind::Omega => smallest_positive_root(&quintic_coeffs(alpha), 0.0, 1.0)?,
        RadiusKind::CloseToStarlike => {
            let denom = 1.0 - 2.0 * alpha;
            if denom.abs() < 1e-12 {
                1.0 / 3.0
            } else {
                (2.0 - alpha - (alpha * alpha - 2.0 * alpha + 3.0).sqrt()) / denom
            }
        }
        RadiusKind::OrderAlpha => (2.0 - alpha - (3.0 - 2.0 * alpha).sqrt()) / (1.0 - alpha),
        RadiusKind::QProduct => {
            let l = lambda.unwrap();
            let denom = 1.0 - 2.0 * alpha;
            if l == 0.0 {
                1.0
            } else if denom.abs() < 1e-12 {
                1.0 / (2.0 * l + 1.0)
            } else {
                (1.0 + l - alpha - (alpha * alpha - 2.0 * l * alpha + l * l + 2.0 * l).sqrt())
                    / denom
            }
        }
        RadiusKind::QProductOrder0 => {
            let l = lambda.unwrap();
            let denom = 1.0 - 2.0 * l * alpha;
            if l == 0.0 {
                1.0
            } else if denom.abs() < 1e-12 {
                1.0 / (2.0 * l + 1.0)
            } else {
                let disc = l * l * alpha * alpha - 2.0 * l * l * alpha + l * l + 2.0 * l;
                (1.0 + l - l * alpha - disc.sqrt()) / denom
            }
        }
    };
    Ok(RadiusReport {
        kind,
        alpha,
        lambda_weight: lambda,
        closed_form,
        numeric_check: None,
        abs_gap: None,
    })
}

/// The bound-attaining extremal for each radius kind, built with a ≡ 0:
/// F = koebe_α·(1+z)/(1−z) for the close-to-starlike kinds, and the aligned
/// product Q = F^λ·(koebe_α or koebe_0)^{1−λ} for the Q kinds. σ of each of
/// these bottoms out exactly on the proof's lower-bound curve at z = −r.
pub fn extremal_map(
    kind: RadiusKind,
    alpha: f64,
    lambda: Option<f64>,
) -> Result<Option<LogharmonicMap>> {
    check_alpha(alpha)?;
    let koebe_map = |al: f64| -> Result<LogharmonicMap> {
        LogharmonicMap::from_representation(AnalyticFunction::koebe(al), Dilatation::zero())
    };
    let cst_extremal = |al: f64| -> Result<LogharmonicMap> {
        LogharmonicMap::close_to_starlike(&koebe_map(al)?, AnalyticFunction::half_plane_p())
    };
    match kind {
        RadiusKind::Omega => Ok(None),
        RadiusKind::CloseToStarlike | RadiusKind::OrderAlpha => Ok(Some(cst_extremal(alpha)?)),
        RadiusKind::QProduct => {
            let l = lambda
                .ok_or_else(|| Error::InvalidParameter("q_product requires lambda".into()))?;
            let f = cst_extremal(alpha)?;
            let star = koebe_map(alpha)?;
            Ok(Some(LogharmonicMap::weighted_product(&[
                (&f, l),
                (&star, 1.0 - l),
            ])?))
        }
        RadiusKind::QProductOrder0 => {
            let l = lambda.ok_or_else(|| {
                Error::InvalidParameter("q_product_order0 requires lambda".into())
            })?;
            let f = cst_extremal(alpha)?;
            let star = koebe_map(0.0)?;
            Ok(Some(LogharmonicMap::weighted_product(&[
                (&f, l),
                (&star, 1.0 - l),
            ])?))
        }
    }
}

/// Closed form plus a numeric cross-check: bisection radius of the kind's
/// extremal (threshold α for the order-α kind, 0 otherwise), or the argmax of
/// λ_α for the Ω kind.
pub fn radius_report_with_check(
    kind: RadiusKind,
    alpha: f64,
    lambda: Option<f64>,
) -> Result<RadiusReport> {
    let mut report = closed_form_radius(kind, alpha, lambda)?;
    let numeric = match kind {
        RadiusKind::Omega => argmax_lambda(alpha).0,
        _ => {
            let map =
                extremal_map(kind, alpha, lambda)?.expect("non-omega kinds build an extremal");
            let threshold = match kind {
                RadiusKind::OrderAlpha => alpha,
                _ => 0.0,
            };
            geometry::numeric_radius(&map, threshold)?
        }
    };
    report.abs_gap = Some((report.closed_form - numeric).abs());
    report.numeric_check = Some(numeric);
    Ok(report)
}

/// Maximize λ_α(·) on (1e-4, 1−1e-4): 256-point bracket scan, then
/// golden-section to 1e-8 in r. λ_α vanishes at both ends of (0,1), so the
/// critical point in the interior is a maximum.
pub fn argmax_lambda(alpha: f64) -> (f64, f64) {
    const SCAN: usize = 256;
    let lo = 1e-4;
    let hi = 1.0 - 1e-4;
    let step = (hi - lo) / (SCAN as f64 - 1.0);
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..SCAN {
        let r = lo + step * i as f64;
        let v = geometry::lambda_alpha(r, alpha);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let a = lo + step * best_i.saturating_sub(1) as f64;
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    golden_max(|r| geometry::lambda_alpha(r, alpha), a, b, 1e-8, 200)
}
