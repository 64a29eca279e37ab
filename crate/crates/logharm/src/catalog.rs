//! Named primitives and the constructed-map battery used by verification.

use num_complex::Complex64;

use crate::analytic::{AnalyticFunction, Dilatation};
use crate::error::{Error, Result};
use crate::map::LogharmonicMap;

/// One primitive: a φ generator, a p generator, or a dilatation.
#[derive(Debug, Clone)]
pub struct PrimitiveEntry {
    pub name: &'static str,
    pub role: &'static str,
    pub class: &'static str,
    pub formula: &'static str,
}

/// The primitive catalog with class memberships.
pub fn primitives() -> Vec<PrimitiveEntry> {
    vec![
        PrimitiveEntry {
            name: "identity",
            role: "phi",
            class: "ST(alpha), every alpha",
            formula: "z",
        },
        PrimitiveEntry {
            name: "koebe_alpha",
            role: "phi",
            class: "ST(alpha)",
            formula: "z/(1-z)^(2-2*alpha)",
        },
        PrimitiveEntry {
            name: "half_plane_p",
            role: "p",
            class: "P",
            formula: "(1+z)/(1-z)",
        },
        PrimitiveEntry {
            name: "one_minus_z",
            role: "p",
            class: "P",
            formula: "1-z",
        },
        PrimitiveEntry {
            name: "inv_half_plane_p",
            role: "p",
            class: "P",
            formula: "(1-z)/(1+z)",
        },
        PrimitiveEntry {
            name: "one",
            role: "p",
            class: "P",
            formula: "1",
        },
        PrimitiveEntry {
            name: "a=zero",
            role: "dilatation",
            class: "B",
            formula: "0",
        },
        PrimitiveEntry {
            name: "a=z",
            role: "dilatation",
            class: "B",
            formula: "z",
        },
        PrimitiveEntry {
            name: "a=z/2",
            role: "dilatation",
            class: "B",
            formula: "z/2",
        },
        PrimitiveEntry {
            name: "a=z^2",
            role: "dilatation",
            class: "B",
            formula: "z^2",
        },
        PrimitiveEntry {
            name: "a=const:<c>",
            role: "dilatation",
            class: "B for |c|<1",
            formula: "c",
        },
    ]
}

/// Resolve a φ generator by catalog name; `alpha` feeds `koebe_alpha`.
pub fn phi_by_name(name: &str, alpha: f64) -> Result<AnalyticFunction> {
    match name {
        "identity" => Ok(AnalyticFunction::identity()),
        "koebe_alpha" | "koebe" => {
            if !(0.0..1.0).contains(&alpha) {
                return Err(Error::InvalidParameter(format!(
                    "alpha = {alpha} outside [0, 1)"
                )));
            }
            Ok(AnalyticFunction::koebe(alpha))
        }
        other => Err(Error::InvalidParameter(format!("unknown phi '{other}'"))),
    }
}

/// Resolve a p generator by catalog name.
pub fn p_by_name(name: &str) -> Result<AnalyticFunction> {
    match name {
        "half_plane_p" | "half_plane" => Ok(AnalyticFunction::half_plane_p()),
        "one_minus_z" => Ok(AnalyticFunction::one_minus_z()),
        "inv_half_plane_p" | "inv_half_plane" => Ok(AnalyticFunction::quotient(
            AnalyticFunction::one_minus_z(),
            AnalyticFunction::one_plus_z(),
        )),
        "one" => Ok(AnalyticFunction::constant(Complex64::new(1.0, 0.0))),
        other => Err(Error::InvalidParameter(format!("unknown p '{other}'"))),
    }
}

/// Resolve a dilatation by catalog name: zero, z, z/2, z^2 or `const:<c>`.
pub fn dilatation_by_name(name: &str) -> Result<Dilatation> {
    match name {
        "zero" | "0" => Ok(Dilatation::zero()),
        "z" => Dilatation::new(AnalyticFunction::identity()),
        "z/2" | "z_half" => {
            Dilatation::new(AnalyticFunction::scaled_identity(Complex64::new(0.5, 0.0)))
        }
        "z^2" | "z2" => Dilatation::new(AnalyticFunction::series(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])),
        other => {
            if let Some(c) = other.strip_prefix("const:") {
                let v: f64 = c.parse().map_err(|_| {
                    Error::InvalidParameter(format!("bad dilatation constant '{c}'"))
                })?;
                Dilatation::new(AnalyticFunction::constant(Complex64::new(v, 0.0)))
            } else {
                Err(Error::InvalidParameter(format!(
                    "unknown dilatation '{other}'"
                )))
            }
        }
    }
}

/// A constructed map with its claimed class membership: `order = Some(α)`
/// asserts f ∈ ST_Lh(α) with a(0) = 0 (so the distortion and Ω_r bounds
/// apply); `None` marks close-to-starlike composites outside that class.
pub struct VerificationMap {
    pub name: String,
    pub map: LogharmonicMap,
    pub order: Option<f64>,
}

fn dil_z() -> Dilatation {
    Dilatation::new(AnalyticFunction::identity()).expect("a(z)=z is a valid dilatation")
}

/// Every construction route exercised once: representation maps over several
/// orders and dilatations, the kernel, a weighted product, a rotation, and
/// the close-to-starlike composites of the examples.
pub fn verification_maps() -> Vec<VerificationMap> {
    let koebe = |alpha: f64, dil: Dilatation| {
        LogharmonicMap::from_representation(AnalyticFunction::koebe(alpha), dil)
            .expect("catalog construction")
    };
    let identity_map =
        LogharmonicMap::from_representation(AnalyticFunction::identity(), Dilatation::zero())
            .expect("catalog construction");
    let f0 = koebe(0.0, dil_z());
    let kernel = LogharmonicMap::k_kernel(dil_z()).expect("catalog construction");
    let prop22 = LogharmonicMap::weighted_product(&[(&f0, 0.7), (&kernel, 0.3)])
        .expect("catalog construction");
    let cst_extremal = |alpha: f64, dil: Dilatation| {
        LogharmonicMap::close_to_starlike(&koebe(alpha, dil), AnalyticFunction::half_plane_p())
            .expect("catalog construction")
    };
    let q_product = {
        let f = cst_extremal(0.25, Dilatation::zero());
        let star = koebe(0.25, Dilatation::zero());
        LogharmonicMap::weighted_product(&[(&f, 0.5), (&star, 0.5)]).expect("catalog construction")
    };

    vec![
        VerificationMap {
            name: "identity (a=0)".into(),
            map: identity_map.clone(),
            order: Some(0.0),
        },
        VerificationMap {
            name: "koebe(0) (a=z)".into(),
            map: f0.clone(),
            order: Some(0.0),
        },
        VerificationMap {
            name: "koebe(0.25) (a=z)".into(),
            map: koebe(0.25, dil_z()),
            order: Some(0.25),
        },
        VerificationMap {
            name: "koebe(0.5) (a=z/2)".into(),
            map: koebe(0.5, dilatation_by_name("z/2").unwrap()),
            order: Some(0.5),
        },
        VerificationMap {
            name: "koebe(0.75) (a=z^2)".into(),
            map: koebe(0.75, dilatation_by_name("z^2").unwrap()),
            order: Some(0.75),
        },
        VerificationMap {
            name: "K (a=z)".into(),
            map: kernel,
            order: Some(0.0),
        },
        VerificationMap {
            name: "prop22 product 0.7/0.3 (a=z)".into(),
            map: prop22,
            order: Some(0.3),
        },
        VerificationMap {
            name: "rotated koebe(0), theta=1 (a=z)".into(),
            map: f0.rotate(1.0),
            order: Some(0.0),
        },
        VerificationMap {
            name: "z(1-z) (a=0)".into(),
            map: LogharmonicMap::close_to_starlike(&identity_map, AnalyticFunction::one_minus_z())
                .expect("catalog construction"),
            order: None,
        },
        VerificationMap {
            name: "cst extremal alpha=0.25 (a=0)".into(),
            map: cst_extremal(0.25, Dilatation::zero()),
            order: None,
        },
        VerificationMap {
            name: "cst extremal alpha=0 (a=z)".into(),
            map: cst_extremal(0.0, dil_z()),
            order: None,
        },
        VerificationMap {
            name: "q product alpha=0.25 lambda=0.5 (a=0)".into(),
            map: q_product,
            order: None,
        },
    ]
}
