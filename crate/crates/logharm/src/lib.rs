//! Starlike logharmonic mappings of order α.
//!
//! A logharmonic mapping is a sense-preserving solution `f` of the nonlinear
//! elliptic equation
//!
//! ```text
//!     conj(f_z̄) / conj(f) = a(z) · f_z / f,        |a| < 1 on the unit disk,
//! ```
//!
//! and `f` is starlike of order α when the angular speed of the image argument,
//! σ = ℜ[(z f_z − z̄ f_z̄)/f], stays above α on the whole disk.
//!
//! This crate builds such mappings from analytic data via the representation
//! `f = φ · exp 2ℜ∫₀ᶻ a φ′/((1−a)φ) ds`, evaluates their Wirtinger derivatives
//! exactly, checks the defining equation and Jacobian positivity by independent
//! finite differences, and computes every extremal radius of the theory —
//! closed forms, polynomial roots on (0,1), and numeric bisection cross-checks.
//!
//! Grid sweeps (circle scans, curve sampling, verification batteries) run on
//! rayon when the default `parallel` feature is enabled and fall back to plain
//! iterators otherwise; `*_seq` siblings of the two hot paths are always
//! available for benchmarking and nested contexts.

pub mod analytic;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod map;
pub mod optimize;
pub mod quad;
pub mod radii;
pub mod sampling;
pub mod verify;

pub use analytic::{beta_from_a0, validate_dilatation, AnalyticFunction, Dilatation};
pub use error::{Error, Result};
pub use geometry::{ImageCurve, OmegaReport};
pub use map::LogharmonicMap;
pub use radii::{RadiusKind, RadiusReport, RealPolynomial};

/// Guard band keeping evaluations off |z| = 1 where the catalog functions blow up.
pub const GUARD_EPS: f64 = 1e-3;

/// Largest modulus at which evaluation is allowed: 1 − [`GUARD_EPS`].
pub const MAX_ABS: f64 = 1.0 - GUARD_EPS;
