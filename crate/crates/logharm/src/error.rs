//! Error type shared by the whole crate.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("point {z} lies outside the guarded disk |z| <= {max_abs}")]
    OutsideGuardedDisk { z: Complex64, max_abs: f64 },

    #[error("quadrature did not converge: last refinement gap {gap:.3e} > tol {tol:.3e} at {panels} panels")]
    QuadratureDidNotConverge { gap: f64, tol: f64, panels: usize },

    #[error("division by zero while evaluating a quotient at z = {at}")]
    DivisionByZero { at: Complex64 },

    #[error("dilatation modulus {max_modulus} >= 1 near z = {at}")]
    DilatationModulus { max_modulus: f64, at: Complex64 },

    #[error("dilatation must vanish at origin: a(0) = {a0}")]
    DilatationNotVanishing { a0: Complex64 },

    #[error("dilatation mismatch between factors: max gap {max_gap:.3e} exceeds {tol:.3e}")]
    DilatationMismatch { max_gap: f64, tol: f64 },

    #[error("|a0| = {modulus} >= 1 is not an admissible dilatation value")]
    A0OutsideDisk { modulus: f64 },

    #[error("function is not phi-like (phi(0) = 0, phi'(0) = 1 required)")]
    NotPhiLike,

    #[error("function is not p-like (p(0) = 1 required)")]
    NotPLike,

    #[error("Re p = {min_re} <= 0 detected on the validation grid near z = {at}")]
    PNotPositiveRealPart { min_re: f64, at: Complex64 },

    #[error("star weights sum to {sum}, expected 1 (tolerance {tol:.1e})")]
    StarWeightSum { sum: f64, tol: f64 },

    #[error("map already carries positive-real-part factors")]
    MapHasPFactors,

    #[error("operation undefined at z = 0")]
    PointAtOrigin,

    #[error("map vanishes at z = {at}; ratio undefined")]
    MapVanishes { at: Complex64 },

    #[error("map value overflows f64 at z = {at}: |f| = exp({exponent:.1})")]
    ValueOverflow { at: Complex64, exponent: f64 },

    #[error("stationary phase: |z f_z - conj(z) f_zbar| = {magnitude:.3e} at z = {at}")]
    StationaryPhase { magnitude: f64, at: Complex64 },

    #[error("finite-difference step {h} too large for the guard band at |z| = {abs_z}")]
    StepTooLarge { h: f64, abs_z: f64 },

    #[error("sigma = {sigma} is already below threshold {threshold} at r = {r}")]
    DegenerateRadiusSearch { sigma: f64, threshold: f64, r: f64 },

    #[error("no root in the interval ({lo}, {hi})")]
    NoRootInInterval { lo: f64, hi: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
