//! Command-line front end: catalog listing, map evaluation, curve emission,
//! radius tables, Ω_r reports, and the verification suite runner.
//!
//! Exit codes: 0 success, 1 computation/verification failure, 2 usage error
//! (the latter produced by the argument parser itself). Numbers serialize
//! with 12 significant digits; JSON objects use sorted keys so parsing and
//! re-serializing an emitted report is byte-identical.

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};
use std::path::PathBuf;

use crate::catalog;
use crate::error::{Error, Result};
use crate::geometry;
use crate::map::LogharmonicMap;
use crate::radii::{self, RadiusKind};
use crate::verify::{self, VerifyConfig};
use crate::MAX_ABS;

#[derive(Debug, Parser)]
#[command(
    name = "logharm",
    version,
    about = "Starlike logharmonic mappings of order alpha: construction, radii, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the phi, p and dilatation primitives with class memberships
    Catalog {
        /// Output format: text or json
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a map at z = r·e^{i·theta}: value, sigma, Jacobian, PDE residual
    Eval {
        /// phi generator: identity | koebe_alpha
        #[arg(long, default_value = "koebe_alpha")]
        phi: String,
        /// Order parameter for koebe_alpha
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Dilatation: zero, z, z/2, z^2 or `const:<c>`
        #[arg(long, default_value = "z")]
        dil: String,
        /// Optional p factor: half_plane_p | one_minus_z | inv_half_plane_p | one
        #[arg(long)]
        p: Option<String>,
        /// Modulus of the evaluation point, 0 < r <= 1 - 1e-3
        #[arg(long)]
        r: f64,
        /// Argument of the evaluation point (radians)
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form radius for a kind, optionally cross-checked numerically
    Radius {
        /// omega | close_to_starlike | order_alpha | q_product | q_product_order0
        kind: String,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Weight of the Q-product kinds
        #[arg(long)]
        lambda: Option<f64>,
        /// Also run the numeric bisection cross-check of the kind's extremal
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Omega_r report: quintic root r0, lambda values, discrepancy flag
    Omega {
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the image of |z| = r as CSV rows or an SVG polyline
    Curve {
        #[arg(long, default_value = "koebe_alpha")]
        phi: String,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[arg(long, default_value = "z")]
        dil: String,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        r: f64,
        /// Samples on the circle (>= 8)
        #[arg(long, default_value_t = 360)]
        n: usize,
        /// csv or svg
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite; exit 0 iff every check passes
    Verify {
        /// Substring filter on module/name (e.g. "distortion")
        #[arg(long)]
        filter: Option<String>,
        /// Seed of the deterministic sample generator
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Multiply every tolerance by this factor (tolerance override)
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Round to 12 significant digits so serialized numbers are stable.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn num(x: f64) -> Value {
    match serde_json::Number::from_f64(round_sig(x)) {
        Some(n) => Value::Number(n),
        None => Value::String(format!("{x}")),
    }
}

fn opt_num(x: Option<f64>) -> Value {
    match x {
        Some(v) => num(v),
        None => Value::Null,
    }
}

fn complex(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

fn write_output(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

struct MapSpec {
    phi: String,
    alpha: f64,
    dil: String,
    p: Option<String>,
}

fn build_map(spec: &MapSpec) -> Result<LogharmonicMap> {
    let phi_fn = catalog::phi_by_name(&spec.phi, spec.alpha)?;
    let dilatation = catalog::dilatation_by_name(&spec.dil)?;
    let base = LogharmonicMap::from_representation(phi_fn, dilatation)?;
    match &spec.p {
        Some(name) => LogharmonicMap::close_to_starlike(&base, catalog::p_by_name(name)?),
        None => Ok(base),
    }
}

/// Dispatch one parsed command; returns the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Catalog { format, out } => cmd_catalog(&format, &out),
        Command::Eval {
            phi,
            alpha,
            dil,
            p,
            r,
            theta,
            out,
        } => cmd_eval(&MapSpec { phi, alpha, dil, p }, r, theta, &out),
        Command::Radius {
            kind,
            alpha,
            lambda,
            check,
            out,
        } => cmd_radius(&kind, alpha, lambda, check, &out),
        Command::Omega { alpha, out } => cmd_omega(alpha, &out),
        Command::Curve {
            phi,
            alpha,
            dil,
            p,
            r,
            n,
            format,
            out,
        } => cmd_curve(&MapSpec { phi, alpha, dil, p }, r, n, &format, &out),
        Command::Verify {
            filter,
            seed,
            tol_scale,
            out,
        } => cmd_verify(filter, seed, tol_scale, &out),
    }
}

fn cmd_catalog(format: &str, out: &Option<PathBuf>) -> Result<i32> {
    let entries = catalog::primitives();
    let text = match format {
        "json" => {
            let arr: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "role": e.role,
                        "class": e.class,
                        "formula": e.formula,
                    })
                })
                .collect();
            format!("{}\n", Value::Array(arr))
        }
        "text" => {
            let mut s = format!("{:<18} {:<11} {:<22} FORMULA\n", "NAME", "ROLE", "CLASS");
            for e in &entries {
                s.push_str(&format!(
                    "{:<18} {:<11} {:<22} {}\n",
                    e.name, e.role, e.class, e.formula
                ));
            }
            s
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "catalog format '{other}' (expected text or json)"
            )))
        }
    };
    write_output(&text, out)?;
    Ok(0)
}

fn cmd_eval(spec: &MapSpec, r: f64, theta: f64, out: &Option<PathBuf>) -> Result<i32> {
    if !(r > 0.0 && r <= MAX_ABS) {
        return Err(Error::InvalidParameter(format!(
            "r = {r} outside (0, {MAX_ABS}]"
        )));
    }
    let map = build_map(spec)?;
    let z = Complex64::from_polar(r, theta);
    let value = map.eval(z)?;
    let sigma = geometry::sigma(&map, z)?;
    let jacobian = map.jacobian(z)?;
    // the residual needs z ± h inside the guard band; so close to the edge
    // it is reported as null rather than failing the whole evaluation
    let residual = match map.pde_residual(z) {
        Ok(v) => num(v),
        Err(Error::StepTooLarge { .. }) => Value::Null,
        Err(e) => return Err(e),
    };
    let report = json!({
        "z": complex(z),
        "value": complex(value),
        "sigma": num(sigma),
        "jacobian": num(jacobian),
        "pde_residual": residual,
        "map": map.describe(),
    });
    write_output(&format!("{report}\n"), out)?;
    Ok(0)
}

fn cmd_radius(
    kind: &str,
    alpha: f64,
    lambda: Option<f64>,
    check: bool,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let kind = RadiusKind::parse(kind)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown radius kind '{kind}'")))?;
    let report = if check {
        radii::radius_report_with_check(kind, alpha, lambda)?
    } else {
        radii::closed_form_radius(kind, alpha, lambda)?
    };
    let value = json!({
        "kind": report.kind.as_str(),
        "alpha": num(report.alpha),
        "lambda": opt_num(report.lambda_weight),
        "closed_form": num(report.closed_form),
        "numeric_check": opt_num(report.numeric_check),
        "abs_gap": opt_num(report.abs_gap),
    });
    write_output(&format!("{value}\n"), out)?;
    Ok(0)
}

fn cmd_omega(alpha: f64, out: &Option<PathBuf>) -> Result<i32> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha = {alpha} outside [0, 1)"
        )));
    }
    let report = geometry::omega_report(alpha)?;
    let value = json!({
        "alpha": num(report.alpha),
        "r0": num(report.r0),
        "lambda_omega": num(report.lambda_omega),
        "lambda_alt": opt_num(report.lambda_alt),
        "reported_value": opt_num(report.reported_value),
        "discrepancy_flag": report.discrepancy_flag,
    });
    write_output(&format!("{value}\n"), out)?;
    Ok(0)
}

fn fmt_sig(x: f64) -> String {
    format!("{}", round_sig(x))
}

fn cmd_curve(spec: &MapSpec, r: f64, n: usize, format: &str, out: &Option<PathBuf>) -> Result<i32> {
    let map = build_map(spec)?;
    let curve = geometry::image_curve(&map, r, n)?;
    let text = match format {
        "csv" => {
            let mut s = String::from("theta,re,im\n");
            for &(theta, w) in &curve.samples {
                s.push_str(&format!(
                    "{},{},{}\n",
                    fmt_sig(theta),
                    fmt_sig(w.re),
                    fmt_sig(w.im)
                ));
            }
            s
        }
        "svg" => curve_svg(&curve),
        other => {
            return Err(Error::InvalidParameter(format!(
                "curve format '{other}' (expected csv or svg)"
            )))
        }
    };
    write_output(&text, out)?;
    Ok(0)
}

fn curve_svg(curve: &geometry::ImageCurve) -> String {
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    // svg y grows downward, so plot -im
    for &(_, w) in &curve.samples {
        min_x = min_x.min(w.re);
        max_x = max_x.max(w.re);
        min_y = min_y.min(-w.im);
        max_y = max_y.max(-w.im);
    }
    let pad = 0.05 * ((max_x - min_x).max(max_y - min_y)).max(1e-12);
    let (x0, y0) = (min_x - pad, min_y - pad);
    let (w, h) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);
    let points: Vec<String> = curve
        .samples
        .iter()
        .map(|&(_, z)| format!("{:.6},{:.6}", z.re, -z.im))
        .collect();
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">\n",
            "  <!-- image of |z| = {} under {} -->\n",
            "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{:.6}\" points=\"{}\"/>\n",
            "</svg>\n"
        ),
        x0,
        y0,
        w,
        h,
        curve.r,
        curve.map_id,
        0.004 * w.max(h),
        points.join(" ")
    )
}

fn cmd_verify(
    filter: Option<String>,
    seed: u64,
    tol_scale: f64,
    out: &Option<PathBuf>,
) -> Result<i32> {
    let config = VerifyConfig {
        seed,
        tol_scale,
        filter,
    };
    let results = verify::run(&config)?;
    let mut text = String::new();
    let mut failures = 0usize;
    for r in &results {
        if !r.passed {
            failures += 1;
        }
        text.push_str(&format!(
            "{}  {:<40} measured {:>12.4e}  tol {:>10.4e}  {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            format!("{}/{}", r.module, r.name),
            r.measured,
            r.tolerance,
            r.detail
        ));
    }
    text.push_str(&format!(
        "SUMMARY: {}/{} checks passed (seed {}, tol scale {})\n",
        results.len() - failures,
        results.len(),
        seed,
        tol_scale
    ));
    write_output(&text, out)?;
    Ok(if failures == 0 { 0 } else { 1 })
}
