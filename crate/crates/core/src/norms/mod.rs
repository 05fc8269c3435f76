//! `L^p` norms of `P_n` and `Q_n` on the circle, `ℓ^p` norms of their
//! coefficients, and `∥P_n∥_∞`.
//!
//! Function norms use the normalised measure `dθ/2π`, so after `θ = 2πt`
//! `∥P_n∥_p^p = 2∫_0^{1/2} ∏ (2|sin πkt|)^p dt`.

mod arcs;
mod coefficient;
mod linf;
mod lp;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeffs::Kind;
use crate::error::{Error, Result};
use crate::pointeval::ScaledMagnitude;

pub use coefficient::{l2_norm_parseval, lp_norm_coefficients};
pub use linf::{linf_arc_maximum, linf_scan_refine, Maximum, REFINED_BRACKETS, SCAN_DENSITY};

/// How a norm was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormMethod {
    Quadrature,
    Parseval,
    CoefficientSum,
    ScanRefine,
    ArcMaximum,
    /// Known in closed form.
    Exact,
}

impl fmt::Display for NormMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormMethod::Quadrature => "quadrature",
            NormMethod::Parseval => "parseval",
            NormMethod::CoefficientSum => "coefficient-sum",
            NormMethod::ScanRefine => "scan-refine",
            NormMethod::ArcMaximum => "arc-maximum",
            NormMethod::Exact => "exact",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormResult {
    pub value: ScaledMagnitude,
    /// Exponent; `inf` for the sup norm.
    #[serde(serialize_with = "ser_exponent", deserialize_with = "de_exponent")]
    pub p: f64,
    pub method: NormMethod,
    /// Relative error estimate.
    pub error_estimate: f64,
}

fn ser_exponent<S: Serializer>(p: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if p.is_infinite() {
        s.serialize_str("inf")
    } else {
        s.serialize_f64(*p)
    }
}

fn de_exponent<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Exp {
        Num(f64),
        Str(String),
    }
    match Exp::deserialize(d)? {
        Exp::Num(p) => Ok(p),
        Exp::Str(s) if s == "inf" => Ok(f64::INFINITY),
        Exp::Str(s) => Err(serde::de::Error::custom(format!("bad exponent `{s}`"))),
    }
}

/// `∥P_n∥_p` for finite `p ≥ 1` by peak-aware quadrature.
pub fn lp_norm_pn(n: u32, p: f64, tol: f64) -> Result<NormResult> {
    lp::lp_norm_product(Kind::P, n, p, tol)
}

/// `∥Q_n∥_p` for finite `p ≥ 1` by peak-aware quadrature.
pub fn lp_norm_qn(n: u32, p: f64, tol: f64) -> Result<NormResult> {
    lp::lp_norm_product(Kind::Q, n, p, tol)
}

/// `∥P_n∥_∞` by grid scan and golden-section refinement; `tol` is the final
/// bracket width in θ.
pub fn linf_norm_pn(n: u32, tol: f64) -> Result<NormResult> {
    Ok(linf::as_norm(linf_scan_refine(n, tol)?, NormMethod::ScanRefine))
}

/// `∥P_n∥_∞` by per-arc maximisation; much cheaper than the scan.
pub fn linf_norm_pn_arcs(n: u32) -> Result<NormResult> {
    Ok(linf::as_norm(linf_arc_maximum(n)?, NormMethod::ArcMaximum))
}

/// `∥Q_n∥_∞ = Q_n(0) = 2^n`.
pub fn linf_norm_qn(n: u32) -> NormResult {
    NormResult {
        value: ScaledMagnitude::from_ln(n as f64 * std::f64::consts::LN_2),
        p: f64::INFINITY,
        method: NormMethod::Exact,
        error_estimate: 0.0,
    }
}

/// Dispatches on kind and exponent: quadrature for finite `p`, the scan for
/// `∥P_n∥_∞`, closed form for `∥Q_n∥_∞`.
pub fn function_norm(kind: Kind, n: u32, p: f64, tol: f64) -> Result<NormResult> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    match (kind, p.is_infinite()) {
        (Kind::P, true) => linf_norm_pn(n, 1e-12),
        (Kind::Q, true) => Ok(linf_norm_qn(n)),
        (_, false) => lp::lp_norm_product(kind, n, p, tol),
    }
}
