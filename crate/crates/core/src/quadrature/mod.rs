//! Numerical kernels: double-exponential quadrature for integrands with
//! endpoint singularities, adaptive Gauss–Legendre panels, and bracketed
//! root refinement.

mod gauss_legendre;
mod root;
mod tanh_sinh;

use serde::{Deserialize, Serialize};

pub use gauss_legendre::{gauss_legendre_rule, integrate_adaptive, GaussLegendreRule, PANEL_ORDER};
pub use root::find_root;
pub use tanh_sinh::integrate_singular;

/// Default absolute tolerance used when computing constants.
pub const CONSTANTS_TOL: f64 = 1e-12;
/// Default relative tolerance used when computing norms.
pub const NORMS_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootResult {
    pub root: f64,
    pub residual: f64,
    pub bracket_width: f64,
    pub iterations: usize,
}
