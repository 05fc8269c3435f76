//! Log-domain evaluation of `|P_n(θ)| = ∏ 2|sin(kθ/2)|` and
//! `|Q_n(θ)| = ∏ 2|cos(kθ/2)|` on the unit circle.

mod magnitude;

use std::f64::consts::{LN_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use magnitude::{ln_abs_bigint, ScaledMagnitude};

use crate::coeffs::Kind;
use crate::error::{Error, Result};
use crate::summation::pairwise_sum;

/// A point on the circle.
///
/// Rational multiples of π are kept exact so that vanishing factors are
/// detected symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Angle {
    Radians(f64),
    /// `π · num / den`.
    PiFraction { num: i64, den: u64 },
}

impl Angle {
    pub fn pi_fraction(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("zero denominator in angle".into()));
        }
        Ok(Angle::PiFraction { num, den })
    }

    pub fn radians(&self) -> f64 {
        match *self {
            Angle::Radians(x) => x,
            Angle::PiFraction { num, den } => PI * num as f64 / den as f64,
        }
    }
}

impl From<f64> for Angle {
    fn from(x: f64) -> Self {
        Angle::Radians(x)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Angle::Radians(x) => write!(f, "{x}"),
            Angle::PiFraction { num, den } => write!(f, "{num}pi/{den}"),
        }
    }
}

/// `ln|sin(kθ/2)|` (kind P) or `ln|cos(kθ/2)|` (kind Q), `-inf` on a true zero.
fn ln_half_angle_factor(kind: Kind, k: u32, theta: Angle) -> f64 {
    match theta {
        Angle::PiFraction { num, den } => {
            // kθ/2 = π·r/(2·den) with r reduced modulo 2·den.
            let period = 2 * den as i128;
            let r = (k as i128 * num as i128).rem_euclid(period);
            let folded = match kind {
                Kind::P => r.min(period - r),
                Kind::Q => (den as i128 - r).abs(),
            };
            if folded == 0 {
                return f64::NEG_INFINITY;
            }
            (PI * folded as f64 / period as f64).sin().ln()
        }
        Angle::Radians(theta) => {
            assert!(theta.is_finite(), "angle must be finite");
            let turns = k as f64 * theta / (2.0 * PI);
            let offset = match kind {
                Kind::P => turns,
                Kind::Q => turns - 0.5,
            };
            if (offset - offset.round()).abs() <= turns.abs() * f64::EPSILON {
                return f64::NEG_INFINITY;
            }
            let half = 0.5 * k as f64 * theta;
            match kind {
                Kind::P => half.sin().abs().ln(),
                Kind::Q => half.cos().abs().ln(),
            }
        }
    }
}

/// `ln|P_n(θ)|` or `ln|Q_n(θ)|` by pairwise summation of the factor logs.
pub fn log_abs_product(kind: Kind, n: u32, theta: impl Into<Angle>) -> ScaledMagnitude {
    let theta = theta.into();
    let sum = pairwise_sum(1, n as usize + 1, &|k| ln_half_angle_factor(kind, k as u32, theta));
    ScaledMagnitude::from_ln(n as f64 * LN_2 + sum)
}

/// `ln|P_n(θ)|`, with `ScaledMagnitude::ZERO` where some factor vanishes.
pub fn log_abs_pn(n: u32, theta: impl Into<Angle>) -> ScaledMagnitude {
    log_abs_product(Kind::P, n, theta)
}

/// `ln|Q_n(θ)|`, with `ScaledMagnitude::ZERO` where some factor vanishes.
pub fn log_abs_qn(n: u32, theta: impl Into<Angle>) -> ScaledMagnitude {
    log_abs_product(Kind::Q, n, theta)
}

/// `|P_n(3π/(2n))|`, evaluated through the exact rational path.
pub fn log_abs_pn_at_3pi_over_2n(n: u32) -> ScaledMagnitude {
    assert!(n >= 1, "n must be at least 1");
    log_abs_pn(n, Angle::PiFraction { num: 3, den: 2 * n as u64 })
}

const ANCHOR_EVERY: u32 = 16;

/// Fast `ln ∏_{k=1}^n 2|sin(πkt)|` (kind P) or `ln ∏ 2|cos(πkt)|` (kind Q),
/// with `t = θ/(2π)`.
///
/// Walks `e^{iπkt}` by complex rotation, re-anchored with an exact `sin_cos`
/// every 16 steps, and takes one logarithm per 16 factors. Accurate to a few
/// hundred ulp in the log away from zeros; used for quadrature and scans.
pub(crate) fn ln_product_turns(kind: Kind, n: u32, t: f64) -> f64 {
    let (step_s, step_c) = (PI * t).sin_cos();
    let mut ln_acc = 0.0;
    let mut prod: f64 = 1.0;
    let (mut s, mut c) = (0.0, 1.0);
    for k in 1..=n {
        if (k - 1) % ANCHOR_EVERY == 0 {
            (s, c) = (PI * k as f64 * t).sin_cos();
            if k > 1 {
                ln_acc += prod.ln();
                prod = 1.0;
            }
        } else {
            (s, c) = (s * step_c + c * step_s, c * step_c - s * step_s);
        }
        prod *= 2.0 * match kind {
            Kind::P => s.abs(),
            Kind::Q => c.abs(),
        };
    }
    ln_acc + prod.ln()
}
