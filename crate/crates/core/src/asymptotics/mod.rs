//! Asymptotic formulas and bounds for `P_n`, `Q_n` and their coefficients,
//! evaluated in log form and checked against computed values.

mod series;
mod verify;
mod wright;

use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::constants::ConstantsSet;
use crate::error::{Error, Result};
use crate::pointeval::ScaledMagnitude;

pub use series::{conjecture_ratio_series, ConjectureRow};
pub use verify::*;
pub use wright::{
    pearson_correlation, wright_coefficient_formula, wright_comparison, SignedLog, WrightComparison,
    WrightCoefficientParams, WrightVariant,
};

/// The results a report can check.
///
/// `T3`, `T4` and `T5` also parse as `bigpoint`, `bigsmall` and `wallis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremTag {
    /// `∥P̂_n∥_∞ ~ B e^{Kn}/n`.
    T1,
    /// `∥P_n∥_p` asymptotics, `1 ≤ p ≤ ∞`.
    T2,
    /// `|P_n(3π/2n)|` between `n^{∓C0} e^{An}`.
    T3,
    /// `∥P_n∥_2 ≥ |P_n(3π/2n)| / √(2.2n(n+1))`.
    T4,
    /// `∥Q_n∥_1 ≤ 2^{n+1} G_n/π` with the Wallis integral `G_n`.
    T5,
    /// `∥Q_n∥_p ~ (6/pπ)^{1/2p} 2^n n^{-3/2p}`.
    T6,
    /// `∥Q̂_n∥_∞ ~ 2^n √(6/π) n^{-3/2}`.
    T7,
    /// At least `1.5√n` nonzero coefficients in `P_n`.
    Littlewood,
    /// Coefficient formula near the middle index.
    WrightCoeff,
    /// Low coefficients of `P_n` follow the pentagonal number theorem.
    Pentagonal,
    /// `∥P_n∥_2 ≤ ∥P_n∥_∞ ≤ ∥P̂_n∥_1 ≤ (N+1)∥P̂_n∥_∞` and `∥P_n∥_∞ ≥ n+1`.
    Sandwich,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 11] = [
        TheoremTag::T1,
        TheoremTag::T2,
        TheoremTag::T3,
        TheoremTag::T4,
        TheoremTag::T5,
        TheoremTag::T6,
        TheoremTag::T7,
        TheoremTag::Littlewood,
        TheoremTag::WrightCoeff,
        TheoremTag::Pentagonal,
        TheoremTag::Sandwich,
    ];
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremTag::T1 => "T1",
            TheoremTag::T2 => "T2",
            TheoremTag::T3 => "T3",
            TheoremTag::T4 => "T4",
            TheoremTag::T5 => "T5",
            TheoremTag::T6 => "T6",
            TheoremTag::T7 => "T7",
            TheoremTag::Littlewood => "littlewood",
            TheoremTag::WrightCoeff => "wright-coeff",
            TheoremTag::Pentagonal => "pentagonal",
            TheoremTag::Sandwich => "sandwich",
        })
    }
}

impl FromStr for TheoremTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "t1" => TheoremTag::T1,
            "t2" => TheoremTag::T2,
            "t3" | "bigpoint" => TheoremTag::T3,
            "t4" | "bigsmall" => TheoremTag::T4,
            "t5" | "wallis" => TheoremTag::T5,
            "t6" => TheoremTag::T6,
            "t7" => TheoremTag::T7,
            "littlewood" => TheoremTag::Littlewood,
            "wright-coeff" | "wright" => TheoremTag::WrightCoeff,
            "pentagonal" => TheoremTag::Pentagonal,
            "sandwich" => TheoremTag::Sandwich,
            _ => return Err(Error::UnknownTag(s.to_string())),
        })
    }
}

/// Outcome of checking one result over a range of `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremTag,
    pub n_values: Vec<u32>,
    pub observed: Vec<f64>,
    pub target: Vec<f64>,
    pub tolerance: f64,
    /// What `pass` asserts about `observed` and `target`.
    pub criterion: String,
    pub pass: bool,
    /// Fitted or auxiliary quantities, e.g. `C0`.
    #[serde(default)]
    pub fitted: BTreeMap<String, f64>,
}

/// Wallis integral `G_n = ∫_0^{π/2} cos^n t dt = (√π/2) Γ((n+1)/2) / Γ(n/2 + 1)`.
pub fn wallis_integral(n: u32) -> f64 {
    let n = n as f64;
    (0.5 * PI.ln() - LN_2 + ln_gamma((n + 1.0) / 2.0) - ln_gamma(n / 2.0 + 1.0)).exp()
}

/// The named formula at `n` (and `p` where it applies), in log form.
///
/// `T3` and `T4` omit the unspecified `n^{±C0}` factor. Tags that state a
/// count or an identity rather than a size have no formula.
pub fn asymptotic_value(tag: TheoremTag, n: u32, p: f64, c: &ConstantsSet) -> Result<ScaledMagnitude> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let (k, b, cc, a) = (c.k.value, c.b.value, c.c.value, c.a.value);
    let check_p = || {
        if p >= 1.0 {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("p must be >= 1, got {p}")))
        }
    };
    let ln = match tag {
        TheoremTag::T1 => b.ln() + k * nf - ln_n,
        TheoremTag::T2 => {
            check_p()?;
            let sup = k * nf + (b * cc).ln() + 0.5 * (nf / (4.0 * PI)).ln();
            if p.is_infinite() {
                sup
            } else {
                (LN_2 + 0.5 * PI.ln() - cc.ln() - 0.5 * p.ln() - 1.5 * ln_n) / p + sup
            }
        }
        TheoremTag::T3 => a * nf,
        TheoremTag::T4 => a * nf - 0.5 * (2.2 * nf * (nf + 1.0)).ln(),
        TheoremTag::T5 => nf * LN_2 + (2.0 * wallis_integral(n) / PI).ln(),
        TheoremTag::T6 => {
            check_p()?;
            if p.is_infinite() {
                nf * LN_2
            } else {
                (6.0 / (p * PI)).ln() / (2.0 * p) + nf * LN_2 - 1.5 * ln_n / p
            }
        }
        TheoremTag::T7 => nf * LN_2 + 0.5 * (6.0 / PI).ln() - 1.5 * ln_n,
        other => return Err(Error::UnknownTag(format!("{other} has no asymptotic formula"))),
    };
    Ok(ScaledMagnitude::from_ln(ln))
}

#[cfg(test)]
mod tests;
