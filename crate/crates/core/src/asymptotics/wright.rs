use std::f64::consts::PI;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use statrs::statistics::Statistics;

use crate::coeffs::{degree, CoefficientTable, Kind};
use crate::constants::ConstantsSet;
use crate::error::{Error, Result};
use crate::pointeval::ln_abs_bigint;

/// Which coefficient approximation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WrightVariant {
    /// `(B e^{Kn}/n) cos(2πL)`.
    Plain,
    /// `(B/n) exp(Kn − π²m²/(C²n³)) cos(nπ/2 + 2πm w0/n)`.
    Gaussian,
    /// As `Gaussian` but with envelope `π²m²/(C²n²)`.
    ///
    /// With `n²` the envelope is far too narrow: the observed width of the
    /// central coefficients scales like `n^{3/2}`, which `n³` reproduces.
    GaussianAsPrinted,
}

/// Index bookkeeping for the coefficient formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WrightCoefficientParams {
    pub n: u32,
    pub k: usize,
    /// `N = n(n+1)/2`.
    pub big_n: usize,
    /// `m = k − N/2`.
    pub m: f64,
    /// `L = (2N − k) w0/n − n/4`.
    pub l: f64,
}

impl WrightCoefficientParams {
    pub fn new(n: u32, k: usize, w0: f64) -> Result<Self> {
        let big_n = degree(n);
        if n == 0 || k > big_n {
            return Err(Error::InvalidInput(format!("k = {k} outside 0..={big_n}")));
        }
        let nf = n as f64;
        Ok(Self {
            n,
            k,
            big_n,
            m: k as f64 - big_n as f64 / 2.0,
            l: (2.0 * big_n as f64 - k as f64) * w0 / nf - nf / 4.0,
        })
    }
}

/// A real number as sign and log-magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignedLog {
    /// −1, 0 or 1.
    pub sign: i8,
    pub ln_abs: f64,
}

impl SignedLog {
    fn from_parts(ln_scale: f64, factor: f64) -> Self {
        if factor == 0.0 {
            return Self { sign: 0, ln_abs: f64::NEG_INFINITY };
        }
        Self {
            sign: if factor > 0.0 { 1 } else { -1 },
            ln_abs: ln_scale + factor.abs().ln(),
        }
    }

    pub fn to_f64(self) -> f64 {
        self.sign as f64 * self.ln_abs.exp()
    }

    /// Value times `e^{-shift}`, for comparing numbers too large for `f64`.
    pub fn scaled(self, shift: f64) -> f64 {
        self.sign as f64 * (self.ln_abs - shift).exp()
    }
}

/// The approximation to `P̂_n(k)` named by `variant`.
pub fn wright_coefficient_formula(
    params: &WrightCoefficientParams,
    c: &ConstantsSet,
    variant: WrightVariant,
) -> SignedLog {
    let nf = params.n as f64;
    let base = (c.b.value / nf).ln() + c.k.value * nf;
    match variant {
        WrightVariant::Plain => SignedLog::from_parts(base, (2.0 * PI * params.l).cos()),
        WrightVariant::Gaussian | WrightVariant::GaussianAsPrinted => {
            let power = if variant == WrightVariant::Gaussian { 3 } else { 2 };
            let envelope = (PI * params.m).powi(2) / (c.c.value.powi(2) * nf.powi(power));
            let phase = nf * PI / 2.0 + 2.0 * PI * params.m * c.w0.value / nf;
            SignedLog::from_parts(base - envelope, phase.cos())
        }
    }
}

/// Pearson correlation of two equal-length samples.
pub fn pearson_correlation(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let cov = xs.covariance(ys);
    cov / (xs.std_dev() * ys.std_dev())
}

/// How well a formula tracks the exact coefficients near the middle index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WrightComparison {
    pub n: u32,
    pub variant: WrightVariant,
    /// Half-width of the window `|k − N/2| ≤ window`.
    pub window: usize,
    pub correlation: f64,
    /// Share of indices with `|prediction|` above half its peak where the
    /// signs agree.
    pub sign_agreement: f64,
    /// Number of indices entering `sign_agreement`.
    pub strong_points: usize,
    pub points: usize,
}

/// Compares predictions with a `P` table over `|k − N/2| ≤ window`.
pub fn wright_comparison(
    table: &CoefficientTable,
    c: &ConstantsSet,
    variant: WrightVariant,
    window: usize,
) -> Result<WrightComparison> {
    if table.kind() != Kind::P {
        return Err(Error::InvalidInput("coefficient formulas describe P_n".into()));
    }
    let n = table.n();
    let big_n = table.degree();
    let lo = (big_n / 2).saturating_sub(window);
    let hi = (big_n.div_ceil(2) + window).min(big_n);
    let shift = c.k.value * n as f64 - (n as f64).ln();
    let mut predicted = Vec::new();
    let mut exact = Vec::new();
    for k in lo..=hi {
        let params = WrightCoefficientParams::new(n, k, c.w0.value)?;
        if params.m.abs() > window as f64 {
            continue;
        }
        predicted.push(wright_coefficient_formula(&params, c, variant).scaled(shift));
        let a = &table.coeffs()[k];
        let ln_a = ln_abs_bigint(a);
        let sign = a.to_f64().map_or(0.0, f64::signum);
        exact.push(if ln_a.is_finite() { sign * (ln_a - shift).exp() } else { 0.0 });
    }
    let peak = predicted.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let strong: Vec<usize> = (0..predicted.len()).filter(|&i| predicted[i].abs() > 0.5 * peak).collect();
    let agree = strong
        .iter()
        .filter(|&&i| predicted[i].signum() == exact[i].signum() && exact[i] != 0.0)
        .count();
    Ok(WrightComparison {
        n,
        variant,
        window,
        correlation: pearson_correlation(&predicted, &exact),
        sign_agreement: if strong.is_empty() { 0.0 } else { agree as f64 / strong.len() as f64 },
        strong_points: strong.len(),
        points: predicted.len(),
    })
}
