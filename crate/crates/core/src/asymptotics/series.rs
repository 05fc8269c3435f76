use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::coeffs::{CoefficientSweep, Kind};
use crate::constants::ConstantsSet;
use crate::error::{Error, Result};
use crate::norms::lp_norm_coefficients;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: u32,
    /// `ln ∥P̂_n∥_p` or `ln ∥Q̂_n∥_p`.
    pub norm_ln: f64,
    pub ratio: f64,
}

/// `∥P̂_n∥_p / (e^{Kn} n^{3/(2p)−1})` or `∥Q̂_n∥_p / (2^n n^{3/(2p)−3/2})`
/// for each `n` in `n_values` (ascending, positive).
pub fn conjecture_ratio_series(kind: Kind, p: f64, n_values: &[u32], c: &ConstantsSet) -> Result<Vec<ConjectureRow>> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidInput(format!("p must be a finite real >= 1, got {p}")));
    }
    if n_values.first() == Some(&0) || n_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput("n values must be positive and strictly increasing".into()));
    }
    let mut sweep = CoefficientSweep::new(kind);
    let mut rows = Vec::with_capacity(n_values.len());
    for &n in n_values {
        let table = sweep.advance_to(n)?;
        let norm_ln = lp_norm_coefficients(table, p)?.value.ln();
        let nf = n as f64;
        let scale_ln = match kind {
            Kind::P => c.k.value * nf + (1.5 / p - 1.0) * nf.ln(),
            Kind::Q => nf * LN_2 + (1.5 / p - 1.5) * nf.ln(),
        };
        rows.push(ConjectureRow {
            n,
            norm_ln,
            ratio: (norm_ln - scale_ln).exp(),
        });
    }
    Ok(rows)
}
