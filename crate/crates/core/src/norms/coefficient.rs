use num_bigint::BigInt;
use num_traits::Signed;

use super::{NormMethod, NormResult};
use crate::coeffs::CoefficientTable;
use crate::error::{Error, Result};
use crate::pointeval::{ln_abs_bigint, ScaledMagnitude};
use crate::summation::CompensatedSum;

/// `∥â∥_p = (Σ|a_k|^p)^{1/p}` over a coefficient table, `p = ∞` allowed.
///
/// `p = 1`, `2` and `∞` are exact integer computations converted to a
/// magnitude at the end. Other `p` factor out the largest `|a_k|` and sum
/// `(|a_k|/M)^p` in floating point.
pub fn lp_norm_coefficients(table: &CoefficientTable, p: f64) -> Result<NormResult> {
    if !(p >= 1.0) {
        return Err(Error::InvalidInput(format!("p must be >= 1, got {p}")));
    }
    let exact = |value: ScaledMagnitude| NormResult {
        value,
        p,
        method: NormMethod::CoefficientSum,
        error_estimate: 2.0 * f64::EPSILON,
    };
    let c = table.coeffs();
    if p == f64::INFINITY {
        return Ok(exact(ScaledMagnitude::from_bigint(&table.max_abs().0)));
    }
    if p == 1.0 {
        let s: BigInt = c.iter().map(|a| a.abs()).sum();
        return Ok(exact(ScaledMagnitude::from_bigint(&s)));
    }
    if p == 2.0 {
        return Ok(exact(sum_of_squares(table)));
    }
    let logs: Vec<f64> = c.iter().map(ln_abs_bigint).collect();
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: CompensatedSum = logs.iter().map(|l| (p * (l - top)).exp()).collect();
    Ok(NormResult {
        value: ScaledMagnitude::from_ln(top + sum.value().ln() / p),
        p,
        method: NormMethod::CoefficientSum,
        error_estimate: 4.0 * f64::EPSILON * (1.0 + (c.len() as f64).log2()),
    })
}

fn sum_of_squares(table: &CoefficientTable) -> ScaledMagnitude {
    let s: BigInt = table.coeffs().iter().map(|a| a * a).sum();
    ScaledMagnitude::from_ln(0.5 * ln_abs_bigint(&s))
}

/// `∥P_n∥_2` or `∥Q_n∥_2` from the coefficients, by Parseval's identity.
pub fn l2_norm_parseval(table: &CoefficientTable) -> NormResult {
    NormResult {
        value: sum_of_squares(table),
        p: 2.0,
        method: NormMethod::Parseval,
        error_estimate: 2.0 * f64::EPSILON,
    }
}
