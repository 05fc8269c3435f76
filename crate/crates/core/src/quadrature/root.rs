use super::RootResult;
use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 500;

/// Bracketed root refinement: secant steps kept inside the bracket, with a
/// bisection whenever two consecutive steps fail to halve it.
///
/// Stops once the bracket is no wider than `tol` and returns whichever final
/// endpoint has the smaller residual. Errors from `f` propagate unchanged.
pub fn find_root<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("bad bracket [{lo}, {hi}] or tolerance {tol}")));
    }
    let (mut lo, mut hi) = (lo, hi);
    let (mut flo, mut fhi) = (f(lo)?, f(hi)?);
    let exact = |x: f64, iterations| RootResult {
        root: x,
        residual: 0.0,
        bracket_width: 0.0,
        iterations,
    };
    if flo == 0.0 {
        return Ok(exact(lo, 0));
    }
    if fhi == 0.0 {
        return Ok(exact(hi, 0));
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Domain(format!(
            "no sign change on [{lo}, {hi}]: f = {flo:e}, {fhi:e}"
        )));
    }
    let mut stalled = 0;
    let mut iterations = 0;
    while hi - lo > tol {
        if iterations == MAX_ITERATIONS {
            return Err(Error::Accuracy {
                context: "root refinement",
                estimate: 0.5 * (lo + hi),
                error: hi - lo,
            });
        }
        iterations += 1;
        let width = hi - lo;
        let margin = (0.45 * tol).min(0.25 * width);
        let x = if stalled >= 2 {
            stalled = 0;
            0.5 * (lo + hi)
        } else {
            let secant = lo - flo * (hi - lo) / (fhi - flo);
            if secant.is_finite() {
                secant.clamp(lo + margin, hi - margin)
            } else {
                0.5 * (lo + hi)
            }
        };
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(exact(x, iterations));
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        if hi - lo > 0.5 * width {
            stalled += 1;
        } else {
            stalled = 0;
        }
    }
    let (root, residual) = if flo.abs() <= fhi.abs() { (lo, flo) } else { (hi, fhi) };
    Ok(RootResult {
        root,
        residual,
        bracket_width: hi - lo,
        iterations,
    })
}
