use std::f64::consts::LN_2;

use super::arcs::{breakpoints, concave_upper_bound, with_cuts};
use super::{NormMethod, NormResult};
use crate::coeffs::Kind;
use crate::constants;
use crate::error::{Error, Result};
use crate::pointeval::{ln_product_turns, ScaledMagnitude};
use crate::quadrature::{gauss_legendre_rule, integrate_adaptive};

struct Panel {
    a: f64,
    b: f64,
    /// Concave upper bound of the log-integrand.
    bound: f64,
    /// One-panel estimate of the scaled integral; zero for skipped panels.
    estimate: f64,
}

/// Half-width of the refinement window around the dominant maximum.
fn window_half_width(n: u32) -> f64 {
    10.0 * (n as f64).powf(-1.5)
}

/// `(2∫_0^{1/2} Π(t)^p dt)^{1/p}` for `Π` the kind's product in turns.
///
/// The interval is cut at every zero of the product plus the ends of a window
/// around the dominant peak, so each panel carries a concave log-integrand.
/// Panels whose concave upper bound is negligible next to the total are
/// dropped and the rest are integrated adaptively with `(Π/M)^p`, `M` the
/// largest sample.
pub(crate) fn lp_norm_product(kind: Kind, n: u32, p: f64, tol: f64) -> Result<NormResult> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidInput(format!("p must be a finite real >= 1, got {p}")));
    }
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidInput(format!("tolerance {tol} must lie in (0, 1)")));
    }
    let width = window_half_width(n);
    let cuts = match kind {
        Kind::P => {
            let centre = constants::standard().w0.value / n as f64;
            [centre - width, centre + width]
        }
        Kind::Q => [0.0, width],
    };
    let pts = with_cuts(breakpoints(kind, n), &cuts);
    let rule = gauss_legendre_rule();
    let f = |t: f64| ln_product_turns(kind, n, t);

    // Pass 1: three samples per panel give a concave upper bound.
    let mut peak = f64::NEG_INFINITY;
    let mut panels: Vec<Panel> = pts
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let xs = [0.25, 0.5, 0.75].map(|s| a + s * (b - a));
            let ys = xs.map(f);
            peak = ys.iter().copied().fold(peak, f64::max);
            Panel { a, b, bound: concave_upper_bound(&xs, &ys, a, b), estimate: 0.0 }
        })
        .collect();
    panels.sort_by(|x, y| y.bound.total_cmp(&x.bound).then(x.a.total_cmp(&y.a)));

    // Pass 2: in decreasing order of bound, one Gauss–Legendre panel each,
    // until the remaining bounds are negligible against the running total.
    // Every skipped panel then contributes at most (b − a)·tol·total/2, so
    // tol·total/4 in all.
    let scaled = |t: f64| (p * (f(t) - peak)).exp();
    let mut total = 0.0;
    let mut error = 0.0;
    let mut kept = 0;
    for panel in &mut panels {
        let ceiling = (p * (panel.bound - peak)).exp();
        if ceiling <= 0.5 * tol * total {
            error += (panel.b - panel.a) * ceiling;
            continue;
        }
        panel.estimate = rule.apply(&scaled, panel.a, panel.b);
        total += panel.estimate;
        kept += 1;
    }
    let mut parts = Vec::with_capacity(kept);
    for panel in panels.iter().filter(|p| p.estimate > 0.0) {
        let len = panel.b - panel.a;
        let local_tol = 0.5 * tol * panel.estimate.max(len * total);
        let r = integrate_adaptive(scaled, panel.a, panel.b, local_tol).map_err(|e| match e {
            Error::Accuracy { estimate, error, .. } => Error::Accuracy {
                context: "L^p norm quadrature",
                estimate,
                error,
            },
            other => other,
        })?;
        parts.push((panel.a, r.value));
        error += r.error_estimate;
    }
    // Fixed summation order regardless of the pruning order.
    parts.sort_by(|x, y| x.0.total_cmp(&y.0));
    let integral = crate::summation::pairwise_sum(0, parts.len(), &|i| parts[i].1);
    if !(integral > 0.0) {
        return Err(Error::Accuracy {
            context: "L^p norm quadrature",
            estimate: integral,
            error,
        });
    }
    let ln_norm = peak + (LN_2 + integral.ln()) / p;
    Ok(NormResult {
        value: ScaledMagnitude::from_ln(ln_norm),
        p,
        method: NormMethod::Quadrature,
        error_estimate: error / integral / p,
    })
}
