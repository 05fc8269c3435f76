use std::f64::consts::PI;

use super::arcs::{breakpoints, concave_upper_bound};
use super::{NormMethod, NormResult};
use crate::coeffs::Kind;
use crate::error::{Error, Result};
use crate::pointeval::{ln_product_turns, log_abs_pn, ScaledMagnitude};

/// Grid points per `n²` in the coarse scan.
pub const SCAN_DENSITY: usize = 64;
/// Local maxima of the scan that get refined.
pub const REFINED_BRACKETS: usize = 32;
const SCAN_BLOCK: usize = 256;
/// Above this the plain product could overflow and the scan works in logs.
const PLAIN_PRODUCT_MAX_N: u32 = 1000;

/// Where `|P_n|` peaks and how high.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub theta: f64,
    pub value: ScaledMagnitude,
}

/// Calls `visit(j, ln|P_n(θ_j)|)` for `θ_j = jπ/(points − 1)`, in order.
///
/// Within a block the unit vectors `e^{iπk t}` are advanced by one grid step
/// each by complex multiplication, re-anchored exactly at every block start.
fn scan(n: u32, points: usize, mut visit: impl FnMut(usize, f64)) {
    let h = 0.5 / (points - 1) as f64;
    if n > PLAIN_PRODUCT_MAX_N {
        for j in 0..points {
            visit(j, ln_product_turns(Kind::P, n, j as f64 * h));
        }
        return;
    }
    let nk = n as usize;
    let (mut re, mut im) = (vec![0.0; nk], vec![0.0; nk]);
    let (mut wr, mut wi) = (vec![0.0; nk], vec![0.0; nk]);
    for k in 0..nk {
        (wi[k], wr[k]) = (PI * (k + 1) as f64 * h).sin_cos();
    }
    let mut j0 = 0;
    while j0 < points {
        let t0 = j0 as f64 * h;
        for k in 0..nk {
            (im[k], re[k]) = (PI * (k + 1) as f64 * t0).sin_cos();
        }
        for j in j0..(j0 + SCAN_BLOCK).min(points) {
            let mut acc = [1.0f64; 4];
            let mut chunks = im.chunks_exact(4);
            for c in &mut chunks {
                for lane in 0..4 {
                    acc[lane] *= 2.0 * c[lane].abs();
                }
            }
            for (lane, s) in chunks.remainder().iter().enumerate() {
                acc[lane] *= 2.0 * s.abs();
            }
            visit(j, ((acc[0] * acc[1]) * (acc[2] * acc[3])).ln());
            for k in 0..nk {
                let (r, i) = (re[k], im[k]);
                re[k] = r * wr[k] - i * wi[k];
                im[k] = r * wi[k] + i * wr[k];
            }
        }
        j0 += SCAN_BLOCK;
    }
}

/// Golden-section search for the maximum of `g` on `[lo, hi]`, returning the
/// best point evaluated.
fn golden_max(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut g1, mut g2) = (g(x1), g(x2));
    while hi - lo > tol {
        if g1 < g2 {
            lo = x1;
            (x1, g1) = (x2, g2);
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            (x2, g2) = (x1, g1);
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        }
        if !(x1 < x2) {
            break;
        }
    }
    if g1 >= g2 { (x1, g1) } else { (x2, g2) }
}

/// `∥P_n∥_∞` by a scan of `64n²` points on `[0, π]` and golden-section
/// refinement (to width `tol` in θ) of the 32 highest local maxima.
///
/// The value returned is attained at a known θ, so it is a lower bound that
/// is exact up to the resolution of the scan.
pub fn linf_scan_refine(n: u32, tol: f64) -> Result<Maximum> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let points = SCAN_DENSITY * (n as usize).pow(2);
    let step = PI / (points - 1) as f64;
    let mut peaks: Vec<(f64, usize)> = Vec::new();
    let (mut prev, mut cur) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    scan(n, points, |j, v| {
        if j >= 1 && cur >= prev && cur >= v && cur > f64::NEG_INFINITY {
            peaks.push((cur, j - 1));
        }
        (prev, cur) = (cur, v);
    });
    if cur >= prev {
        peaks.push((cur, points - 1));
    }
    peaks.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    peaks.truncate(REFINED_BRACKETS);

    let accurate = |theta: f64| log_abs_pn(n, theta).ln();
    let mut best = Maximum {
        theta: 0.0,
        value: ScaledMagnitude::ZERO,
    };
    for &(_, j) in &peaks {
        let at_grid = j as f64 * step;
        let lo = (at_grid - step).max(0.0);
        let hi = (at_grid + step).min(PI);
        let (theta, v) = golden_max(accurate, lo, hi, tol);
        for (theta, v) in [(theta, v), (at_grid, accurate(at_grid))] {
            if v > best.value.ln() {
                best = Maximum {
                    theta,
                    value: ScaledMagnitude::from_ln(v),
                };
            }
        }
    }
    Ok(best)
}

/// `∥P_n∥_∞` as the largest of the per-arc maxima of `|P_n|`.
///
/// `log|P_n|` is concave between consecutive zeros, so each arc has a single
/// maximum, found by golden section, and arcs whose concave upper bound from
/// five samples falls below the best value so far are skipped.
pub fn linf_arc_maximum(n: u32) -> Result<Maximum> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    const SAMPLES: usize = 5;
    let f = |t: f64| ln_product_turns(Kind::P, n, t);
    let pts = breakpoints(Kind::P, n);
    let mut arcs: Vec<(f64, f64, f64)> = Vec::with_capacity(pts.len());
    let mut best_t = 0.25;
    let mut best = f64::NEG_INFINITY;
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let xs: Vec<f64> = (1..=SAMPLES).map(|i| a + (b - a) * i as f64 / (SAMPLES + 1) as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        for (&x, &y) in xs.iter().zip(&ys) {
            if y > best {
                (best_t, best) = (x, y);
            }
        }
        arcs.push((concave_upper_bound(&xs, &ys, a, b), a, b));
    }
    arcs.sort_by(|x, y| y.0.total_cmp(&x.0));
    for &(bound, a, b) in &arcs {
        if bound <= best {
            break;
        }
        let (t, v) = golden_max(f, a, b, 1e-15 * (1.0 + a));
        if v > best {
            (best_t, best) = (t, v);
        }
    }
    let theta = 2.0 * PI * best_t;
    Ok(Maximum {
        theta,
        value: log_abs_pn(n, theta),
    })
}

pub(crate) fn as_norm(max: Maximum, method: NormMethod) -> NormResult {
    NormResult {
        value: max.value,
        p: f64::INFINITY,
        method,
        error_estimate: 0.0,
    }
}
