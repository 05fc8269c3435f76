//! Zeros of `Π_n(t) = ∏ 2|sin(πkt)|` and `Ψ_n(t) = ∏ 2|cos(πkt)|` on
//! `[0, 1/2]`, and upper bounds for concave functions from samples.
//!
//! Between consecutive zeros the log of either product is a sum of concave
//! `log|sin|` terms, hence concave. Both the quadrature and the maximum
//! search lean on this.

use crate::coeffs::Kind;

/// Farey fractions of order `order` in `[0, 1/2]`, ascending, as `(a, b)`.
fn farey_to_half(order: u64) -> Vec<(u64, u64)> {
    let mut out = vec![(0, 1)];
    if order == 0 {
        return out;
    }
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, order);
    while 2 * c <= d {
        out.push((c, d));
        let k = (order + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    out
}

/// Sorted zeros of the kind's product in `[0, 1/2]`, as turns, with both
/// interval ends included.
///
/// `sin(πkt)` vanishes for some `k ≤ n` exactly when `t = a/b` in lowest
/// terms with `b ≤ n`; `cos(πkt)` does when `b` is even and `b ≤ 2n`.
pub(crate) fn breakpoints(kind: Kind, n: u32) -> Vec<f64> {
    let n = n as u64;
    let mut pts: Vec<f64> = match kind {
        Kind::P => farey_to_half(n).into_iter().map(|(a, b)| a as f64 / b as f64).collect(),
        Kind::Q => farey_to_half(2 * n)
            .into_iter()
            .filter(|&(_, b)| b % 2 == 0)
            .map(|(a, b)| a as f64 / b as f64)
            .collect(),
    };
    pts.push(0.0);
    pts.push(0.5);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

/// Merges extra cut points into sorted breakpoints, clipped to `[0, 1/2]`.
pub(crate) fn with_cuts(mut pts: Vec<f64>, cuts: &[f64]) -> Vec<f64> {
    pts.extend(cuts.iter().map(|c| c.clamp(0.0, 0.5)));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts
}

fn line_at(x0: f64, y0: f64, x1: f64, y1: f64, x: f64) -> f64 {
    y0 + (y1 - y0) / (x1 - x0) * (x - x0)
}

/// Upper bound on `[a, b]` for a concave function sampled at `xs` (strictly
/// increasing, inside `(a, b)`, at least three points).
///
/// Each gap between samples is bounded by the secants through the
/// neighbouring sample pairs, extended; the end gaps by the outermost secants.
pub(crate) fn concave_upper_bound(xs: &[f64], ys: &[f64], a: f64, b: f64) -> f64 {
    let m = xs.len();
    assert!(m >= 3 && ys.len() == m);
    if ys.contains(&f64::INFINITY) {
        return f64::INFINITY;
    }
    let secant = |i: usize, x: f64| line_at(xs[i], ys[i], xs[i + 1], ys[i + 1], x);
    // Ends: one secant each, maximised at an interval end.
    let mut best = secant(0, a).max(ys[0]);
    best = best.max(secant(m - 2, b)).max(ys[m - 1]);
    for i in 0..m - 1 {
        let (u, v) = (xs[i], xs[i + 1]);
        let left = (i >= 1).then(|| i - 1);
        let right = (i + 2 < m).then_some(i + 1);
        let bound = match (left, right) {
            (Some(l), Some(r)) => {
                let g = |x: f64| secant(l, x).min(secant(r, x));
                let mut top = g(u).max(g(v));
                // The two secants cross at most once.
                let (s1, s2) = (
                    (ys[l + 1] - ys[l]) / (xs[l + 1] - xs[l]),
                    (ys[r + 1] - ys[r]) / (xs[r + 1] - xs[r]),
                );
                if s1 != s2 {
                    let x = (ys[r] - s2 * xs[r] - ys[l] + s1 * xs[l]) / (s1 - s2);
                    if x > u && x < v {
                        top = top.max(g(x));
                    }
                }
                top
            }
            (Some(l), None) => secant(l, u).max(secant(l, v)),
            (None, Some(r)) => secant(r, u).max(secant(r, v)),
            (None, None) => unreachable!("at least three samples"),
        };
        if !bound.is_nan() {
            best = best.max(bound);
        }
    }
    // Slack for rounding in the sampled values.
    best + 1e-9 * (1.0 + best.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointeval::log_abs_product;

    #[test]
    fn farey_order_five() {
        let f = farey_to_half(5);
        assert_eq!(f, vec![(0, 1), (1, 5), (1, 4), (1, 3), (2, 5), (1, 2)]);
    }

    #[test]
    fn breakpoints_are_the_zeros() {
        for n in [1u32, 2, 3, 7, 12] {
            for kind in [Kind::P, Kind::Q] {
                let pts = breakpoints(kind, n);
                assert_eq!(pts[0], 0.0);
                assert_eq!(*pts.last().unwrap(), 0.5);
                // Every interior breakpoint is a zero, found through the exact path.
                for &t in &pts[1..pts.len() - 1] {
                    let (a, b) = best_fraction(t);
                    let v = log_abs_product(kind, n, crate::pointeval::Angle::PiFraction { num: 2 * a, den: b });
                    assert!(v.is_zero(), "{kind} n={n} t={a}/{b}");
                }
                // Midpoints of arcs are not zeros.
                for w in pts.windows(2) {
                    let mid = 0.5 * (w[0] + w[1]);
                    assert!(!log_abs_product(kind, n, 2.0 * std::f64::consts::PI * mid).is_zero());
                }
            }
        }
    }

    fn best_fraction(t: f64) -> (i64, u64) {
        for b in 1..=100u64 {
            let a = (t * b as f64).round();
            if (a / b as f64 - t).abs() < 1e-12 {
                return (a as i64, b);
            }
        }
        panic!("not a small fraction: {t}");
    }

    #[test]
    fn zero_counts() {
        // 1/6, 1/5, 1/4, 1/3, 2/5.
        assert_eq!(breakpoints(Kind::P, 6).len() - 2, 5);
        // 1/6 and 1/4.
        assert_eq!(breakpoints(Kind::Q, 3).len() - 2, 2);
    }

    #[test]
    fn bound_dominates_concave_functions() {
        let f = |x: f64| -(x - 0.37).powi(2) * 50.0 + (x * 3.0).ln();
        let (a, b) = (0.05, 0.9);
        let xs: Vec<f64> = (1..=7).map(|i| a + (b - a) * i as f64 / 8.0).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        let u = concave_upper_bound(&xs, &ys, a, b);
        let true_max = (0..=10_000).map(|i| f(a + (b - a) * i as f64 / 10_000.0)).fold(f64::MIN, f64::max);
        assert!(u >= true_max, "{u} < {true_max}");
        assert!(u < true_max + 1.0);
    }
}
