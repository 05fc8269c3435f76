use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::sync::OnceLock;

use super::IntegralResult;
use crate::error::{Error, Result};

/// Number of nodes per panel.
pub const PANEL_ORDER: usize = 15;
const MAX_DEPTH: u32 = 50;

/// Gauss–Legendre nodes and weights on `[-1, 1]`, nodes ascending.
#[derive(Debug, Clone)]
pub struct GaussLegendreRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendreRule {
    /// Builds the `order`-point rule by Newton iteration on the Legendre polynomial.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Three-term recurrence for P_order(x) and its derivative.
                let (mut p0, mut p1) = (1.0, x);
                for j in 2..=order {
                    let j = j as f64;
                    let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                let p = if order == 1 { x } else { p1 };
                let pm1 = if order == 1 { 1.0 } else { p0 };
                dp = n * (x * p - pm1) / (x * x - 1.0);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        if order % 2 == 1 {
            nodes[order / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    /// Positions of the nodes mapped onto `[a, b]`.
    pub fn nodes_on(&self, a: f64, b: f64) -> impl Iterator<Item = f64> + '_ {
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        self.nodes.iter().map(move |x| mid + half * x)
    }

    /// The rule applied to `f` on `[a, b]`.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let sum: f64 = self
            .nodes_on(a, b)
            .zip(&self.weights)
            .map(|(x, w)| w * f(x))
            .sum();
        half * sum
    }
}

/// The shared 15-point rule.
pub fn gauss_legendre_rule() -> &'static GaussLegendreRule {
    static RULE: OnceLock<GaussLegendreRule> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendreRule::new(PANEL_ORDER))
}

struct Adaptive<'a, F> {
    f: &'a F,
    rule: &'static GaussLegendreRule,
    evaluations: usize,
    hit_depth_cap: bool,
}

impl<F: Fn(f64) -> f64> Adaptive<'_, F> {
    fn panel(&mut self, a: f64, b: f64) -> f64 {
        self.evaluations += PANEL_ORDER;
        self.rule.apply(self.f, a, b)
    }

    /// Returns `(value, error)` for `[a, b]` given the single-panel value `whole`.
    fn refine(&mut self, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> (f64, f64) {
        let mid = 0.5 * (a + b);
        let left = self.panel(a, mid);
        let right = self.panel(mid, b);
        let split = left + right;
        let diff = (split - whole).abs();
        let floor = 64.0 * f64::EPSILON * split.abs();
        if diff <= tol.max(floor) || !(a < mid && mid < b) {
            return (split, diff);
        }
        if depth >= MAX_DEPTH {
            self.hit_depth_cap = true;
            return (split, diff);
        }
        // Splitting the tolerance by √2 rather than 2 lets endpoint
        // singularities converge; smooth panels overshoot it anyway.
        let (lv, le) = self.refine(a, mid, left, tol * FRAC_1_SQRT_2, depth + 1);
        let (rv, re) = self.refine(mid, b, right, tol * FRAC_1_SQRT_2, depth + 1);
        (lv + rv, le + re)
    }
}

/// Adaptive bisection with 15-point Gauss–Legendre panels to absolute `tol`.
///
/// Each panel is accepted when its one-panel and two-half-panel values agree.
/// Nodes are strictly interior to panels, so isolated points where `f` is
/// undefined (panel endpoints) are never sampled.
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, tol: f64) -> Result<IntegralResult>
where
    F: Fn(f64) -> f64,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInput(format!("bad interval [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let mut state = Adaptive {
        f: &f,
        rule: gauss_legendre_rule(),
        evaluations: 0,
        hit_depth_cap: false,
    };
    let whole = state.panel(a, b);
    let (value, error) = state.refine(a, b, whole, tol, 0);
    if state.hit_depth_cap || !value.is_finite() {
        return Err(Error::Accuracy {
            context: "adaptive Gauss-Legendre quadrature",
            estimate: value,
            error,
        });
    }
    Ok(IntegralResult {
        value,
        error_estimate: error,
        evaluations: state.evaluations,
    })
}
