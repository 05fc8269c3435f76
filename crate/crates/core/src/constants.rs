//! The Sudler–Wright constants `w0, K, B, C`, Catalan's constant `G`,
//! `A = 2G/(3π)`, and the prefactors derived from them.

use std::f64::consts::{FRAC_1_PI, LN_2, PI};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{find_root, integrate_singular, CONSTANTS_TOL};

/// A value with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

impl Estimate {
    pub fn new(value: f64, error: f64) -> Self {
        Self { value, error: error.abs() }
    }

    pub fn exact(value: f64) -> Self {
        Self { value, error: 0.0 }
    }
}

/// Ten-digit reference decimals: `(name, value)` for w0, K, e^K, B, C, G,
/// e^A and the `∥P_n∥_2` prefactor.
pub const REFERENCE_VALUES: [(&str, f64); 8] = [
    ("w0", 0.7912265710),
    ("K", 0.1986176152),
    ("eK", 1.219715476),
    ("B", 2.740222990),
    ("C", 1.606193491),
    ("G", 0.9159655942),
    ("eA", 1.214550362),
    ("l2_prefactor_p", 1.551046691),
];

/// All constants with their error estimates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantsSet {
    pub w0: Estimate,
    pub k: Estimate,
    pub b: Estimate,
    pub c: Estimate,
    pub g: Estimate,
    pub a: Estimate,
    pub e_k: Estimate,
    pub e_a: Estimate,
    /// `2^{-3/4} π^{-1/4} B C^{1/2}`, the limit of `∥P_n∥_2 n^{1/4} e^{-Kn}`.
    pub l2_prefactor_p: Estimate,
    /// `BC/√(4π)`, the limit of `∥P_n∥_∞ n^{-1/2} e^{-Kn}`.
    pub linf_prefactor_p: Estimate,
    /// `√(6/π)`, the limit of `∥Q_n∥_1 n^{3/2} 2^{-n}`.
    pub q_l1_prefactor: Estimate,
}

impl ConstantsSet {
    /// Computes everything from scratch at quadrature tolerance `tol`.
    pub fn compute(tol: f64) -> Result<Self> {
        let w0 = compute_w0(tol)?;
        let k_quad = compute_k(w0.value, tol)?;
        // dK/dw0 vanishes at the maximiser, so w0's error enters K only at
        // second order: K'' = -2C².
        let c_value = compute_c(w0.value)?;
        let k = Estimate::new(
            k_quad.value,
            k_quad.error + c_value * c_value * w0.error * w0.error,
        );
        let b_value = compute_b(k.value)?;
        let b = Estimate::new(b_value, b_slope(k.value) * k.error);
        let dc = (compute_c(w0.value + 1e-6)? - compute_c(w0.value - 1e-6)?) / 2e-6;
        let c = Estimate::new(c_value, dc.abs() * w0.error + 4.0 * f64::EPSILON * c_value);
        let g = compute_catalan(tol)?;
        let a = Estimate::new(2.0 * g.value / (3.0 * PI), 2.0 * g.error / (3.0 * PI));
        Ok(derived_prefactors(Self::from_base(w0, k, b, c, g, a)))
    }

    fn from_base(w0: Estimate, k: Estimate, b: Estimate, c: Estimate, g: Estimate, a: Estimate) -> Self {
        let zero = Estimate::exact(0.0);
        Self {
            w0,
            k,
            b,
            c,
            g,
            a,
            e_k: zero,
            e_a: zero,
            l2_prefactor_p: zero,
            linf_prefactor_p: zero,
            q_l1_prefactor: zero,
        }
    }

    /// `(name, estimate)` rows in a fixed order, matching [`REFERENCE_VALUES`]
    /// names where one exists.
    pub fn rows(&self) -> Vec<(&'static str, Estimate)> {
        vec![
            ("w0", self.w0),
            ("K", self.k),
            ("eK", self.e_k),
            ("B", self.b),
            ("C", self.c),
            ("G", self.g),
            ("A", self.a),
            ("eA", self.e_a),
            ("l2_prefactor_p", self.l2_prefactor_p),
            ("linf_prefactor_p", self.linf_prefactor_p),
            ("q_l1_prefactor", self.q_l1_prefactor),
        ]
    }
}

/// The constants at the default tolerance, computed once per process.
pub fn standard() -> &'static ConstantsSet {
    static SET: OnceLock<ConstantsSet> = OnceLock::new();
    SET.get_or_init(|| ConstantsSet::compute(CONSTANTS_TOL).expect("default constants must converge"))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol >= 1e-13 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("tolerance {tol:e} is below 1e-13")))
    }
}

/// Tighter tolerance handed to the integrator so that quadrature error does
/// not dominate the root or constant it feeds.
fn inner_tol(tol: f64) -> f64 {
    (0.01 * tol).max(1e-15)
}

/// `t·cot(πt)`, with the removable value `1/π` at 0.
pub fn t_cot_pi_t(t: f64) -> f64 {
    if t == 0.0 {
        FRAC_1_PI
    } else {
        t / (PI * t).tan()
    }
}

/// `F(w) = ∫_0^w t cot(πt) dt`; w0 is its zero in `(1/2, 1)`.
pub fn w0_integral(w: f64, tol: f64) -> Result<Estimate> {
    let r = integrate_singular(t_cot_pi_t, 0.0, w, tol)?;
    Ok(Estimate::new(r.value, r.error_estimate))
}

/// w0 as the zero of [`w0_integral`] on `[0.5, 0.95]`.
pub fn compute_w0(tol: f64) -> Result<Estimate> {
    check_tol(tol)?;
    let q = inner_tol(tol);
    let r = find_root(|w| Ok(w0_integral(w, q)?.value), 0.5, 0.95, tol)?;
    // |F'(w0)| = w0 |cot(π w0)| turns the quadrature error into a root error.
    let slope = (r.root * (PI * r.root).tan().recip()).abs();
    Ok(Estimate::new(r.root, r.bracket_width + q / slope))
}

/// `φ(w) = w^{-1} ∫_0^w log sin(πt) dt`, the function K maximises (less log 2).
pub fn k_objective(w: f64, tol: f64) -> Result<Estimate> {
    if !(w > 0.0 && w < 1.0) {
        return Err(Error::Domain(format!("objective needs 0 < w < 1, got {w}")));
    }
    let r = integrate_singular(|t: f64| (PI * t).sin().ln(), 0.0, w, tol)?;
    Ok(Estimate::new(r.value / w, r.error_estimate / w))
}

/// `K = log 2 + φ(w0)`.
pub fn compute_k(w0: f64, tol: f64) -> Result<Estimate> {
    check_tol(tol)?;
    let phi = k_objective(w0, inner_tol(tol))?;
    Ok(Estimate::new(LN_2 + phi.value, phi.error))
}

/// `B = 2e^K (1 − e^{2K}/4)^{-1/4}`.
pub fn compute_b(k: f64) -> Result<f64> {
    let e2k = (2.0 * k).exp();
    if e2k >= 4.0 {
        return Err(Error::Domain(format!("e^(2K) = {e2k} must be below 4")));
    }
    Ok(2.0 * k.exp() * (1.0 - 0.25 * e2k).powf(-0.25))
}

/// `dB/dK`.
fn b_slope(k: f64) -> f64 {
    let e2k = (2.0 * k).exp();
    let b = 2.0 * k.exp() * (1.0 - 0.25 * e2k).powf(-0.25);
    b * (1.0 + (e2k / 8.0) / (1.0 - 0.25 * e2k))
}

/// `C = √(−(π/(2w0)) cot(π w0))`.
pub fn compute_c(w0: f64) -> Result<f64> {
    let radicand = -(PI / (2.0 * w0)) / (PI * w0).tan();
    if !(radicand > 0.0) {
        return Err(Error::Domain(format!("C² = {radicand} is not positive at w0 = {w0}")));
    }
    Ok(radicand.sqrt())
}

/// Partial sum of `Σ (−1)^j/(2j+1)²` over the first `terms` terms.
pub fn catalan_partial_sum(terms: usize) -> f64 {
    (0..terms)
        .map(|j| {
            let t = 1.0 / ((2 * j + 1) as f64).powi(2);
            if j % 2 == 0 { t } else { -t }
        })
        .sum()
}

const CATALAN_DIRECT_TERMS: usize = 10;
const CATALAN_MAX_DIFFERENCES: usize = 80;

/// Catalan's constant: ten terms summed directly, the alternating tail by the
/// Euler transform `Σ (−1)^j b_j = Σ_k (−Δ)^k b_0 / 2^{k+1}`.
pub fn compute_catalan(tol: f64) -> Result<Estimate> {
    check_tol(tol)?;
    let head = catalan_partial_sum(CATALAN_DIRECT_TERMS);
    // The tail starts with a positive term because the head has even length.
    let mut diffs: Vec<f64> = (CATALAN_DIRECT_TERMS..CATALAN_DIRECT_TERMS + CATALAN_MAX_DIFFERENCES)
        .map(|j| 1.0 / ((2 * j + 1) as f64).powi(2))
        .collect();
    let mut tail = 0.0;
    let mut scale = 0.5;
    let mut last = f64::INFINITY;
    for k in 0..CATALAN_MAX_DIFFERENCES {
        let term = diffs[0] * scale;
        tail += term;
        last = term.abs();
        if last < 0.1 * tol && k > 2 {
            return Ok(Estimate::new(head + tail, last + 4.0 * f64::EPSILON));
        }
        // Replace b with −Δb in place.
        for j in 0..diffs.len() - k - 1 {
            diffs[j] -= diffs[j + 1];
        }
        scale *= 0.5;
    }
    Err(Error::Accuracy {
        context: "Catalan series",
        estimate: head + tail,
        error: last,
    })
}

/// Fills in `e^K`, `e^A` and the three norm prefactors from the base constants.
pub fn derived_prefactors(mut set: ConstantsSet) -> ConstantsSet {
    let ek = set.k.value.exp();
    set.e_k = Estimate::new(ek, ek * set.k.error);
    let ea = set.a.value.exp();
    set.e_a = Estimate::new(ea, ea * set.a.error);

    let (b, c) = (set.b.value, set.c.value);
    let rel_b = set.b.error / b;
    let rel_c = set.c.error / c;
    let l2 = 2f64.powf(-0.75) * PI.powf(-0.25) * b * c.sqrt();
    set.l2_prefactor_p = Estimate::new(l2, l2 * (rel_b + 0.5 * rel_c));
    let linf = b * c / (4.0 * PI).sqrt();
    set.linf_prefactor_p = Estimate::new(linf, linf * (rel_b + rel_c));
    set.q_l1_prefactor = Estimate::new((6.0 / PI).sqrt(), f64::EPSILON);
    set
}
