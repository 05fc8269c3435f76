// L^p norms on the circle and ℓ^p norms of the coefficients.

use trigprod::coeffs::{pn_coefficients, qn_coefficients};
use trigprod::constants::standard;
use trigprod::norms::{
    l2_norm_parseval, linf_norm_pn, linf_norm_pn_arcs, lp_norm_coefficients, lp_norm_pn, lp_norm_qn,
};
use trigprod::quadrature::NORMS_TOL;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k = standard().k.value;
    let n = 120u32;

    // ∥P_n∥_2 two ways: quadrature and Parseval.
    let quad = lp_norm_pn(n, 2.0, NORMS_TOL)?;
    let pars = l2_norm_parseval(&pn_coefficients(n)?);
    println!("∥P_{n}∥_2  quadrature {:.12}  parseval {:.12}", quad.value.ln(), pars.value.ln());

    let l1 = lp_norm_pn(n, 1.0, NORMS_TOL)?;
    println!("∥P_{n}∥_1 · n e^(-Kn) = {:.4}  (tends to B)", (l1.value.ln() - k * n as f64).exp() * n as f64);

    // Two independent sup-norm searches.
    let scan = linf_norm_pn(n, 1e-12)?;
    let arcs = linf_norm_pn_arcs(n)?;
    println!("∥P_{n}∥_∞  scan {:.12}  arcs {:.12}", scan.value.ln(), arcs.value.ln());

    let q = lp_norm_qn(60, 1.0, NORMS_TOL)?;
    println!("∥Q_60∥_1 = e^{:.6}", q.value.ln());

    // ∥Q̂_n∥_1 = 2^n exactly.
    let hat = lp_norm_coefficients(&qn_coefficients(60)?, 1.0)?;
    println!("∥Q̂_60∥_1 / 2^60 = {}", (hat.value.ln() - 60.0 * std::f64::consts::LN_2).exp());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
