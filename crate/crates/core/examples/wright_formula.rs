// Wright's coefficient formula against the exact coefficients of P_n.

use trigprod::asymptotics::{wright_comparison, WrightVariant};
use trigprod::coeffs::pn_coefficients;
use trigprod::constants::standard;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 120;
    let table = pn_coefficients(n)?;
    for variant in [WrightVariant::Gaussian, WrightVariant::GaussianAsPrinted, WrightVariant::Plain] {
        let cmp = wright_comparison(&table, standard(), variant, 3 * n as usize)?;
        println!(
            "{variant:?}: correlation {:.3}, sign agreement {:.3} over {} indices",
            cmp.correlation, cmp.sign_agreement, cmp.points
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
