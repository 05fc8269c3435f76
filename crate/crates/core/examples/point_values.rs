// |P_n(θ)| and |Q_n(θ)| in log scale, exact rational angles included.

use std::f64::consts::PI;

use trigprod::cli::parse_theta;
use trigprod::pointeval::{log_abs_pn, log_abs_pn_at_3pi_over_2n, log_abs_qn, Angle};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // P_n(2πh/(n+1)) = n + 1 for h coprime to n + 1.
    for n in [4u32, 10, 1000] {
        let v = log_abs_pn(n, Angle::pi_fraction(2, n as u64 + 1)?);
        println!("|P_{n}(2π/{})| = {}", n + 1, v.to_f64());
    }

    // Q_n(2πh/(n+1)) vanishes for odd n and is 1 for even n.
    println!("Q_5(2π/6) zero: {}", log_abs_qn(5, Angle::pi_fraction(1, 3)?).is_zero());
    println!("|Q_6(2π/7)| = {}", log_abs_qn(6, Angle::pi_fraction(2, 7)?).to_f64());

    // Huge values stay in log scale.
    let big = log_abs_pn_at_3pi_over_2n(5000);
    println!("ln|P_5000(3π/10000)| = {:.6}  ({big})", big.ln());

    // Angles as the CLI reads them.
    for expr in ["3pi/7", "0.25pi", "1.0"] {
        let theta = parse_theta(expr)?;
        println!("{expr:>6} -> {theta} -> ln|P_6| = {:.6}", log_abs_pn(6, theta).ln());
    }
    // The k = 6 factor vanishes at π/3, even for a float angle.
    assert!(log_abs_pn(30, PI / 3.0).is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
