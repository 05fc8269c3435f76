// The constants w0, K, B, C, G, A and the norm prefactors, computed from scratch.

use trigprod::constants::{compute_catalan, compute_w0, ConstantsSet, REFERENCE_VALUES};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let set = ConstantsSet::compute(1e-12)?;
    println!("{:<18} {:>20} {:>10}  reference", "name", "value", "error");
    for (name, est) in set.rows() {
        let reference = REFERENCE_VALUES.iter().find(|(r, _)| *r == name).map(|(_, v)| *v);
        println!(
            "{name:<18} {:>20.12} {:>10.1e}  {}",
            est.value,
            est.error,
            reference.map_or(String::new(), |v| format!("{v:.10}"))
        );
        if let Some(v) = reference {
            assert!((est.value - v).abs() < 1e-8);
        }
    }

    // Looser tolerances are cheaper and still honest about their error.
    let w = compute_w0(1e-6)?;
    println!("w0 at tol 1e-6: {} ± {:.1e}", w.value, w.error);
    let g = compute_catalan(1e-13)?;
    println!("Catalan: {} ± {:.1e}", g.value, g.error);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
