// Exact coefficients of P_n and Q_n, and what they count.

use trigprod::coeffs::{
    even_odd_distinct_counts_oracle, nonzero_count, pentagonal_series_prefix, pn_coefficients, qn_coefficients,
    CoefficientSweep, Kind,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // P̂_6(14) = e - o over partitions of 14 into distinct parts <= 6.
    let p6 = pn_coefficients(6)?;
    let (e, o) = even_odd_distinct_counts_oracle(14, 6)?;
    println!("P6(14) = {}  (even {e}, odd {o})", p6.get(14));
    assert_eq!(p6.get(14), (e as i64 - o as i64).into());

    // Q̂_n(j) counts partitions of j into distinct parts <= n.
    let q7 = qn_coefficients(7)?;
    println!("Q7(9) = {}, sum = {}", q7.get(9), q7.sum());
    assert!(q7.has_reversal_symmetry() && q7.is_unimodal());

    // Low coefficients of P_n agree with Euler's pentagonal series.
    let penta = pentagonal_series_prefix(20);
    let p20 = pn_coefficients(20)?;
    assert!((0..=20).all(|j| p20.get(j) == penta[j].into()));
    println!("P20 low terms: {:?}", &penta[..13]);

    // A sweep hands out every table on the way up for the price of the last.
    let mut sweep = CoefficientSweep::new(Kind::P);
    for n in [10, 50, 100] {
        let t = sweep.advance_to(n)?;
        let (max, at) = t.max_abs();
        println!("n={n:>3} N={:>5} nonzero={:>5} max|P̂|={max} at j={at}", t.degree(), nonzero_count(t));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
