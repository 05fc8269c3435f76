// Theorem checks as JSON reports.

use trigprod::asymptotics::{default_n_values, verify_tag, TheoremTag};
use trigprod::constants::standard;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = standard();
    for tag in [TheoremTag::T1, TheoremTag::T7, TheoremTag::Littlewood, TheoremTag::Pentagonal] {
        let ns = default_n_values(tag, 80);
        let report = verify_tag(tag, &ns, 1.0, c)?;
        println!("{:<12} pass={} last observed={:.4}", tag.to_string(), report.pass, report.observed.last().unwrap());
    }

    // Aliases parse too.
    let tag: TheoremTag = "bigpoint".parse()?;
    let report = verify_tag(tag, &default_n_values(tag, 150), 1.0, c)?;
    println!("{}", serde_json::to_string_pretty(&report.fitted)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
