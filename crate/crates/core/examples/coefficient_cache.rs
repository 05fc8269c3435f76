// Round-tripping a coefficient table through the on-disk cache.

use trigprod::cli::{cache_path, cache_read, cache_write, load_or_compute};
use trigprod::coeffs::{pn_coefficients, Kind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("trigprod-cache-{}", std::process::id()));
    let table = pn_coefficients(50)?;
    let path = cache_write(&table, &dir)?;
    println!("wrote {}", path.display());
    assert_eq!(cache_read(Kind::P, 50, &dir)?, table);

    // Corrupt the leading coefficient; the read-side checks catch it.
    let text = std::fs::read_to_string(&path)?.replacen("\n1\n", "\n2\n", 1);
    std::fs::write(&path, text)?;
    match cache_read(Kind::P, 50, &dir) {
        Err(e) => println!("tampered file rejected: {e}"),
        Ok(_) => unreachable!("corruption went unnoticed"),
    }

    let q = load_or_compute(Kind::Q, 20, &dir)?;
    println!("Q20 from {} sums to {}", cache_path(Kind::Q, 20, &dir).display(), q.sum());
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
