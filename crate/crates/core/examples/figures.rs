// CSV data behind the figures, shortened so it runs in seconds.

use trigprod::cli::{emit_figure, FigureSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("trigprod-figures");
    for id in 1..=6u8 {
        let out = dir.join(format!("fig{id}.csv"));
        let spec = match id {
            1 | 4 => FigureSpec::captioned(id, &out)?,
            _ => FigureSpec::truncated(id, 60, &out)?,
        };
        emit_figure(&spec)?;
        let text = std::fs::read_to_string(&out)?;
        let last = text.lines().last().unwrap_or_default();
        println!("fig{id}: {} rows, last = {last}", text.lines().count() - 1);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
