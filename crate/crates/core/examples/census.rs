//! Exhaustive and sampled statistics over whole design spaces.

use sashiko::prelude::*;

fn main() -> sashiko::Result<()> {
    for m in 2..=5 {
        let table = census(m, m, CensusMode::Exhaustive, 1 << 20)?;
        let loops: u64 = table
            .loop_histogram
            .iter()
            .map(|(k, c)| *k as u64 * c)
            .sum();
        println!(
            "{m}x{m} lines: {} designs, {loops} loops in total, largest area {}",
            table.rows.len(),
            table.area_histogram.keys().max().copied().unwrap_or(0)
        );
    }

    let sample = census(
        20,
        20,
        CensusMode::Sample {
            count: 500,
            seed: 2024,
        },
        1 << 20,
    )?;
    println!("\n500 random 20x20 designs, loop-count histogram:");
    for (loops, count) in &sample.loop_histogram {
        println!("{loops:>4} {}", "#".repeat((*count as usize).div_ceil(4)));
    }
    Ok(())
}
