//! Search every design of a given size for plus-shaped loops.

use sashiko::prelude::*;

fn main() -> sashiko::Result<()> {
    let plus = Polyomino::plus();
    print!("target\n{}", plus.to_text());
    for m in 4..=7 {
        let found = find_designs_containing(&plus, m, m, ShapeMatch::Translation, 1 << 20)?;
        println!(
            "{m}x{m} lines: {} of {} designs",
            found.len(),
            design_count(m, m)?
        );
        if let Some(first) = found.first() {
            println!("  first: {first}");
        }
    }
    Ok(())
}
