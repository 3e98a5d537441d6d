//! Split a design into closed loops and boundary-to-boundary paths.

use sashiko::prelude::*;

fn main() -> sashiko::Result<()> {
    let design = build_design(&DesignSpec::parse_words("0100101001", "0100101001")?)?;
    let parts = decompose(&design)?;
    println!(
        "{} loops, {} paths, nested {} deep",
        parts.loops.len(),
        parts.paths.len(),
        parts.max_depth()
    );

    for (i, lp) in parts.loops.iter().enumerate() {
        println!(
            "loop {i}: {} stitches around {} cells, depth {}",
            lp.edges.len(),
            lp.area,
            parts.depth(i)
        );
        print!("{}", lp.polyomino.to_text());
    }
    let corners = corner_map(&design)?;
    println!("corner glyphs at interior vertices:\n{}", corners.to_text());
    Ok(())
}
