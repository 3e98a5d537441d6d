//! Build a design from two phase words and print it as text and SVG.
//!
//! cargo run --example generate_design -- 0110100 1011001

use sashiko::prelude::*;

fn main() -> sashiko::Result<()> {
    let mut args = std::env::args().skip(1);
    let rows = args.next().unwrap_or_else(|| "0110100".into());
    let cols = args.next().unwrap_or_else(|| "1011001".into());

    let spec = DesignSpec::parse_words(&rows, &cols)?;
    let design = build_design(&spec)?;
    println!(
        "{spec}: {} stitches on a {}x{} grid",
        design.front().len(),
        design.width(),
        design.height()
    );
    println!(
        "{}",
        render_design_ascii(&design, &RenderOptions::default())
    );

    let svg = render_design_svg(
        &design,
        &RenderOptions {
            show_grid: true,
            ..RenderOptions::default()
        },
    );
    let path = std::env::temp_dir().join("sashiko-design.svg");
    std::fs::write(&path, svg).expect("write svg");
    println!("svg written to {}", path.display());
    Ok(())
}
