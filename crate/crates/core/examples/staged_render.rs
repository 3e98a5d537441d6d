//! The order a stitcher works in: vertical lines first, then horizontal.

use sashiko::prelude::*;

fn main() -> sashiko::Result<()> {
    let design = build_design(&DesignSpec::parse_words("01101001", "10010110")?)?;
    for (label, stage) in [
        ("vertical lines", Stage::VerticalOnly),
        ("horizontal lines", Stage::HorizontalOnly),
        ("finished", Stage::Combined),
    ] {
        let opts = RenderOptions {
            stage,
            plain_ascii: true,
            ..RenderOptions::default()
        };
        println!(
            "{label}: {} stitches\n{}",
            stitch_stage(&design, stage).len(),
            render_design_ascii(&design, &opts)
        );
    }
    Ok(())
}
