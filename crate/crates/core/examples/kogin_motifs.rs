//! Bundled kogin charts: validation, a deliberate mistake, and rendering.

use sashiko::kogin::motif_names;
use sashiko::prelude::*;
use sashiko::render::render_chart_svg;

fn main() -> sashiko::Result<()> {
    for name in motif_names() {
        let chart = motif(name)?;
        let report = validate(&chart, Strictness::Strict);
        println!(
            "{name:<10} {:>2} rows, {:>2} runs, mirror-symmetric: {}, {}",
            chart.rows.len(),
            chart.run_count(),
            chart.has_vertical_mirror(),
            report.to_string().trim_end()
        );
    }

    let mut chart = motif("dragonfly")?;
    chart.rows[0].runs[0].length += 1;
    print!(
        "\ndragonfly with one run lengthened:\n{}",
        validate(&chart, Strictness::Strict)
    );

    let text = "width=9 mode=hishi name=steps\n--.----..\n.----.--.\n";
    let hishi = parse_chart(text)?;
    println!(
        "\nhishi chart: {}",
        validate(&hishi, Strictness::Strict).to_string().trim_end()
    );
    print!("{}", render_chart_svg(&hishi, &RenderOptions::default()));
    Ok(())
}
