//! Which of the eight square symmetries fix a design.

use sashiko::prelude::*;

fn main() -> sashiko::Result<()> {
    for (rows, cols) in [
        ("00", "00"),
        ("001100110", "001100110"),
        ("0010", "011110"),
        ("0110", "1101"),
    ] {
        let design = build_design(&DesignSpec::parse_words(rows, cols)?)?;
        let report = detect_symmetry(&design);
        let ops: Vec<&str> = report.ops.iter().map(|g| g.name()).collect();
        println!(
            "rows={rows:<10} cols={cols:<10} {:<3} [{}] periods {}x{}",
            report.point_group.name(),
            ops.join(", "),
            report.row_period,
            report.col_period
        );
    }
    Ok(())
}
