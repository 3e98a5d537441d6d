//! The reverse side of the cloth: every gap on the front is a stitch on the back.

use sashiko::prelude::*;

fn main() -> sashiko::Result<()> {
    let front = build_design(&jujizashi())?;
    let back = back_of(&front);
    let ascii = RenderOptions::default();

    println!(
        "front ({})\n{}",
        front.spec(),
        render_design_ascii(&front, &ascii)
    );
    println!(
        "back ({})\n{}",
        back.spec(),
        render_design_ascii(&back, &ascii)
    );

    let turned = RenderOptions {
        side: Side::Back,
        mirror_back: true,
        ..ascii
    };
    println!(
        "back, as seen after turning the cloth over\n{}",
        render_design_ascii(&front, &turned)
    );

    let all = front.front().len() + back.front().len();
    println!(
        "{} + {} = {all} stitch positions",
        front.front().len(),
        back.front().len()
    );
    Ok(())
}
