//! Fibonacci snowflakes: turn words, perimeters and outlines.

use sashiko::prelude::*;
use sashiko::render::render_stitches_ascii;

fn main() {
    for order in 0..=4 {
        match build_snowflake(order) {
            Ok(flake) => {
                println!(
                    "order {order}: word q{} = {}, perimeter {}, area {}",
                    flake.turn_index,
                    turn_word(flake.turn_index),
                    flake.perimeter,
                    flake.polyomino.area()
                );
                print!("{}", render_stitches_ascii(&flake.outline(), false));
            }
            Err(e) => println!("order {order}: {e}"),
        }
    }
}
