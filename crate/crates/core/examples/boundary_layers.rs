//! Distance layers around and inside a set.
//!
//! Layer 0 is the inner boundary, layer 1 the first outer layer, layer k > 1
//! the non-members k steps out and layer k < 0 the members 1 - k steps in.
//!
//! Run with `cargo run --example boundary_layers`.

use boundary_pairs::format::Board;
use boundary_pairs::{layer, GridSet, Point, Result, Window};

fn main() -> Result<()> {
    let block = (0..10).flat_map(|x| (0..8).map(move |y| Point::new(&[x, y])));
    let m = GridSet::finite(2, 1, block.filter(|p| !(p[0] > 6 && p[1] > 4)))?;
    let window = Window::new(Point::new(&[-4, -4]), Point::new(&[13, 11]))?;
    let mut board = Board::blank(&window)?;
    for k in -3..=4i64 {
        let l = layer(&m, k);
        let mark = if k < 0 {
            (b'a' + (-k) as u8 - 1) as char
        } else {
            (b'0' + k as u8) as char
        };
        println!("layer {k:>2} ({mark}): {} points", l.points().len());
        board.mark(l.points(), mark)?;
    }
    println!("\n{board}");

    // Flipping the set swaps layer k with layer 1 - k.
    for k in -3..=4 {
        assert_eq!(layer(&m, k), layer(&m.complement(), 1 - k));
    }
    println!("layer(M, k) == layer(complement, 1 - k) for k in -3..=4");
    Ok(())
}
