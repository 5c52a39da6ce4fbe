//! Trace a ring-shaped set to its boundary pair and rebuild it.
//!
//! Run with `cargo run --example trace_and_reconstruct`.

use boundary_pairs::format::{render, Document};
use boundary_pairs::{reconstruct, trace, validate, GridSet, Point, Result};

fn main() -> Result<()> {
    // A 9x7 block with a 3x3 hole.
    let points = (0..9)
        .flat_map(|x| (0..7).map(move |y| Point::new(&[x, y])))
        .filter(|p| !((3..=5).contains(&p[0]) && (2..=4).contains(&p[1])));
    let ring = GridSet::finite(2, 1, points)?;
    println!(
        "set ({} points):\n{}",
        ring.points().len(),
        render(&ring.clone().into(), false)?
    );

    let pair = trace(&ring)?;
    println!(
        "boundary pair: |D0| = {}, |D1| = {} (0 = inner boundary, 1 = outer layer)\n{}",
        pair.d0().len(),
        pair.d1().len(),
        render(&Document::Pair(pair.clone()), false)?
    );
    assert!(validate(&pair).is_valid());

    let rebuilt = reconstruct(&pair)?;
    assert_eq!(rebuilt, ring);
    println!("reconstruct(trace(M)) == M");

    // The complement is cofinite; its pair is the same two sets, swapped.
    let outside = trace(&ring.complement())?;
    assert_eq!((outside.d0(), outside.d1()), (pair.d1(), pair.d0()));
    assert_eq!(reconstruct(&outside)?, ring.complement());
    println!("the complement's pair swaps D0 and D1 and reconstructs to the cofinite complement");
    Ok(())
}
