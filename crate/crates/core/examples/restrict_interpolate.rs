//! Move a set between a fine grid and a coarse grid of spacing n.
//!
//! Run with `cargo run --example restrict_interpolate`.

use boundary_pairs::format::render;
use boundary_pairs::{hausdorff, interpolate, restrict, GridRatio, GridSet, Point, Result};

fn main() -> Result<()> {
    // A fine-grid blob: points of a rough disc of radius 5.
    let disc = (-5..=5i64)
        .flat_map(|x| (-5..=5i64).map(move |y| (x, y)))
        .filter(|&(x, y)| x * x + y * y <= 26)
        .map(|(x, y)| Point::new(&[x, y]));
    let m = GridSet::finite(2, 1, disc)?;
    println!("fine set M:\n{}", render(&m.clone().into(), false)?);

    for n in [2, 3] {
        let ratio = GridRatio::new(n)?;
        let coarse = restrict(&m, ratio)?;
        let back = interpolate(&coarse, ratio)?;
        println!("n = {n}: R(M) has {} coarse points", coarse.points().len());
        print!("{}", render(&coarse.clone().into(), true)?);
        println!(
            "  dist_H(M, R(M)) = {}, dist_H(R(M), I(R(M))) = {}, both at most n/2",
            hausdorff(&m, &coarse)?,
            hausdorff(&coarse, &back)?
        );

        // R after I is the identity for odd n and grows the set by one coarse
        // step for even n.
        let round_trip = restrict(&back, ratio)?;
        if n % 2 == 1 {
            assert_eq!(round_trip, coarse);
            println!("  R(I(R(M))) == R(M)");
        } else {
            println!(
                "  R(I(R(M))) has {} points, a one-step dilation of R(M)",
                round_trip.points().len()
            );
        }
    }
    Ok(())
}
