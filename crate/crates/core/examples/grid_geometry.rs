//! Chebyshev distance, half-step balls, rounding and straight lattice paths.
//!
//! Run with `cargo run --example grid_geometry`.

use boundary_pairs::{ball_points, chebyshev, rd, straight_path, Point, Result};

fn main() -> Result<()> {
    let x = Point::new(&[0, 0]);
    let z = Point::new(&[12, -4]);
    println!("chebyshev({x}, {z}) = {}", chebyshev(&x, &z)?);

    // Radii are doubled so half steps stay integral: radius 3 means 1.5.
    let ball = ball_points(&Point::new(&[1, 1]), 3, 1)?;
    println!("ball of radius 1.5 around (1,1): {} points", ball.len());
    let coarse = ball_points(&Point::new(&[1, 1]), 3, 2)?;
    println!("its points on the spacing-2 grid: {coarse:?}");

    println!(
        "rounding half up: rd(5/2) = {}, rd(-5/2) = {}, rd(7/3) = {}",
        rd(5, 2)?,
        rd(-5, 2)?,
        rd(7, 3)?
    );

    let path = straight_path(&x, &z, 2)?;
    println!("straight path on the spacing-2 grid, {} steps:", path.len());
    let nodes: Vec<String> = path.nodes().iter().map(|p| p.to_string()).collect();
    println!("  {}", nodes.join(" "));
    for pair in path.nodes().windows(2) {
        assert_eq!(chebyshev(&pair[0], &pair[1])?, 2);
    }
    Ok(())
}
