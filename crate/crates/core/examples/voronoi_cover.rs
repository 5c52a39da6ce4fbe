//! Voronoi covers: the restriction of a set is a cover, and a minimal one.
//!
//! Run with `cargo run --example voronoi_cover`.

use boundary_pairs::format::render;
use boundary_pairs::oracle::voronoi_cover_bruteforce;
use boundary_pairs::{interpolate, is_voronoi_cover, restrict, GridRatio, GridSet, Point, Result};

fn main() -> Result<()> {
    let ratio = GridRatio::new(3)?;
    let m = GridSet::finite(
        2,
        1,
        [[0, 0], [1, 0], [2, 1], [3, 2], [3, 3], [6, 3]].map(|c| Point::new(&c)),
    )?;
    let r = restrict(&m, ratio)?;
    println!("fine set and its restriction (n = 3):");
    print!("{}", render(&m.clone().into(), false)?);
    print!("{}", render(&r.clone().into(), true)?);
    assert!(is_voronoi_cover(&m, &r)? && voronoi_cover_bruteforce(&m, &r));
    println!("R(M) covers M");

    for p in r.points() {
        let smaller = GridSet::finite(2, 3, r.points().iter().filter(|q| *q != p).cloned())?;
        let covers = !smaller.is_empty() && is_voronoi_cover(&m, &smaller)?;
        println!(
            "  without {p}: {}",
            if covers {
                "still a cover"
            } else {
                "not a cover"
            }
        );
        assert!(!covers);
    }

    // The same holds from coarse to fine.
    let coarse = GridSet::finite(2, 3, [[0, 0], [3, 0], [6, 6]].map(|c| Point::new(&c)))?;
    let fine = interpolate(&coarse, ratio)?;
    assert!(is_voronoi_cover(&coarse, &fine)?);
    println!(
        "I(M) covers a coarse set M with {} fine points",
        fine.points().len()
    );
    Ok(())
}
