//! Restrict and interpolate boundary pairs directly, without rebuilding the
//! sets, and compare against the detour through the full sets.
//!
//! Run with `cargo run --example lifted_operators`.

use boundary_pairs::format::{parse, render, Document};
use boundary_pairs::{
    interpolate, lift_interpolate, lift_restrict, reconstruct, restrict, trace, GridRatio, Result,
};

fn main() -> Result<()> {
    let two = GridRatio::new(2)?;
    let Document::Pair(coarse) = parse(include_str!("../tests/fixtures/fig6a.txt"))? else {
        unreachable!("fixture holds a pair")
    };
    println!(
        "coarse pair (spacing 2):\n{}",
        render(&Document::Pair(coarse.clone()), true)?
    );

    let fine = lift_interpolate(&coarse, two)?;
    println!(
        "interpolated pair:\n{}",
        render(&Document::Pair(fine.clone()), false)?
    );
    assert_eq!(fine, trace(&interpolate(&reconstruct(&coarse)?, two)?)?);

    let back = lift_restrict(&fine, two)?;
    println!(
        "restricted again:\n{}",
        render(&Document::Pair(back.clone()), true)?
    );
    assert_eq!(back, trace(&restrict(&reconstruct(&fine)?, two)?)?);

    println!("both lifted results match trace(operator(reconstruct(pair)))");
    Ok(())
}
