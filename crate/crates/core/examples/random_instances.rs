//! Reproducible random sets and pairs, cross-checked against brute force.
//!
//! Run with `cargo run --example random_instances [seed]`.

use boundary_pairs::oracle::{
    axiom11_bruteforce, lifted_via_full, random_pair, random_set, Density, Direction,
};
use boundary_pairs::pairs::Axiom;
use boundary_pairs::{lift_restrict, trace, validate, GridRatio, Point, Result, Window};

fn main() -> Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let window = Window::new(Point::new(&[0, 0]), Point::new(&[15, 15]))?;
    let density: Density = "1/2".parse()?;

    let m = random_set(&window, density, seed, 1)?;
    assert_eq!(m, random_set(&window, density, seed, 1)?);
    let ratio = GridRatio::new(3)?;
    let direct = lift_restrict(&trace(&m)?, ratio)?;
    assert_eq!(
        direct,
        lifted_via_full(&trace(&m)?, ratio, Direction::Restrict)?
    );
    println!(
        "seed {seed}: {} points, lifted restriction agrees with the full-set route",
        m.points().len()
    );

    let tiny = Window::new(Point::new(&[0, 0]), Point::new(&[3, 3]))?;
    let (mut valid, mut broken) = (0, 0);
    for s in seed..seed + 40 {
        let pair = random_pair(&tiny, density, s, 1, s % 2 == 1)?;
        let fast = !validate(&pair).failed().contains(&Axiom::Separation);
        assert_eq!(fast, axiom11_bruteforce(&pair, 6)?);
        if fast {
            valid += 1
        } else {
            broken += 1
        }
    }
    println!("40 tiny pairs: separation holds for {valid}, fails for {broken}; path search agrees");
    Ok(())
}
