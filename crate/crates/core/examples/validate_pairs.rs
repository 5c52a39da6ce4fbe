//! Check candidate boundary pairs against the axioms and read the reports.
//!
//! Run with `cargo run --example validate_pairs`.

use boundary_pairs::format::{parse, render, Document};
use boundary_pairs::pairs::Axiom;
use boundary_pairs::{trace, validate, BoundaryPair, GridSet, Point, Result};

fn show(title: &str, pair: &BoundaryPair) -> Result<()> {
    let report = validate(pair);
    println!("== {title}");
    print!("{}", render(&Document::Pair(pair.clone()), false)?);
    println!("{report}");
    Ok(())
}

fn main() -> Result<()> {
    let square = GridSet::finite(
        2,
        1,
        (0..3).flat_map(|x| (0..3).map(move |y| Point::new(&[x, y]))),
    )?;
    let good = trace(&square)?;
    show("trace of a 3x3 square", &good)?;

    // Drop one outer point: D0 now leaks to the exterior through the gap.
    let (d0, mut d1) = good.clone().into_parts();
    d1.remove(&Point::new(&[3, 1]));
    let gap = BoundaryPair::new(2, 1, d0, d1)?;
    show("outer layer with a gap", &gap)?;
    assert!(!validate(&gap).is_valid());

    // A pair read from a fixture file that fails only the separation axiom.
    let text = include_str!("../tests/fixtures/fig2a.txt");
    let Document::Pair(crossing) = parse(text)? else {
        unreachable!("fixture holds a pair")
    };
    show("separation failure", &crossing)?;
    assert_eq!(validate(&crossing).failed(), vec![Axiom::Separation]);
    Ok(())
}
