//! The two text formats: compressed ASCII grids for the plane, coordinate
//! lists for any dimension.
//!
//! Run with `cargo run --example text_formats`.

use boundary_pairs::format::{parse, render, serialize, Document, Format};
use boundary_pairs::{trace, GridSet, Point, Result};

fn main() -> Result<()> {
    let text = "#gridset v1 m=2 s=2 origin=4,-2 mode=finite\n0-0\n000\n";
    let doc = parse(text)?;
    println!("ascii in:\n{text}");
    println!("as coords:\n{}", serialize(&doc, Format::Coords)?);
    println!(
        "drawn in fine units with grid guides:\n{}",
        render(&doc, true)?
    );
    assert_eq!(serialize(&doc, Format::Ascii)?, text);

    // Coordinates carry any dimension.
    let cube = GridSet::finite(3, 1, [[0, 0, 0], [1, 0, 0]].map(|c| Point::new(&c)))?;
    let pair = Document::Pair(trace(&cube)?);
    let coords = serialize(&pair, Format::Coords)?;
    println!("3-D pair: {} lines of coordinates", coords.lines().count());
    assert_eq!(parse(&coords)?, pair);

    // Cofinite sets list their missing points.
    let holes = GridSet::finite(2, 1, [Point::new(&[0, 0])])?.complement();
    println!(
        "cofinite set:\n{}",
        serialize(&Document::Set(holes), Format::Ascii)?
    );
    Ok(())
}
