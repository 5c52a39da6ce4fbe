#![allow(dead_code)]

pub mod checks;

use std::path::PathBuf;

use boundary_pairs::format::{parse, Board, Document};
use boundary_pairs::{BoundaryPair, GridSet};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_set(name: &str) -> GridSet {
    match parse(&fixture(&format!("{name}.txt"))).unwrap() {
        Document::Set(s) => s,
        Document::Pair(_) => panic!("{name} holds a pair"),
    }
}

pub fn fixture_pair(name: &str) -> BoundaryPair {
    match parse(&fixture(&format!("{name}.txt"))).unwrap() {
        Document::Pair(p) => p,
        Document::Set(_) => panic!("{name} holds a set"),
    }
}

pub fn board(name: &str) -> Board {
    Board::parse(&fixture(&format!("{name}.board")), (0, 0)).unwrap()
}

/// Draws `doc` on a blank board with the frame of the named figure board.
pub fn redraw(name: &str, doc: Document) -> String {
    let mut b = Board::blank(&board(name).window().unwrap()).unwrap();
    b.draw(&doc).unwrap();
    b.to_string()
}
