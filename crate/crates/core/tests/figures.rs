mod common;

use boundary_pairs::format::{to_ascii, Document};
use boundary_pairs::pairs::Axiom;
use boundary_pairs::{
    interpolate, is_voronoi_cover, lift_interpolate, lift_restrict, restrict, trace, validate,
    BoundaryPair, GridRatio,
};
use common::*;

fn two() -> GridRatio {
    GridRatio::new(2).unwrap()
}

#[test]
fn fixtures_agree_with_boards() {
    let pairs = ["fig2a", "fig2b", "fig2c", "fig6a", "fig6b", "fig6c"];
    for name in pairs {
        let p = fixture_pair(name);
        assert_eq!(
            redraw(name, Document::Pair(p)),
            fixture(&format!("{name}.board")),
            "{name}"
        );
    }
    for name in [
        "fig1a", "fig1b", "fig3a", "fig3c", "fig6d", "fig6e", "fig6f",
    ] {
        let s = fixture_set(name);
        assert_eq!(
            redraw(name, Document::Set(s)),
            fixture(&format!("{name}.board")),
            "{name}"
        );
    }
}

#[test]
fn fixtures_are_normalized() {
    for name in [
        "fig1a", "fig1b", "fig1c", "fig2a", "fig3c", "fig6a", "fig6b", "fig6e",
    ] {
        let text = fixture(&format!("{name}.txt"));
        let doc = boundary_pairs::format::parse(&text).unwrap();
        assert_eq!(to_ascii(&doc).unwrap(), text, "{name}");
    }
}

#[test]
fn lifted_operators_reproduce_the_computational_example() {
    let a = fixture_pair("fig6a");
    let b = lift_interpolate(&a, two()).unwrap();
    assert_eq!(
        to_ascii(&Document::Pair(b.clone())).unwrap(),
        fixture("fig6b.txt")
    );
    assert_eq!(
        redraw("fig6b", Document::Pair(b.clone())),
        fixture("fig6b.board")
    );
    let c = lift_restrict(&b, two()).unwrap();
    assert_eq!(
        to_ascii(&Document::Pair(c.clone())).unwrap(),
        fixture("fig6c.txt")
    );
    assert_eq!(redraw("fig6c", Document::Pair(c)), fixture("fig6c.board"));
}

#[test]
fn set_operators_reproduce_the_computational_example() {
    let d = fixture_set("fig6d");
    assert_eq!(trace(&d).unwrap(), fixture_pair("fig6a"));
    let e = interpolate(&d, two()).unwrap();
    assert_eq!(e, fixture_set("fig6e"));
    assert_eq!(trace(&e).unwrap(), fixture_pair("fig6b"));
    let f = restrict(&e, two()).unwrap();
    assert_eq!(f, fixture_set("fig6f"));
    assert_eq!(trace(&f).unwrap(), fixture_pair("fig6c"));
}

#[test]
fn anatomy_of_figure_one() {
    let m = fixture_set("fig1a");
    let t = trace(&m).unwrap();
    assert_eq!(t.d0(), fixture_set("fig1b").points());
    assert_eq!(t.d1(), fixture_set("fig1c").points());
    let only_d0 = BoundaryPair::new(2, 1, t.d0().iter().cloned(), []).unwrap();
    let only_d1 = BoundaryPair::new(2, 1, [], t.d1().iter().cloned()).unwrap();
    assert_eq!(
        redraw("fig1b", Document::Pair(only_d0)),
        fixture("fig1b.board")
    );
    assert_eq!(
        redraw("fig1c", Document::Pair(only_d1)),
        fixture("fig1c.board")
    );
}

#[test]
fn separation_failures_of_figure_two() {
    for name in ["fig2a", "fig2b", "fig2c"] {
        let report = validate(&fixture_pair(name));
        assert_eq!(report.failed(), vec![Axiom::Separation], "{name}\n{report}");
    }
}

#[test]
fn coarse_cover_of_figure_three() {
    let fine = fixture_set("fig3a");
    let coarse = fixture_set("fig3c");
    assert!(is_voronoi_cover(&fine, &coarse).unwrap());
    assert_eq!(restrict(&fine, two()).unwrap(), coarse);
}
