//! Boundary layers of grid sets and the trace map `M -> (∂⁰M, ∂¹M)`.
//!
//! Layer `0` is the inner boundary (members with a Moore neighbor outside the
//! set), layer `1` the first outer layer (non-members with a Moore neighbor
//! inside). Positive layers `k` hold the non-members at distance `k` steps
//! from the set, layers `-k` the members at distance `k + 1` steps from the
//! complement.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{moore_offsets, Point};
use crate::gridset::{GridSet, Mode, Window};
use crate::lattice::GridBox;
use crate::pairs::BoundaryPair;

/// `{x ∈ a : x ∉ b, some Moore neighbor of x lies in b}`, for two sets on
/// the same grid.
fn touching(a: &GridSet, b: &GridSet) -> BTreeSet<Point> {
    let offsets = moore_offsets(a.dim(), a.spacing());
    let mut out = BTreeSet::new();
    let mut consider = |x: &Point| {
        if a.contains(x) && !b.contains(x) && offsets.iter().any(|o| b.contains(&(x + o))) {
            out.insert(x.clone());
        }
    };
    if a.is_finite() {
        a.points().iter().for_each(&mut consider);
    } else if b.is_finite() {
        for y in b.points() {
            for o in &offsets {
                consider(&(y + o));
            }
        }
    } else {
        b.points().iter().for_each(&mut consider);
    }
    out
}

/// Inner and outer boundary of a finite point set, on a dense bitmap over
/// its bounding box. `None` when the box is too sparse to be worth it.
fn dense_boundaries(
    dim: usize,
    s: i64,
    points: &BTreeSet<Point>,
) -> Option<(BTreeSet<Point>, BTreeSet<Point>)> {
    let window = Window::bounding(points)?.inflate(s);
    let grid = GridBox::new(&window, s);
    if grid.len() > 64 * points.len() + 4096 {
        return None;
    }
    debug_assert_eq!(grid.dim(), dim);
    let mut inside = vec![false; grid.len()];
    for p in points {
        inside[grid.index_of(p)?] = true;
    }
    let mut inner = Vec::new();
    let mut outer = vec![false; grid.len()];
    // Members sit at least one step inside the box, so no bounds checks.
    let steps = grid.moore_index_offsets();
    for i in (0..grid.len()).filter(|&i| inside[i]) {
        let mut exposed = false;
        for &d in &steps {
            let j = i.wrapping_add_signed(d);
            if !inside[j] {
                exposed = true;
                outer[j] = true;
            }
        }
        if exposed {
            inner.push(i);
        }
    }
    let outer = (0..grid.len())
        .filter(|&i| outer[i])
        .map(|i| grid.point_of(i));
    Some((
        inner.into_iter().map(|i| grid.point_of(i)).collect(),
        outer.collect(),
    ))
}

fn boundary(m: &GridSet, outer: bool) -> GridSet {
    let (dim, s) = (m.dim(), m.spacing());
    // For a cofinite set the stored points are the complement, whose inner
    // boundary is the outer boundary of the set and vice versa.
    let flip = outer != m.is_finite();
    let points = match dense_boundaries(dim, s, m.points()) {
        Some((inner_pts, outer_pts)) => {
            if flip {
                inner_pts
            } else {
                outer_pts
            }
        }
        None if outer => touching(&m.complement(), m),
        None => touching(m, &m.complement()),
    };
    GridSet::from_parts(dim, s, Mode::Finite, points)
}

/// Members with at least one Moore neighbor outside the set.
pub fn boundary0(m: &GridSet) -> GridSet {
    boundary(m, false)
}

/// Non-members with at least one Moore neighbor inside the set.
pub fn boundary1(m: &GridSet) -> GridSet {
    boundary(m, true)
}

/// The boundary layer of index `k`, computed by multi-source distance
/// propagation. Empty for every `k` when `m` is empty or the whole grid.
pub fn layer(m: &GridSet, k: i64) -> GridSet {
    let s = m.spacing();
    let empty = GridSet::from_parts(m.dim(), s, Mode::Finite, BTreeSet::new());
    let Some(bbox) = Window::bounding(m.points()) else {
        return empty;
    };
    // Outside this window every layer up to |k| is empty, and clamping onto
    // the window never increases Chebyshev distances, so propagation inside
    // it is exact.
    let window = bbox.inflate((k.abs().max(1) + 1) * s);
    let grid = GridBox::new(&window, s);
    let outward = k >= 1;
    let target_steps = if outward { k } else { 1 - k } as u32;
    let sources = (0..grid.len()).filter(|&i| m.contains(&grid.point_of(i)) == outward);
    let dist = grid.bfs(sources);
    let points = (0..grid.len())
        .filter(|&i| dist[i] == target_steps)
        .map(|i| grid.point_of(i))
        .filter(|p| m.contains(p) != outward)
        .collect();
    GridSet::from_parts(m.dim(), s, Mode::Finite, points)
}

/// `(∂⁰M, ∂¹M)` for a nonempty set.
pub fn trace(m: &GridSet) -> Result<BoundaryPair> {
    if m.is_empty() {
        return Err(Error::usage("the trace of the empty set is undefined"));
    }
    let d0 = boundary0(m).into_points();
    let d1 = boundary1(m).into_points();
    Ok(BoundaryPair::from_parts(m.dim(), m.spacing(), d0, d1))
}

/// Extracts `(∂⁰M, ∂¹M)` from any sandwich `∂⁰M ⊆ h0 ⊆ M`,
/// `∂¹M ⊆ h1 ⊆ M^c`: keeps the points of each set that are exactly one grid
/// step from the other.
pub fn recover_boundaries(h0: &GridSet, h1: &GridSet) -> Result<(GridSet, GridSet)> {
    if h0.dim() != h1.dim() {
        return Err(Error::DimensionMismatch {
            expected: h0.dim(),
            found: h1.dim(),
        });
    }
    if h0.spacing() != h1.spacing() {
        return Err(Error::SpacingMismatch {
            expected: h0.spacing(),
            found: h1.spacing(),
        });
    }
    let (dim, s) = (h0.dim(), h0.spacing());
    Ok((
        GridSet::from_parts(dim, s, Mode::Finite, touching(h0, h1)),
        GridSet::from_parts(dim, s, Mode::Finite, touching(h1, h0)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Point {
        Point::new(c)
    }

    fn block(lo: i64, hi: i64, s: i64) -> GridSet {
        let mut pts = Vec::new();
        for x in lo..=hi {
            for y in lo..=hi {
                pts.push(p(&[x * s, y * s]));
            }
        }
        GridSet::finite(2, s, pts).unwrap()
    }

    fn figure1() -> GridSet {
        let mut pts = Vec::new();
        for x in 2..=9 {
            for y in 2..=6 {
                if !((3..=5).contains(&x) && (3..=5).contains(&y)) {
                    pts.push(p(&[x, y]));
                }
            }
        }
        GridSet::finite(2, 1, pts).unwrap()
    }

    #[test]
    fn singleton_boundaries() {
        let m = GridSet::finite(2, 1, [p(&[0, 0])]).unwrap();
        assert_eq!(boundary0(&m), m);
        let b1 = boundary1(&m);
        assert_eq!(b1.points().len(), 8);
        assert!(!b1.contains(&p(&[0, 0])));
        let m3 = GridSet::finite(3, 2, [p(&[0, 0, 0])]).unwrap();
        assert_eq!(boundary1(&m3).points().len(), 26);
    }

    #[test]
    fn full_and_empty_have_no_boundary() {
        for m in [GridSet::full(2, 1).unwrap(), GridSet::empty(2, 1).unwrap()] {
            assert!(boundary0(&m).is_empty());
            assert!(boundary1(&m).is_empty());
            for k in -3..=3 {
                assert!(layer(&m, k).is_empty());
            }
        }
        let t = trace(&GridSet::full(2, 1).unwrap()).unwrap();
        assert!(t.is_empty_pair());
        assert!(trace(&GridSet::empty(2, 1).unwrap()).is_err());
    }

    #[test]
    fn figure1_anatomy() {
        let m = figure1();
        let b0 = boundary0(&m);
        let want0: BTreeSet<Point> = m
            .points()
            .iter()
            .filter(|q| !((7..=8).contains(&q[0]) && (3..=5).contains(&q[1])))
            .cloned()
            .collect();
        assert_eq!(b0.points(), &want0);
        let mut want1 = BTreeSet::new();
        for x in 1..=10 {
            for y in 1..=7 {
                let outer = x == 1 || x == 10 || y == 1 || y == 7;
                let hole = (3..=5).contains(&x) && (3..=5).contains(&y) && (x, y) != (4, 4);
                if outer || hole {
                    want1.insert(p(&[x, y]));
                }
            }
        }
        assert_eq!(boundary1(&m).points(), &want1);
    }

    #[test]
    fn inner_layers_of_a_block() {
        let s = 3;
        let m = block(0, 4, s);
        let ring: BTreeSet<Point> = block(1, 3, s)
            .points()
            .iter()
            .filter(|q| **q != p(&[2 * s, 2 * s]))
            .cloned()
            .collect();
        assert_eq!(layer(&m, -1).points(), &ring);
        assert_eq!(layer(&m, -2).points(), &[p(&[2 * s, 2 * s])].into());
        assert!(layer(&m, -3).is_empty());
        assert_eq!(layer(&m, 0), boundary0(&m));
        assert_eq!(layer(&m, 1), boundary1(&m));
        assert_eq!(layer(&m, 2).points().len(), 9 * 9 - 7 * 7);
    }

    #[test]
    fn cofinite_layers() {
        let hole = GridSet::cofinite(2, 1, [p(&[0, 0])]).unwrap();
        assert_eq!(boundary1(&hole).points(), &[p(&[0, 0])].into());
        assert_eq!(boundary0(&hole).points().len(), 8);
        assert_eq!(layer(&hole, -1).points().len(), 16);
        assert!(layer(&hole, 2).is_empty());
    }

    #[test]
    fn recover_from_sandwich() {
        let m = figure1();
        let t = trace(&m).unwrap();
        let (d0, d1) = recover_boundaries(&boundary0(&m), &boundary1(&m)).unwrap();
        assert_eq!(d0.points(), t.d0());
        assert_eq!(d1.points(), t.d1());
        let (e0, e1) = recover_boundaries(
            &GridSet::full(2, 1).unwrap(),
            &GridSet::empty(2, 1).unwrap(),
        )
        .unwrap();
        assert!(e0.is_empty() && e1.is_empty());
    }
}
