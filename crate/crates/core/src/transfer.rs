//! Restriction and interpolation between a fine grid `Z^m` and a coarse grid
//! `nZ^m`.
//!
//! `restrict` keeps the coarse points within half a coarse step of the set;
//! `interpolate` keeps the fine points within half a coarse step of the set.
//! Both work on finite and cofinite sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{for_each_ball_point, Point};
use crate::gridset::{GridSet, Mode};

/// The integer ratio `n >= 2` between the coarse and the fine grid spacing.
/// The fine spacing is always 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridRatio(i64);

impl GridRatio {
    pub fn new(n: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRatio(n));
        }
        Ok(GridRatio(n))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// Half a coarse step in doubled units.
    pub(crate) fn half_step_doubled(self) -> u64 {
        self.0 as u64
    }
}

fn check_input(m: &GridSet, spacing: i64, what: &str) -> Result<()> {
    if m.spacing() != spacing {
        return Err(Error::SpacingMismatch {
            expected: spacing,
            found: m.spacing(),
        });
    }
    if m.is_empty() {
        return Err(Error::usage(format!(
            "{what} of the empty set is undefined"
        )));
    }
    Ok(())
}

/// `B_{n/2}(M) ∩ nZ^m` for a nonempty fine set `M`.
pub fn restrict(m: &GridSet, ratio: GridRatio) -> Result<GridSet> {
    check_input(m, 1, "restriction")?;
    let n = ratio.get();
    let r = ratio.half_step_doubled();
    let mut points = BTreeSet::new();
    let mut found = Vec::new();
    match m.mode() {
        Mode::Finite => {
            for x in m.points() {
                for_each_ball_point(x, r, n, |c| {
                    found.push(c.clone());
                });
            }
        }
        Mode::Cofinite => {
            // A coarse point drops out only if its whole fine ball is excluded.
            for e in m.points() {
                for_each_ball_point(e, r, n, |c| {
                    if points.contains(c) {
                        return;
                    }
                    let mut all_excluded = true;
                    for_each_ball_point(c, r, 1, |y| {
                        all_excluded &= m.points().contains(y);
                    });
                    if all_excluded {
                        points.insert(c.clone());
                    }
                });
            }
        }
    }
    points.extend(found);
    Ok(GridSet::from_parts(m.dim(), n, m.mode(), points))
}

/// `B_{n/2}(M) ∩ Z^m` for a nonempty coarse set `M`.
pub fn interpolate(m: &GridSet, ratio: GridRatio) -> Result<GridSet> {
    let n = ratio.get();
    check_input(m, n, "interpolation")?;
    let r = ratio.half_step_doubled();
    let mut points = BTreeSet::new();
    let mut found = Vec::new();
    match m.mode() {
        Mode::Finite => {
            for x in m.points() {
                for_each_ball_point(x, r, 1, |y| {
                    found.push(y.clone());
                });
            }
        }
        Mode::Cofinite => {
            // A fine point drops out only if no member lies within half a step.
            for e in m.points() {
                for_each_ball_point(e, r, 1, |y| {
                    if points.contains(y) {
                        return;
                    }
                    let mut all_excluded = true;
                    for_each_ball_point(y, r, n, |c| {
                        all_excluded &= m.points().contains(c);
                    });
                    if all_excluded {
                        points.insert(y.clone());
                    }
                });
            }
        }
    }
    points.extend(found);
    Ok(GridSet::from_parts(m.dim(), 1, m.mode(), points))
}

/// Whether the union of closed boxes of half-width `s'/2` around the points
/// of `cover` contains the union of boxes of half-width `s/2` around `m`.
///
/// All box faces lie on the half-integer lattice, so the uncovered part of
/// `m`'s boxes, if any, contains the centre of a cell of that lattice. The
/// centres have quarter-integer coordinates; the check runs on coordinates
/// scaled by 4.
pub fn is_voronoi_cover(m: &GridSet, cover: &GridSet) -> Result<bool> {
    for set in [m, cover] {
        if !set.is_finite() || set.is_empty() {
            return Err(Error::usage(
                "voronoi cover check needs nonempty finite sets",
            ));
        }
    }
    if m.dim() != cover.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: cover.dim(),
        });
    }
    let (s, sc) = (m.spacing(), cover.spacing());
    let cover_scaled: Vec<Point> = cover.points().iter().map(|p| p.scaled(4)).collect();
    let reach = 2 * sc as u64;
    for x in m.points() {
        let centre = x.scaled(4);
        let ranges: Vec<(i64, i64)> = centre
            .coords()
            .iter()
            .map(|&c| (c - 2 * s + 1, c + 2 * s - 1))
            .collect();
        let mut covered = true;
        for_each_odd_point(&ranges, |q| {
            if covered && !cover_scaled.iter().any(|y| y.linf(q) <= reach) {
                covered = false;
            }
        });
        if !covered {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Visits the points with odd coordinates in the per-axis ranges, whose
/// endpoints must be odd.
fn for_each_odd_point(ranges: &[(i64, i64)], mut f: impl FnMut(&Point)) {
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        f(&Point::new(&cur));
        let mut axis = ranges.len();
        loop {
            if axis == 0 {
                return;
            }
            axis -= 1;
            if cur[axis] + 2 <= ranges[axis].1 {
                cur[axis] += 2;
                break;
            }
            cur[axis] = ranges[axis].0;
        }
    }
}
