//! Exact integer geometry on the lattice `Z^m`.
//!
//! Every coordinate is measured in units of the finest grid step, so a grid
//! of spacing `s` is the sublattice `sZ^m`. Radii that may be half-integers
//! (half a coarse step for odd ratios) are passed in doubled units: a ball of
//! radius `r / 2` is described by `radius_doubled = r`, and membership is the
//! integer comparison `2 * dist <= r`.

use std::fmt;
use std::ops::{Add, Index, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Coords = SmallVec<[i64; 4]>;

/// A point of `Z^m` in fine-grid units.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Coords);

impl Point {
    pub fn new(coords: &[i64]) -> Self {
        Point(Coords::from_slice(coords))
    }

    pub fn origin(dim: usize) -> Self {
        Point(smallvec::smallvec![0; dim])
    }

    pub(crate) fn from_coords(coords: Coords) -> Self {
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Chebyshev distance. Both points must have the same dimension.
    #[inline]
    pub fn linf(&self, other: &Point) -> u64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.abs_diff(*b))
            .max()
            .unwrap_or(0)
    }

    pub fn is_on_grid(&self, spacing: i64) -> bool {
        self.0.iter().all(|c| c.rem_euclid(spacing) == 0)
    }

    pub fn scaled(&self, factor: i64) -> Point {
        Point(self.0.iter().map(|c| c * factor).collect())
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_on_grid(&self, spacing: i64) -> Result<()> {
        if !self.is_on_grid(spacing) {
            return Err(Error::OffGrid {
                point: self.to_string(),
                spacing,
            });
        }
        Ok(())
    }
}

impl Index<usize> for Point {
    type Output = i64;

    fn index(&self, index: usize) -> &i64 {
        &self.0[index]
    }
}

impl Add<&Point> for &Point {
    type Output = Point;

    fn add(self, rhs: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;

    fn sub(self, rhs: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point(Coords::from_vec(v))
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(v: [i64; N]) -> Self {
        Point::new(&v)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A distance in fine-grid units, extended by infinity (the distance to the
/// empty set).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u64),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<u64> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Dist::Infinite)
    }

    /// `2 * self <= radius_doubled`.
    pub fn within_doubled(self, radius_doubled: u64) -> bool {
        match self {
            Dist::Finite(d) => 2 * d <= radius_doubled,
            Dist::Infinite => false,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => write!(f, "inf"),
        }
    }
}

/// Chebyshev distance `max_j |u_j - v_j|`.
pub fn chebyshev(u: &Point, v: &Point) -> Result<u64> {
    v.check_dim(u.dim())?;
    Ok(u.linf(v))
}

/// The rounding function `rd(p / q)`: round down when the fractional part is
/// below one half, up otherwise. Evaluated exactly.
pub fn rd(p: i64, q: i64) -> Result<i64> {
    if q <= 0 {
        return Err(Error::usage(format!(
            "rd: denominator must be positive, got {q}"
        )));
    }
    Ok(rd_unchecked(p, q))
}

#[inline]
pub(crate) fn rd_unchecked(p: i64, q: i64) -> i64 {
    let floor = p.div_euclid(q);
    if 2 * p.rem_euclid(q) < q {
        floor
    } else {
        floor + 1
    }
}

#[inline]
pub(crate) fn floor_div(p: i64, q: i64) -> i64 {
    p.div_euclid(q)
}

#[inline]
pub(crate) fn ceil_div(p: i64, q: i64) -> i64 {
    -(-p).div_euclid(q)
}

pub(crate) fn check_spacing(spacing: i64) -> Result<()> {
    if spacing < 1 {
        return Err(Error::InvalidSpacing(spacing));
    }
    Ok(())
}

/// Grid-index ranges `[lo, hi]` per axis of the spacing-grid points inside a
/// ball of doubled radius `radius_doubled` around `center`.
pub(crate) fn ball_index_ranges(center: &Point, radius_doubled: u64, spacing: i64) -> Coords2 {
    let r = radius_doubled as i64;
    center
        .coords()
        .iter()
        .map(|&c| {
            (
                ceil_div(2 * c - r, 2 * spacing),
                floor_div(2 * c + r, 2 * spacing),
            )
        })
        .collect()
}

pub(crate) type Coords2 = SmallVec<[(i64, i64); 4]>;

/// Calls `f` for every grid point with grid indices in the per-axis inclusive
/// ranges, in lexicographic order. Empty ranges produce no calls.
pub(crate) fn for_each_in_ranges(ranges: &[(i64, i64)], spacing: i64, mut f: impl FnMut(&Point)) {
    if ranges.iter().any(|(lo, hi)| lo > hi) {
        return;
    }
    let mut idx: Coords = ranges.iter().map(|r| r.0).collect();
    let mut p = Point(idx.iter().map(|i| i * spacing).collect());
    loop {
        f(&p);
        let mut axis = ranges.len();
        loop {
            if axis == 0 {
                return;
            }
            axis -= 1;
            if idx[axis] < ranges[axis].1 {
                idx[axis] += 1;
                p.0[axis] = idx[axis] * spacing;
                break;
            }
            idx[axis] = ranges[axis].0;
            p.0[axis] = idx[axis] * spacing;
        }
    }
}

/// Calls `f` for every point of `B_{radius_doubled/2}(center) ∩ spacing·Z^m`.
pub(crate) fn for_each_ball_point(
    center: &Point,
    radius_doubled: u64,
    spacing: i64,
    f: impl FnMut(&Point),
) {
    let ranges = ball_index_ranges(center, radius_doubled, spacing);
    for_each_in_ranges(&ranges, spacing, f);
}

/// All points of the spacing-grid whose Chebyshev distance to `center` is at
/// most `radius_doubled / 2`, in lexicographic order.
pub fn ball_points(center: &Point, radius_doubled: u64, spacing: i64) -> Result<Vec<Point>> {
    check_spacing(spacing)?;
    if center.dim() == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut out = Vec::new();
    for_each_ball_point(center, radius_doubled, spacing, |p| out.push(p.clone()));
    Ok(out)
}

/// The `3^m - 1` nonzero offsets with entries in `{-step, 0, step}`.
pub(crate) fn moore_offsets(dim: usize, step: i64) -> Vec<Point> {
    let ranges: Coords2 = (0..dim).map(|_| (-1, 1)).collect();
    let mut out = Vec::with_capacity(3usize.pow(dim as u32) - 1);
    for_each_in_ranges(&ranges, step, |p| {
        if p.0.iter().any(|&c| c != 0) {
            out.push(p.clone());
        }
    });
    out
}

/// All offsets of the box `[-radius, radius]^m` (in grid steps, scaled by
/// `step`), sorted by Chebyshev norm, paired with that norm in grid steps.
pub(crate) fn offsets_by_norm(dim: usize, radius: i64, step: i64) -> Vec<(u64, Point)> {
    let ranges: Coords2 = (0..dim).map(|_| (-radius, radius)).collect();
    let mut out = Vec::new();
    for_each_in_ranges(&ranges, 1, |p| {
        let norm = p.0.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
        out.push((norm, p.scaled(step)));
    });
    out.sort_by_key(|(n, _)| *n);
    out
}
