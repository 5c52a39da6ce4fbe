//! Restriction and interpolation computed directly on boundary pairs.
//!
//! `lift_restrict` maps the boundary pair of a fine set `M` to the boundary
//! pair of `restrict(M)`, and `lift_interpolate` maps the boundary pair of a
//! coarse set to that of its interpolation. Neither reconstructs the sets:
//! all work is local to the input boundary points.

use std::collections::BTreeSet;

use rustc_hash::FxHashSet as HashSet;

use crate::error::{Error, Result};
use crate::geometry::{for_each_ball_point, moore_offsets, offsets_by_norm, Point};
use crate::pairs::{validate, BoundaryPair};
use crate::transfer::GridRatio;

fn check_pair(pair: &BoundaryPair, spacing: i64) -> Result<()> {
    if pair.spacing() != spacing {
        return Err(Error::SpacingMismatch {
            expected: spacing,
            found: pair.spacing(),
        });
    }
    let report = validate(pair);
    if !report.is_valid() {
        return Err(Error::InvalidPair(Box::new(report)));
    }
    Ok(())
}

/// The boundary pair of `restrict(M)` from the boundary pair of a fine set
/// `M`.
pub fn lift_restrict(pair: &BoundaryPair, ratio: GridRatio) -> Result<BoundaryPair> {
    check_pair(pair, 1)?;
    Ok(lift_restrict_trusted(pair, ratio))
}

/// [`lift_restrict`] without validating the input; the caller guarantees a
/// valid fine pair.
pub fn lift_restrict_trusted(pair: &BoundaryPair, ratio: GridRatio) -> BoundaryPair {
    let (h0, h1) = coarse_candidates(pair, ratio);
    let n = ratio.get();
    let offsets = moore_offsets(pair.dim(), n);
    let touches =
        |x: &Point, other: &HashSet<Point>| offsets.iter().any(|o| other.contains(&(x + o)));
    let d1 = h1.iter().filter(|x| touches(x, &h0)).cloned().collect();
    let d0 = h0.iter().filter(|x| touches(x, &h1)).cloned().collect();
    BoundaryPair::from_parts(pair.dim(), n, d0, d1)
}

/// The intermediate sets of the restriction: `H0` holds the coarse points
/// within half a coarse step of `D0`; `H1` holds the remaining coarse points
/// within one and a half coarse steps of `D0` that are at least as close to
/// `D1` as to `D0`. They satisfy `∂⁰R(M) ⊆ H0 ⊆ R(M)` and
/// `∂¹R(M) ⊆ H1 ⊆ R(M)^c`.
#[doc(hidden)]
pub fn lift_restrict_intermediates(
    pair: &BoundaryPair,
    ratio: GridRatio,
) -> (BTreeSet<Point>, BTreeSet<Point>) {
    let (h0, h1) = coarse_candidates(pair, ratio);
    (h0.into_iter().collect(), h1.into_iter().collect())
}

fn coarse_candidates(pair: &BoundaryPair, ratio: GridRatio) -> (HashSet<Point>, HashSet<Point>) {
    let n = ratio.get();
    let half = ratio.half_step_doubled();
    let reach = 3 * half;
    let fine0: HashSet<&Point> = pair.d0().iter().collect();
    let fine1: HashSet<&Point> = pair.d1().iter().collect();

    let mut loop_domain = HashSet::default();
    for x in pair.d0() {
        for_each_ball_point(x, reach, n, |c| {
            loop_domain.insert(c.clone());
        });
    }

    // Every loop point is within 3n/2 of D0, so both distances needed below
    // are found in a box of that radius.
    let radius = (3 * n) / 2;
    let offsets = offsets_by_norm(pair.dim(), radius, 1);
    let mut h0 = HashSet::default();
    let mut h1 = HashSet::default();
    for c in loop_domain {
        let mut to_d0 = None;
        let mut to_d1 = None;
        for (norm, o) in &offsets {
            if to_d0.is_some() && (to_d1.is_some() || to_d0 < Some(*norm)) {
                break;
            }
            let q = &c + o;
            if to_d0.is_none() && fine0.contains(&q) {
                to_d0 = Some(*norm);
            }
            if to_d1.is_none() && fine1.contains(&q) {
                to_d1 = Some(*norm);
            }
        }
        let d0 = to_d0.expect("loop domain lies within reach of D0");
        if 2 * d0 <= half {
            h0.insert(c);
        } else if to_d1.is_some_and(|d1| d1 <= d0) {
            h1.insert(c);
        }
    }
    (h0, h1)
}

/// The boundary pair of `interpolate(M)` from the boundary pair of a coarse
/// set `M`.
pub fn lift_interpolate(pair: &BoundaryPair, ratio: GridRatio) -> Result<BoundaryPair> {
    check_pair(pair, ratio.get())?;
    Ok(lift_interpolate_trusted(pair, ratio))
}

/// [`lift_interpolate`] without validating the input; the caller guarantees
/// a valid coarse pair.
pub fn lift_interpolate_trusted(pair: &BoundaryPair, ratio: GridRatio) -> BoundaryPair {
    let n = ratio.get();
    let half = ratio.half_step_doubled();
    let offsets = moore_offsets(pair.dim(), n);
    let mut d0 = HashSet::default();
    let mut d1 = HashSet::default();
    for z in pair.d1() {
        let near: Vec<Point> = offsets
            .iter()
            .map(|o| z + o)
            .filter(|x| pair.d0().contains(x))
            .collect();
        if near.is_empty() {
            continue;
        }
        // D0 gets the fine points within n/2 of some x in `near` and
        // (n+1)/2 of z. D1 gets those within n/2 of z that are farther than
        // n/2 from all of `near` but within n/2 + 1 of one of them.
        for_each_ball_point(z, half + 1, 1, |y| {
            let closest = near.iter().map(|x| 2 * y.linf(x)).min().unwrap_or(u64::MAX);
            if closest <= half {
                d0.insert(y.clone());
            } else if closest <= half + 2 && 2 * y.linf(z) <= half {
                d1.insert(y.clone());
            }
        });
    }
    BoundaryPair::from_parts(
        pair.dim(),
        1,
        d0.into_iter().collect(),
        d1.into_iter().collect(),
    )
}
