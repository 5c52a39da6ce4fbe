//! Brute-force reference implementations and seeded instance generators.
//!
//! Nothing here is fast. The checks enumerate paths, subsets or window points
//! directly from the definitions and do not call into the algorithms they
//! are used to judge, except [`lifted_via_full`], which is the definitional
//! composition `trace ∘ operator ∘ reconstruct`.
//!
//! Random sets come from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)` on stream `attempt`, where `attempt` starts at 0 and
//! is incremented whenever a draw comes out empty. Window grid points are
//! visited in lexicographic order (first coordinate slowest) and each is
//! kept when `rng.random_range(0..den) < num`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::gridset::{GridSet, Mode, Window};
use crate::layers::trace;
use crate::pairs::{reconstruct, BoundaryPair};
use crate::transfer::{interpolate, restrict, GridRatio};

/// A probability `num / den` in `(0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    num: u32,
    den: u32,
}

impl Density {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num == 0 || num > den {
            return Err(Error::usage(format!(
                "density must lie in (0, 1], got {num}/{den}"
            )));
        }
        Ok(Density { num, den })
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Density {
    type Err = Error;

    /// Accepts `p/q` or a decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::usage(format!("invalid density {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            return Density::new(
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            );
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u32.pow(frac.len() as u32);
        let int: u32 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac: u32 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        Density::new(int.checked_mul(den).ok_or_else(bad)? + frac, den)
    }
}

/// A nonempty finite random subset of the window's grid points.
pub fn random_set(window: &Window, density: Density, seed: u64, spacing: i64) -> Result<GridSet> {
    let candidates = window.grid_points(spacing);
    if candidates.is_empty() {
        return Err(Error::usage("window contains no grid points"));
    }
    for attempt in 0u64.. {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt);
        let picked: Vec<Point> = candidates
            .iter()
            .filter(|_| rng.random_range(0..density.den) < density.num)
            .cloned()
            .collect();
        if !picked.is_empty() {
            return GridSet::finite(window.dim(), spacing, picked);
        }
    }
    unreachable!()
}

/// A boundary pair drawn as the trace of a random set, optionally mutated by
/// deleting, inserting or moving one point (which usually, but not always,
/// breaks an axiom).
pub fn random_pair(
    window: &Window,
    density: Density,
    seed: u64,
    spacing: i64,
    mutate: bool,
) -> Result<BoundaryPair> {
    let m = random_set(window, density, seed, spacing)?;
    let pair = trace(&m)?;
    if !mutate {
        return Ok(pair);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let (mut d0, mut d1) = pair.into_parts();
    let region = window.inflate(spacing).grid_points(spacing);
    let pick = |rng: &mut ChaCha8Rng, set: &BTreeSet<Point>| -> Option<Point> {
        (!set.is_empty()).then(|| {
            set.iter()
                .nth(rng.random_range(0..set.len()))
                .cloned()
                .unwrap()
        })
    };
    match rng.random_range(0..4u8) {
        0 => {
            if let Some(p) = pick(&mut rng, &d0) {
                d0.remove(&p);
            }
        }
        1 => {
            if let Some(p) = pick(&mut rng, &d1) {
                d1.remove(&p);
            }
        }
        2 => {
            let p = region[rng.random_range(0..region.len())].clone();
            if rng.random_bool(0.5) {
                d0.insert(p);
            } else {
                d1.insert(p);
            }
        }
        _ => {
            if let Some(p) = pick(&mut rng, &d1) {
                d1.remove(&p);
                d0.insert(p);
            }
        }
    }
    BoundaryPair::new(window.dim(), spacing, d0, d1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Restrict,
    Interpolate,
}

/// The lifted operators by definition: reconstruct the set, transfer it,
/// take the trace.
pub fn lifted_via_full(
    pair: &BoundaryPair,
    ratio: GridRatio,
    direction: Direction,
) -> Result<BoundaryPair> {
    let expected = match direction {
        Direction::Restrict => 1,
        Direction::Interpolate => ratio.get(),
    };
    if pair.spacing() != expected {
        return Err(Error::SpacingMismatch {
            expected,
            found: pair.spacing(),
        });
    }
    let m = reconstruct(pair)?;
    let image = match direction {
        Direction::Restrict => restrict(&m, ratio)?,
        Direction::Interpolate => interpolate(&m, ratio)?,
    };
    trace(&image)
}

fn unit_offsets(dim: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1, 0, 1].into_iter().map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&d| d != 0));
    out
}

fn shift(p: &Point, offset: &[i64], step: i64) -> Point {
    Point::from(
        p.coords()
            .iter()
            .zip(offset)
            .map(|(c, d)| c + d * step)
            .collect::<Vec<_>>(),
    )
}

/// Largest box, in grid cells, that [`axiom11_bruteforce`] will search.
pub const PATH_BUDGET_CELLS: usize = 144;
/// Longest path [`axiom11_bruteforce`] will enumerate.
pub const PATH_BUDGET_LEN: usize = 8;

/// Enumerates every simple path of length at most `max_len` that starts in
/// `D0`, ends in `D1`, stays inside the bounding box inflated by one step and
/// has all interior nodes outside `D0 ∪ D1`. Returns `true` when no such path
/// of length greater than one exists.
pub fn axiom11_bruteforce(pair: &BoundaryPair, max_len: usize) -> Result<bool> {
    if max_len > PATH_BUDGET_LEN {
        return Err(Error::Budget(format!(
            "max_len {max_len} exceeds {PATH_BUDGET_LEN}"
        )));
    }
    let Some(bbox) = pair.bounding_window() else {
        return Ok(true);
    };
    let s = pair.spacing();
    let region = bbox.inflate(s);
    let cells: usize = (0..pair.dim())
        .map(|j| ((region.upper()[j] - region.lower()[j]) / s + 1) as usize)
        .product();
    if cells > PATH_BUDGET_CELLS {
        return Err(Error::Budget(format!(
            "{cells} cells exceed {PATH_BUDGET_CELLS}"
        )));
    }
    let offsets = unit_offsets(pair.dim());
    let blocked: HashSet<&Point> = pair.d0().iter().chain(pair.d1()).collect();

    struct Search<'a> {
        offsets: &'a [Vec<i64>],
        region: &'a Window,
        spacing: i64,
        d1: &'a BTreeSet<Point>,
        blocked: &'a HashSet<&'a Point>,
        max_len: usize,
        visited: HashSet<Point>,
    }

    impl Search<'_> {
        /// `node` is the last node of a path with `len` steps whose interior
        /// is free.
        fn violates(&mut self, node: &Point, len: usize) -> bool {
            if len == self.max_len {
                return false;
            }
            for o in self.offsets {
                let next = shift(node, o, self.spacing);
                if !self.region.contains(&next) || self.visited.contains(&next) {
                    continue;
                }
                if self.d1.contains(&next) {
                    if len + 1 >= 2 {
                        return true;
                    }
                    continue;
                }
                if self.blocked.contains(&next) {
                    continue;
                }
                self.visited.insert(next.clone());
                let found = self.violates(&next, len + 1);
                self.visited.remove(&next);
                if found {
                    return true;
                }
            }
            false
        }
    }

    let mut search = Search {
        offsets: &offsets,
        region: &region,
        spacing: s,
        d1: pair.d1(),
        blocked: &blocked,
        max_len,
        visited: HashSet::new(),
    };
    for x in pair.d0() {
        search.visited.clear();
        search.visited.insert(x.clone());
        if search.violates(x, 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn naive_semi(a: &BTreeSet<Point>, b: &BTreeSet<Point>) -> u64 {
    a.iter()
        .map(|x| b.iter().map(|y| x.linf(y)).min().unwrap_or(u64::MAX))
        .max()
        .unwrap_or(0)
}

/// Hausdorff distance of two nonempty finite point sets by double loops.
pub fn naive_hausdorff(a: &BTreeSet<Point>, b: &BTreeSet<Point>) -> u64 {
    naive_semi(a, b).max(naive_semi(b, a))
}

fn coarse_points_in(window: &Window, n: i64) -> Vec<Point> {
    let mut out = vec![vec![]];
    for j in 0..window.dim() {
        let lo = window.lower()[j].div_euclid(n) + i64::from(window.lower()[j].rem_euclid(n) != 0);
        let hi = window.upper()[j].div_euclid(n);
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |k| {
                    let mut w = v.clone();
                    w.push(k * n);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Point::from).collect()
}

/// Largest candidate count for the subset enumerations.
pub const SUBSET_BUDGET: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestApproximations {
    /// Minimal Hausdorff distance, in fine units.
    pub distance: u64,
    pub minimizers: Vec<BTreeSet<Point>>,
}

/// All nonempty subsets of the coarse points in `window` with minimal
/// Hausdorff distance to the finite fine set `m`.
pub fn best_approx_bruteforce(
    m: &GridSet,
    ratio: GridRatio,
    window: &Window,
) -> Result<BestApproximations> {
    if !m.is_finite() || m.is_empty() || m.spacing() != 1 {
        return Err(Error::usage(
            "best approximation needs a nonempty finite fine set",
        ));
    }
    let candidates = coarse_points_in(window, ratio.get());
    if candidates.len() > SUBSET_BUDGET {
        return Err(Error::Budget(format!(
            "{} candidates exceed {SUBSET_BUDGET}",
            candidates.len()
        )));
    }
    let mut best = BestApproximations {
        distance: u64::MAX,
        minimizers: Vec::new(),
    };
    for subset in subsets(&candidates) {
        let d = naive_hausdorff(&subset, m.points());
        if d < best.distance {
            best.distance = d;
            best.minimizers.clear();
        }
        if d == best.distance {
            best.minimizers.push(subset);
        }
    }
    Ok(best)
}

/// Every nonempty subset of the candidates, for at most [`SUBSET_BUDGET`]
/// of them.
pub fn subsets(candidates: &[Point]) -> impl Iterator<Item = BTreeSet<Point>> + '_ {
    assert!(candidates.len() <= SUBSET_BUDGET);
    (1u32..(1 << candidates.len())).map(move |mask| {
        candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| p.clone())
            .collect()
    })
}

/// Every grid point of the given spacing in the window.
pub fn window_points(window: &Window, spacing: i64) -> Vec<Point> {
    coarse_points_in(window, spacing)
}

/// Voronoi-cover check through the arrangement of all box faces: every box
/// of `m` is cut at every face coordinate of the cover's boxes, and the
/// midpoint of each resulting cell must be covered. Coordinates are doubled
/// (faces become integers), then doubled again for midpoints.
pub fn voronoi_cover_bruteforce(m: &GridSet, cover: &GridSet) -> bool {
    let (s, sc) = (m.spacing(), cover.spacing());
    let dim = m.dim();
    let cover_boxes: Vec<Vec<(i64, i64)>> = cover
        .points()
        .iter()
        .map(|y| {
            y.coords()
                .iter()
                .map(|&c| (2 * c - sc, 2 * c + sc))
                .collect()
        })
        .collect();
    for x in m.points() {
        let own: Vec<(i64, i64)> = x.coords().iter().map(|&c| (2 * c - s, 2 * c + s)).collect();
        let cuts: Vec<Vec<i64>> = (0..dim)
            .map(|j| {
                let mut v = vec![own[j].0, own[j].1];
                for b in &cover_boxes {
                    for f in [b[j].0, b[j].1] {
                        if own[j].0 < f && f < own[j].1 {
                            v.push(f);
                        }
                    }
                }
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        // Midpoints of consecutive cuts, scaled by 2 once more.
        let mids: Vec<Vec<i64>> = cuts
            .iter()
            .map(|v| v.windows(2).map(|w| w[0] + w[1]).collect())
            .collect();
        let total: usize = mids.iter().map(Vec::len).product();
        for code in 0..total {
            let mut rest = code;
            let cell: Vec<i64> = mids
                .iter()
                .map(|v| {
                    let q = v[rest % v.len()];
                    rest /= v.len();
                    q
                })
                .collect();
            let covered = cover_boxes
                .iter()
                .any(|b| (0..dim).all(|j| 2 * b[j].0 <= cell[j] && cell[j] <= 2 * b[j].1));
            if !covered {
                return false;
            }
        }
    }
    true
}

/// Restriction of a finite fine set by scanning coarse points.
pub fn restrict_bruteforce(m: &GridSet, ratio: GridRatio) -> BTreeSet<Point> {
    let n = ratio.get();
    let window = Window::bounding(m.points()).expect("nonempty").inflate(n);
    coarse_points_in(&window, n)
        .into_iter()
        .filter(|c| m.points().iter().any(|x| 2 * c.linf(x) <= n as u64))
        .collect()
}

/// Interpolation of a finite coarse set by scanning fine points.
pub fn interpolate_bruteforce(m: &GridSet, ratio: GridRatio) -> BTreeSet<Point> {
    let n = ratio.get();
    let window = Window::bounding(m.points()).expect("nonempty").inflate(n);
    coarse_points_in(&window, 1)
        .into_iter()
        .filter(|y| m.points().iter().any(|x| 2 * y.linf(x) <= n as u64))
        .collect()
}

/// `B_n(M) ∩ nZ^m`: the coarse Moore dilation.
pub fn coarse_dilation(m: &GridSet, ratio: GridRatio) -> BTreeSet<Point> {
    let n = ratio.get();
    let offsets = unit_offsets(m.dim());
    let mut out = m.points().clone();
    for x in m.points() {
        for o in &offsets {
            out.insert(shift(x, o, n));
        }
    }
    out
}

/// Layer `k` of `m`, restricted to `window`, evaluated straight from the
/// definition: the inner boundary is found by neighbor inspection and every
/// layer by its distance to that boundary.
pub fn layer_by_definition(m: &GridSet, k: i64, window: &Window) -> BTreeSet<Point> {
    let s = m.spacing();
    let offsets = unit_offsets(m.dim());
    let contains = |p: &Point| m.points().contains(p) == (m.mode() == Mode::Finite);
    // The inner boundary lies within one step of the stored points.
    let reach = Window::bounding(m.points()).map(|w| w.inflate(s));
    let boundary0: Vec<Point> = match &reach {
        None => Vec::new(),
        Some(w) => coarse_points_in(w, s)
            .into_iter()
            .filter(|x| contains(x) && offsets.iter().any(|o| !contains(&shift(x, o, s))))
            .collect(),
    };
    if k == 0 {
        return boundary0
            .into_iter()
            .filter(|x| window.contains(x))
            .collect();
    }
    coarse_points_in(window, s)
        .into_iter()
        .filter(|x| contains(x) == (k < 0))
        .filter(|x| boundary0.iter().map(|b| b.linf(x)).min() == Some(k.unsigned_abs() * s as u64))
        .collect()
}
