//! Subsets of a grid `sZ^m`, stored as finite or cofinite point sets.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{check_spacing, for_each_ball_point, moore_offsets, Dist, Point};
use crate::lattice::{GridBox, UNREACHED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `points` are the members.
    Finite,
    /// `points` are the grid points excluded from the set.
    Cofinite,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Finite => "finite",
            Mode::Cofinite => "cofinite",
        })
    }
}

/// A subset of the grid of the given spacing that is either finite or has a
/// finite complement in the grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridSet {
    dim: usize,
    spacing: i64,
    mode: Mode,
    points: BTreeSet<Point>,
}

pub(crate) fn check_points<'a>(
    dim: usize,
    spacing: i64,
    points: impl IntoIterator<Item = &'a Point>,
) -> Result<()> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    check_spacing(spacing)?;
    for p in points {
        p.check_dim(dim)?;
        p.check_on_grid(spacing)?;
    }
    Ok(())
}

impl GridSet {
    pub fn new(
        dim: usize,
        spacing: i64,
        mode: Mode,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<Self> {
        let points: BTreeSet<Point> = points.into_iter().collect();
        check_points(dim, spacing, &points)?;
        Ok(GridSet {
            dim,
            spacing,
            mode,
            points,
        })
    }

    pub fn finite(
        dim: usize,
        spacing: i64,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<Self> {
        Self::new(dim, spacing, Mode::Finite, points)
    }

    pub fn cofinite(
        dim: usize,
        spacing: i64,
        excluded: impl IntoIterator<Item = Point>,
    ) -> Result<Self> {
        Self::new(dim, spacing, Mode::Cofinite, excluded)
    }

    pub fn empty(dim: usize, spacing: i64) -> Result<Self> {
        Self::finite(dim, spacing, [])
    }

    /// The whole grid `spacing·Z^dim`.
    pub fn full(dim: usize, spacing: i64) -> Result<Self> {
        Self::cofinite(dim, spacing, [])
    }

    pub(crate) fn from_parts(
        dim: usize,
        spacing: i64,
        mode: Mode,
        points: BTreeSet<Point>,
    ) -> Self {
        debug_assert!(check_points(dim, spacing, &points).is_ok());
        GridSet {
            dim,
            spacing,
            mode,
            points,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spacing(&self) -> i64 {
        self.spacing
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Members for finite sets, excluded grid points for cofinite sets.
    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn into_points(self) -> BTreeSet<Point> {
        self.points
    }

    pub fn is_finite(&self) -> bool {
        self.mode == Mode::Finite
    }

    pub fn is_empty(&self) -> bool {
        self.mode == Mode::Finite && self.points.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.mode == Mode::Cofinite && self.points.is_empty()
    }

    /// Membership for a point known to be on the grid.
    #[inline]
    pub fn contains(&self, x: &Point) -> bool {
        self.points.contains(x) == (self.mode == Mode::Finite)
    }

    pub fn member(&self, x: &Point) -> Result<bool> {
        x.check_dim(self.dim)?;
        x.check_on_grid(self.spacing)?;
        Ok(self.contains(x))
    }

    pub fn complement(&self) -> GridSet {
        let mode = match self.mode {
            Mode::Finite => Mode::Cofinite,
            Mode::Cofinite => Mode::Finite,
        };
        GridSet {
            mode,
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &GridSet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.spacing != other.spacing {
            return Err(Error::SpacingMismatch {
                expected: self.spacing,
                found: other.spacing,
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &GridSet) -> Result<GridSet> {
        self.check_compatible(other)?;
        let (mode, points) = match (self.mode, other.mode) {
            (Mode::Finite, Mode::Finite) => (Mode::Finite, &self.points | &other.points),
            (Mode::Cofinite, Mode::Cofinite) => (Mode::Cofinite, &self.points & &other.points),
            (Mode::Cofinite, Mode::Finite) => (Mode::Cofinite, &self.points - &other.points),
            (Mode::Finite, Mode::Cofinite) => (Mode::Cofinite, &other.points - &self.points),
        };
        Ok(GridSet::from_parts(self.dim, self.spacing, mode, points))
    }

    pub fn intersection(&self, other: &GridSet) -> Result<GridSet> {
        Ok(self.complement().union(&other.complement())?.complement())
    }

    pub fn difference(&self, other: &GridSet) -> Result<GridSet> {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &GridSet) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    /// `offset + self`; the offset must lie on the grid.
    pub fn translate(&self, offset: &Point) -> Result<GridSet> {
        offset.check_dim(self.dim)?;
        offset.check_on_grid(self.spacing)?;
        let points = self.points.iter().map(|p| p + offset).collect();
        Ok(GridSet::from_parts(
            self.dim,
            self.spacing,
            self.mode,
            points,
        ))
    }

    /// Connectivity of a nonempty finite set under Moore adjacency at the
    /// set's spacing.
    pub fn is_connected(&self) -> Result<bool> {
        if self.mode == Mode::Cofinite {
            return Err(Error::usage(
                "connectivity of cofinite sets is not supported",
            ));
        }
        let Some(start) = self.points.iter().next() else {
            return Err(Error::usage("connectivity of the empty set is undefined"));
        };
        let offsets = moore_offsets(self.dim, self.spacing);
        let mut seen: HashSet<&Point> = HashSet::with_capacity(self.points.len());
        let mut queue = VecDeque::new();
        seen.insert(start);
        queue.push_back(start.clone());
        while let Some(p) = queue.pop_front() {
            for o in &offsets {
                let q = &p + o;
                if let Some(member) = self.points.get(&q) {
                    if seen.insert(member) {
                        queue.push_back(q);
                    }
                }
            }
        }
        Ok(seen.len() == self.points.len())
    }
}

/// Distance from a point to a grid set; infinite exactly for the empty set.
/// The point need not lie on the set's grid.
pub fn dist_point_set(x: &Point, set: &GridSet) -> Dist {
    match set.mode {
        Mode::Finite => set
            .points
            .iter()
            .map(|p| x.linf(p))
            .min()
            .map_or(Dist::Infinite, Dist::Finite),
        Mode::Cofinite => {
            // Grow a ball until it holds a non-excluded grid point. The first
            // radius that does is the distance.
            let mut t = 0u64;
            loop {
                let mut best: Option<u64> = None;
                for_each_ball_point(x, 2 * t, set.spacing, |p| {
                    if !set.points.contains(p) {
                        let d = x.linf(p);
                        best = Some(best.map_or(d, |b| b.min(d)));
                    }
                });
                if let Some(d) = best {
                    return Dist::Finite(d);
                }
                t += 1;
            }
        }
    }
}

/// The Hausdorff semi-distance `sup_{x in from} inf_{y in to} |x - y|`.
///
/// The empty set has semi-distance zero to everything; everything nonempty
/// has infinite semi-distance to the empty set. Two cofinite arguments must
/// share their spacing.
pub fn hausdorff_semi(from: &GridSet, to: &GridSet) -> Result<Dist> {
    if from.dim != to.dim {
        return Err(Error::DimensionMismatch {
            expected: from.dim,
            found: to.dim,
        });
    }
    if from.is_empty() {
        return Ok(Dist::Finite(0));
    }
    if to.is_empty() {
        return Ok(Dist::Infinite);
    }
    match (from.mode, to.mode) {
        (Mode::Finite, _) => Ok(from
            .points
            .iter()
            .map(|x| dist_point_set(x, to))
            .max()
            .unwrap_or(Dist::Finite(0))),
        // Members of a cofinite set exist arbitrarily far from any finite set.
        (Mode::Cofinite, Mode::Finite) => Ok(Dist::Infinite),
        (Mode::Cofinite, Mode::Cofinite) => {
            if from.spacing != to.spacing {
                return Err(Error::SpacingMismatch {
                    expected: from.spacing,
                    found: to.spacing,
                });
            }
            // Only members of `from` that `to` excludes are at positive distance.
            Ok(to
                .points
                .difference(&from.points)
                .map(|x| dist_point_set(x, to))
                .max()
                .unwrap_or(Dist::Finite(0)))
        }
    }
}

pub fn hausdorff(a: &GridSet, b: &GridSet) -> Result<Dist> {
    Ok(hausdorff_semi(a, b)?.max(hausdorff_semi(b, a)?))
}

/// An inclusive axis-aligned box in fine units.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    lower: Point,
    upper: Point,
}

impl Window {
    pub fn new(lower: Point, upper: Point) -> Result<Self> {
        if lower.dim() == 0 {
            return Err(Error::ZeroDimension);
        }
        upper.check_dim(lower.dim())?;
        if (0..lower.dim()).any(|j| lower[j] > upper[j]) {
            return Err(Error::usage(format!(
                "degenerate window: lower {lower} exceeds upper {upper}"
            )));
        }
        Ok(Window { lower, upper })
    }

    /// The smallest window containing all points, or `None` if there are none.
    pub fn bounding<'a>(points: impl IntoIterator<Item = &'a Point>) -> Option<Window> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut lower = first.clone();
        let mut upper = first.clone();
        for p in it {
            lower = Point::from_coords(
                lower
                    .coords()
                    .iter()
                    .zip(p.coords())
                    .map(|(a, b)| *a.min(b))
                    .collect(),
            );
            upper = Point::from_coords(
                upper
                    .coords()
                    .iter()
                    .zip(p.coords())
                    .map(|(a, b)| *a.max(b))
                    .collect(),
            );
        }
        Some(Window { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn lower(&self) -> &Point {
        &self.lower
    }

    pub fn upper(&self) -> &Point {
        &self.upper
    }

    /// Grows the window by `amount` fine units on every side.
    pub fn inflate(&self, amount: i64) -> Window {
        Window {
            lower: Point::from_coords(self.lower.coords().iter().map(|c| c - amount).collect()),
            upper: Point::from_coords(self.upper.coords().iter().map(|c| c + amount).collect()),
        }
    }

    /// The smallest window containing both.
    pub fn hull(&self, other: &Window) -> Window {
        Window::bounding([&self.lower, &self.upper, &other.lower, &other.upper]).expect("nonempty")
    }

    pub fn contains(&self, p: &Point) -> bool {
        (0..self.dim()).all(|j| self.lower[j] <= p[j] && p[j] <= self.upper[j])
    }

    /// Every point of the spacing-grid inside the window, lexicographically.
    pub fn grid_points(&self, spacing: i64) -> Vec<Point> {
        let b = GridBox::new(self, spacing);
        (0..b.len()).map(|i| b.point_of(i)).collect()
    }
}

/// Which unbounded region a component belongs to. In one dimension the
/// exterior of a bounded set splits into two rays.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unbounded {
    Exterior,
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub unbounded: Option<Unbounded>,
    pub adjacent_d0: bool,
    pub adjacent_d1: bool,
    pub size: usize,
}

/// Connected components of the grid points of a window that avoid two
/// finite sets, with frame-touching components merged into the unbounded
/// region(s).
#[derive(Clone, Debug)]
pub struct ComponentMap {
    grid: GridBox,
    labels: Vec<u32>,
    components: Vec<Component>,
}

impl ComponentMap {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// The component label of a free grid point in the window.
    pub fn label_of(&self, p: &Point) -> Option<usize> {
        let i = self.grid.index_of(p)?;
        let l = self.labels[i];
        (l != UNREACHED).then_some(l as usize)
    }

    /// The window points of one component, lexicographically.
    pub fn points_of(&self, label: usize) -> Vec<Point> {
        (0..self.grid.len())
            .filter(|&i| self.labels[i] == label as u32)
            .map(|i| self.grid.point_of(i))
            .collect()
    }

    pub(crate) fn grid(&self) -> &GridBox {
        &self.grid
    }

    pub(crate) fn labels(&self) -> &[u32] {
        &self.labels
    }
}

/// Labels the components of `window ∩ spacing·Z^m ∖ (d0 ∪ d1)` under Moore
/// adjacency. The window must contain `d0 ∪ d1` inflated by one grid step.
pub fn components_within(
    dim: usize,
    spacing: i64,
    d0: &BTreeSet<Point>,
    d1: &BTreeSet<Point>,
    window: &Window,
) -> Result<ComponentMap> {
    check_points(dim, spacing, d0.iter().chain(d1))?;
    if window.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: window.dim(),
        });
    }
    let inner = window.inflate(-spacing);
    if let Some(p) = d0.iter().chain(d1).find(|p| !inner.contains(p)) {
        return Err(Error::usage(format!(
            "window too small: {p} is within one grid step of the frame"
        )));
    }
    let grid = GridBox::new(window, spacing);
    if grid.len() == 0 {
        return Err(Error::usage("window contains no grid points"));
    }

    const BLOCKED: u32 = UNREACHED - 1;
    let mut labels = vec![UNREACHED; grid.len()];
    for p in d0.iter().chain(d1) {
        let i = grid.index_of(p).expect("checked above");
        labels[i] = BLOCKED;
    }

    let mut components = Vec::new();
    let mut flood = |labels: &mut Vec<u32>, seeds: Vec<usize>, unbounded: Option<Unbounded>| {
        let label = components.len() as u32;
        let mut queue: VecDeque<usize> = VecDeque::new();
        for s in seeds {
            if labels[s] == UNREACHED {
                labels[s] = label;
                queue.push_back(s);
            }
        }
        if queue.is_empty() {
            return;
        }
        let mut size = 0;
        while let Some(i) = queue.pop_front() {
            size += 1;
            grid.for_each_neighbor(i, |n| {
                if labels[n] == UNREACHED {
                    labels[n] = label;
                    queue.push_back(n);
                }
            });
        }
        components.push(Component {
            unbounded,
            adjacent_d0: false,
            adjacent_d1: false,
            size,
        });
    };

    if dim == 1 && !(d0.is_empty() && d1.is_empty()) {
        flood(&mut labels, vec![0], Some(Unbounded::Lower));
        flood(&mut labels, vec![grid.len() - 1], Some(Unbounded::Upper));
    } else {
        let frame: Vec<usize> = (0..grid.len()).filter(|&i| grid.is_frame(i)).collect();
        flood(&mut labels, frame, Some(Unbounded::Exterior));
    }
    for i in 0..grid.len() {
        if labels[i] == UNREACHED {
            flood(&mut labels, vec![i], None);
        }
    }

    for (set, is_d0) in [(d0, true), (d1, false)] {
        for p in set {
            let i = grid.index_of(p).expect("checked above");
            grid.for_each_neighbor(i, |n| {
                let l = labels[n];
                if l != BLOCKED {
                    let c = &mut components[l as usize];
                    if is_d0 {
                        c.adjacent_d0 = true;
                    } else {
                        c.adjacent_d1 = true;
                    }
                }
            });
        }
    }
    for l in labels.iter_mut() {
        if *l == BLOCKED {
            *l = UNREACHED;
        }
    }

    Ok(ComponentMap {
        grid,
        labels,
        components,
    })
}
