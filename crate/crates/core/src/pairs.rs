//! Boundary pairs: axiom validation and reconstruction of the set a pair
//! bounds.
//!
//! A pair `(D0, D1)` of finite grid sets is a boundary pair when both are
//! nonempty, they are disjoint, every point of each has a point of the other
//! at distance exactly one grid step, and no path leaves `D0` and reaches
//! `D1` through grid points outside `D0 ∪ D1` (the separation axiom). The
//! pair `(∅, ∅)` is also a boundary pair; it bounds the whole grid.
//!
//! Separation is decided on connected components of the complement of
//! `D0 ∪ D1`: a violating path's interior is a walk inside one component
//! that touches both sets, and conversely such a component yields a
//! violating path. Reconstruction classifies each component by the set it
//! touches.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{moore_offsets, Point};
use crate::gridset::{
    check_points, components_within, ComponentMap, GridSet, Mode, Unbounded, Window,
};
use crate::lattice::{GridBox, UNREACHED};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryPair {
    dim: usize,
    spacing: i64,
    d0: BTreeSet<Point>,
    d1: BTreeSet<Point>,
}

impl BoundaryPair {
    /// Checks only that all points lie on the grid; see [`validate`] for the
    /// boundary-pair axioms.
    pub fn new(
        dim: usize,
        spacing: i64,
        d0: impl IntoIterator<Item = Point>,
        d1: impl IntoIterator<Item = Point>,
    ) -> Result<Self> {
        let d0: BTreeSet<Point> = d0.into_iter().collect();
        let d1: BTreeSet<Point> = d1.into_iter().collect();
        check_points(dim, spacing, d0.iter().chain(&d1))?;
        Ok(BoundaryPair {
            dim,
            spacing,
            d0,
            d1,
        })
    }

    pub fn empty(dim: usize, spacing: i64) -> Result<Self> {
        Self::new(dim, spacing, [], [])
    }

    pub(crate) fn from_parts(
        dim: usize,
        spacing: i64,
        d0: BTreeSet<Point>,
        d1: BTreeSet<Point>,
    ) -> Self {
        debug_assert!(check_points(dim, spacing, d0.iter().chain(&d1)).is_ok());
        BoundaryPair {
            dim,
            spacing,
            d0,
            d1,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spacing(&self) -> i64 {
        self.spacing
    }

    pub fn d0(&self) -> &BTreeSet<Point> {
        &self.d0
    }

    pub fn d1(&self) -> &BTreeSet<Point> {
        &self.d1
    }

    pub fn into_parts(self) -> (BTreeSet<Point>, BTreeSet<Point>) {
        (self.d0, self.d1)
    }

    pub fn is_empty_pair(&self) -> bool {
        self.d0.is_empty() && self.d1.is_empty()
    }

    /// The smallest window holding both sets, if any point exists.
    pub fn bounding_window(&self) -> Option<Window> {
        Window::bounding(self.d0.iter().chain(&self.d1))
    }
}

/// The five boundary-pair axioms, numbered 7 to 11 in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Nonempty,
    Disjoint,
    InnerAdjacent,
    OuterAdjacent,
    Separation,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Nonempty,
        Axiom::Disjoint,
        Axiom::InnerAdjacent,
        Axiom::OuterAdjacent,
        Axiom::Separation,
    ];

    pub fn number(self) -> u8 {
        match self {
            Axiom::Nonempty => 7,
            Axiom::Disjoint => 8,
            Axiom::InnerAdjacent => 9,
            Axiom::OuterAdjacent => 10,
            Axiom::Separation => 11,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Axiom::Nonempty => "D0 and D1 are nonempty",
            Axiom::Disjoint => "D0 and D1 are disjoint",
            Axiom::InnerAdjacent => "every point of D0 has a D1 point one step away",
            Axiom::OuterAdjacent => "every point of D1 has a D0 point one step away",
            Axiom::Separation => "every path from D0 to D1 of length > 1 meets D0 ∪ D1 inside",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Which set is empty.
    EmptySet(&'static str),
    /// A point that is in both sets, or that lacks a partner one step away.
    Point(Point),
    /// A path from D0 to D1 whose interior avoids both sets.
    Path(Vec<Point>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::EmptySet(which) => write!(f, "{which} is empty"),
            Witness::Point(p) => write!(f, "point {p}"),
            Witness::Path(nodes) => {
                write!(f, "path")?;
                for n in nodes {
                    write!(f, " {n}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// The pair is `(∅, ∅)`.
    pub empty_pair: bool,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.empty_pair || self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failed(&self) -> Vec<Axiom> {
        if self.empty_pair {
            return Vec::new();
        }
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.axiom)
            .collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty_pair {
            return writeln!(f, "empty pair: valid (bounds the whole grid)");
        }
        for c in &self.checks {
            match &c.witness {
                None => writeln!(
                    f,
                    "axiom ({}) pass: {}",
                    c.axiom.number(),
                    c.axiom.description()
                )?,
                Some(w) => writeln!(
                    f,
                    "axiom ({}) FAIL: {}; witness: {w}",
                    c.axiom.number(),
                    c.axiom.description()
                )?,
            }
        }
        writeln!(f, "{}", if self.is_valid() { "valid" } else { "invalid" })
    }
}

fn missing_partner(
    from: &BTreeSet<Point>,
    to: &BTreeSet<Point>,
    offsets: &[Point],
) -> Option<Point> {
    from.iter()
        .find(|x| !offsets.iter().any(|o| to.contains(&(*x + o))))
        .cloned()
}

/// Shortest path `x, c_1, ..., c_k, z` with `x ∈ D0`, `z ∈ D1` and all `c_i`
/// in the free component `label`.
fn violating_path(
    comps: &ComponentMap,
    label: usize,
    d0: &BTreeSet<Point>,
    d1: &BTreeSet<Point>,
    offsets: &[Point],
) -> Vec<Point> {
    let grid = comps.grid();
    let labels = comps.labels();
    let mut prev = vec![usize::MAX; grid.len()];
    let mut queue = VecDeque::new();
    for i in 0..grid.len() {
        if labels[i] == label as u32 {
            let p = grid.point_of(i);
            if offsets.iter().any(|o| d0.contains(&(&p + o))) {
                prev[i] = i;
                queue.push_back(i);
            }
        }
    }
    while let Some(i) = queue.pop_front() {
        let p = grid.point_of(i);
        if let Some(z) = offsets.iter().map(|o| &p + o).find(|q| d1.contains(q)) {
            let mut interior = vec![p];
            let mut j = i;
            while prev[j] != j {
                j = prev[j];
                interior.push(grid.point_of(j));
            }
            interior.reverse();
            let x = offsets
                .iter()
                .map(|o| &interior[0] + o)
                .find(|q| d0.contains(q))
                .expect("seed touches D0");
            let mut path = vec![x];
            path.extend(interior);
            path.push(z);
            return path;
        }
        grid.for_each_neighbor(i, |n| {
            if labels[n] == label as u32 && prev[n] == usize::MAX {
                prev[n] = i;
                queue.push_back(n);
            }
        });
    }
    unreachable!("component touches both sets")
}

fn pair_components(pair: &BoundaryPair) -> Result<Option<ComponentMap>> {
    let Some(bbox) = pair.bounding_window() else {
        return Ok(None);
    };
    let window = bbox.inflate(pair.spacing);
    components_within(pair.dim, pair.spacing, &pair.d0, &pair.d1, &window).map(Some)
}

/// Checks all five axioms and reports a witness for each failure.
pub fn validate(pair: &BoundaryPair) -> AxiomReport {
    if pair.is_empty_pair() {
        return AxiomReport {
            empty_pair: true,
            checks: Axiom::ALL
                .iter()
                .map(|&axiom| AxiomCheck {
                    axiom,
                    witness: None,
                })
                .collect(),
        };
    }
    let offsets = moore_offsets(pair.dim, pair.spacing);
    let (d0, d1) = (&pair.d0, &pair.d1);

    let nonempty = if d0.is_empty() {
        Some(Witness::EmptySet("D0"))
    } else if d1.is_empty() {
        Some(Witness::EmptySet("D1"))
    } else {
        None
    };
    let disjoint = d0.intersection(d1).next().cloned().map(Witness::Point);
    let inner = missing_partner(d0, d1, &offsets).map(Witness::Point);
    let outer = missing_partner(d1, d0, &offsets).map(Witness::Point);

    let comps = pair_components(pair)
        .expect("window covers the pair")
        .expect("nonempty");
    let separation = comps
        .components()
        .iter()
        .position(|c| c.adjacent_d0 && c.adjacent_d1)
        .map(|label| Witness::Path(violating_path(&comps, label, d0, d1, &offsets)));

    let checks = [
        (Axiom::Nonempty, nonempty),
        (Axiom::Disjoint, disjoint),
        (Axiom::InnerAdjacent, inner),
        (Axiom::OuterAdjacent, outer),
        (Axiom::Separation, separation),
    ]
    .into_iter()
    .map(|(axiom, witness)| AxiomCheck { axiom, witness })
    .collect();
    AxiomReport {
        empty_pair: false,
        checks,
    }
}

/// The unique set whose trace is `pair`: `D0` together with every
/// complement component touching `D0`, or the whole grid for `(∅, ∅)`.
///
/// In one dimension the two unbounded rays may classify differently, which
/// describes a half-line; such sets are neither finite nor cofinite and are
/// rejected.
pub fn reconstruct(pair: &BoundaryPair) -> Result<GridSet> {
    let report = validate(pair);
    if !report.is_valid() {
        return Err(Error::InvalidPair(Box::new(report)));
    }
    let Some(comps) = pair_components(pair)? else {
        return GridSet::full(pair.dim, pair.spacing);
    };
    let unbounded_inside: Vec<(Unbounded, bool)> = comps
        .components()
        .iter()
        .filter_map(|c| c.unbounded.map(|u| (u, c.adjacent_d0)))
        .collect();
    let cofinite = unbounded_inside[0].1;
    if unbounded_inside
        .iter()
        .any(|&(_, inside)| inside != cofinite)
    {
        return Err(Error::usage(
            "pair bounds a half-line (the two unbounded rays lie on different sides); \
             such sets are neither finite nor cofinite",
        ));
    }
    let grid = comps.grid();
    let labels = comps.labels();
    let inside: Vec<bool> = comps.components().iter().map(|c| c.adjacent_d0).collect();
    let mut points: BTreeSet<Point> = if cofinite {
        pair.d1.clone()
    } else {
        pair.d0.clone()
    };
    for (i, &l) in labels.iter().enumerate() {
        if l == UNREACHED || comps.components()[l as usize].unbounded.is_some() {
            continue;
        }
        if inside[l as usize] != cofinite {
            points.insert(grid.point_of(i));
        }
    }
    let mode = if cofinite {
        Mode::Cofinite
    } else {
        Mode::Finite
    };
    Ok(GridSet::from_parts(pair.dim, pair.spacing, mode, points))
}

/// The points of `window` strictly closer to `D0` than to `D1`, computed
/// from two distance propagations.
pub fn closer_set_window(pair: &BoundaryPair, window: &Window) -> Result<BTreeSet<Point>> {
    if pair.d0.is_empty() || pair.d1.is_empty() {
        return Err(Error::usage("closer set needs nonempty D0 and D1"));
    }
    if window.dim() != pair.dim {
        return Err(Error::DimensionMismatch {
            expected: pair.dim,
            found: window.dim(),
        });
    }
    let region = window.hull(&pair.bounding_window().expect("nonempty"));
    let grid = GridBox::new(&region, pair.spacing);
    let index = |set: &BTreeSet<Point>| -> Vec<usize> {
        set.iter()
            .map(|p| grid.index_of(p).expect("inside region"))
            .collect()
    };
    let to_d0 = grid.bfs(index(&pair.d0));
    let to_d1 = grid.bfs(index(&pair.d1));
    Ok((0..grid.len())
        .filter(|&i| to_d0[i] < to_d1[i])
        .map(|i| grid.point_of(i))
        .filter(|p| window.contains(p))
        .collect())
}
