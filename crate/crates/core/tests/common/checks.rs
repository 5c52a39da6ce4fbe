//! Property checks shared by the proptest targets and the acceptance suite.
//! Each returns `Err` with a description of the first violation.

use std::collections::BTreeSet;

use boundary_pairs::oracle::{
    axiom11_bruteforce, best_approx_bruteforce, coarse_dilation, interpolate_bruteforce,
    layer_by_definition, restrict_bruteforce, subsets, voronoi_cover_bruteforce, window_points,
    SUBSET_BUDGET,
};
use boundary_pairs::pairs::{closer_set_window, Axiom};
use boundary_pairs::{
    boundary0, boundary1, dist_point_set, hausdorff, interpolate, is_voronoi_cover, layer,
    lift_interpolate, lift_restrict, rd, reconstruct, restrict, straight_path, trace, validate,
    BoundaryPair, Dist, GridRatio, GridSet, Point, Window,
};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn set_of(dim: usize, spacing: i64, points: BTreeSet<Point>) -> GridSet {
    GridSet::finite(dim, spacing, points).unwrap()
}

fn window_of(m: &GridSet, margin: i64) -> Window {
    Window::bounding(m.points())
        .unwrap_or_else(|| Window::new(Point::origin(m.dim()), Point::origin(m.dim())).unwrap())
        .inflate(margin)
}

// Rounding and straight paths.

/// `rd(p/q)` by the defining inequality `2q·r <= 2p + q < 2q·(r + 1)`.
fn rd_reference(p: i64, q: i64) -> i64 {
    (2 * p + q).div_euclid(2 * q)
}

/// The rounding identities at one rational `p/q`.
pub fn rounding_at(p: i64, q: i64) -> Check {
    let r = rd(p, q).unwrap();
    ensure!(
        r == rd_reference(p, q),
        "rd({p},{q}) = {r}, expected {}",
        rd_reference(p, q)
    );
    if p % q == 0 {
        ensure!(r == p / q, "rd of the integer {p}/{q} is {r}");
    }
    for k in -3..=3 {
        ensure!(
            rd(p + k * q, q).unwrap() == r + k,
            "rd({p}/{q} + {k}) != rd({p}/{q}) + {k}"
        );
    }
    ensure!(
        r.abs() <= rd(p.abs(), q).unwrap(),
        "|rd({p}/{q})| > rd(|{p}/{q}|)"
    );
    Ok(())
}

/// Monotonicity and the integer Lipschitz bound for two rationals.
pub fn rounding_between(p: i64, q: i64, p2: i64, q2: i64) -> Check {
    let (a, b) = (rd(p, q).unwrap(), rd(p2, q2).unwrap());
    // Compare p/q with p2/q2 without division.
    let (lhs, rhs) = (p * q2, p2 * q);
    if lhs <= rhs {
        ensure!(a <= b, "rd not monotone at {p}/{q} <= {p2}/{q2}");
    }
    // Smallest integer k with |p/q - p2/q2| <= k.
    let diff = (lhs - rhs).abs();
    let k = (diff + q * q2 - 1) / (q * q2);
    ensure!(
        (a - b).abs() <= k.max(0),
        "|rd({p}/{q}) - rd({p2}/{q2})| > {k}"
    );
    Ok(())
}

/// Endpoints, distances to both ends, step size, length and box
/// confinement of the straight path, plus validity of its reversal.
pub fn straight_path_properties(x: &Point, z: &Point, spacing: i64, probes: &[Point]) -> Check {
    let path = straight_path(x, z, spacing).map_err(|e| e.to_string())?;
    let k = (x.linf(z) / spacing as u64) as usize;
    let nodes = path.nodes();
    ensure!(
        path.len() == k,
        "length {} != {k} for {x} -> {z}",
        path.len()
    );
    ensure!(
        nodes.first() == Some(x) && nodes.last() == Some(z),
        "endpoints of {x} -> {z}"
    );
    for (l, node) in nodes.iter().enumerate() {
        ensure!(node.is_on_grid(spacing), "node {node} off the grid");
        ensure!(
            node.linf(x) == (l as u64) * spacing as u64,
            "distance to start at node {l} of {x} -> {z}"
        );
        ensure!(
            node.linf(z) == ((k - l) as u64) * spacing as u64,
            "distance to end at node {l} of {x} -> {z}"
        );
        for y in probes {
            ensure!(
                node.linf(y) <= x.linf(y).max(y.linf(z)),
                "node {node} leaves the box around {y} for {x} -> {z}"
            );
        }
    }
    for w in nodes.windows(2) {
        ensure!(
            w[0].linf(&w[1]) == spacing as u64,
            "step {} -> {} of {x} -> {z}",
            w[0],
            w[1]
        );
    }
    let back = boundary_pairs::Path::new(spacing, path.reversed().nodes().to_vec())
        .map_err(|e| format!("reversed path invalid: {e}"))?;
    ensure!(
        back.len() == k && back.start() == z && back.end() == x,
        "reversal of {x} -> {z}"
    );
    Ok(())
}

// Layers.

/// Identities of boundaries and layers for one set, checked in a window
/// around its stored points.
pub fn layer_identities(m: &GridSet, ks: std::ops::RangeInclusive<i64>) -> Check {
    let s = m.spacing();
    let c = m.complement();
    let b0 = boundary0(m);
    let b1 = boundary1(m);
    let trivial = m.is_empty() || m.is_full();
    ensure!(
        b0.is_empty() == trivial && b1.is_empty() == trivial,
        "empty boundary iff M is empty or full"
    );
    ensure!(
        b0 == boundary1(&c) && b1 == boundary0(&c),
        "complement swaps the boundaries"
    );
    let reach = ks.clone().map(i64::abs).max().unwrap_or(0) + 2;
    let window = window_of(m, reach * s);
    for k in ks {
        let lk = layer(m, k);
        ensure!(
            lk == layer(&c, 1 - k),
            "layer {k} of M differs from layer {} of the complement",
            1 - k
        );
        let direct = layer_by_definition(m, k, &window);
        ensure!(
            lk.points() == &direct,
            "layer {k} differs from the definition"
        );
    }
    ensure!(
        layer(m, 0) == b0 && layer(m, 1) == b1,
        "layers 0 and 1 are the boundaries"
    );
    if trivial {
        return Ok(());
    }
    for x in window.grid_points(s) {
        let d0 = dist_point_set(&x, &b0);
        let d1 = dist_point_set(&x, &b1);
        ensure!(
            m.contains(&x) == (d0 < d1),
            "membership of {x} disagrees with distances {d0} / {d1}"
        );
        let near_b1 = b1.points().iter().any(|z| z.linf(&x) <= s as u64);
        ensure!(
            b0.contains(&x) == (m.contains(&x) && near_b1),
            "neighbor characterization at {x}"
        );
    }
    Ok(())
}

// Boundary pairs.

/// `reconstruct(trace(M)) = M`, the trace validates, and the trace is
/// recovered from the reconstruction.
pub fn bijection(m: &GridSet) -> Check {
    let pair = trace(m).map_err(|e| e.to_string())?;
    let report = validate(&pair);
    ensure!(report.is_valid(), "trace does not validate:\n{report}");
    let back = reconstruct(&pair).map_err(|e| e.to_string())?;
    ensure!(&back == m, "reconstruct(trace(M)) != M");
    ensure!(trace(&back).unwrap() == pair, "trace(reconstruct(p)) != p");
    Ok(())
}

/// The distance-based closer set agrees with the component-based
/// reconstruction and the two closer sets partition the window.
pub fn closer_sets(pair: &BoundaryPair) -> Check {
    let m = reconstruct(pair).map_err(|e| e.to_string())?;
    let window = pair.bounding_window().unwrap().inflate(2 * pair.spacing());
    let near0 = closer_set_window(pair, &window).map_err(|e| e.to_string())?;
    let swapped = BoundaryPair::new(
        pair.dim(),
        pair.spacing(),
        pair.d1().clone(),
        pair.d0().clone(),
    )
    .unwrap();
    let near1 = closer_set_window(&swapped, &window).map_err(|e| e.to_string())?;
    for x in window.grid_points(pair.spacing()) {
        ensure!(
            near0.contains(&x) == m.contains(&x),
            "closer set and reconstruction differ at {x}"
        );
        ensure!(
            near0.contains(&x) != near1.contains(&x),
            "{x} is a tie point"
        );
    }
    Ok(())
}

/// The component-based separation check agrees with path enumeration.
pub fn separation_agrees(pair: &BoundaryPair, max_len: usize) -> Check {
    let report = validate(pair);
    let by_components = !report.failed().contains(&Axiom::Separation);
    let by_paths = axiom11_bruteforce(pair, max_len).map_err(|e| e.to_string())?;
    ensure!(
        by_components == by_paths,
        "separation: components say {by_components}, paths say {by_paths}\n{report}"
    );
    Ok(())
}

// Transfer operators.

/// Additivity, monotonicity, translation equivariance, Hausdorff bound,
/// connectedness and boundary stability of the restriction.
pub fn restriction_battery(m: &GridSet, other: &GridSet, ratio: GridRatio, shift: &Point) -> Check {
    let n = ratio.get();
    let r = restrict(m, ratio).unwrap();
    ensure!(
        r.points() == &restrict_bruteforce(m, ratio),
        "restrict differs from the scan"
    );
    let union = m.union(other).unwrap();
    let r_union = restrict(&union, ratio).unwrap();
    let r_other = restrict(other, ratio).unwrap();
    ensure!(
        r_union == r.union(&r_other).unwrap(),
        "restriction is not additive"
    );
    ensure!(
        r.is_subset(&r_union).unwrap(),
        "restriction is not monotone"
    );
    let coarse_shift = shift.scaled(n);
    let moved = restrict(&m.translate(&coarse_shift).unwrap(), ratio).unwrap();
    ensure!(
        moved == r.translate(&coarse_shift).unwrap(),
        "restriction does not commute with coarse shifts"
    );
    match hausdorff(&r, m).unwrap() {
        Dist::Finite(d) => ensure!(2 * d <= n as u64, "Hausdorff distance {d} exceeds n/2"),
        Dist::Infinite => return Err("infinite Hausdorff distance".into()),
    }
    if m.is_connected().unwrap() {
        ensure!(
            r.is_connected().unwrap(),
            "restriction of a connected set is disconnected"
        );
    }
    let from_boundary = restrict(&boundary0(m), ratio).unwrap();
    ensure!(
        boundary0(&r).is_subset(&from_boundary).unwrap(),
        "new boundary escapes the old one"
    );
    Ok(())
}

/// The same battery for the interpolation of a coarse set.
pub fn interpolation_battery(
    m: &GridSet,
    other: &GridSet,
    ratio: GridRatio,
    shift: &Point,
) -> Check {
    let n = ratio.get();
    let i = interpolate(m, ratio).unwrap();
    ensure!(
        i.points() == &interpolate_bruteforce(m, ratio),
        "interpolate differs from the scan"
    );
    ensure!(
        m.points().is_subset(i.points()),
        "interpolation drops coarse points"
    );
    let union = m.union(other).unwrap();
    let i_union = interpolate(&union, ratio).unwrap();
    let i_other = interpolate(other, ratio).unwrap();
    ensure!(
        i_union == i.union(&i_other).unwrap(),
        "interpolation is not additive"
    );
    ensure!(
        i.is_subset(&i_union).unwrap(),
        "interpolation is not monotone"
    );
    let coarse_shift = shift.scaled(n);
    let moved = interpolate(&m.translate(&coarse_shift).unwrap(), ratio).unwrap();
    ensure!(
        moved == i.translate(&coarse_shift).unwrap(),
        "interpolation does not commute with coarse shifts"
    );
    match hausdorff(&i, m).unwrap() {
        Dist::Finite(d) => ensure!(2 * d <= n as u64, "Hausdorff distance {d} exceeds n/2"),
        Dist::Infinite => return Err("infinite Hausdorff distance".into()),
    }
    if m.is_connected().unwrap() {
        ensure!(
            i.is_connected().unwrap(),
            "interpolation of a connected set is disconnected"
        );
    }
    let from_boundary = interpolate(&boundary0(m), ratio).unwrap();
    ensure!(
        boundary0(&i).is_subset(&from_boundary).unwrap(),
        "new boundary escapes the old one"
    );
    Ok(())
}

/// `R(I(M)) = M` for odd ratios and the coarse Moore dilation for even ones.
pub fn composition(m: &GridSet, ratio: GridRatio) -> Check {
    let back = restrict(&interpolate(m, ratio).unwrap(), ratio).unwrap();
    if ratio.get() % 2 == 1 {
        ensure!(&back == m, "R(I(M)) != M for odd n");
    } else {
        ensure!(
            back.points() == &coarse_dilation(m, ratio),
            "R(I(M)) is not the coarse dilation"
        );
    }
    Ok(())
}

/// `R(M)` covers `M`, agrees with the face-arrangement check, and loses the
/// cover when any single point is removed; dually for `I`.
pub fn voronoi_minimality(fine: &GridSet, coarse: &GridSet, ratio: GridRatio) -> Check {
    for (m, image) in [
        (fine, restrict(fine, ratio).unwrap()),
        (coarse, interpolate(coarse, ratio).unwrap()),
    ] {
        ensure!(is_voronoi_cover(m, &image).unwrap(), "image is not a cover");
        ensure!(
            voronoi_cover_bruteforce(m, &image),
            "face-arrangement check rejects the image"
        );
        for p in image.points() {
            let mut fewer = image.points().clone();
            fewer.remove(p);
            if fewer.is_empty() {
                continue;
            }
            let fewer = set_of(m.dim(), image.spacing(), fewer);
            let fast = is_voronoi_cover(m, &fewer).unwrap();
            ensure!(
                fast == voronoi_cover_bruteforce(m, &fewer),
                "cover checks disagree without {p}"
            );
            ensure!(!fast, "image without {p} still covers");
        }
    }
    Ok(())
}

/// Every cover among the subsets of the candidate grid points contains the
/// image; `m` must be small enough to enumerate.
pub fn covers_contain_image(m: &GridSet, image: &GridSet) -> Check {
    let window = window_of(m, image.spacing().max(m.spacing()));
    let candidates = window_points(&window, image.spacing());
    ensure!(
        candidates.len() <= SUBSET_BUDGET,
        "{} candidates exceed the budget",
        candidates.len()
    );
    let mut covers = 0;
    for subset in subsets(&candidates) {
        let s = set_of(m.dim(), image.spacing(), subset);
        let fast = is_voronoi_cover(m, &s).unwrap();
        ensure!(
            fast == voronoi_cover_bruteforce(m, &s),
            "cover checks disagree"
        );
        if fast {
            covers += 1;
            ensure!(
                image.is_subset(&s).unwrap(),
                "a cover misses part of the image"
            );
        }
    }
    ensure!(covers > 0, "no cover found among the candidates");
    Ok(())
}

/// `R(M)` minimizes the Hausdorff distance and contains every minimizer.
pub fn best_approximation(m: &GridSet, ratio: GridRatio) -> Check {
    let n = ratio.get();
    let window = window_of(m, n);
    let best = best_approx_bruteforce(m, ratio, &window).map_err(|e| e.to_string())?;
    let r = restrict(m, ratio).unwrap();
    ensure!(
        2 * best.distance <= n as u64,
        "minimal distance {} exceeds n/2",
        best.distance
    );
    ensure!(
        best.minimizers.contains(r.points()),
        "R(M) is not a minimizer"
    );
    for mz in &best.minimizers {
        ensure!(
            mz.is_subset(r.points()),
            "a minimizer is not contained in R(M)"
        );
    }
    Ok(())
}

// Lifted operators.

pub fn lifted_restrict_agrees(m: &GridSet, ratio: GridRatio) -> Check {
    let got = lift_restrict(&trace(m).unwrap(), ratio).map_err(|e| e.to_string())?;
    let want = trace(&restrict(m, ratio).unwrap()).unwrap();
    ensure!(got == want, "lift_restrict differs from trace(restrict(M))");
    Ok(())
}

pub fn lifted_interpolate_agrees(m: &GridSet, ratio: GridRatio) -> Check {
    let got = lift_interpolate(&trace(m).unwrap(), ratio).map_err(|e| e.to_string())?;
    let want = trace(&interpolate(m, ratio).unwrap()).unwrap();
    ensure!(
        got == want,
        "lift_interpolate differs from trace(interpolate(M))"
    );
    Ok(())
}
