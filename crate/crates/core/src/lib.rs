//! Boundary pairs of digital images on integer lattices, and restriction and
//! interpolation operators between nested grids that act directly on
//! boundary pairs.
//!
//! A digital image is a set `M ⊆ sZ^m`. Its boundary pair is
//! `(∂⁰M, ∂¹M)`: the members with a Moore neighbor outside `M`, and the
//! non-members with a Moore neighbor inside. The pair determines `M`
//! uniquely ([`pairs::reconstruct`]), so algorithms may store only the pair.
//! [`lifted::lift_restrict`] and [`lifted::lift_interpolate`] move such a
//! pair between a fine grid `Z^m` and a coarse grid `nZ^m` without ever
//! building the full sets.
//!
//! All arithmetic is exact: coordinates are integers in units of the fine
//! grid and half-step radii are compared in doubled units.

pub mod cli;
pub mod error;
pub mod format;
pub mod geometry;
pub mod gridset;
mod lattice;
pub mod layers;
pub mod lifted;
pub mod oracle;
pub mod pairs;
pub mod paths;
pub mod transfer;

pub use error::{Error, Result};
pub use geometry::{ball_points, chebyshev, rd, Dist, Point};
pub use gridset::{dist_point_set, hausdorff, hausdorff_semi, GridSet, Mode, Window};
pub use layers::{boundary0, boundary1, layer, recover_boundaries, trace};
pub use lifted::{lift_interpolate, lift_restrict};
pub use pairs::{reconstruct, validate, AxiomReport, BoundaryPair};
pub use paths::{straight_path, Path};
pub use transfer::{interpolate, is_voronoi_cover, restrict, GridRatio};
