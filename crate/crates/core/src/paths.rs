//! Grid paths and the straight digital path between two grid points.

use crate::error::{Error, Result};
use crate::geometry::{check_spacing, rd_unchecked, Point};

/// A sequence of grid points whose consecutive entries are at most one grid
/// step apart. Repeated nodes are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    spacing: i64,
    nodes: Vec<Point>,
}

impl Path {
    pub fn new(spacing: i64, nodes: Vec<Point>) -> Result<Self> {
        check_spacing(spacing)?;
        let Some(first) = nodes.first() else {
            return Err(Error::usage("a path needs at least one node"));
        };
        let dim = first.dim();
        for n in &nodes {
            n.check_dim(dim)?;
            n.check_on_grid(spacing)?;
        }
        if let Some(w) = nodes.windows(2).find(|w| w[0].linf(&w[1]) > spacing as u64) {
            return Err(Error::usage(format!(
                "step from {} to {} exceeds the grid spacing {spacing}",
                w[0], w[1]
            )));
        }
        Ok(Path { spacing, nodes })
    }

    pub fn spacing(&self) -> i64 {
        self.spacing
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    /// Number of steps, i.e. node count minus one.
    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> &Point {
        &self.nodes[0]
    }

    pub fn end(&self) -> &Point {
        self.nodes.last().expect("nonempty")
    }

    /// `next ∘ self`: follow `self`, then `next`.
    pub fn concatenate(&self, next: &Path) -> Result<Path> {
        if self.spacing != next.spacing {
            return Err(Error::SpacingMismatch {
                expected: self.spacing,
                found: next.spacing,
            });
        }
        if self.end() != next.start() {
            return Err(Error::usage(format!(
                "cannot concatenate: first path ends at {}, second starts at {}",
                self.end(),
                next.start()
            )));
        }
        let mut nodes = self.nodes.clone();
        nodes.extend_from_slice(&next.nodes[1..]);
        Ok(Path {
            spacing: self.spacing,
            nodes,
        })
    }

    pub fn reversed(&self) -> Path {
        let mut nodes = self.nodes.clone();
        nodes.reverse();
        Path {
            spacing: self.spacing,
            nodes,
        }
    }
}

/// The straight path from `x` to `z`: with `k = |x - z| / spacing` steps,
/// node `l` has coordinates `rd(((k - l) x_j + l z_j) / (k spacing)) · spacing`.
/// Every step has length exactly one grid step.
pub fn straight_path(x: &Point, z: &Point, spacing: i64) -> Result<Path> {
    check_spacing(spacing)?;
    z.check_dim(x.dim())?;
    x.check_on_grid(spacing)?;
    z.check_on_grid(spacing)?;
    if x == z {
        return Ok(Path {
            spacing,
            nodes: vec![x.clone()],
        });
    }
    let k = x.linf(z) as i64 / spacing;
    let nodes = (0..=k)
        .map(|l| {
            let coords: Vec<i64> = x
                .coords()
                .iter()
                .zip(z.coords())
                .map(|(&xj, &zj)| rd_unchecked((k - l) * xj + l * zj, k * spacing) * spacing)
                .collect();
            Point::from(coords)
        })
        .collect();
    Ok(Path { spacing, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Point {
        Point::new(c)
    }

    #[test]
    fn concatenation() {
        let x = Path::new(1, vec![p(&[0, 0])]).unwrap();
        assert_eq!(x.concatenate(&x).unwrap().len(), 0);
        let a = Path::new(1, vec![p(&[0, 0]), p(&[1, 0])]).unwrap();
        let b = Path::new(1, vec![p(&[1, 0]), p(&[1, 1])]).unwrap();
        let ab = a.concatenate(&b).unwrap();
        assert_eq!(ab.nodes(), &[p(&[0, 0]), p(&[1, 0]), p(&[1, 1])]);
        assert!(b.concatenate(&a).is_err());
    }

    #[test]
    fn path_validation() {
        assert!(Path::new(1, vec![]).is_err());
        assert!(Path::new(1, vec![p(&[0, 0]), p(&[2, 0])]).is_err());
        assert!(Path::new(2, vec![p(&[0, 0]), p(&[2, 2]), p(&[2, 2])]).is_ok());
        assert!(Path::new(2, vec![p(&[0, 1])]).is_err());
    }

    #[test]
    fn straight_path_examples() {
        let o = p(&[0, 0]);
        assert_eq!(
            straight_path(&o, &o, 1).unwrap().nodes(),
            std::slice::from_ref(&o)
        );
        let path = straight_path(&o, &p(&[3, 1]), 1).unwrap();
        assert_eq!(
            path.nodes(),
            &[p(&[0, 0]), p(&[1, 0]), p(&[2, 1]), p(&[3, 1])]
        );
        let coarse = straight_path(&p(&[0, 0]), &p(&[6, -2]), 2).unwrap();
        assert_eq!(
            coarse.nodes(),
            &[p(&[0, 0]), p(&[2, 0]), p(&[4, -2]), p(&[6, -2])]
        );
        assert!(straight_path(&o, &p(&[1, 0]), 2).is_err());
    }
}
