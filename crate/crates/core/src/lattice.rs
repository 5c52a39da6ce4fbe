//! Dense indexing of the grid points inside an axis-aligned window.

use smallvec::SmallVec;

use crate::geometry::{ceil_div, floor_div, Coords, Point};
use crate::gridset::Window;

pub(crate) const UNREACHED: u32 = u32::MAX;

/// The grid points of one spacing-grid inside a window, stored row-major with
/// the last axis fastest.
#[derive(Clone, Debug)]
pub(crate) struct GridBox {
    spacing: i64,
    lo: Coords,
    shape: SmallVec<[usize; 4]>,
    strides: SmallVec<[usize; 4]>,
    len: usize,
    moore: Vec<SmallVec<[i8; 4]>>,
}

impl GridBox {
    pub(crate) fn new(window: &Window, spacing: i64) -> Self {
        let dim = window.dim();
        let mut lo = Coords::new();
        let mut shape = SmallVec::new();
        for j in 0..dim {
            let a = ceil_div(window.lower()[j], spacing);
            let b = floor_div(window.upper()[j], spacing);
            lo.push(a);
            shape.push(if b >= a { (b - a + 1) as usize } else { 0 });
        }
        let mut strides: SmallVec<[usize; 4]> = smallvec::smallvec![1; dim];
        for j in (0..dim.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * shape[j + 1];
        }
        let len = shape.iter().product();
        let mut moore = Vec::new();
        let count = 3usize.pow(dim as u32);
        for code in 0..count {
            let mut c = code;
            let mut delta = SmallVec::new();
            for _ in 0..dim {
                delta.push((c % 3) as i8 - 1);
                c /= 3;
            }
            delta.reverse();
            if delta.iter().any(|&d| d != 0) {
                moore.push(delta);
            }
        }
        GridBox {
            spacing,
            lo,
            shape,
            strides,
            len,
            moore,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn dim(&self) -> usize {
        self.shape.len()
    }

    pub(crate) fn index_of(&self, p: &Point) -> Option<usize> {
        let mut idx = 0;
        for j in 0..self.dim() {
            let c = p[j];
            if c.rem_euclid(self.spacing) != 0 {
                return None;
            }
            let k = c / self.spacing - self.lo[j];
            if k < 0 || k as usize >= self.shape[j] {
                return None;
            }
            idx += k as usize * self.strides[j];
        }
        Some(idx)
    }

    fn local(&self, idx: usize) -> SmallVec<[usize; 4]> {
        let mut rest = idx;
        self.strides
            .iter()
            .map(|&s| {
                let k = rest / s;
                rest %= s;
                k
            })
            .collect()
    }

    pub(crate) fn point_of(&self, idx: usize) -> Point {
        let local = self.local(idx);
        Point::from_coords(
            local
                .iter()
                .zip(self.lo.iter())
                .map(|(&k, &lo)| (lo + k as i64) * self.spacing)
                .collect(),
        )
    }

    pub(crate) fn is_frame(&self, idx: usize) -> bool {
        self.local(idx)
            .iter()
            .zip(self.shape.iter())
            .any(|(&k, &n)| k == 0 || k + 1 == n)
    }

    /// Index offsets of the Moore neighbors, valid for points off the frame.
    pub(crate) fn moore_index_offsets(&self) -> Vec<isize> {
        self.moore
            .iter()
            .map(|delta| {
                delta
                    .iter()
                    .zip(self.strides.iter())
                    .map(|(&d, &s)| d as isize * s as isize)
                    .sum()
            })
            .collect()
    }

    /// Calls `f` with the index of every Moore neighbor inside the box.
    pub(crate) fn for_each_neighbor(&self, idx: usize, mut f: impl FnMut(usize)) {
        let local = self.local(idx);
        'offsets: for delta in &self.moore {
            let mut n = idx;
            for j in 0..local.len() {
                match delta[j] {
                    -1 => {
                        if local[j] == 0 {
                            continue 'offsets;
                        }
                        n -= self.strides[j];
                    }
                    1 => {
                        if local[j] + 1 == self.shape[j] {
                            continue 'offsets;
                        }
                        n += self.strides[j];
                    }
                    _ => {}
                }
            }
            f(n);
        }
    }

    /// Multi-source breadth-first search over the Moore graph of the box.
    /// Inside a box this yields the Chebyshev distance to the nearest source,
    /// in grid steps.
    pub(crate) fn bfs(&self, sources: impl IntoIterator<Item = usize>) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.len];
        let mut queue = std::collections::VecDeque::new();
        for s in sources {
            if dist[s] == UNREACHED {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(i) = queue.pop_front() {
            let d = dist[i] + 1;
            self.for_each_neighbor(i, |n| {
                if dist[n] == UNREACHED {
                    dist[n] = d;
                    queue.push_back(n);
                }
            });
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trips() {
        let w = Window::new(Point::new(&[-3, 1]), Point::new(&[4, 6])).unwrap();
        let b = GridBox::new(&w, 2);
        assert_eq!(b.len(), 4 * 3);
        for i in 0..b.len() {
            let p = b.point_of(i);
            assert!(w.contains(&p));
            assert_eq!(b.index_of(&p), Some(i));
        }
        assert_eq!(b.index_of(&Point::new(&[-3, 2])), None);
        assert_eq!(b.index_of(&Point::new(&[6, 2])), None);
    }

    #[test]
    fn bfs_is_chebyshev() {
        let w = Window::new(Point::new(&[0, 0, 0]), Point::new(&[4, 3, 5])).unwrap();
        let b = GridBox::new(&w, 1);
        let src = [Point::new(&[1, 1, 1]), Point::new(&[4, 0, 5])];
        let d = b.bfs(src.iter().map(|p| b.index_of(p).unwrap()));
        for (i, &got) in d.iter().enumerate() {
            let p = b.point_of(i);
            let want = src.iter().map(|s| s.linf(&p)).min().unwrap();
            assert_eq!(got as u64, want);
        }
    }
}
