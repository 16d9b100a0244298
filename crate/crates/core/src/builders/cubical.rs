//! Lower-star filtrations of grayscale images on the pixel grid.
//!
//! One vertex per pixel, one edge per horizontally or vertically adjacent
//! pair, one square per 2×2 block of pixels. The image border gets no outer
//! face, so the full complex is a disc.

use crate::error::{Error, Result};
use crate::filtration::{Cell, Filtration};

/// An 8-bit grayscale image in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    values: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, values: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyInput("image has no pixels"));
        }
        if values.len() != width * height {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "expected {} pixel values, found {}",
                    width * height,
                    values.len()
                ),
            });
        }
        Ok(Self {
            width,
            height,
            values,
        })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let mut values = Vec::with_capacity(width * height);
        for r in 0..height {
            for c in 0..width {
                values.push(f(r, c));
            }
        }
        Self::new(width, height, values)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.values[row * self.width + col]
    }
}

/// The lower-star cubical filtration of `img`, together with the map from
/// pixel index to vertex cell id.
///
/// Cells are ordered by value, then dimension, then the sorted tuple of
/// row-major pixel indices of their corners. Every edge has weight 1.
pub fn build_lower_star_cubical(img: &GrayImage) -> Result<Filtration> {
    lower_star_with_vertices(img).map(|(f, _)| f)
}

/// Like [`build_lower_star_cubical`], also returning `vertex_of[pixel]`.
pub fn lower_star_with_vertices(img: &GrayImage) -> Result<(Filtration, Vec<usize>)> {
    let (w, h) = (img.width, img.height);
    let val = |p: usize| img.values[p];

    // (value, dim, corners): corners sorted, unused slots hold usize::MAX.
    let mut pending: Vec<(u8, u8, [usize; 4])> = Vec::new();
    let none = usize::MAX;
    for p in 0..w * h {
        pending.push((val(p), 0, [p, none, none, none]));
    }
    for r in 0..h {
        for c in 0..w {
            let p = r * w + c;
            if c + 1 < w {
                pending.push((val(p).max(val(p + 1)), 1, [p, p + 1, none, none]));
            }
            if r + 1 < h {
                pending.push((val(p).max(val(p + w)), 1, [p, p + w, none, none]));
            }
        }
    }
    for r in 0..h.saturating_sub(1) {
        for c in 0..w.saturating_sub(1) {
            let p = r * w + c;
            let corners = [p, p + 1, p + w, p + w + 1];
            let v = corners.iter().map(|&q| val(q)).max().unwrap_or(0);
            pending.push((v, 2, corners));
        }
    }
    pending.sort_unstable();

    let mut vertex_of = vec![0usize; w * h];
    let mut horizontal = vec![0usize; w * h];
    let mut vertical = vec![0usize; w * h];
    let mut cells = Vec::with_capacity(pending.len());
    for (pos, &(value, dim, k)) in pending.iter().enumerate() {
        let id = pos + 1;
        let cell = match dim {
            0 => {
                vertex_of[k[0]] = id;
                Cell::vertex(id)
            }
            1 => {
                let (a, b) = (k[0], k[1]);
                if b == a + 1 {
                    horizontal[a] = id;
                } else {
                    vertical[a] = id;
                }
                Cell::edge(id, vertex_of[a], vertex_of[b], 1.0)
            }
            _ => {
                let p = k[0];
                let mut es = vec![horizontal[p], horizontal[p + w], vertical[p], vertical[p + 1]];
                es.sort_unstable();
                Cell::face(id, es)
            }
        };
        cells.push(cell.with_value(f64::from(value)));
    }
    Ok((Filtration::new(cells)?, vertex_of))
}
