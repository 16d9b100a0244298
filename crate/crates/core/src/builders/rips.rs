//! Vietoris–Rips filtrations of 3D point clouds, capped at dimension 2.

use crate::error::{Error, Result};
use crate::filtration::{Cell, Filtration};

/// A finite, non-empty set of points in R³.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<[f64; 3]>,
}

impl PointCloud {
    pub fn new(points: Vec<[f64; 3]>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("point cloud has no points"));
        }
        if let Some(i) = points
            .iter()
            .position(|p| p.iter().any(|c| !c.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[[f64; 3]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let (a, b) = (self.points[i], self.points[j]);
        ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
    }

    /// Axis-aligned bounding box as `(min, max)`.
    pub fn bounding_box(&self) -> ([f64; 3], [f64; 3]) {
        let mut lo = [f64::INFINITY; 3];
        let mut hi = [f64::NEG_INFINITY; 3];
        for p in &self.points {
            for k in 0..3 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        (lo, hi)
    }
}

/// A simplex awaiting its position: value, dimension, sorted vertex tuple.
struct Pending {
    value: f64,
    dim: u8,
    verts: [usize; 3],
}

impl Pending {
    fn key(&self) -> (u8, &[usize]) {
        (self.dim, &self.verts[..self.dim as usize + 1])
    }
}

/// Rips filtration with all edges of length at most `threshold`.
///
/// Vertices have value 0, edges their length (also their weight), triangles
/// the length of their longest edge. Cells are sorted by value, then
/// dimension, then lexicographic vertex tuple. Vertex `k` of the cloud becomes
/// cell `k + 1`.
pub fn build_rips(cloud: &PointCloud, threshold: f64) -> Result<Filtration> {
    if threshold.is_nan() || threshold < 0.0 {
        return Err(Error::NegativeThreshold(threshold));
    }
    let n = cloud.len();
    let mut pending = Vec::new();
    for v in 0..n {
        pending.push(Pending {
            value: 0.0,
            dim: 0,
            verts: [v, 0, 0],
        });
    }

    // Sorted upper neighbor lists with edge lengths.
    let mut upper: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (i, up) in upper.iter_mut().enumerate() {
        for j in i + 1..n {
            let d = cloud.distance(i, j);
            if d <= threshold {
                up.push((j, d));
                pending.push(Pending {
                    value: d,
                    dim: 1,
                    verts: [i, j, 0],
                });
            }
        }
    }

    for i in 0..n {
        for (a, &(j, dij)) in upper[i].iter().enumerate() {
            // k > j adjacent to both i and j.
            let (ni, nj) = (&upper[i][a + 1..], &upper[j]);
            let (mut p, mut q) = (0, 0);
            while p < ni.len() && q < nj.len() {
                match ni[p].0.cmp(&nj[q].0) {
                    std::cmp::Ordering::Less => p += 1,
                    std::cmp::Ordering::Greater => q += 1,
                    std::cmp::Ordering::Equal => {
                        let value = dij.max(ni[p].1).max(nj[q].1);
                        pending.push(Pending {
                            value,
                            dim: 2,
                            verts: [i, j, ni[p].0],
                        });
                        p += 1;
                        q += 1;
                    }
                }
            }
        }
    }

    pending.sort_by(|a, b| {
        a.value
            .total_cmp(&b.value)
            .then_with(|| a.key().cmp(&b.key()))
    });

    let mut cells = Vec::with_capacity(pending.len());
    let mut edge_id = std::collections::HashMap::new();
    let mut vertex_id = vec![0usize; n];
    for (pos, s) in pending.iter().enumerate() {
        let id = pos + 1;
        let cell = match s.dim {
            0 => {
                vertex_id[s.verts[0]] = id;
                Cell::vertex(id)
            }
            1 => {
                let [i, j, _] = s.verts;
                edge_id.insert((i, j), id);
                Cell::edge(id, vertex_id[i], vertex_id[j], s.value)
            }
            _ => {
                let [i, j, k] = s.verts;
                let mut es = vec![edge_id[&(i, j)], edge_id[&(j, k)], edge_id[&(i, k)]];
                es.sort_unstable();
                Cell::face(id, es)
            }
        };
        cells.push(cell.with_value(s.value));
    }
    Filtration::new(cells)
}
