use alloc::vec::Vec;

use super::{grid_points, ParamSurface, SINGULAR_MARGIN};
use crate::error::{Error, Result};
use crate::group::Point3;

/// Triangulated sample grid of a surface.
#[derive(Debug, Clone, PartialEq)]
pub struct GridMesh {
    pub vertices: Vec<Point3>,
    /// Zero-based vertex indices.
    pub faces: Vec<[usize; 3]>,
}

/// Samples `s` on the `nx × ny` grid over its domain and splits every grid
/// cell into two triangles. Samples near excluded lines (or with non-finite
/// coordinates) are dropped together with the triangles that touch them.
pub fn triangulate(s: &ParamSurface, nx: usize, ny: usize) -> Result<GridMesh> {
    let points = grid_points(s.domain(), nx, ny)?;
    let mut index = Vec::with_capacity(points.len());
    let mut vertices = Vec::new();
    for &(x, y) in &points {
        let p = s.point(x, y);
        if s.distance_to_excluded(x, y) < SINGULAR_MARGIN || !p.is_finite() {
            index.push(None);
        } else {
            index.push(Some(vertices.len()));
            vertices.push(p);
        }
    }
    if vertices.is_empty() {
        return Err(Error::EmptyDomain);
    }
    let at = |i: usize, j: usize| index[j * nx + i];
    let mut faces = Vec::new();
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let (a, b, c, d) = (at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1));
            if let (Some(a), Some(b), Some(c)) = (a, b, c) {
                faces.push([a, b, c]);
            }
            if let (Some(a), Some(c), Some(d)) = (a, c, d) {
                faces.push([a, c, d]);
            }
        }
    }
    Ok(GridMesh { vertices, faces })
}
