//! Tangent vectors in coordinates and in the orthonormal frame
//! `e₁ = ∂x − (y/2)∂z`, `e₂ = ∂y + (x/2)∂z`, `e₃ = ∂z`.

use core::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::group::Point3;

/// Tangent components in the coordinate basis `∂x, ∂y, ∂z`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CoordVector {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl CoordVector {
    pub const ZERO: CoordVector = CoordVector { dx: 0.0, dy: 0.0, dz: 0.0 };

    pub const fn new(dx: f64, dy: f64, dz: f64) -> Self {
        Self { dx, dy, dz }
    }

    pub fn is_finite(&self) -> bool {
        self.dx.is_finite() && self.dy.is_finite() && self.dz.is_finite()
    }
}

/// Tangent components in the frame `e₁, e₂, e₃`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FrameVector {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl FrameVector {
    pub const ZERO: FrameVector = FrameVector { a1: 0.0, a2: 0.0, a3: 0.0 };
    pub const E1: FrameVector = FrameVector { a1: 1.0, a2: 0.0, a3: 0.0 };
    pub const E2: FrameVector = FrameVector { a1: 0.0, a2: 1.0, a3: 0.0 };
    pub const E3: FrameVector = FrameVector { a1: 0.0, a2: 0.0, a3: 1.0 };

    pub const fn new(a1: f64, a2: f64, a3: f64) -> Self {
        Self { a1, a2, a3 }
    }

    /// Frame vector `e_i` for `i` in `1..=3`.
    pub fn basis(i: usize) -> Option<Self> {
        match i {
            1 => Some(Self::E1),
            2 => Some(Self::E2),
            3 => Some(Self::E3),
            _ => None,
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.a1, self.a2, self.a3]
    }

    /// Cross product of frame components. Since the frame is orthonormal
    /// this is the metric cross product on the tangent space.
    pub fn cross(self, o: Self) -> Self {
        Self {
            a1: self.a2 * o.a3 - self.a3 * o.a2,
            a2: self.a3 * o.a1 - self.a1 * o.a3,
            a3: self.a1 * o.a2 - self.a2 * o.a1,
        }
    }

    pub fn norm_squared(self) -> f64 {
        metric_dot(self, self)
    }
}

impl From<[f64; 3]> for FrameVector {
    fn from([a1, a2, a3]: [f64; 3]) -> Self {
        Self { a1, a2, a3 }
    }
}

impl Add for FrameVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3)
    }
}

impl Sub for FrameVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a1 - o.a1, self.a2 - o.a2, self.a3 - o.a3)
    }
}

impl Neg for FrameVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a1, -self.a2, -self.a3)
    }
}

impl Mul<FrameVector> for f64 {
    type Output = FrameVector;
    fn mul(self, v: FrameVector) -> FrameVector {
        FrameVector::new(self * v.a1, self * v.a2, self * v.a3)
    }
}

/// Frame components of the coordinate vector `v` based at `p`.
///
/// The `e₃` component is the 1-form `dz + ½(y dx − x dy)` applied to `v`.
pub fn frame_components(p: Point3, v: CoordVector) -> FrameVector {
    FrameVector::new(v.dx, v.dy, v.dz + 0.5 * (p.y * v.dx - p.x * v.dy))
}

/// Inverse of [`frame_components`] at the same base point.
pub fn coord_components(p: Point3, w: FrameVector) -> CoordVector {
    CoordVector::new(w.a1, w.a2, w.a3 - 0.5 * (p.y * w.a1 - p.x * w.a2))
}

/// The metric on frame components; the frame is orthonormal.
pub fn metric_dot(u: FrameVector, w: FrameVector) -> f64 {
    u.a1 * w.a1 + u.a2 * w.a2 + u.a3 * w.a3
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Expanding `dx² + dy² + (dz + ½(y dx − x dy))²` gives the coordinate
    /// matrix of the metric at `p`.
    fn metric_in_coordinates(p: Point3, v: CoordVector, w: CoordVector) -> f64 {
        let (x, y) = (p.x, p.y);
        let g = [
            [1.0 + y * y / 4.0, -x * y / 4.0, y / 2.0],
            [-x * y / 4.0, 1.0 + x * x / 4.0, -x / 2.0],
            [y / 2.0, -x / 2.0, 1.0],
        ];
        let (v, w) = ([v.dx, v.dy, v.dz], [w.dx, w.dy, w.dz]);
        (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| g[i][j] * v[i] * w[j]).sum()
    }

    #[test]
    fn frame_examples() {
        assert_eq!(
            frame_components(Point3::IDENTITY, CoordVector::new(1.0, 2.0, 3.0)),
            FrameVector::new(1.0, 2.0, 3.0)
        );
        assert_eq!(
            frame_components(Point3::new(-4.0, 7.5, 1.0), CoordVector::new(0.0, 0.0, 1.0)),
            FrameVector::E3
        );
        assert_eq!(
            frame_components(Point3::new(2.0, 0.0, 5.0), CoordVector::new(0.0, 1.0, 0.0)),
            FrameVector::new(0.0, 1.0, -1.0)
        );
    }

    #[test]
    fn orthonormal_basis() {
        assert_eq!(metric_dot(FrameVector::E1, FrameVector::E1), 1.0);
        assert_eq!(metric_dot(FrameVector::E1, FrameVector::E2), 0.0);
        assert_eq!(FrameVector::basis(4), None);
    }

    fn p3() -> impl Strategy<Value = Point3> {
        (-5.0..5.0f64, -5.0..5.0f64, -5.0..5.0f64).prop_map(|(x, y, z)| Point3::new(x, y, z))
    }

    fn cv() -> impl Strategy<Value = CoordVector> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64).prop_map(|(a, b, c)| CoordVector::new(a, b, c))
    }

    proptest! {
        #[test]
        fn metric_dot_is_the_coordinate_metric(p in p3(), v in cv(), w in cv()) {
            let lhs = metric_dot(frame_components(p, v), frame_components(p, w));
            let rhs = metric_in_coordinates(p, v, w);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        }

        #[test]
        fn frame_round_trip(
            x in -1.0..1.0f64, y in -1.0..1.0f64,
            a in -1.0..1.0f64, b in -1.0..1.0f64, c in -1.0..1.0f64,
        ) {
            let (p, v) = (Point3::new(x, y, 0.0), CoordVector::new(a, b, c));
            let back = coord_components(p, frame_components(p, v));
            prop_assert!((back.dx - v.dx).abs() <= 1e-15);
            prop_assert!((back.dy - v.dy).abs() <= 1e-15);
            prop_assert!((back.dz - v.dz).abs() <= 1e-15);
        }

        #[test]
        fn positive_definite(a in -3.0..3.0f64, b in -3.0..3.0f64, c in -3.0..3.0f64) {
            let v = FrameVector::new(a, b, c);
            prop_assert!(metric_dot(v, v) >= 0.0);
            if v != FrameVector::ZERO {
                prop_assert!(metric_dot(v, v) > 0.0);
            }
        }
    }
}
