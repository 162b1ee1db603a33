//! The group law of Nil₃ on ℝ³ and its isometries.

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// A point of Nil₃ ≅ ℝ³ (equivalently a group element).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const IDENTITY: Point3 = Point3 { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl From<[f64; 3]> for Point3 {
    fn from([x, y, z]: [f64; 3]) -> Self {
        Self { x, y, z }
    }
}

/// `(x, y, z) * (x̄, ȳ, z̄) = (x + x̄, y + ȳ, z + z̄ + (x ȳ − x̄ y)/2)` on
/// coordinate triples of any [`Real`] scalar.
#[inline]
pub fn mul_coords<S: Real>(a: [S; 3], b: [S; 3]) -> [S; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2] + (a[0] * b[1] - b[0] * a[1]) * 0.5]
}

/// Rotation by `theta` about the z-axis on coordinate triples.
#[inline]
pub fn rotate_coords<S: Real>(theta: f64, p: [S; 3]) -> [S; 3] {
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    [p[0] * c - p[1] * s, p[0] * s + p[1] * c, p[2]]
}

/// Rotation about the z-axis followed by left translation by `h`.
#[inline]
pub fn isometry_coords<S: Real>(h: Point3, theta: f64, p: [S; 3]) -> [S; 3] {
    let h = [S::constant(h.x), S::constant(h.y), S::constant(h.z)];
    mul_coords(h, rotate_coords(theta, p))
}

pub fn group_mul(a: Point3, b: Point3) -> Point3 {
    mul_coords(a.to_array(), b.to_array()).into()
}

pub fn group_inverse(a: Point3) -> Point3 {
    Point3::new(-a.x, -a.y, -a.z)
}

/// Rotates `p` about the z-axis by `theta` radians and then left-multiplies
/// by `h`. Both maps are isometries of the left-invariant metric.
pub fn apply_isometry(h: Point3, theta: f64, p: Point3) -> Point3 {
    isometry_coords(h, theta, p.to_array()).into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;
    use proptest::prelude::*;

    fn close(a: Point3, b: Point3, tol: f64) -> bool {
        (a.x - b.x).abs() <= tol && (a.y - b.y).abs() <= tol && (a.z - b.z).abs() <= tol
    }

    #[test]
    fn identity_and_basic_products() {
        let p = Point3::new(0.3, -1.2, 4.0);
        assert_eq!(group_mul(Point3::IDENTITY, p), p);
        assert_eq!(group_mul(p, Point3::IDENTITY), p);
        assert_eq!(
            group_mul(Point3::new(1.0, 0.0, 0.0), Point3::new(0.0, 1.0, 0.0)),
            Point3::new(1.0, 1.0, 0.5)
        );
        assert_eq!(group_mul(p, Point3::new(-0.3, 1.2, -4.0)), Point3::IDENTITY);
    }

    #[test]
    fn inverse() {
        assert_eq!(group_inverse(Point3::new(1.0, 2.0, 3.0)), Point3::new(-1.0, -2.0, -3.0));
        assert_eq!(group_inverse(Point3::IDENTITY), Point3::IDENTITY);
    }

    #[test]
    fn isometry_examples() {
        let p = Point3::new(0.7, -0.1, 2.5);
        assert_eq!(apply_isometry(Point3::IDENTITY, 0.0, p), p);
        assert_eq!(
            apply_isometry(Point3::new(1.0, 0.0, 0.0), 0.0, Point3::IDENTITY),
            Point3::new(1.0, 0.0, 0.0)
        );
        let q = apply_isometry(Point3::IDENTITY, PI, Point3::new(1.0, 0.0, 0.0));
        assert!(close(q, Point3::new(-1.0, 0.0, 0.0), 1e-15), "{q:?}");
    }

    #[test]
    fn associativity_is_exact_on_dyadic_inputs() {
        let a = Point3::new(0.5, -1.25, 3.0);
        let b = Point3::new(2.0, 0.75, -0.5);
        let c = Point3::new(-1.5, 0.25, 1.0);
        assert_eq!(group_mul(group_mul(a, b), c), group_mul(a, group_mul(b, c)));
    }

    fn point() -> impl Strategy<Value = Point3> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_map(|(x, y, z)| Point3::new(x, y, z))
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(a in point()) {
            prop_assert!(close(group_mul(group_inverse(a), a), Point3::IDENTITY, 1e-14));
            prop_assert!(close(group_mul(a, group_inverse(a)), Point3::IDENTITY, 1e-14));
        }

        #[test]
        fn associative(a in point(), b in point(), c in point()) {
            let lhs = group_mul(group_mul(a, b), c);
            let rhs = group_mul(a, group_mul(b, c));
            prop_assert!(close(lhs, rhs, 1e-14));
        }
    }
}
