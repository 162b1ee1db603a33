//! Levi-Civita connection and Riemann curvature of Nil₃ on the frame.

use crate::error::{Error, Result};
use crate::frame::{metric_dot, FrameVector};

/// Index of a frame vector, `1..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FrameIndex(u8);

impl FrameIndex {
    pub const ALL: [FrameIndex; 3] = [FrameIndex(1), FrameIndex(2), FrameIndex(3)];

    pub fn new(i: usize) -> Result<Self> {
        match i {
            1..=3 => Ok(Self(i as u8)),
            _ => Err(Error::IndexOutOfRange(i)),
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    pub fn vector(self) -> FrameVector {
        FrameVector::basis(self.get()).expect("index validated on construction")
    }
}

const H: f64 = 0.5;

// NABLA[i][j] = ∇_{e_{i+1}} e_{j+1}
const NABLA: [[FrameVector; 3]; 3] = [
    [FrameVector::new(0.0, 0.0, 0.0), FrameVector::new(0.0, 0.0, H), FrameVector::new(0.0, -H, 0.0)],
    [FrameVector::new(0.0, 0.0, -H), FrameVector::new(0.0, 0.0, 0.0), FrameVector::new(H, 0.0, 0.0)],
    [FrameVector::new(0.0, -H, 0.0), FrameVector::new(H, 0.0, 0.0), FrameVector::new(0.0, 0.0, 0.0)],
];

/// `∇̃_{e_i} e_j`; constant over Nil₃.
pub fn connection_table(i: usize, j: usize) -> Result<FrameVector> {
    let (i, j) = (FrameIndex::new(i)?, FrameIndex::new(j)?);
    Ok(NABLA[i.get() - 1][j.get() - 1])
}

/// Lie bracket `[e_i, e_j]` of the frame fields.
pub fn frame_bracket(i: FrameIndex, j: FrameIndex) -> FrameVector {
    match (i.get(), j.get()) {
        (1, 2) => FrameVector::E3,
        (2, 1) => -FrameVector::E3,
        _ => FrameVector::ZERO,
    }
}

/// `∇̃_X Y` where `dy` holds the derivative of the frame components of `Y`
/// along `X`. The remaining term expands `X` and `Y` over the constant
/// connection table.
pub fn covariant_derivative(x: FrameVector, y: FrameVector, dy: FrameVector) -> FrameVector {
    let (xa, ya) = (x.to_array(), y.to_array());
    let mut out = dy.to_array();
    for (i, xi) in xa.iter().enumerate() {
        for (j, yj) in ya.iter().enumerate() {
            let c = xi * yj;
            if c != 0.0 {
                let n = NABLA[i][j].to_array();
                for k in 0..3 {
                    out[k] += c * n[k];
                }
            }
        }
    }
    out.into()
}

/// `R̃(X,Y)Z = −¾(⟨Y,Z⟩X − ⟨X,Z⟩Y) + ⟨Y,e₃⟩⟨Z,e₃⟩X − ⟨X,e₃⟩⟨Z,e₃⟩Y
///           + ⟨X,e₃⟩⟨Y,Z⟩e₃ − ⟨Y,e₃⟩⟨X,Z⟩e₃`
pub fn curvature_tensor(x: FrameVector, y: FrameVector, z: FrameVector) -> FrameVector {
    let (yz, xz) = (metric_dot(y, z), metric_dot(x, z));
    let (x3, y3, z3) = (x.a3, y.a3, z.a3);
    -0.75 * (yz * x - xz * y) + (y3 * z3) * x - (x3 * z3) * y + (x3 * yz - y3 * xz) * FrameVector::E3
}

/// Sectional curvature of the plane spanned by `u, v` (not necessarily
/// orthonormal).
pub fn sectional_curvature(u: FrameVector, v: FrameVector) -> f64 {
    let area = metric_dot(u, u) * metric_dot(v, v) - metric_dot(u, v) * metric_dot(u, v);
    metric_dot(curvature_tensor(u, v, v), u) / area
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: FrameVector, b: FrameVector, tol: f64) -> bool {
        (a - b).to_array().iter().all(|c| c.abs() <= tol)
    }

    fn e(i: usize) -> FrameVector {
        FrameVector::basis(i).unwrap()
    }

    #[test]
    fn table_entries() {
        assert_eq!(connection_table(1, 2).unwrap(), FrameVector::new(0.0, 0.0, 0.5));
        assert_eq!(connection_table(3, 3).unwrap(), FrameVector::ZERO);
        assert_eq!(connection_table(3, 1).unwrap(), FrameVector::new(0.0, -0.5, 0.0));
        assert_eq!(connection_table(0, 1), Err(Error::IndexOutOfRange(0)));
        assert_eq!(connection_table(2, 4), Err(Error::IndexOutOfRange(4)));
    }

    #[test]
    fn torsion_free() {
        for i in FrameIndex::ALL {
            for j in FrameIndex::ALL {
                let t = connection_table(i.get(), j.get()).unwrap()
                    - connection_table(j.get(), i.get()).unwrap();
                assert_eq!(t, frame_bracket(i, j), "({i:?}, {j:?})");
            }
        }
    }

    #[test]
    fn metric_compatible() {
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    let s = metric_dot(connection_table(i, j).unwrap(), e(k))
                        + metric_dot(e(j), connection_table(i, k).unwrap());
                    assert_eq!(s, 0.0, "({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn covariant_derivative_examples() {
        let d = covariant_derivative(FrameVector::E1, FrameVector::E3, FrameVector::ZERO);
        assert_eq!(d, FrameVector::new(0.0, -0.5, 0.0));
        let d = covariant_derivative(FrameVector::E2, FrameVector::E2, FrameVector::ZERO);
        assert_eq!(d, FrameVector::ZERO);
        // Y = x e₁ along the e₁-curve through x = 1: Leibniz gives dY only.
        let d = covariant_derivative(FrameVector::E1, FrameVector::new(1.0, 0.0, 0.0), FrameVector::E1);
        assert_eq!(d, FrameVector::E1);
    }

    #[test]
    fn curvature_examples() {
        let r = curvature_tensor(e(1), e(2), e(2));
        assert!(close(r, FrameVector::new(-0.75, 0.0, 0.0), 1e-15));
        let r = curvature_tensor(e(1), e(3), e(3));
        assert!(close(r, FrameVector::new(0.25, 0.0, 0.0), 1e-15));
    }

    #[test]
    fn sectional_curvatures_of_frame_planes() {
        assert!((metric_dot(curvature_tensor(e(1), e(2), e(2)), e(1)) + 0.75).abs() < 1e-14);
        assert!((metric_dot(curvature_tensor(e(1), e(3), e(3)), e(1)) - 0.25).abs() < 1e-14);
        assert!((metric_dot(curvature_tensor(e(2), e(3), e(3)), e(2)) - 0.25).abs() < 1e-14);
    }

    fn fv() -> impl Strategy<Value = FrameVector> {
        (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b, c)| FrameVector::new(a, b, c))
    }

    proptest! {
        #[test]
        fn antisymmetric_in_first_pair(x in fv(), y in fv(), z in fv()) {
            let s = curvature_tensor(x, y, z) + curvature_tensor(y, x, z);
            prop_assert!(close(s, FrameVector::ZERO, 1e-14));
            prop_assert!(close(curvature_tensor(x, x, z), FrameVector::ZERO, 1e-14));
        }

        #[test]
        fn antisymmetric_in_last_pair(x in fv(), y in fv(), z in fv(), w in fv()) {
            let s = metric_dot(curvature_tensor(x, y, z), w) + metric_dot(curvature_tensor(x, y, w), z);
            prop_assert!(s.abs() <= 1e-13);
        }

        #[test]
        fn first_bianchi(x in fv(), y in fv(), z in fv()) {
            let s = curvature_tensor(x, y, z) + curvature_tensor(y, z, x) + curvature_tensor(z, x, y);
            prop_assert!(close(s, FrameVector::ZERO, 1e-13));
        }

        #[test]
        fn sectional_curvature_range(u in fv(), v in fv()) {
            let area = metric_dot(u, u) * metric_dot(v, v) - metric_dot(u, v).powi(2);
            prop_assume!(area > 1e-3);
            let k = sectional_curvature(u, v);
            prop_assert!((-0.75 - 1e-12..=0.25 + 1e-12).contains(&k), "{k}");
        }

        #[test]
        fn covariant_derivative_is_bilinear(x in fv(), y in fv(), w in fv(), s in -3.0..3.0f64) {
            let lhs = covariant_derivative(x, s * y + w, FrameVector::ZERO);
            let rhs = s * covariant_derivative(x, y, FrameVector::ZERO) + covariant_derivative(x, w, FrameVector::ZERO);
            prop_assert!(close(lhs, rhs, 1e-13));
        }
    }
}
