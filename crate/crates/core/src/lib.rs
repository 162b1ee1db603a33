//! Riemannian geometry of the Heisenberg group Nil₃ and its minimal
//! translation surfaces.
//!
//! The crate is `no_std` (it needs `alloc`). It is organised bottom-up:
//!
//! * [`group`], [`frame`] and [`connection`] hold the exact algebra of Nil₃:
//!   the group law, the left-invariant orthonormal frame `e₁, e₂, e₃`, the
//!   Levi-Civita connection table and the curvature tensor.
//! * [`surface`] turns parametric immersions into 2-jets and computes the
//!   first fundamental form, mean curvature, the minimality residual and the
//!   Gaussian curvature (Gauss equation and Brioschi formula).
//! * [`families`] builds the six families of minimal translation surfaces,
//!   their closed-form profile curves and the degenerate "missing case"
//!   parametrizations.
//! * [`ode`] is an independent check: it evaluates the minimality ODEs
//!   directly and re-derives the closed-form profiles with RK4.
//! * [`report`] collects the arbitration and flatness reports.
#![no_std]
// `!(x < tol)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod connection;
pub mod error;
pub mod families;
pub mod frame;
pub mod group;
pub mod ode;
pub mod report;
pub mod scalar;
pub mod surface;

pub use connection::{connection_table, covariant_derivative, curvature_tensor, FrameIndex};
pub use error::{Error, Result};
pub use frame::{frame_components, metric_dot, CoordVector, FrameVector};
pub use group::{apply_isometry, group_inverse, group_mul, Point3};
pub use scalar::{Dual2, Real};
