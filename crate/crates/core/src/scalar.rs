//! Scalars that carry their own derivatives.
//!
//! Every closed-form curve and surface in the crate is written once, generic
//! over [`Real`]. Evaluated with `f64` it yields plain values; evaluated with
//! [`Dual2`] it yields exact first and second partial derivatives in two
//! variables (forward-mode differentiation).

use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

pub trait Real:
    Copy
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<f64, Output = Self>
    + Sub<f64, Output = Self>
    + Mul<f64, Output = Self>
    + Div<f64, Output = Self>
{
    fn constant(c: f64) -> Self;

    /// The underlying real value (derivative parts dropped).
    fn value(self) -> f64;

    fn sqrt(self) -> Self;
    fn ln(self) -> Self;
    fn asinh(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;

    fn recip(self) -> Self {
        Self::constant(1.0) / self
    }

    fn square(self) -> Self {
        self * self
    }
}

impl Real for f64 {
    #[inline]
    fn constant(c: f64) -> Self {
        c
    }
    #[inline]
    fn value(self) -> f64 {
        self
    }
    #[inline]
    fn sqrt(self) -> Self {
        libm::sqrt(self)
    }
    #[inline]
    fn ln(self) -> Self {
        libm::log(self)
    }
    #[inline]
    fn asinh(self) -> Self {
        libm::asinh(self)
    }
    #[inline]
    fn sin(self) -> Self {
        libm::sin(self)
    }
    #[inline]
    fn cos(self) -> Self {
        libm::cos(self)
    }
}

/// Second-order dual number in two variables `(x, y)`.
///
/// Holds a value together with its gradient and the three independent
/// entries of its Hessian.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dual2 {
    pub v: f64,
    pub dx: f64,
    pub dy: f64,
    pub dxx: f64,
    pub dxy: f64,
    pub dyy: f64,
}

impl Dual2 {
    pub const fn constant(v: f64) -> Self {
        Self { v, dx: 0.0, dy: 0.0, dxx: 0.0, dxy: 0.0, dyy: 0.0 }
    }

    /// The independent variable `x` at the given value.
    pub const fn var_x(v: f64) -> Self {
        Self { v, dx: 1.0, dy: 0.0, dxx: 0.0, dxy: 0.0, dyy: 0.0 }
    }

    /// The independent variable `y` at the given value.
    pub const fn var_y(v: f64) -> Self {
        Self { v, dx: 0.0, dy: 1.0, dxx: 0.0, dxy: 0.0, dyy: 0.0 }
    }

    /// Applies a scalar function given its value and first two derivatives
    /// at `self.v` (second-order chain rule).
    #[inline]
    pub fn chain(self, f0: f64, f1: f64, f2: f64) -> Self {
        Self {
            v: f0,
            dx: f1 * self.dx,
            dy: f1 * self.dy,
            dxx: f1 * self.dxx + f2 * self.dx * self.dx,
            dxy: f1 * self.dxy + f2 * self.dx * self.dy,
            dyy: f1 * self.dyy + f2 * self.dy * self.dy,
        }
    }

    pub fn is_finite(&self) -> bool {
        [self.v, self.dx, self.dy, self.dxx, self.dxy, self.dyy]
            .iter()
            .all(|c| c.is_finite())
    }
}

impl Add for Dual2 {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self {
            v: self.v + o.v,
            dx: self.dx + o.dx,
            dy: self.dy + o.dy,
            dxx: self.dxx + o.dxx,
            dxy: self.dxy + o.dxy,
            dyy: self.dyy + o.dyy,
        }
    }
}

impl Sub for Dual2 {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Dual2 {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            v: -self.v,
            dx: -self.dx,
            dy: -self.dy,
            dxx: -self.dxx,
            dxy: -self.dxy,
            dyy: -self.dyy,
        }
    }
}

impl Mul for Dual2 {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Self {
            v: self.v * o.v,
            dx: self.dx * o.v + self.v * o.dx,
            dy: self.dy * o.v + self.v * o.dy,
            dxx: self.dxx * o.v + 2.0 * self.dx * o.dx + self.v * o.dxx,
            dxy: self.dxy * o.v + self.dx * o.dy + self.dy * o.dx + self.v * o.dxy,
            dyy: self.dyy * o.v + 2.0 * self.dy * o.dy + self.v * o.dyy,
        }
    }
}

impl Div for Dual2 {
    type Output = Self;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * Real::recip(o)
    }
}

impl Add<f64> for Dual2 {
    type Output = Self;
    #[inline]
    fn add(mut self, c: f64) -> Self {
        self.v += c;
        self
    }
}

impl Sub<f64> for Dual2 {
    type Output = Self;
    #[inline]
    fn sub(mut self, c: f64) -> Self {
        self.v -= c;
        self
    }
}

impl Mul<f64> for Dual2 {
    type Output = Self;
    #[inline]
    fn mul(self, c: f64) -> Self {
        Self {
            v: self.v * c,
            dx: self.dx * c,
            dy: self.dy * c,
            dxx: self.dxx * c,
            dxy: self.dxy * c,
            dyy: self.dyy * c,
        }
    }
}

impl Div<f64> for Dual2 {
    type Output = Self;
    #[inline]
    fn div(self, c: f64) -> Self {
        self * (1.0 / c)
    }
}

impl Real for Dual2 {
    fn constant(c: f64) -> Self {
        Dual2::constant(c)
    }

    fn value(self) -> f64 {
        self.v
    }

    fn sqrt(self) -> Self {
        let s = libm::sqrt(self.v);
        let d1 = 0.5 / s;
        self.chain(s, d1, -d1 / (2.0 * self.v))
    }

    fn ln(self) -> Self {
        let r = 1.0 / self.v;
        self.chain(libm::log(self.v), r, -r * r)
    }

    fn asinh(self) -> Self {
        let q = 1.0 + self.v * self.v;
        let d1 = 1.0 / libm::sqrt(q);
        self.chain(libm::asinh(self.v), d1, -self.v * d1 / q)
    }

    fn sin(self) -> Self {
        let (s, c) = (libm::sin(self.v), libm::cos(self.v));
        self.chain(s, c, -s)
    }

    fn cos(self) -> Self {
        let (s, c) = (libm::sin(self.v), libm::cos(self.v));
        self.chain(c, -s, -c)
    }

    fn recip(self) -> Self {
        let r = 1.0 / self.v;
        self.chain(r, -r * r, 2.0 * r * r * r)
    }
}
