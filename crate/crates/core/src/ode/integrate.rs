//! Fixed-step RK4 for the second-order profile equations.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::ProfileFn;

/// A second-order profile equation `y'' = f(t, y, y')`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "ode", rename_all = "snake_case")]
pub enum OdeKind {
    /// `−(a+t)y' + s·(1+(a+t)²)y'' = 0`; `s = 1` is the type-1 profile
    /// equation, other values perturb it.
    Type1 { a: f64, scale: f64 },
    /// `(a+t)w' = (1+(a+t)²)w''` for `w = (2a+t)v` of type 2.
    Type2W { a: f64 },
    /// `2(a−t)v + 2(2+t(t−a))v' − 2(2a−t)(1+(a−t)²)v'' = 0`, the type-3
    /// equation for `u = ax + u0`. Singular at `t = 2a`.
    Type3 { a: f64 },
    /// `[4+4a²+(2t+b)²]u'' − 2(2t+b)u' + 4a = 0`
    Type5 { a: f64, b: f64 },
    /// `[4+4a²+(2t+b)²]u'' − 2(2t+b)u' − 4a = 0`
    Type6 { a: f64, b: f64 },
}

impl OdeKind {
    pub fn type1(a: f64) -> Self {
        OdeKind::Type1 { a, scale: 1.0 }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OdeKind::Type1 { .. } => "type1",
            OdeKind::Type2W { .. } => "type2_w",
            OdeKind::Type3 { .. } => "type3",
            OdeKind::Type5 { .. } => "type5",
            OdeKind::Type6 { .. } => "type6",
        }
    }

    /// Zero of the leading coefficient, if any.
    pub fn pole(&self) -> Option<f64> {
        match *self {
            OdeKind::Type3 { a } => Some(2.0 * a),
            _ => None,
        }
    }

    /// `y''` as a function of `(t, y, y')`.
    pub fn second_derivative(&self, t: f64, y: f64, p: f64) -> f64 {
        match *self {
            OdeKind::Type1 { a, scale } => (a + t) * p / (scale * (1.0 + (a + t) * (a + t))),
            OdeKind::Type2W { a } => (a + t) * p / (1.0 + (a + t) * (a + t)),
            OdeKind::Type3 { a } => {
                let s = a - t;
                (2.0 * s * y + 2.0 * (2.0 - t * s) * p) / (2.0 * (2.0 * a - t) * (1.0 + s * s))
            }
            OdeKind::Type5 { a, b } | OdeKind::Type6 { a, b } => {
                let sign = if matches!(self, OdeKind::Type5 { .. }) { 1.0 } else { -1.0 };
                let s = 2.0 * t + b;
                (2.0 * s * p - sign * 4.0 * a) / (4.0 + 4.0 * a * a + s * s)
            }
        }
    }
}

/// Solution samples on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OdeSolution {
    pub t: Vec<f64>,
    pub value: Vec<f64>,
    pub slope: Vec<f64>,
    pub method: String,
    pub step: f64,
}

impl OdeSolution {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

fn rk4_step(ode: &OdeKind, t: f64, y: f64, p: f64, h: f64) -> (f64, f64) {
    let f = |t, y, p| (p, ode.second_derivative(t, y, p));
    let (k1y, k1p) = f(t, y, p);
    let (k2y, k2p) = f(t + h / 2.0, y + h / 2.0 * k1y, p + h / 2.0 * k1p);
    let (k3y, k3p) = f(t + h / 2.0, y + h / 2.0 * k2y, p + h / 2.0 * k2p);
    let (k4y, k4p) = f(t + h, y + h * k3y, p + h * k3p);
    (y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y), p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p))
}

/// Marches from `t0` to `end` in equal steps no longer than `step`.
fn march(ode: &OdeKind, t0: f64, y0: (f64, f64), end: f64, step: f64) -> Result<Vec<(f64, f64, f64)>> {
    let len = (end - t0).abs();
    let n = libm::ceil(len / step - 1e-9).max(0.0) as usize;
    let mut out = Vec::with_capacity(n + 1);
    out.push((t0, y0.0, y0.1));
    if n == 0 {
        return Ok(out);
    }
    let h = (end - t0) / n as f64;
    let (mut y, mut p) = y0;
    for i in 0..n {
        let t = t0 + h * i as f64;
        (y, p) = rk4_step(ode, t, y, p, h);
        let t_next = if i + 1 == n { end } else { t0 + h * (i + 1) as f64 };
        if !(y.is_finite() && p.is_finite()) {
            return Err(Error::StepTooLarge { t: t_next });
        }
        out.push((t_next, y, p));
    }
    Ok(out)
}

/// Classical fourth-order Runge–Kutta on the first-order system `(y, y')`,
/// from initial data `y0 = (y(t0), y'(t0))` across `span`.
pub fn integrate_profile(ode: OdeKind, t0: f64, y0: (f64, f64), span: (f64, f64), step: f64) -> Result<OdeSolution> {
    let (lo, hi) = span;
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidIntegration("step must be positive and finite"));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidIntegration("span must be finite with lo < hi"));
    }
    if !(lo <= t0 && t0 <= hi) {
        return Err(Error::InvalidIntegration("span must contain t0"));
    }
    if !(y0.0.is_finite() && y0.1.is_finite()) {
        return Err(Error::InvalidIntegration("initial data must be finite"));
    }
    if let Some(pole) = ode.pole() {
        if lo <= pole && pole <= hi {
            return Err(Error::PoleInSpan { pole });
        }
    }
    let back = march(&ode, t0, y0, lo, step)?;
    let fwd = march(&ode, t0, y0, hi, step)?;
    let n = back.len() + fwd.len() - 1;
    let mut sol = OdeSolution {
        t: Vec::with_capacity(n),
        value: Vec::with_capacity(n),
        slope: Vec::with_capacity(n),
        method: String::from("rk4"),
        step,
    };
    for &(t, y, p) in back.iter().rev().chain(fwd.iter().skip(1)) {
        sol.t.push(t);
        sol.value.push(y);
        sol.slope.push(p);
    }
    Ok(sol)
}

/// `max |numeric(t) − closed(t)|` over the solution grid.
pub fn compare_profiles(numeric: &OdeSolution, closed: &ProfileFn) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (&t, &y) in numeric.t.iter().zip(&numeric.value) {
        let c = closed.eval(t).map_err(|_| Error::DomainMismatch { t })?;
        worst = worst.max((y - c.value).abs());
    }
    Ok(worst)
}
