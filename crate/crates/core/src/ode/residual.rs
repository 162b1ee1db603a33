//! Pointwise minimality equations in terms of the profiles `u(x)`, `v(y)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{FamilyProfiles, ProfileFn, ProfileValue, TranslationSurface, Type3Form};
use crate::scalar::Dual2;
use crate::surface::{minimality_residual, Immersion, Jet2};

/// Coefficients of the type-2 and type-3 equations, functions of `y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TCoeffs {
    pub t0: f64,
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub t4: f64,
}

/// Coefficients of the type-5 equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PCoeffs {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
}

pub fn t_coefficients(v: &ProfileFn, y: f64) -> Result<TCoeffs> {
    let ProfileValue { value: v, d1, d2 } = v.eval(y)?;
    let m = v - y * d1;
    Ok(TCoeffs {
        t0: 4.0 + 4.0 * d1 * d1 + m * m,
        t1: 2.0 * (m - 2.0 * (1.0 + 2.0 * y * y) * d2),
        t2: -10.0 * y * d2,
        t3: -4.0 * d2,
        t4: 2.0 * y * v - 2.0 * (2.0 + y * y) * d1 - 2.0 * y * (1.0 + y * y) * d2,
    })
}

pub fn p_coefficients(v: &ProfileFn, x: f64, y: f64) -> Result<PCoeffs> {
    let ProfileValue { value: v, d1, d2 } = v.eval(y)?;
    Ok(PCoeffs { p1: 2.0 * x + v - y * d1, p2: 2.0 * d1, p3: 2.0 * d2, p4: 2.0 * y * d2 })
}

/// `T₀u'' + T₁u' + T₂u'² + T₃u'³ + T₄`
pub fn type2_t_form(u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    let t = t_coefficients(v, y)?;
    let u = u.eval(x)?;
    let p = u.d1;
    Ok(t.t0 * u.d2 + t.t1 * p + t.t2 * p * p + t.t3 * p * p * p + t.t4)
}

/// The type-2 minimality condition before collecting powers of `u'`.
pub fn type2_display(u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    let ProfileValue { value: _, d1: up, d2: upp } = u.eval(x)?;
    let ProfileValue { value: v, d1: vp, d2: vpp } = v.eval(y)?;
    Ok(2.0 * v * (y + up - y * vp * upp) - 2.0 * vp * (2.0 + y * y + y * up)
        - 2.0 * vpp * (y + 2.0 * up) * (1.0 + y * y + 2.0 * y * up + up * up)
        + upp * (4.0 + v * v + (4.0 + y * y) * vp * vp))
}

/// `T₀u'' + T₁u' − T₂u'² + T₃u'³ − T₄`
pub fn type3_t_form(u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    let t = t_coefficients(v, y)?;
    let u = u.eval(x)?;
    let p = u.d1;
    Ok(t.t0 * u.d2 + t.t1 * p - t.t2 * p * p + t.t3 * p * p * p - t.t4)
}

/// `(4 + P₁² + P₂²)u'' − 2(P₁ + P₃)u' + P₄u'² − 2P₃u'³ + (2P₂ + P₄)`
pub fn type5_p_form(u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    let p = p_coefficients(v, x, y)?;
    let u = u.eval(x)?;
    let q = u.d1;
    Ok((4.0 + p.p1 * p.p1 + p.p2 * p.p2) * u.d2 - 2.0 * (p.p1 + p.p3) * q + p.p4 * q * q
        - 2.0 * p.p3 * q * q * q
        + (2.0 * p.p2 + p.p4))
}

/// The type-5 minimality condition before the `P` notation.
pub fn type5_display(u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    let ProfileValue { value: _, d1: up, d2: upp } = u.eval(x)?;
    let ProfileValue { value: v, d1: vp, d2: vpp } = v.eval(y)?;
    let s = v + 2.0 * x;
    Ok(upp * (-2.0 * y * s * vp + (y * y + 4.0) * vp * vp + s * s + 4.0) - 4.0 * up * up * up * vpp
        + 2.0 * y * up * up * vpp
        - 2.0 * up * (2.0 * (vpp + x) - y * vp + v)
        + 2.0 * (y * vpp + 2.0 * vp))
}

/// A candidate type-6 equation obtained from the type-5 form by flipping the
/// sign of the `P₄u'²` term and of the constant term. Not part of the
/// classification; tests compare it against the geometric residual.
pub fn type6_p_form_candidate(u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    let p = p_coefficients(v, x, y)?;
    let u = u.eval(x)?;
    let q = u.d1;
    Ok((4.0 + p.p1 * p.p1 + p.p2 * p.p2) * u.d2 - 2.0 * (p.p1 + p.p3) * q - p.p4 * q * q
        - 2.0 * p.p3 * q * q * q
        - (2.0 * p.p2 + p.p4))
}

/// Geometric minimality residual of the type-`family` surface generated by
/// `u` and `v`, evaluated at `(x, y)`.
pub fn geometric_residual(family: u8, form: Type3Form, u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    if !(1..=6).contains(&family) {
        return Err(Error::InvalidSpec(alloc::format!("type must be 1..6, got {family}")));
    }
    u.eval(x)?;
    v.eval(y)?;
    let s = TranslationSurface { family, form, profiles: FamilyProfiles { u: *u, v: *v } };
    let r = s.jet(Dual2::var_x(x), Dual2::var_y(y)).expect("translation surfaces carry jets");
    let jet = Jet2::from_duals(x, y, r);
    minimality_residual(&jet)
}

/// Left-hand side of the minimality equation of the given type.
///
/// Types 1 to 5 use the displayed ODEs: type 1 and type 4 in expanded form,
/// type 2 and type 3 through [`TCoeffs`], type 5 through [`PCoeffs`]. No
/// type-6 equation is displayed, so type 6 returns the geometric residual of
/// its parametrization.
pub fn ode_residual(family: u8, u: &ProfileFn, v: &ProfileFn, x: f64, y: f64) -> Result<f64> {
    match family {
        1 => {
            let (u, v) = (u.eval(x)?, v.eval(y)?);
            let s = u.d1 + y;
            Ok(u.d2 * (1.0 + v.d1 * v.d1) - s * v.d1 + v.d2 * (1.0 + s * s))
        }
        2 => type2_t_form(u, v, x, y),
        3 => type3_t_form(u, v, x, y),
        4 => {
            let (u, v) = (u.eval(x)?, v.eval(y)?);
            let s = v.d1 - x;
            Ok((1.0 + u.d1 * u.d1) * v.d2 + s * u.d1 + (1.0 + s * s) * u.d2)
        }
        5 => type5_p_form(u, v, x, y),
        6 => geometric_residual(6, Type3Form::Body, u, v, x, y),
        t => Err(Error::InvalidSpec(alloc::format!("type must be 1..6, got {t}"))),
    }
}
