//! Closed-form profile curves `u(x)` and `v(y)`.

use serde::{Deserialize, Serialize};

use super::spec::Params;
use crate::error::{Error, Result};
use crate::scalar::{Dual2, Real};

/// Sign of the quadratic block of the type-6 `u(x)` profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadraticSign {
    /// `+(ax² + abx + c) / 2(1+a²)`, as printed for type 6.
    #[default]
    AsPrinted,
    /// `−(ax² + abx + c) / 2(1+a²)`, the type-5 sign.
    Mirrored,
}

/// A closed-form profile together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ProfileKind {
    /// `c[(a+t)√(1+(a+t)²) + asinh(a+t)] + v0`
    SolV { a: f64, c: f64, v0: f64 },
    /// `b/(2a+t) + c[(a+t)√(1+(a+t)²) + asinh(a+t)] / 2(2a+t)`
    SolV2 { a: f64, b: f64, c: f64 },
    /// `b/(2a−t) + c[(a−t)√(1+(a−t)²) + asinh(a−t)] / 2(2a−t)`
    SolV3 { a: f64, b: f64, c: f64 },
    /// `−(at² + abt + c)/2(1+a²) + c1(t/2 + b/4)√(4(1+a²)+(2t+b)²)
    ///  + c1(1+a²) ln(2t + b + √(4(1+a²)+(2t+b)²))`
    SolU5 { a: f64, b: f64, c: f64, c1: f64 },
    /// As [`ProfileKind::SolU5`] with the quadratic block's sign chosen by `sign`.
    SolU6 { a: f64, b: f64, c: f64, c1: f64, #[serde(default)] sign: QuadraticSign },
    /// `a/(2(1+a²)) t² + bt + c`
    Poly2 { a: f64, b: f64, c: f64 },
    /// `slope·t + intercept`
    Affine { slope: f64, intercept: f64 },
    /// `a/t + b`
    Reciprocal { a: f64, b: f64 },
    /// `c2·t² + c1·t + c0`
    Quadratic { c2: f64, c1: f64, c0: f64 },
    /// `amplitude·sin(frequency·t + phase)`
    Sine { amplitude: f64, frequency: f64, phase: f64 },
    /// `scale·asinh(t + shift)`
    Asinh { scale: f64, shift: f64 },
}

/// Names of the closed forms that can be built from a [`Params`] record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileTag {
    SolV,
    SolV2,
    SolV3,
    SolU5,
    SolU6,
    Poly2,
    Affine,
    Reciprocal,
}

/// Value and first two derivatives of a profile at one parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileValue {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// `t√(1+t²) + asinh(t)`, the antiderivative block shared by the `SolV*`
/// profiles (with `ln(t + √(1+t²))` evaluated as `asinh(t)`).
fn radical_block<S: Real>(t: S) -> S {
    t * (t * t + 1.0).sqrt() + t.asinh()
}

/// `c1(t/2 + b/4)√(q²+(2t+b)²) + c1(1+a²)ln(2t+b+√(q²+(2t+b)²))` with
/// `q² = 4(1+a²)`; the logarithm is evaluated as `asinh(s/q) + ln q`.
fn u5_radical<S: Real>(t: S, a: f64, b: f64, c1: f64) -> S {
    let k = 1.0 + a * a;
    let q = 2.0 * libm::sqrt(k);
    let s = t * 2.0 + b;
    let root = (s * s + q * q).sqrt();
    (t * 0.5 + b / 4.0) * root * c1 + ((s / q).asinh() + libm::log(q)) * (c1 * k)
}

/// A closed-form profile curve with exact derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProfileFn {
    pub kind: ProfileKind,
}

impl From<ProfileKind> for ProfileFn {
    fn from(kind: ProfileKind) -> Self {
        Self { kind }
    }
}

impl ProfileFn {
    pub fn new(kind: ProfileKind) -> Self {
        Self { kind }
    }

    pub fn affine(slope: f64, intercept: f64) -> Self {
        ProfileKind::Affine { slope, intercept }.into()
    }

    pub fn constant(value: f64) -> Self {
        Self::affine(0.0, value)
    }

    /// The point excluded from the profile's domain, if any.
    pub fn pole(&self) -> Option<f64> {
        match self.kind {
            ProfileKind::SolV2 { a, .. } => Some(-2.0 * a),
            ProfileKind::SolV3 { a, .. } => Some(2.0 * a),
            ProfileKind::Reciprocal { .. } => Some(0.0),
            _ => None,
        }
    }

    /// True when the profile is an affine function of its parameter.
    pub fn is_affine(&self) -> bool {
        match self.kind {
            ProfileKind::Affine { .. } => true,
            ProfileKind::Quadratic { c2, .. } => c2 == 0.0,
            ProfileKind::Poly2 { a, .. } => a == 0.0,
            ProfileKind::Sine { amplitude, frequency, .. } => amplitude == 0.0 || frequency == 0.0,
            ProfileKind::Asinh { scale, .. } => scale == 0.0,
            ProfileKind::SolV { c, .. } => c == 0.0,
            ProfileKind::Reciprocal { a, .. } => a == 0.0,
            ProfileKind::SolU5 { a, c1, .. } | ProfileKind::SolU6 { a, c1, .. } => a == 0.0 && c1 == 0.0,
            ProfileKind::SolV2 { .. } | ProfileKind::SolV3 { .. } => false,
        }
    }

    /// Evaluates the closed form on any [`Real`] scalar. No pole check.
    pub fn value<S: Real>(&self, t: S) -> S {
        match self.kind {
            ProfileKind::SolV { a, c, v0 } => radical_block(t + a) * c + v0,
            ProfileKind::SolV2 { a, b, c } => {
                let den = t + 2.0 * a;
                (radical_block(t + a) * (c / 2.0) + b) / den
            }
            ProfileKind::SolV3 { a, b, c } => {
                let den = -t + 2.0 * a;
                (radical_block(-t + a) * (c / 2.0) + b) / den
            }
            ProfileKind::SolU5 { a, b, c, c1 } => {
                let quad = (t * t * a + t * (a * b) + c) / (2.0 * (1.0 + a * a));
                -quad + u5_radical(t, a, b, c1)
            }
            ProfileKind::SolU6 { a, b, c, c1, sign } => {
                let quad = (t * t * a + t * (a * b) + c) / (2.0 * (1.0 + a * a));
                let quad = match sign {
                    QuadraticSign::AsPrinted => quad,
                    QuadraticSign::Mirrored => -quad,
                };
                quad + u5_radical(t, a, b, c1)
            }
            ProfileKind::Poly2 { a, b, c } => t * t * (a / (2.0 * (1.0 + a * a))) + t * b + c,
            ProfileKind::Affine { slope, intercept } => t * slope + intercept,
            ProfileKind::Reciprocal { a, b } => t.recip() * a + b,
            ProfileKind::Quadratic { c2, c1, c0 } => t * t * c2 + t * c1 + c0,
            ProfileKind::Sine { amplitude, frequency, phase } => (t * frequency + phase).sin() * amplitude,
            ProfileKind::Asinh { scale, shift } => (t + shift).asinh() * scale,
        }
    }

    /// Value with exact first and second derivatives.
    pub fn eval(&self, t: f64) -> Result<ProfileValue> {
        if let Some(pole) = self.pole() {
            if (t - pole).abs() <= 1e-12 * (1.0 + pole.abs()) {
                return Err(Error::EvalAtPole { pole });
            }
        }
        let d = self.value(Dual2::var_x(t));
        if !d.is_finite() {
            return Err(Error::EvalAtPole { pole: t });
        }
        Ok(ProfileValue { value: d.v, d1: d.dx, d2: d.dxx })
    }
}

/// Builds a closed-form profile from named parameters.
///
/// `Affine` reads slope `a` and intercept `b`; `Reciprocal` is `a/t + b`.
/// `SolU6` uses the printed sign of the quadratic block.
pub fn profile_closed_form(tag: ProfileTag, params: &Params) -> Result<ProfileFn> {
    let p = |name| params.require(name);
    let kind = match tag {
        ProfileTag::SolV => ProfileKind::SolV { a: p("a")?, c: p("c")?, v0: p("v0")? },
        ProfileTag::SolV2 => ProfileKind::SolV2 { a: p("a")?, b: p("b")?, c: p("c")? },
        ProfileTag::SolV3 => ProfileKind::SolV3 { a: p("a")?, b: p("b")?, c: p("c")? },
        ProfileTag::SolU5 => ProfileKind::SolU5 { a: p("a")?, b: p("b")?, c: p("c")?, c1: p("c1")? },
        ProfileTag::SolU6 => ProfileKind::SolU6 {
            a: p("a")?,
            b: p("b")?,
            c: p("c")?,
            c1: p("c1")?,
            sign: QuadraticSign::AsPrinted,
        },
        ProfileTag::Poly2 => ProfileKind::Poly2 { a: p("a")?, b: p("b")?, c: p("c")? },
        ProfileTag::Affine => ProfileKind::Affine { slope: p("a")?, intercept: p("b")? },
        ProfileTag::Reciprocal => ProfileKind::Reciprocal { a: p("a")?, b: p("b")? },
    };
    Ok(kind.into())
}
