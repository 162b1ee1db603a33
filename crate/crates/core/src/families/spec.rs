//! Parameter records of the six classified families.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::profile::QuadraticSign;
use crate::error::{Error, Result};

/// Named real parameters. Absent entries read as zero.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
}

pub const PARAM_NAMES: [&str; 7] = ["a", "b", "c", "d", "u0", "v0", "c1"];

impl Params {
    pub fn get(&self, name: &str) -> Option<f64> {
        match name {
            "a" => self.a,
            "b" => self.b,
            "c" => self.c,
            "d" => self.d,
            "u0" => self.u0,
            "v0" => self.v0,
            "c1" => self.c1,
            _ => None,
        }
    }

    fn slot(&mut self, name: &str) -> Option<&mut Option<f64>> {
        Some(match name {
            "a" => &mut self.a,
            "b" => &mut self.b,
            "c" => &mut self.c,
            "d" => &mut self.d,
            "u0" => &mut self.u0,
            "v0" => &mut self.v0,
            "c1" => &mut self.c1,
            _ => return None,
        })
    }

    /// Sets a parameter by name; unknown names are rejected.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        *self.slot(name).ok_or_else(|| Error::InvalidSpec(format!("unknown parameter `{name}`")))? = Some(value);
        Ok(())
    }

    pub fn require(&self, name: &'static str) -> Result<f64> {
        self.get(name).ok_or(Error::MissingParam(name))
    }

    /// The named value, or zero when absent.
    pub fn value(&self, name: &str) -> f64 {
        self.get(name).unwrap_or(0.0)
    }

    /// Names of the parameters that are present.
    pub fn present(&self) -> impl Iterator<Item = &'static str> + '_ {
        PARAM_NAMES.into_iter().filter(|n| self.get(n).is_some())
    }
}

/// Family variant. Types 2, 3, 5 and 6 come in two variants; types 1 and 4
/// have a single one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "single")]
    Single,
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Single => "single",
            Variant::I => "i",
            Variant::Ii => "ii",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(Variant::Single),
            "i" => Ok(Variant::I),
            "ii" => Ok(Variant::Ii),
            _ => Err(Error::InvalidSpec(format!("unknown variant `{s}` (expected i, ii or single)"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parametrization used for type 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Type3Form {
    /// `(0, x, u(x)) ∗ (y, v(y), 0) = (y, x + v, u − xy/2)`.
    #[default]
    Body,
    /// `(x, 0, u(x)) ∗ (v(y), y, 0)`, the type-2 product with type-3 profiles.
    Display,
}

/// Choices among competing readings of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyOptions {
    #[serde(default)]
    pub type3_form: Type3Form,
    #[serde(default)]
    pub type6_sign: QuadraticSign,
}

impl FamilyOptions {
    fn is_default(&self) -> bool {
        *self == Self::default()
    }
}

/// Every (type, variant) pair of the classification.
pub const FAMILY_VARIANTS: [(u8, Variant); 10] = [
    (1, Variant::Single),
    (2, Variant::I),
    (2, Variant::Ii),
    (3, Variant::I),
    (3, Variant::Ii),
    (4, Variant::Single),
    (5, Variant::I),
    (5, Variant::Ii),
    (6, Variant::I),
    (6, Variant::Ii),
];

/// Parameters named by the classification for a (type, variant) pair.
pub fn allowed_params(family: u8, variant: Variant) -> Option<&'static [&'static str]> {
    Some(match (family, variant) {
        (1, Variant::Single) => &["a", "u0", "c", "v0"],
        (4, Variant::Single) => &["a", "c", "u0", "v0"],
        (2, Variant::I) | (3, Variant::I) => &["a", "b", "c", "d"],
        (2, Variant::Ii) => &["a", "u0", "b", "c"],
        (3, Variant::Ii) => &["a", "b", "c", "u0"],
        (5, Variant::I) | (6, Variant::I) => &["u0", "a", "b"],
        (5, Variant::Ii) | (6, Variant::Ii) => &["a", "b", "c", "c1"],
        _ => return None,
    })
}

/// One member of a classified family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct FamilySpec {
    pub family: u8,
    pub variant: Variant,
    pub params: Params,
    pub options: FamilyOptions,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    #[serde(rename = "type")]
    family: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    variant: Option<Variant>,
    #[serde(default)]
    params: Params,
    #[serde(default, skip_serializing_if = "FamilyOptions::is_default")]
    options: FamilyOptions,
}

impl TryFrom<RawSpec> for FamilySpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let variant = match (raw.family, raw.variant) {
            (1 | 4, None) => Variant::Single,
            (2 | 3 | 5 | 6, None) => {
                return Err(Error::InvalidSpec(format!("type {} requires a variant (i or ii)", raw.family)))
            }
            (t, None) => return Err(Error::InvalidSpec(format!("type must be 1..6, got {t}"))),
            (_, Some(v)) => v,
        };
        let spec = FamilySpec { family: raw.family, variant, params: raw.params, options: raw.options };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<FamilySpec> for RawSpec {
    fn from(s: FamilySpec) -> Self {
        let variant = (s.variant != Variant::Single).then_some(s.variant);
        RawSpec { family: s.family, variant, params: s.params, options: s.options }
    }
}

impl FamilySpec {
    /// Builds and validates a spec.
    pub fn new(family: u8, variant: Variant, params: Params) -> Result<Self> {
        let spec = Self { family, variant, params, options: FamilyOptions::default() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_options(mut self, options: FamilyOptions) -> Self {
        self.options = options;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let allowed = allowed_params(self.family, self.variant).ok_or_else(|| {
            Error::InvalidSpec(match self.family {
                1..=6 => format!("type {} has no variant `{}`", self.family, self.variant),
                t => format!("type must be 1..6, got {t}"),
            })
        })?;
        for name in self.params.present() {
            if !allowed.contains(&name) {
                return Err(Error::InvalidSpec(format!(
                    "parameter `{name}` is not used by type {} variant {}",
                    self.family, self.variant
                )));
            }
            if !self.params.value(name).is_finite() {
                return Err(Error::InvalidSpec(format!("parameter `{name}` must be finite")));
            }
        }
        Ok(())
    }

    /// Parameter by name, zero when absent.
    pub fn p(&self, name: &str) -> f64 {
        self.params.value(name)
    }

    /// Non-fatal remarks about the parameter choice.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if matches!((self.family, self.variant), (2 | 3, Variant::I)) && self.p("d") != 0.0 {
            out.push(format!(
                "type {} variant i with d = {}: the minimality equation forces d = 0, \
                 this surface is not expected to be minimal",
                self.family,
                self.p("d")
            ));
        }
        out
    }

    /// Uniform parameter draw: `a, b, d, u0, v0` from `[-2, 2]`, `c, c1` from
    /// `[-1, 1]`. `d` is drawn as zero.
    pub fn random<R: Rng + ?Sized>(family: u8, variant: Variant, rng: &mut R) -> Result<Self> {
        let allowed = allowed_params(family, variant)
            .ok_or_else(|| Error::InvalidSpec(format!("no family {family} variant {variant}")))?;
        let mut params = Params::default();
        for &name in allowed {
            let value = match name {
                "d" => 0.0,
                "c" | "c1" => rng.random_range(-1.0..=1.0),
                _ => rng.random_range(-2.0..=2.0),
            };
            params.set(name, value)?;
        }
        Self::new(family, variant, params)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {}", self.family)?;
        if self.variant != Variant::Single {
            write!(f, "({})", self.variant)?;
        }
        let mut sep = " ";
        for name in self.params.present() {
            write!(f, "{sep}{name}={}", self.params.value(name))?;
            sep = ", ";
        }
        Ok(())
    }
}
