//! Degenerate translation surfaces outside the six classified families,
//! where one generating curve is a coordinate line.

use alloc::format;
use core::fmt;

use serde::{Deserialize, Serialize};

use super::profile::ProfileFn;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::surface::{grid_points, jet2, minimality_residual, Domain, ExcludedLine, ParamSurface, RealImmersion};

/// Row of a type in the missing-case table. The first slot varies `v(y)`,
/// the second varies `u(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    First,
    Second,
}

/// One row of the missing-case table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCase")]
pub struct CaseId {
    #[serde(rename = "type")]
    family: u8,
    slot: Slot,
    starred: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    #[serde(rename = "type")]
    family: u8,
    slot: Slot,
    #[serde(default)]
    starred: Option<bool>,
}

impl TryFrom<RawCase> for CaseId {
    type Error = Error;

    fn try_from(raw: RawCase) -> Result<Self> {
        let id = CaseId::new(raw.family, raw.slot)?;
        match raw.starred {
            Some(s) if s != id.starred => Err(Error::InvalidCase(format!(
                "type {} {:?} slot is {}starred",
                raw.family,
                raw.slot,
                if id.starred { "" } else { "not " }
            ))),
            _ => Ok(id),
        }
    }
}

impl CaseId {
    /// All twelve rows, ordered by type then slot.
    pub const ALL: [CaseId; 12] = {
        let mut out = [CaseId { family: 1, slot: Slot::First, starred: false }; 12];
        let mut i = 0;
        while i < 12 {
            let family = (i / 2) as u8 + 1;
            let slot = if i % 2 == 0 { Slot::First } else { Slot::Second };
            out[i] = CaseId { family, slot, starred: Self::is_starred(family, slot) };
            i += 1;
        }
        out
    };

    const fn is_starred(family: u8, slot: Slot) -> bool {
        matches!((family, slot), (2 | 3 | 5 | 6, Slot::First))
    }

    pub fn new(family: u8, slot: Slot) -> Result<Self> {
        if !(1..=6).contains(&family) {
            return Err(Error::InvalidCase(format!("type must be 1..6, got {family}")));
        }
        Ok(Self { family, slot, starred: Self::is_starred(family, slot) })
    }

    pub fn family(&self) -> u8 {
        self.family
    }

    pub fn slot(&self) -> Slot {
        self.slot
    }

    /// Starred rows are minimal only for affine profiles.
    pub fn starred(&self) -> bool {
        self.starred
    }

    /// Whether the profile enters as `v(y)` (else as `u(x)`).
    pub fn profile_in_y(&self) -> bool {
        self.slot == Slot::First
    }

    /// The table entry with the profile written as `v(y)` or `u(x)`.
    pub fn formula(&self) -> &'static str {
        match (self.family, self.slot) {
            (1, Slot::First) => "(c, y, x + v(y) + cy/2)",
            (1, Slot::Second) => "(x, c, u(x) + y + cx/2)",
            (2, Slot::First) => "(c + v(y), y, x + cy/2)",
            (2, Slot::Second) => "(x + y, c, u(x) + cx/2)",
            (3, Slot::First) => "(y, c + v(y), x - cy/2)",
            (3, Slot::Second) => "(c, x + y, u(x) - cx/2)",
            (4, Slot::First) => "(c, y, x + v(y) - cy/2)",
            (4, Slot::Second) => "(x, c, u(x) + y - cx/2)",
            (5, Slot::First) => "(c + v(y), y, x - cy/2)",
            (5, Slot::Second) => "(x + y, c, u(x) - cx/2)",
            (6, Slot::First) => "(y, c + v(y), x + cy/2)",
            _ => "(c, x + y, u(x) + cx/2)",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slot = match self.slot {
            Slot::First => "first",
            Slot::Second => "second",
        };
        write!(f, "type {} {slot}{}", self.family, if self.starred { "*" } else { "" })
    }
}

/// Immersion of one missing-case row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MissingCase {
    pub case: CaseId,
    pub c: f64,
    pub profile: ProfileFn,
}

impl RealImmersion for MissingCase {
    fn eval<S: Real>(&self, x: S, y: S) -> [S; 3] {
        let c = self.c;
        let k = S::constant(c);
        let half = |t: S| t * (c / 2.0);
        if self.case.profile_in_y() {
            let v = self.profile.value(y);
            match self.case.family {
                1 => [k, y, x + v + half(y)],
                2 => [v + c, y, x + half(y)],
                3 => [y, v + c, x - half(y)],
                4 => [k, y, x + v - half(y)],
                5 => [v + c, y, x - half(y)],
                _ => [y, v + c, x + half(y)],
            }
        } else {
            let u = self.profile.value(x);
            match self.case.family {
                1 => [x, k, u + y + half(x)],
                2 => [x + y, k, u + half(x)],
                3 => [k, x + y, u - half(x)],
                4 => [x, k, u + y - half(x)],
                5 => [x + y, k, u - half(x)],
                _ => [k, x + y, u + half(x)],
            }
        }
    }
}

/// The row's parametrization as an analytic surface on `[-1, 1]²`.
pub fn missing_case_surface(case: CaseId, c: f64, profile: ProfileFn) -> Result<ParamSurface> {
    if !c.is_finite() {
        return Err(Error::InvalidCase(format!("translation constant must be finite, got {c}")));
    }
    let excluded = profile.pole().map(|p| if case.profile_in_y() { ExcludedLine::Y(p) } else { ExcludedLine::X(p) });
    Ok(ParamSurface::analytic(MissingCase { case, c, profile }, Domain::square(1.0)?).with_excluded(excluded))
}

/// Largest minimality residual of a missing-case surface over a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CaseAudit {
    pub case: CaseId,
    pub max_abs_residual: f64,
    pub samples: usize,
    /// Samples where the immersion degenerates (parallel partials).
    pub singular: usize,
}

/// Scans the minimality residual of `s` on an `n × n` grid over its domain.
/// Singular samples are counted and skipped.
pub fn audit_case(case: CaseId, s: &ParamSurface, n: usize) -> Result<CaseAudit> {
    let d = s.domain();
    let mut audit = CaseAudit { case, max_abs_residual: 0.0, samples: 0, singular: 0 };
    for (x, y) in grid_points(d, n, n)? {
        let r = jet2(s, x, y).and_then(|j| minimality_residual(&j));
        match r {
            Ok(r) => {
                audit.samples += 1;
                audit.max_abs_residual = audit.max_abs_residual.max(r.abs());
            }
            Err(Error::SingularPoint { .. } | Error::DegenerateMetric { .. }) => audit.singular += 1,
            Err(e) => return Err(e),
        }
    }
    if audit.samples == 0 {
        return Err(Error::EmptyDomain);
    }
    Ok(audit)
}
