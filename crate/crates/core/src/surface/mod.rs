//! Parametric immersions `r(x, y)` into Nil₃ and their extrinsic geometry.

mod fundamental;
mod mesh;
mod scan;

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{frame_components, CoordVector};
use crate::group::{isometry_coords, Point3};
use crate::scalar::{Dual2, Real};

pub use fundamental::{
    fundamental_data, gaussian_curvature, mean_curvature, minimality_residual, swapped_s12,
    FirstFormGradient, FundamentalData, GaussianCurvature,
};
pub use mesh::{triangulate, GridMesh};
pub use scan::{
    grid_points, grid_scan, grid_scan_rows, mean_curvature_scan, MeanCurvatureScan, ScanReport, ScanRow, SINGULAR_MARGIN,
};

/// Distance below which a parameter counts as lying on an excluded line.
const ON_LINE: f64 = 1e-12;

/// How partial derivatives of an immersion are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Exact partials through forward-mode [`Dual2`] arithmetic.
    Analytic,
    /// Central finite differences of point evaluations.
    Generic,
}

/// An evaluation rule `(x, y) ↦ r(x, y)`.
pub trait Immersion: Send + Sync {
    fn point(&self, x: f64, y: f64) -> [f64; 3];

    /// Evaluates with derivative-carrying scalars; `None` when the rule can
    /// only be evaluated on plain floats.
    fn jet(&self, _x: Dual2, _y: Dual2) -> Option<[Dual2; 3]> {
        None
    }

    fn supports_jets(&self) -> bool {
        false
    }
}

/// An immersion written once for every [`Real`] scalar. Implementors get
/// analytic jets for free.
pub trait RealImmersion: Send + Sync {
    fn eval<S: Real>(&self, x: S, y: S) -> [S; 3];
}

impl<T: RealImmersion> Immersion for T {
    fn point(&self, x: f64, y: f64) -> [f64; 3] {
        self.eval(x, y)
    }

    fn jet(&self, x: Dual2, y: Dual2) -> Option<[Dual2; 3]> {
        Some(self.eval(x, y))
    }

    fn supports_jets(&self) -> bool {
        true
    }
}

/// Wraps a plain closure; such surfaces are differentiated numerically.
pub struct FnImmersion<F>(pub F);

impl<F> Immersion for FnImmersion<F>
where
    F: Fn(f64, f64) -> [f64; 3] + Send + Sync,
{
    fn point(&self, x: f64, y: f64) -> [f64; 3] {
        (self.0)(x, y)
    }
}

/// Closed parameter rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

impl Domain {
    pub fn new(x: (f64, f64), y: (f64, f64)) -> Result<Self> {
        let ok = |(lo, hi): (f64, f64)| lo.is_finite() && hi.is_finite() && lo < hi;
        if !ok(x) || !ok(y) {
            return Err(Error::InvalidDomain("bounds must be finite with lo < hi"));
        }
        Ok(Self { x, y })
    }

    /// `[-w, w]²`.
    pub fn square(half_width: f64) -> Result<Self> {
        Self::new((-half_width, half_width), (-half_width, half_width))
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        let slack = |(lo, hi): (f64, f64)| 1e-12 * (1.0 + lo.abs().max(hi.abs()));
        x >= self.x.0 - slack(self.x)
            && x <= self.x.1 + slack(self.x)
            && y >= self.y.0 - slack(self.y)
            && y <= self.y.1 + slack(self.y)
    }
}

/// A line of the parameter plane on which the immersion is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExcludedLine {
    /// `x = c`
    X(f64),
    /// `y = c`
    Y(f64),
}

impl ExcludedLine {
    pub fn distance(&self, x: f64, y: f64) -> f64 {
        match *self {
            ExcludedLine::X(c) => (x - c).abs(),
            ExcludedLine::Y(c) => (y - c).abs(),
        }
    }
}

/// A parametric surface together with its differentiation scheme, its
/// validity rectangle and the lines it excludes.
#[derive(Clone)]
pub struct ParamSurface {
    immersion: Arc<dyn Immersion>,
    scheme: Scheme,
    domain: Domain,
    excluded: Vec<ExcludedLine>,
}

impl fmt::Debug for ParamSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParamSurface")
            .field("scheme", &self.scheme)
            .field("domain", &self.domain)
            .field("excluded", &self.excluded)
            .finish_non_exhaustive()
    }
}

impl ParamSurface {
    /// Surface with exact jets.
    pub fn analytic(immersion: impl RealImmersion + 'static, domain: Domain) -> Self {
        Self { immersion: Arc::new(immersion), scheme: Scheme::Analytic, domain, excluded: Vec::new() }
    }

    /// Surface differentiated by finite differences.
    pub fn generic(immersion: impl Immersion + 'static, domain: Domain) -> Self {
        Self { immersion: Arc::new(immersion), scheme: Scheme::Generic, domain, excluded: Vec::new() }
    }

    pub fn from_fn<F>(f: F, domain: Domain) -> Self
    where
        F: Fn(f64, f64) -> [f64; 3] + Send + Sync + 'static,
    {
        Self::generic(FnImmersion(f), domain)
    }

    pub fn with_excluded(mut self, lines: impl IntoIterator<Item = ExcludedLine>) -> Self {
        self.excluded.extend(lines);
        self
    }

    pub fn with_domain(mut self, domain: Domain) -> Self {
        self.domain = domain;
        self
    }

    /// Switches the differentiation scheme. Requesting `Analytic` for a rule
    /// without jet support keeps `Generic`.
    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = match scheme {
            Scheme::Analytic if !self.immersion.supports_jets() => Scheme::Generic,
            s => s,
        };
        self
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn excluded(&self) -> &[ExcludedLine] {
        &self.excluded
    }

    pub fn immersion(&self) -> &Arc<dyn Immersion> {
        &self.immersion
    }

    /// Distance from `(x, y)` to the nearest excluded line.
    pub fn distance_to_excluded(&self, x: f64, y: f64) -> f64 {
        self.excluded.iter().map(|l| l.distance(x, y)).fold(f64::INFINITY, f64::min)
    }

    pub fn point(&self, x: f64, y: f64) -> Point3 {
        self.immersion.point(x, y).into()
    }

    /// The surface composed with the ambient isometry `p ↦ h · rot_θ(p)`.
    pub fn isometric_image(&self, h: Point3, theta: f64) -> Self {
        let image = IsometricImage { inner: self.immersion.clone(), h, theta };
        Self { immersion: Arc::new(image), ..self.clone() }
    }

    /// The reparametrized surface `(x, y) ↦ r(sx·x, sy·y)`, with domain and
    /// excluded lines pulled back accordingly. Scales must be positive.
    pub fn rescaled(&self, sx: f64, sy: f64) -> Result<Self> {
        if !(sx > 0.0 && sy > 0.0) {
            return Err(Error::InvalidDomain("rescaling factors must be positive"));
        }
        let d = self.domain;
        let domain = Domain::new((d.x.0 / sx, d.x.1 / sx), (d.y.0 / sy, d.y.1 / sy))?;
        let excluded = self
            .excluded
            .iter()
            .map(|l| match *l {
                ExcludedLine::X(c) => ExcludedLine::X(c / sx),
                ExcludedLine::Y(c) => ExcludedLine::Y(c / sy),
            })
            .collect();
        let immersion = Arc::new(Rescaled { inner: self.immersion.clone(), sx, sy });
        Ok(Self { immersion, domain, excluded, scheme: self.scheme })
    }
}

struct IsometricImage {
    inner: Arc<dyn Immersion>,
    h: Point3,
    theta: f64,
}

impl Immersion for IsometricImage {
    fn point(&self, x: f64, y: f64) -> [f64; 3] {
        isometry_coords(self.h, self.theta, self.inner.point(x, y))
    }

    fn jet(&self, x: Dual2, y: Dual2) -> Option<[Dual2; 3]> {
        Some(isometry_coords(self.h, self.theta, self.inner.jet(x, y)?))
    }

    fn supports_jets(&self) -> bool {
        self.inner.supports_jets()
    }
}

struct Rescaled {
    inner: Arc<dyn Immersion>,
    sx: f64,
    sy: f64,
}

impl Immersion for Rescaled {
    fn point(&self, x: f64, y: f64) -> [f64; 3] {
        self.inner.point(self.sx * x, self.sy * y)
    }

    fn jet(&self, x: Dual2, y: Dual2) -> Option<[Dual2; 3]> {
        self.inner.jet(x * self.sx, y * self.sy)
    }

    fn supports_jets(&self) -> bool {
        self.inner.supports_jets()
    }
}

/// A surface point with first and second partials of the immersion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Jet2 {
    pub x: f64,
    pub y: f64,
    pub p: Point3,
    pub rx: CoordVector,
    pub ry: CoordVector,
    pub rxx: CoordVector,
    pub rxy: CoordVector,
    pub ryy: CoordVector,
}

impl Jet2 {
    pub(crate) fn from_duals(x: f64, y: f64, r: [Dual2; 3]) -> Self {
        let pick = |f: fn(&Dual2) -> f64| CoordVector::new(f(&r[0]), f(&r[1]), f(&r[2]));
        Self {
            x,
            y,
            p: Point3::new(r[0].v, r[1].v, r[2].v),
            rx: pick(|d| d.dx),
            ry: pick(|d| d.dy),
            rxx: pick(|d| d.dxx),
            rxy: pick(|d| d.dxy),
            ryy: pick(|d| d.dyy),
        }
    }

    fn is_finite(&self) -> bool {
        self.p.is_finite()
            && [self.rx, self.ry, self.rxx, self.rxy, self.ryy].iter().all(CoordVector::is_finite)
    }
}

/// First-difference step of the generic scheme at `(x, y)`.
pub fn generic_step(x: f64, y: f64) -> f64 {
    1e-5 * (1.0 + x.abs() + y.abs())
}

/// Second-difference step: a multiple of the square root of the first step.
pub fn generic_second_step(x: f64, y: f64) -> f64 {
    0.3 * libm::sqrt(generic_step(x, y))
}

/// Relative tolerance for the agreement of the two mixed-partial estimates.
const MIXED_PARTIAL_TOL: f64 = 1e-6;

fn generic_jet(imm: &dyn Immersion, x: f64, y: f64) -> Result<Jet2> {
    let f = |x: f64, y: f64| imm.point(x, y);
    let h = generic_step(x, y);
    let k = generic_second_step(x, y);
    let p = f(x, y);

    // d/dt with the three-point stencil.
    let d1 = |g: &dyn Fn(f64) -> [f64; 3], t: f64, h: f64| {
        let (a, b) = (g(t + h), g(t - h));
        core::array::from_fn::<f64, 3, _>(|i| (a[i] - b[i]) / (2.0 * h))
    };
    // d/dt with the fourth-order five-point stencil.
    let d1_5 = |g: &dyn Fn(f64) -> [f64; 3], t: f64, h: f64| {
        let (a, b, c, d) = (g(t + 2.0 * h), g(t + h), g(t - h), g(t - 2.0 * h));
        core::array::from_fn::<f64, 3, _>(|i| (-a[i] + 8.0 * b[i] - 8.0 * c[i] + d[i]) / (12.0 * h))
    };
    // d²/dt² with the fourth-order five-point stencil.
    let d2_5 = |g: &dyn Fn(f64) -> [f64; 3], t: f64, h: f64| {
        let (a, b, c, d) = (g(t + 2.0 * h), g(t + h), g(t - h), g(t - 2.0 * h));
        core::array::from_fn::<f64, 3, _>(|i| {
            (-a[i] + 16.0 * b[i] - 30.0 * p[i] + 16.0 * c[i] - d[i]) / (12.0 * h * h)
        })
    };

    let along_x = |t: f64| f(t, y);
    let along_y = |t: f64| f(x, t);
    let rx = d1(&along_x, x, h);
    let ry = d1(&along_y, y, h);
    let rxx = d2_5(&along_x, x, k);
    let ryy = d2_5(&along_y, y, k);

    // ∂x(∂y r) and ∂y(∂x r) as two independent nested stencils.
    let ry_at = |t: f64| d1(&|s: f64| f(t, s), y, h);
    let rx_at = |s: f64| d1(&|t: f64| f(t, s), x, h);
    let rxy_a = d1_5(&ry_at, x, k);
    let rxy_b = d1_5(&rx_at, y, k);
    let gap = (0..3).map(|i| (rxy_a[i] - rxy_b[i]).abs()).fold(0.0, f64::max);
    let scale = 1.0 + (0..3).map(|i| rxy_a[i].abs()).fold(0.0, f64::max);
    if gap > MIXED_PARTIAL_TOL * scale {
        return Err(Error::AsymmetricMixedPartial { gap });
    }
    let rxy: [f64; 3] = core::array::from_fn(|i| 0.5 * (rxy_a[i] + rxy_b[i]));

    let cv = |v: [f64; 3]| CoordVector::new(v[0], v[1], v[2]);
    Ok(Jet2 { x, y, p: p.into(), rx: cv(rx), ry: cv(ry), rxx: cv(rxx), rxy: cv(rxy), ryy: cv(ryy) })
}

/// First and second partials of `s` at `(x, y)`.
pub fn jet2(s: &ParamSurface, x: f64, y: f64) -> Result<Jet2> {
    if s.excluded.iter().any(|l| l.distance(x, y) <= ON_LINE) {
        return Err(Error::SingularPoint { x, y, reason: "excluded line" });
    }
    if !s.domain.contains(x, y) {
        return Err(Error::OutOfDomain { x, y });
    }
    jet_unbounded(s, x, y)
}

/// [`jet2`] without the domain and excluded-line checks.
pub(crate) fn jet_unbounded(s: &ParamSurface, x: f64, y: f64) -> Result<Jet2> {
    let jet = match s.scheme {
        Scheme::Analytic => {
            let r = s
                .immersion
                .jet(Dual2::var_x(x), Dual2::var_y(y))
                .ok_or(Error::InvalidDomain("analytic scheme without jet support"))?;
            Jet2::from_duals(x, y, r)
        }
        Scheme::Generic => generic_jet(s.immersion.as_ref(), x, y)?,
    };
    if !jet.is_finite() {
        return Err(Error::SingularPoint { x, y, reason: "non-finite evaluation" });
    }
    let a = frame_components(jet.p, jet.rx);
    let b = frame_components(jet.p, jet.ry);
    let n = a.cross(b).norm_squared();
    if !(n > 1e-20 * a.norm_squared() * b.norm_squared()) {
        return Err(Error::SingularPoint { x, y, reason: "coordinate partials are parallel" });
    }
    Ok(jet)
}
