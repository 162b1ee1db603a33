use serde::{Deserialize, Serialize};

use super::{jet2, jet_unbounded, Jet2, ParamSurface, Scheme};
use crate::connection::{covariant_derivative, curvature_tensor};
use crate::error::{Error, Result};
use crate::frame::{frame_components, metric_dot, CoordVector, FrameVector};
use crate::group::Point3;

/// First fundamental form, unnormalized normal and the second-form inner
/// products `⟨N̄, ∇̃_{r_i} r_j⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FundamentalData {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    /// `r_x × r_y` in frame components.
    pub nbar: FrameVector,
    pub s11: f64,
    pub s12: f64,
    pub s22: f64,
    /// Frame components of `r_x` and `r_y`.
    pub tangent_x: FrameVector,
    pub tangent_y: FrameVector,
}

impl FundamentalData {
    /// `EG − F²`
    pub fn det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }
}

/// Frame components of `r_x`, `r_y` and their parameter derivatives.
struct FrameJet {
    a: FrameVector,
    b: FrameVector,
    a_x: FrameVector,
    a_y: FrameVector,
    b_x: FrameVector,
    b_y: FrameVector,
}

/// Derivative of `frame_components(p(t), v(t))` given `p'` and `v'`.
fn frame_derivative(p: Point3, dp: CoordVector, v: CoordVector, dv: CoordVector) -> FrameVector {
    let mut w = frame_components(p, dv);
    w.a3 += 0.5 * (dp.dy * v.dx - dp.dx * v.dy);
    w
}

impl FrameJet {
    fn new(j: &Jet2) -> Self {
        Self {
            a: frame_components(j.p, j.rx),
            b: frame_components(j.p, j.ry),
            a_x: frame_derivative(j.p, j.rx, j.rx, j.rxx),
            a_y: frame_derivative(j.p, j.ry, j.rx, j.rxy),
            b_x: frame_derivative(j.p, j.rx, j.ry, j.rxy),
            b_y: frame_derivative(j.p, j.ry, j.ry, j.ryy),
        }
    }
}

pub fn fundamental_data(j: &Jet2) -> Result<FundamentalData> {
    let fj = FrameJet::new(j);
    let (a, b) = (fj.a, fj.b);
    let (e, f, g) = (metric_dot(a, a), metric_dot(a, b), metric_dot(b, b));
    let det = e * g - f * f;
    if !(det > 0.0) {
        return Err(Error::DegenerateMetric { det });
    }
    let nbar = a.cross(b);
    let n11 = covariant_derivative(a, a, fj.a_x);
    let n12 = covariant_derivative(a, b, fj.b_x);
    let n22 = covariant_derivative(b, b, fj.b_y);
    Ok(FundamentalData {
        e,
        f,
        g,
        nbar,
        s11: metric_dot(nbar, n11),
        s12: metric_dot(nbar, n12),
        s22: metric_dot(nbar, n22),
        tangent_x: a,
        tangent_y: b,
    })
}

/// `⟨N̄, ∇̃_{r_y} r_x⟩`; agrees with `s12` because the torsion term is tangent.
pub fn swapped_s12(j: &Jet2) -> f64 {
    let fj = FrameJet::new(j);
    metric_dot(fj.a.cross(fj.b), covariant_derivative(fj.b, fj.a, fj.a_y))
}

/// `G⟨N̄,∇̃₁₁⟩ − 2F⟨N̄,∇̃₁₂⟩ + E⟨N̄,∇̃₂₂⟩` with `N̄ = r_x × r_y`.
pub fn minimality_residual(j: &Jet2) -> Result<f64> {
    let d = fundamental_data(j)?;
    Ok(residual_of(&d))
}

fn residual_of(d: &FundamentalData) -> f64 {
    d.g * d.s11 - 2.0 * d.f * d.s12 + d.e * d.s22
}

/// Mean curvature with respect to the unit normal `N̄/|N̄|`.
pub fn mean_curvature(j: &Jet2) -> Result<f64> {
    let d = fundamental_data(j)?;
    let det = d.det();
    Ok(residual_of(&d) / (2.0 * det * libm::sqrt(det)))
}

/// Parameter derivatives of `E, F, G`, exact given exact second partials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FirstFormGradient {
    pub e_x: f64,
    pub e_y: f64,
    pub f_x: f64,
    pub f_y: f64,
    pub g_x: f64,
    pub g_y: f64,
}

impl FirstFormGradient {
    pub fn of(j: &Jet2) -> Self {
        let fj = FrameJet::new(j);
        Self {
            e_x: 2.0 * metric_dot(fj.a, fj.a_x),
            e_y: 2.0 * metric_dot(fj.a, fj.a_y),
            f_x: metric_dot(fj.a_x, fj.b) + metric_dot(fj.a, fj.b_x),
            f_y: metric_dot(fj.a_y, fj.b) + metric_dot(fj.a, fj.b_y),
            g_x: 2.0 * metric_dot(fj.b, fj.b_x),
            g_y: 2.0 * metric_dot(fj.b, fj.b_y),
        }
    }
}

/// Intrinsic curvature by two routes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianCurvature {
    /// Ambient sectional curvature of the tangent plane plus the
    /// determinant of the shape operator.
    pub gauss: f64,
    /// Brioschi formula on `E, F, G` and their derivatives.
    pub brioschi: f64,
    /// Ambient sectional curvature of the tangent plane.
    pub ambient: f64,
}

impl GaussianCurvature {
    pub fn defect(&self) -> f64 {
        (self.gauss - self.brioschi).abs()
    }
}

/// Step of the five-point stencils that differentiate `E_y`, `F_x`, `F_y`,
/// `G_x` once more for the Brioschi formula.
pub fn brioschi_step(scheme: Scheme) -> f64 {
    match scheme {
        Scheme::Analytic => 1e-4,
        Scheme::Generic => 1e-2,
    }
}

fn five_point(f: impl Fn(f64) -> Result<f64>, t: f64, h: f64) -> Result<f64> {
    Ok((-f(t + 2.0 * h)? + 8.0 * f(t + h)? - 8.0 * f(t - h)? + f(t - 2.0 * h)?) / (12.0 * h))
}

pub fn gaussian_curvature(s: &ParamSurface, x: f64, y: f64) -> Result<GaussianCurvature> {
    let j = jet2(s, x, y)?;
    let d = fundamental_data(&j)?;
    let det = d.det();

    // Gram–Schmidt on the tangent pair.
    let u = (1.0 / libm::sqrt(d.e)) * d.tangent_x;
    let w = d.tangent_y - metric_dot(d.tangent_y, u) * u;
    let w = (1.0 / libm::sqrt(metric_dot(w, w))) * w;
    let ambient = metric_dot(curvature_tensor(u, w, w), u);
    let gauss = ambient + (d.s11 * d.s22 - d.s12 * d.s12) / (det * det);

    // Neighbouring jets skip the domain check so that samples on the
    // boundary of the validity rectangle keep a centred stencil.
    let grad = |x: f64, y: f64| jet_unbounded(s, x, y).map(|j| FirstFormGradient::of(&j));
    let h = brioschi_step(s.scheme());
    let g0 = FirstFormGradient::of(&j);
    let e_yy = five_point(|t| grad(x, t).map(|g| g.e_y), y, h)?;
    let g_xx = five_point(|t| grad(t, y).map(|g| g.g_x), x, h)?;
    let f_xy = 0.5
        * (five_point(|t| grad(x, t).map(|g| g.f_x), y, h)?
            + five_point(|t| grad(t, y).map(|g| g.f_y), x, h)?);

    let (e, f, g) = (d.e, d.f, d.g);
    let m1 = [
        [-0.5 * e_yy + f_xy - 0.5 * g_xx, 0.5 * g0.e_x, g0.f_x - 0.5 * g0.e_y],
        [g0.f_y - 0.5 * g0.g_x, e, f],
        [0.5 * g0.g_y, f, g],
    ];
    let m2 = [[0.0, 0.5 * g0.e_y, 0.5 * g0.g_x], [0.5 * g0.e_y, e, f], [0.5 * g0.g_x, f, g]];
    let brioschi = (det3(&m1) - det3(&m2)) / (det * det);

    Ok(GaussianCurvature { gauss, brioschi, ambient })
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}
