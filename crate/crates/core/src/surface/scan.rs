use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{gaussian_curvature, jet2, mean_curvature, minimality_residual, Domain, ParamSurface};
use crate::error::{Error, Result};

/// Samples closer than this to an excluded line are skipped by scans.
pub const SINGULAR_MARGIN: f64 = 1e-3;

/// One sample of a grid scan. Geometric values are absent for skipped
/// samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub x: f64,
    pub y: f64,
    #[serde(rename = "H")]
    pub mean_curvature: Option<f64>,
    pub residual: Option<f64>,
    #[serde(rename = "K_gauss")]
    pub k_gauss: Option<f64>,
    #[serde(rename = "K_brioschi")]
    pub k_brioschi: Option<f64>,
    pub skipped: bool,
}

/// Aggregate statistics of a grid scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub samples: usize,
    pub max_abs_h: f64,
    pub mean_abs_h: f64,
    pub max_abs_residual: f64,
    pub max_gauss_defect: f64,
    pub k_values: Vec<f64>,
    pub skipped: Vec<[f64; 2]>,
}

impl ScanReport {
    pub fn from_rows(rows: &[ScanRow]) -> Result<Self> {
        let mut report = ScanReport {
            samples: 0,
            max_abs_h: 0.0,
            mean_abs_h: 0.0,
            max_abs_residual: 0.0,
            max_gauss_defect: 0.0,
            k_values: Vec::new(),
            skipped: Vec::new(),
        };
        let mut sum = 0.0;
        for row in rows {
            let (Some(h), Some(res), Some(kg), Some(kb)) =
                (row.mean_curvature, row.residual, row.k_gauss, row.k_brioschi)
            else {
                report.skipped.push([row.x, row.y]);
                continue;
            };
            report.samples += 1;
            sum += h.abs();
            report.max_abs_h = report.max_abs_h.max(h.abs());
            report.max_abs_residual = report.max_abs_residual.max(res.abs());
            report.max_gauss_defect = report.max_gauss_defect.max((kg - kb).abs());
            report.k_values.push(kg);
        }
        if report.samples == 0 {
            return Err(Error::EmptyDomain);
        }
        report.mean_abs_h = sum / report.samples as f64;
        Ok(report)
    }
}

/// The `nx × ny` uniform grid over `domain`, endpoints included, in
/// row-major order (`y` outer, `x` inner).
pub fn grid_points(domain: Domain, nx: usize, ny: usize) -> Result<Vec<(f64, f64)>> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidGrid { nx, ny });
    }
    let lerp = |(lo, hi): (f64, f64), i: usize, n: usize| lo + (hi - lo) * i as f64 / (n - 1) as f64;
    Ok((0..ny)
        .flat_map(|j| (0..nx).map(move |i| (lerp(domain.x, i, nx), lerp(domain.y, j, ny))))
        .collect())
}

pub fn grid_scan_rows(s: &ParamSurface, nx: usize, ny: usize) -> Result<Vec<ScanRow>> {
    let rows = grid_points(s.domain(), nx, ny)?
        .into_iter()
        .map(|(x, y)| {
            if s.distance_to_excluded(x, y) < SINGULAR_MARGIN {
                return Ok(ScanRow {
                    x,
                    y,
                    mean_curvature: None,
                    residual: None,
                    k_gauss: None,
                    k_brioschi: None,
                    skipped: true,
                });
            }
            let j = jet2(s, x, y)?;
            let k = gaussian_curvature(s, x, y)?;
            Ok(ScanRow {
                x,
                y,
                mean_curvature: Some(mean_curvature(&j)?),
                residual: Some(minimality_residual(&j)?),
                k_gauss: Some(k.gauss),
                k_brioschi: Some(k.brioschi),
                skipped: false,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.iter().all(|r| r.skipped) {
        return Err(Error::EmptyDomain);
    }
    Ok(rows)
}

/// Mean curvature, minimality residual and both curvature routes on the
/// uniform grid over the surface's domain.
pub fn grid_scan(s: &ParamSurface, nx: usize, ny: usize) -> Result<ScanReport> {
    ScanReport::from_rows(&grid_scan_rows(s, nx, ny)?)
}

/// Mean curvature alone over the grid, for scans that do not need the
/// curvature routes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanCurvatureScan {
    pub samples: usize,
    pub skipped: usize,
    pub max_abs_h: f64,
}

pub fn mean_curvature_scan(s: &ParamSurface, nx: usize, ny: usize) -> Result<MeanCurvatureScan> {
    let mut out = MeanCurvatureScan { samples: 0, skipped: 0, max_abs_h: 0.0 };
    for (x, y) in grid_points(s.domain(), nx, ny)? {
        if s.distance_to_excluded(x, y) < SINGULAR_MARGIN {
            out.skipped += 1;
            continue;
        }
        let h = mean_curvature(&jet2(s, x, y)?)?;
        out.samples += 1;
        // NaN must not hide behind max().
        out.max_abs_h = if h.is_nan() { f64::NAN } else { out.max_abs_h.max(h.abs()) };
    }
    if out.samples == 0 {
        return Err(Error::EmptyDomain);
    }
    Ok(out)
}
