//! File formats: Wavefront OBJ meshes and per-sample CSV scans.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use nil3::surface::{triangulate, GridMesh, ParamSurface, ScanRow};

use crate::error::CliError;

/// Writes `v x y z` lines, then `f i j k` faces with 1-based indices.
pub fn write_obj<W: Write>(mesh: &GridMesh, mut w: W) -> io::Result<()> {
    for p in &mesh.vertices {
        writeln!(w, "v {} {} {}", p.x, p.y, p.z)?;
    }
    for [i, j, k] in &mesh.faces {
        writeln!(w, "f {} {} {}", i + 1, j + 1, k + 1)?;
    }
    w.flush()
}

/// Triangulates `s` on an `nx × ny` grid over its domain and writes the OBJ
/// file. Samples on excluded lines are dropped together with their faces.
pub fn export_obj(s: &ParamSurface, nx: usize, ny: usize, path: &Path) -> Result<GridMesh, CliError> {
    let mesh = triangulate(s, nx, ny)?;
    write_obj(&mesh, BufWriter::new(File::create(path)?))?;
    Ok(mesh)
}

/// CSV with columns `x, y, H, residual, K_gauss, K_brioschi, skipped`;
/// skipped samples leave the numeric fields empty.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], w: W) -> Result<(), CliError> {
    let mut out = csv::Writer::from_writer(w);
    for row in rows {
        out.serialize(row)?;
    }
    out.flush()?;
    Ok(())
}
