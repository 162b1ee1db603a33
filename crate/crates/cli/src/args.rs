use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "nil3", version, about = "Minimal translation surfaces in the Heisenberg group Nil3")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Machine-readable JSON on stdout (and JSON errors on stderr).
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a family member is minimal on a grid.
    Verify(VerifyArgs),
    /// Per-sample H, residual and curvature as CSV.
    Scan(ScanArgs),
    /// Compare a closed-form profile with RK4 and evaluate the profile ODEs.
    Ode(OdeArgs),
    /// Audit the rows of the missing-case table.
    Cases(CasesArgs),
    /// Export a family member as a Wavefront OBJ mesh.
    Mesh(MeshArgs),
    /// List the families, the missing cases and the inconsistency flags.
    Catalog(CatalogArgs),
}

/// Selects one member of a classified family.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Family type, 1 to 6.
    #[arg(long = "type", value_name = "T")]
    pub family: Option<u8>,
    /// Variant for types 2, 3, 5, 6: `i` or `ii`.
    #[arg(long)]
    pub variant: Option<String>,
    /// Family spec as inline JSON or a path to a JSON file; flags override its parameters.
    #[arg(long, value_name = "JSON")]
    pub spec: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub u0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub v0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c1: Option<f64>,
    /// Type-3 parametrization: `body` (0,x,u)*(y,v,0) or `display` (x,0,u)*(v,y,0).
    #[arg(long, value_enum, default_value_t = Type3Choice::Body)]
    pub type3_form: Type3Choice,
    /// Flip the sign of the quadratic block of the type-6(ii) u(x).
    #[arg(long)]
    pub mirrored_type6: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Type3Choice {
    Body,
    Display,
}

/// Sampling shared by the scanning commands.
#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Grid points per axis.
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
    /// Half-width W of the scanned square, shifted off poles.
    #[arg(long, value_name = "W", default_value_t = 1.0)]
    pub domain: f64,
    /// Tolerance on max |H| [default: 1e-8, or 1e-6 with --generic].
    #[arg(long)]
    pub tol: Option<f64>,
    /// Differentiate by central finite differences instead of exact jets.
    #[arg(long)]
    pub generic: bool,
}

impl GridArgs {
    pub fn tolerance(&self) -> f64 {
        self.tol.unwrap_or(if self.generic { 1e-6 } else { 1e-8 })
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Verify N random members of the family instead of the given parameters.
    #[arg(long, value_name = "N")]
    pub draws: Option<usize>,
    /// Seed for random draws.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// CSV destination (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OdeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// RK4 step.
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Tolerance on the RK4 deviation from the closed form.
    #[arg(long, default_value_t = 1e-7)]
    pub oracle_tol: f64,
    /// Check N random members instead of the given parameters.
    #[arg(long, value_name = "N")]
    pub draws: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileChoice {
    /// 0.8 t - 0.3
    Affine,
    /// 0.7 t^2 + 0.1 t - 0.3
    Quadratic,
    /// sin t, sampled over [0, 2pi]
    Sin,
    /// 0.8 asinh(t + 0.3)
    Asinh,
}

#[derive(Debug, Args)]
pub struct CasesArgs {
    /// Only the rows marked with a star.
    #[arg(long)]
    pub starred: bool,
    #[arg(long, value_enum, default_value_t = ProfileChoice::Affine)]
    pub profile: ProfileChoice,
    /// Translation constant of the table formulas.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.45)]
    pub c: f64,
    #[arg(long, default_value_t = 15)]
    pub grid: usize,
    /// Half-width of the scanned square (the sine profile always spans [0, 2pi]).
    #[arg(long, value_name = "W", default_value_t = 1.0)]
    pub domain: f64,
    /// Tolerance on the max residual.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct MeshArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Grid points per axis.
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    #[arg(long, value_name = "W", default_value_t = 1.0)]
    pub domain: f64,
    /// OBJ destination (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Random draws per variant in the arbitration runs.
    #[arg(long, default_value_t = 20)]
    pub draws: usize,
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the arbitration runs.
    #[arg(long)]
    pub no_arbitration: bool,
}
