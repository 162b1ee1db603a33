use std::f64::consts::PI;
use std::fs;
use std::io::Write;

use nil3::families::catalog::{FAMILIES, FLAGS};
use nil3::families::{
    audit_case, family_profiles, missing_case_surface, safe_domain, safe_family_surface, CaseAudit, CaseId,
    FamilyOptions, FamilySpec, Params, ProfileFn, ProfileKind, QuadraticSign, Type3Form, Variant,
};
use nil3::ode::{geometric_residual, ode_residual, profile_ode, run_oracle, OracleRecord};
use nil3::report::{arbitrate_type3, arbitrate_type6, flatness_report, Arbitration, ScanSettings};
use nil3::surface::{
    grid_points, grid_scan_rows, triangulate, Domain, ParamSurface, ScanReport, Scheme, SINGULAR_MARGIN,
};
use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{
    CasesArgs, CatalogArgs, Cli, Command, FamilyArgs, GridArgs, MeshArgs, OdeArgs, ProfileChoice, ScanArgs,
    Type3Choice, VerifyArgs,
};
use crate::error::CliError;
use crate::export::{export_obj, write_obj, write_scan_csv};

type Outcome = Result<bool, CliError>;

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Verify(a) => verify(a, cli.json, out),
        Command::Scan(a) => scan(a, cli.json, out),
        Command::Ode(a) => ode(a, cli.json, out),
        Command::Cases(a) => cases(a, cli.json, out),
        Command::Mesh(a) => mesh(a, cli.json, out),
        Command::Catalog(a) => catalog(a, cli.json, out),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn options(f: &FamilyArgs) -> FamilyOptions {
    FamilyOptions {
        type3_form: match f.type3_form {
            Type3Choice::Body => Type3Form::Body,
            Type3Choice::Display => Type3Form::Display,
        },
        type6_sign: if f.mirrored_type6 { QuadraticSign::Mirrored } else { QuadraticSign::AsPrinted },
    }
}

fn flag_params(f: &FamilyArgs) -> [(&'static str, Option<f64>); 7] {
    [("a", f.a), ("b", f.b), ("c", f.c), ("d", f.d), ("u0", f.u0), ("v0", f.v0), ("c1", f.c1)]
}

fn variant_flag(f: &FamilyArgs, family: u8) -> Result<Variant, CliError> {
    match (&f.variant, family) {
        (_, t) if !(1..=6).contains(&t) => Err(usage(format!("type must be 1..6, got {t}"))),
        (Some(v), _) => Ok(Variant::parse(v)?),
        (None, 1 | 4) => Ok(Variant::Single),
        (None, t) => Err(usage(format!("type {t} requires --variant i or --variant ii"))),
    }
}

fn read_spec(text: &str) -> Result<FamilySpec, CliError> {
    let trimmed = text.trim_start();
    let json = if trimmed.starts_with('{') { trimmed.to_owned() } else { fs::read_to_string(text)? };
    Ok(serde_json::from_str(&json)?)
}

/// The member selected by `--spec` and/or the parameter flags.
fn resolve_spec(f: &FamilyArgs) -> Result<FamilySpec, CliError> {
    let mut spec = match &f.spec {
        Some(text) => {
            let spec = read_spec(text)?;
            if f.family.is_some_and(|t| t != spec.family) {
                return Err(usage("--type disagrees with --spec"));
            }
            if f.variant.is_some() && variant_flag(f, spec.family)? != spec.variant {
                return Err(usage("--variant disagrees with --spec"));
            }
            spec
        }
        None => {
            let family = f.family.ok_or_else(|| usage("a family is required: pass --type or --spec"))?;
            FamilySpec::new(family, variant_flag(f, family)?, Params::default())?
        }
    };
    for (name, value) in flag_params(f) {
        if let Some(v) = value {
            spec.params.set(name, v)?;
        }
    }
    let flags = options(f);
    if flags.type3_form != Type3Form::default() {
        spec.options.type3_form = flags.type3_form;
    }
    if flags.type6_sign != QuadraticSign::default() {
        spec.options.type6_sign = flags.type6_sign;
    }
    spec.validate()?;
    Ok(spec)
}

/// Either the single resolved member or `n` seeded random members.
fn resolve_specs(f: &FamilyArgs, draws: Option<usize>, seed: u64) -> Result<Vec<FamilySpec>, CliError> {
    let Some(n) = draws else {
        return Ok(vec![resolve_spec(f)?]);
    };
    if f.spec.is_some() || flag_params(f).iter().any(|(_, v)| v.is_some()) {
        return Err(usage("--draws cannot be combined with --spec or parameter flags"));
    }
    let family = f.family.ok_or_else(|| usage("--draws needs --type"))?;
    let variant = variant_flag(f, family)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Ok(FamilySpec::random(family, variant, &mut rng)?.with_options(options(f))))
        .collect()
}

fn scanned_surface(spec: &FamilySpec, g: &GridArgs) -> Result<ParamSurface, CliError> {
    let s = safe_family_surface(spec, g.domain)?;
    Ok(if g.generic { s.with_scheme(Scheme::Generic) } else { s })
}

fn fmt_domain(d: &Domain) -> String {
    format!("[{}, {}] x [{}, {}]", d.x.0, d.x.1, d.y.0, d.y.1)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct ScanSummary {
    spec: FamilySpec,
    domain: Domain,
    scheme: Scheme,
    grid: usize,
    tolerance: f64,
    samples: usize,
    skipped: usize,
    max_abs_h: f64,
    mean_abs_h: f64,
    max_abs_residual: f64,
    max_gauss_defect: f64,
    warnings: Vec<String>,
    pass: bool,
}

impl ScanSummary {
    fn new(spec: FamilySpec, s: &ParamSurface, g: &GridArgs, r: &ScanReport) -> Self {
        let tolerance = g.tolerance();
        Self {
            spec,
            domain: s.domain(),
            scheme: s.scheme(),
            grid: g.grid,
            tolerance,
            samples: r.samples,
            skipped: r.skipped.len(),
            max_abs_h: r.max_abs_h,
            mean_abs_h: r.mean_abs_h,
            max_abs_residual: r.max_abs_residual,
            max_gauss_defect: r.max_gauss_defect,
            warnings: spec.warnings(),
            pass: r.max_abs_h < tolerance,
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> Result<(), CliError> {
        for w in &self.warnings {
            writeln!(out, "warning: {w}")?;
        }
        writeln!(
            out,
            "{}: max|H| = {:.3e} (tol {:e}) {}",
            self.spec,
            self.max_abs_h,
            self.tolerance,
            verdict(self.pass)
        )?;
        writeln!(
            out,
            "  domain {}, {}x{} {}, {} samples, {} skipped, max residual {:.3e}, max Gauss defect {:.3e}",
            fmt_domain(&self.domain),
            self.grid,
            self.grid,
            match self.scheme {
                Scheme::Analytic => "analytic",
                Scheme::Generic => "generic",
            },
            self.samples,
            self.skipped,
            self.max_abs_residual,
            self.max_gauss_defect
        )?;
        Ok(())
    }
}

#[derive(Serialize)]
struct Batch<T> {
    pass: bool,
    records: Vec<T>,
}

fn verify(a: &VerifyArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let mut records = Vec::new();
    for spec in resolve_specs(&a.family, a.draws, a.seed)? {
        let s = scanned_surface(&spec, &a.grid)?;
        let rows = grid_scan_rows(&s, a.grid.grid, a.grid.grid)?;
        records.push(ScanSummary::new(spec, &s, &a.grid, &ScanReport::from_rows(&rows)?));
    }
    let pass = records.iter().all(|r| r.pass);
    if json {
        print_json(out, &Batch { pass, records })?;
    } else {
        for r in &records {
            r.write_text(out)?;
        }
        if records.len() > 1 {
            let failing = records.iter().filter(|r| !r.pass).count();
            writeln!(out, "{} members, {failing} failing: {}", records.len(), verdict(pass))?;
        }
    }
    Ok(pass)
}

fn scan(a: &ScanArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let spec = resolve_spec(&a.family)?;
    let s = scanned_surface(&spec, &a.grid)?;
    let rows = grid_scan_rows(&s, a.grid.grid, a.grid.grid)?;
    let summary = ScanSummary::new(spec, &s, &a.grid, &ScanReport::from_rows(&rows)?);
    match &a.out {
        Some(path) => {
            write_scan_csv(&rows, std::io::BufWriter::new(fs::File::create(path)?))?;
            if json {
                print_json(out, &summary)?;
            } else {
                summary.write_text(out)?;
                writeln!(out, "  wrote {} rows to {}", rows.len(), path.display())?;
            }
        }
        None if json => {
            #[derive(Serialize)]
            struct Full<'a> {
                summary: &'a ScanSummary,
                rows: &'a [nil3::surface::ScanRow],
            }
            print_json(out, &Full { summary: &summary, rows: &rows })?;
        }
        None => write_scan_csv(&rows, &mut *out)?,
    }
    Ok(summary.pass)
}

#[derive(Serialize)]
struct OdeRecord {
    spec: FamilySpec,
    /// `None` for variants whose profiles are polynomial or reciprocal.
    oracle: Option<OracleRecord>,
    /// `ode` evaluates the displayed profile equations; type 6 has none and
    /// uses the geometric residual.
    route: &'static str,
    max_abs_route_residual: f64,
    tolerance: f64,
    pass: bool,
}

fn ode_record(spec: FamilySpec, a: &OdeArgs) -> Result<OdeRecord, CliError> {
    let p = family_profiles(&spec)?;
    let d = safe_domain(&spec, a.grid.domain)?;
    let target = if profile_ode(&p.u).is_ok() {
        Some((p.u, d.x))
    } else if profile_ode(&p.v).is_ok() {
        Some((p.v, d.y))
    } else {
        None
    };
    let oracle = target.map(|(profile, span)| run_oracle(&profile, span, a.step, a.oracle_tol)).transpose()?;
    let s = safe_family_surface(&spec, a.grid.domain)?;
    let mut worst: f64 = 0.0;
    for (x, y) in grid_points(d, a.grid.grid, a.grid.grid)? {
        if s.distance_to_excluded(x, y) < SINGULAR_MARGIN {
            continue;
        }
        let r = match spec.family {
            6 => geometric_residual(6, spec.options.type3_form, &p.u, &p.v, x, y)?,
            f => ode_residual(f, &p.u, &p.v, x, y)?,
        };
        worst = if r.is_nan() { f64::NAN } else { worst.max(r.abs()) };
    }
    let tolerance = a.grid.tolerance();
    let pass = worst < tolerance && oracle.as_ref().is_none_or(|o| o.pass);
    let route = if spec.family == 6 { "geometric" } else { "ode" };
    Ok(OdeRecord { spec, oracle, route, max_abs_route_residual: worst, tolerance, pass })
}

fn ode(a: &OdeArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let records = resolve_specs(&a.family, a.draws, a.seed)?
        .into_iter()
        .map(|spec| ode_record(spec, a))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = records.iter().all(|r| r.pass);
    if json {
        print_json(out, &Batch { pass, records })?;
        return Ok(pass);
    }
    for r in &records {
        writeln!(out, "{}: {}", r.spec, verdict(r.pass))?;
        match &r.oracle {
            Some(o) => writeln!(
                out,
                "  {} vs RK4 (step {:e}) on [{}, {}]: max deviation {:.3e} (tol {:e})",
                o.ode, o.step, o.span[0], o.span[1], o.max_error, a.oracle_tol
            )?,
            None => writeln!(out, "  no closed-form profile equation to integrate")?,
        }
        writeln!(out, "  {} route: max |residual| {:.3e} (tol {:e})", r.route, r.max_abs_route_residual, r.tolerance)?;
    }
    Ok(pass)
}

fn case_profile(choice: ProfileChoice) -> ProfileFn {
    match choice {
        ProfileChoice::Affine => ProfileFn::affine(0.8, -0.3),
        ProfileChoice::Quadratic => ProfileKind::Quadratic { c2: 0.7, c1: 0.1, c0: -0.3 }.into(),
        ProfileChoice::Sin => ProfileKind::Sine { amplitude: 1.0, frequency: 1.0, phase: 0.0 }.into(),
        ProfileChoice::Asinh => ProfileKind::Asinh { scale: 0.8, shift: 0.3 }.into(),
    }
}

#[derive(Serialize)]
struct CaseRecord {
    #[serde(flatten)]
    audit: CaseAudit,
    formula: &'static str,
    domain: Domain,
    minimal: bool,
    /// Starred rows are minimal only for affine profiles.
    expected_minimal: bool,
}

fn cases(a: &CasesArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let profile = case_profile(a.profile);
    let mut records = Vec::new();
    for case in CaseId::ALL.into_iter().filter(|c| !a.starred || c.starred()) {
        let w = (-a.domain, a.domain);
        let domain = match (a.profile, case.profile_in_y()) {
            (ProfileChoice::Sin, true) => Domain::new(w, (0.0, 2.0 * PI))?,
            (ProfileChoice::Sin, false) => Domain::new((0.0, 2.0 * PI), w)?,
            _ => Domain::new(w, w)?,
        };
        let s = missing_case_surface(case, a.c, profile)?.with_domain(domain);
        let audit = audit_case(case, &s, a.grid)?;
        records.push(CaseRecord {
            audit,
            formula: case.formula(),
            domain,
            minimal: audit.max_abs_residual < a.tol,
            expected_minimal: !case.starred() || profile.is_affine(),
        });
    }
    let pass = records.iter().all(|r| r.minimal);
    if json {
        print_json(out, &Batch { pass, records })?;
        return Ok(pass);
    }
    let name = a.profile.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
    writeln!(out, "profile {name}, c = {}, {}x{} grid, tol {:e}", a.c, a.grid, a.grid, a.tol)?;
    for r in &records {
        writeln!(
            out,
            "{:<16} {:<28} max|residual| {:.3e}  minimal {:<3}  expected {:<3}  singular {}",
            r.audit.case.to_string(),
            r.formula,
            r.audit.max_abs_residual,
            if r.minimal { "yes" } else { "no" },
            if r.expected_minimal { "yes" } else { "no" },
            r.audit.singular
        )?;
    }
    let failing = records.iter().filter(|r| !r.minimal).count();
    writeln!(out, "{} rows, {failing} not minimal: {}", records.len(), verdict(pass))?;
    Ok(pass)
}

fn mesh(a: &MeshArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let spec = resolve_spec(&a.family)?;
    let s = safe_family_surface(&spec, a.domain)?;
    let Some(path) = &a.out else {
        write_obj(&triangulate(&s, a.grid, a.grid)?, &mut *out)?;
        return Ok(true);
    };
    let m = export_obj(&s, a.grid, a.grid, path)?;
    #[derive(Serialize)]
    struct MeshSummary<'a> {
        spec: FamilySpec,
        domain: Domain,
        grid: usize,
        vertices: usize,
        faces: usize,
        path: &'a std::path::Path,
    }
    let summary =
        MeshSummary { spec, domain: s.domain(), grid: a.grid, vertices: m.vertices.len(), faces: m.faces.len(), path };
    if json {
        print_json(out, &summary)?;
    } else {
        writeln!(
            out,
            "{}: {} vertices, {} faces over {} written to {}",
            spec,
            summary.vertices,
            summary.faces,
            fmt_domain(&summary.domain),
            path.display()
        )?;
    }
    Ok(true)
}

#[derive(Serialize)]
struct CaseEntry {
    #[serde(flatten)]
    case: CaseId,
    formula: &'static str,
    profile_variable: &'static str,
}

fn catalog(a: &CatalogArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let cases: Vec<_> = CaseId::ALL
        .into_iter()
        .map(|case| CaseEntry {
            case,
            formula: case.formula(),
            profile_variable: if case.profile_in_y() { "v(y)" } else { "u(x)" },
        })
        .collect();
    let mut arbitration: Vec<Arbitration> = Vec::new();
    if !a.no_arbitration {
        let settings = ScanSettings { draws: a.draws, grid: a.grid, ..ScanSettings::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        arbitration.push(arbitrate_type3(settings, &mut rng)?);
        arbitration.push(arbitrate_type6(settings, &mut rng)?);
    }
    let flatness = flatness_report(&[0.0, 0.5, 1.0], 1e-8)?;
    let pass = arbitration.iter().all(|r| r.default_passes) && flatness.matches_formula;
    if json {
        #[derive(Serialize)]
        struct Catalog<'a> {
            families: &'a [nil3::families::catalog::FamilyEntry],
            missing_cases: &'a [CaseEntry],
            flags: &'a [nil3::families::catalog::InconsistencyFlag],
            arbitration: &'a [Arbitration],
            flatness: &'a nil3::report::FlatnessReport,
            pass: bool,
        }
        let c = Catalog {
            families: &FAMILIES,
            missing_cases: &cases,
            flags: &FLAGS,
            arbitration: &arbitration,
            flatness: &flatness,
            pass,
        };
        print_json(out, &c)?;
        return Ok(pass);
    }
    writeln!(out, "families")?;
    for f in &FAMILIES {
        let label = match f.variant {
            Variant::Single => format!("type {}", f.family),
            v => format!("type {}({v})", f.family),
        };
        writeln!(out, "  {label:<10} {}", f.product)?;
        writeln!(out, "             params {}; poles {}", f.params.join(", "), f.poles)?;
        writeln!(out, "             u(x) = {}", f.u)?;
        writeln!(out, "             v(y) = {}", f.v)?;
    }
    writeln!(out, "missing cases (* minimal only for affine profiles)")?;
    for c in &cases {
        writeln!(out, "  {:<16} {}", c.case.to_string(), c.formula)?;
    }
    writeln!(out, "inconsistency flags")?;
    for f in &FLAGS {
        writeln!(out, "  [{}] {}", f.id, f.issue)?;
        writeln!(out, "      resolution: {}", f.resolution)?;
    }
    for r in &arbitration {
        writeln!(out, "arbitration: {} (tol {:e}, default {})", r.question, r.tolerance, r.default_choice)?;
        for o in &r.outcomes {
            writeln!(
                out,
                "  {:<30} {}/{} draws failing, max|H| {:.3e}: {}",
                o.choice,
                o.failing,
                o.draws,
                o.max_abs_h,
                verdict(o.pass)
            )?;
        }
    }
    writeln!(out, "flatness: {}", flatness.note)?;
    for row in &flatness.rows {
        writeln!(
            out,
            "  y = {}: K (Gauss) {:.12}, K (Brioschi) {:.12}, -1/(1+y^2)^2 = {:.12}",
            row.y, row.k_gauss, row.k_brioschi, row.expected
        )?;
    }
    Ok(pass)
}
