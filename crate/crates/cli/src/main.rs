//! `fracsh`: evaluate, verify, plot and decompose fractional-degree
//! spherical harmonics from the command line.
//!
//! Exit codes: 0 success, 1 verification/validation failure, 2 usage,
//! parse or domain errors.

mod config;

use std::f64::consts::PI;
use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fracsh::analysis::{
    classify_symmetry, continuity_report, particle_class, ContinuityReport, SymmetryReport,
};
use fracsh::decomposition::{
    expand, main_sum, ratio_to, search_splits, validate_split, DecompositionTree, RuleSet, Scheme,
    SearchConfig,
};
use fracsh::geometry::{
    build_surface, export_curve_csv, export_mesh_csv, export_obj, export_ply, fmt_g, xy_view,
};
use fracsh::harmonics::{
    eigen_residual_with_k, legendre_ode_residual_with_k, Form, Harmonic, HarmonicSpec,
};
use fracsh::numerics::integrate;
use fracsh::{Rational, Tolerances};

/// Environment variable naming the default output directory for relative
/// `--out` paths.
const OUT_DIR_ENV: &str = "FRACSH_OUT_DIR";

/// Eigen-residual pass threshold at the default 400-per-axis grid.
const EIGEN_TOL: f64 = 1e-3;
/// Normalization-defect pass threshold.
const NORM_TOL: f64 = 1e-8;

#[derive(Debug)]
pub enum AppError {
    /// Bad flags, unparsable input, out-of-domain arguments: exit 2.
    Usage(String),
    /// Runtime failures (I/O, non-convergent quadrature): exit 1.
    Runtime(String),
}

use fracsh::analysis::AnalysisError;
use fracsh::decomposition::DecompositionError;
use fracsh::geometry::GeometryError;
use fracsh::harmonics::HarmonicError;
use fracsh::numerics::NumericsError;

impl From<HarmonicError> for AppError {
    fn from(e: HarmonicError) -> Self {
        match e {
            HarmonicError::NormalizationUnconverged(_) => AppError::Runtime(e.to_string()),
            _ => AppError::Usage(e.to_string()),
        }
    }
}

impl From<AnalysisError> for AppError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Harmonic(h) => h.into(),
            _ => AppError::Usage(e.to_string()),
        }
    }
}

impl From<GeometryError> for AppError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Io(_) => AppError::Runtime(e.to_string()),
            GeometryError::Harmonic(h) => h.into(),
            _ => AppError::Usage(e.to_string()),
        }
    }
}

impl From<DecompositionError> for AppError {
    fn from(e: DecompositionError) -> Self {
        AppError::Usage(e.to_string())
    }
}

impl From<NumericsError> for AppError {
    fn from(e: NumericsError) -> Self {
        AppError::Usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "fracsh", version, about = "Fractional-degree spherical harmonics toolkit")]
struct Cli {
    /// Optional key = value config file (quad_abs_tol, residual_tol,
    /// pole_margin, match_tol). Flags override the file.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Override the quadrature tolerance.
    #[arg(long, global = true, value_name = "TOL")]
    quad_tol: Option<f64>,
    /// Override the ODE residual tolerance.
    #[arg(long, global = true, value_name = "TOL")]
    residual_tol: Option<f64>,
    /// Override the pole margin (radians).
    #[arg(long, global = true, value_name = "RAD")]
    pole_margin: Option<f64>,
    /// Override the set-matching tolerance.
    #[arg(long, global = true, value_name = "TOL")]
    match_tol: Option<f64>,
    /// Emit machine-readable JSON instead of the human report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Cos,
    Sin,
    ComplexPlus,
    ComplexMinus,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::Cos => Form::Cos,
            FormArg::Sin => Form::Sin,
            FormArg::ComplexPlus => Form::ComplexPlus,
            FormArg::ComplexMinus => Form::ComplexMinus,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Obj,
    Ply,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Canonical,
    Search,
}

#[derive(Args)]
struct SpecArgs {
    /// Degree l as an exact fraction "p/q". Decimals are rejected: an
    /// irrational degree never closes its curve, so degrees are rational
    /// by construction.
    #[arg(long, value_name = "RAT")]
    l: String,
    /// Order m as an exact fraction; defaults to ±l chosen by the form.
    #[arg(long, value_name = "RAT")]
    m: Option<String>,
    /// cos | sin | complex-plus | complex-minus.
    #[arg(long, value_enum, default_value = "cos")]
    form: FormArg,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one harmonic at a point.
    Eval {
        #[command(flatten)]
        spec: SpecArgs,
        /// Polar angle in radians, in [0, pi].
        #[arg(long)]
        theta: f64,
        /// Azimuthal angle in radians (reduced modulo the period).
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Verify the defining equations: ODE residual, grid eigen-residual and
    /// the |Y|^2 normalization. Exits 1 if any check fails its tolerance.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Eigenvalue override; the true k = l(l+1) is used by default.
        #[arg(long)]
        k: Option<f64>,
        /// θ rows in the eigen-residual grid.
        #[arg(long, default_value_t = 400)]
        ntheta: usize,
        /// φ columns per 2π sheet in the eigen-residual grid.
        #[arg(long, default_value_t = 400)]
        nphi: usize,
        /// θ samples for the ODE residual sweep.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Build a surface mesh r = |Y| and write OBJ, PLY or CSV.
    Mesh {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 64)]
        ntheta: usize,
        #[arg(long, default_value_t = 256)]
        nphi: usize,
        /// Sub-interval of the period as fractions "a:b" (e.g. 0:0.25 for
        /// the first quarter).
        #[arg(long, value_name = "A:B", default_value = "0:1")]
        phi_range: String,
        #[arg(long, value_enum, default_value = "obj")]
        format: FormatArg,
        /// Output file; relative paths resolve against $FRACSH_OUT_DIR.
        #[arg(long)]
        out: PathBuf,
    },
    /// Trace the X-Y plane curve r(φ) = |Y(π/2, φ)| over the full period.
    Xyview {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 512)]
        nphi: usize,
        /// Only csv is meaningful for a planar curve.
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symmetry, continuity and particle-class report (JSON).
    Analyze {
        /// Spin denominator n (s = 1/n), n >= 2.
        #[arg(long, conflicts_with = "l")]
        n: Option<u32>,
        /// Arbitrary rational degree "p/q" for a continuity-only report.
        #[arg(long)]
        l: Option<String>,
    },
    /// Expand a spin into signed unit fractions, or validate a proposed
    /// split with --parts/--validate.
    Decompose {
        /// Spin as an exact unit fraction "1/n".
        #[arg(long, value_name = "RAT")]
        s: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value = "canonical")]
        scheme: SchemeArg,
        /// Denominator bound for the search scheme.
        #[arg(long, default_value_t = 50)]
        bound: i64,
        /// Comma-separated parts to validate, e.g. "1/3,1/3,-1/6".
        #[arg(long, requires = "validate")]
        parts: Option<String>,
        /// Validate --parts against the admissibility rules; exits 1 if the
        /// split is rejected.
        #[arg(long, requires = "parts")]
        validate: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(AppError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

fn tolerances(cli: &Cli) -> Result<Tolerances, AppError> {
    let mut tols = Tolerances::default();
    if let Some(path) = &cli.config {
        config::apply_config_file(path, &mut tols)?;
    }
    if let Some(v) = cli.quad_tol {
        tols.quad_abs_tol = v;
    }
    if let Some(v) = cli.residual_tol {
        tols.residual_tol = v;
    }
    if let Some(v) = cli.pole_margin {
        tols.pole_margin = v;
    }
    if let Some(v) = cli.match_tol {
        tols.match_tol = v;
    }
    tols.validate()?;
    Ok(tols)
}

fn parse_rational(text: &str, what: &str) -> Result<Rational, AppError> {
    text.parse::<Rational>()
        .map_err(|e| AppError::Usage(format!("{what}: {e}")))
}

fn build_spec(args: &SpecArgs) -> Result<HarmonicSpec, AppError> {
    let l = parse_rational(&args.l, "--l")?;
    let form: Form = args.form.into();
    let spec = match &args.m {
        None => HarmonicSpec::new(l, form)?,
        Some(m) => HarmonicSpec::with_order(l, parse_rational(m, "--m")?, form)?,
    };
    Ok(spec)
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) => PathBuf::from(dir).join(path),
        None => path.to_path_buf(),
    }
}

fn create_out(path: &Path) -> Result<File, AppError> {
    File::create(path)
        .map_err(|e| AppError::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<i32, AppError> {
    let tols = tolerances(&cli)?;
    match &cli.command {
        Command::Eval { spec, theta, phi } => cmd_eval(spec, *theta, *phi, &tols, cli.json),
        Command::Verify {
            spec,
            k,
            ntheta,
            nphi,
            samples,
        } => cmd_verify(spec, *k, *ntheta, *nphi, *samples, &tols, cli.json),
        Command::Mesh {
            spec,
            ntheta,
            nphi,
            phi_range,
            format,
            out,
        } => cmd_mesh(spec, *ntheta, *nphi, phi_range, *format, out, &tols, cli.json),
        Command::Xyview {
            spec,
            nphi,
            format,
            out,
        } => cmd_xyview(spec, *nphi, *format, out.as_deref(), &tols),
        Command::Analyze { n, l } => cmd_analyze(*n, l.as_deref(), &tols),
        Command::Decompose {
            s,
            depth,
            scheme,
            bound,
            parts,
            validate,
        } => cmd_decompose(s, *depth, *scheme, *bound, parts.as_deref(), *validate, cli.json),
    }
}

// ---------------------------------------------------------------------------
// eval

#[derive(Serialize)]
struct EvalReport {
    l: Rational,
    m: Rational,
    form: Form,
    theta: f64,
    phi: f64,
    value_re: f64,
    value_im: Option<f64>,
    normalization: f64,
    eigenvalue: Rational,
    period: f64,
}

fn cmd_eval(
    args: &SpecArgs,
    theta: f64,
    phi: f64,
    tols: &Tolerances,
    json: bool,
) -> Result<i32, AppError> {
    let spec = build_spec(args)?;
    let harmonic = Harmonic::new(spec, tols)?;
    let value = harmonic.eval(theta, phi)?;
    let report = EvalReport {
        l: spec.degree(),
        m: spec.order(),
        form: spec.form(),
        theta,
        phi,
        value_re: value.re,
        value_im: if spec.form().is_real() {
            None
        } else {
            Some(value.im)
        },
        normalization: harmonic.normalization(),
        eigenvalue: spec.eigenvalue(),
        period: spec.period(),
    };
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("l = {}", report.l);
        println!("m = {}", report.m);
        println!("form = {}", report.form);
        println!("theta = {}", fmt_g(theta, 12));
        println!("phi = {}", fmt_g(phi, 12));
        match report.value_im {
            None => println!("value = {}", fmt_g(report.value_re, 12)),
            Some(im) => println!(
                "value = {} {} {}i",
                fmt_g(report.value_re, 12),
                if im < 0.0 { "-" } else { "+" },
                fmt_g(im.abs(), 12)
            ),
        }
        println!("normalization = {}", fmt_g(report.normalization, 12));
        println!("eigenvalue = {}", report.eigenvalue);
        println!("period = {}", fmt_g(report.period, 12));
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify

#[derive(Serialize)]
struct VerifyReport {
    l: Rational,
    m: Rational,
    form: Form,
    eigenvalue_used: f64,
    ode_residual_max: f64,
    ode_tol: f64,
    eigen_residual: f64,
    eigen_tol: f64,
    normalization_defect: f64,
    normalization_tol: f64,
    pass: bool,
}

fn cmd_verify(
    args: &SpecArgs,
    k_override: Option<f64>,
    ntheta: usize,
    nphi: usize,
    samples: usize,
    tols: &Tolerances,
    json: bool,
) -> Result<i32, AppError> {
    let spec = build_spec(args)?;
    let l = spec.degree();
    let m = spec.order();
    if m.abs() != l {
        return Err(AppError::Usage(format!(
            "verify covers the |m| = l family; got l = {l}, m = {m}"
        )));
    }
    if samples < 2 {
        return Err(AppError::Usage("--samples must be at least 2".into()));
    }
    let k = k_override.unwrap_or_else(|| spec.eigenvalue().to_f64());

    let lo = tols.pole_margin;
    let hi = PI - tols.pole_margin;
    let mut ode_max: f64 = 0.0;
    for i in 0..samples {
        let theta = (lo + (hi - lo) * i as f64 / (samples - 1) as f64).clamp(lo, hi);
        let r = legendre_ode_residual_with_k(l, m, theta, k, tols)?;
        ode_max = ode_max.max(r.abs());
    }

    let eigen = eigen_residual_with_k(&spec, ntheta, nphi, k, tols)?;
    let defect = normalization_defect(&spec, tols)?;

    let report = VerifyReport {
        l,
        m,
        form: spec.form(),
        eigenvalue_used: k,
        ode_residual_max: ode_max,
        ode_tol: tols.residual_tol,
        eigen_residual: eigen,
        eigen_tol: EIGEN_TOL,
        normalization_defect: defect,
        normalization_tol: NORM_TOL,
        pass: ode_max < tols.residual_tol && eigen < EIGEN_TOL && defect < NORM_TOL,
    };
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        let line = |name: &str, value: f64, tol: f64| {
            println!(
                "{name} = {} (tol {}): {}",
                fmt_g(value, 6),
                fmt_g(tol, 6),
                if value < tol { "pass" } else { "FAIL" }
            );
        };
        println!("l = {l}  m = {m}  form = {}  k = {}", spec.form(), fmt_g(k, 12));
        line("ode_residual_max", report.ode_residual_max, report.ode_tol);
        line("eigen_residual", report.eigen_residual, report.eigen_tol);
        line(
            "normalization_defect",
            report.normalization_defect,
            report.normalization_tol,
        );
        println!("verdict: {}", if report.pass { "pass" } else { "FAIL" });
    }
    Ok(if report.pass { 0 } else { 1 })
}

/// |∫∫ |Y|² sinθ dθ dφ − 1| through the public eval path. The integrand
/// separates, so the θ part is measured along one meridian where the
/// azimuthal factor is at its peak.
fn normalization_defect(spec: &HarmonicSpec, tols: &Tolerances) -> Result<f64, AppError> {
    let harmonic = Harmonic::new(*spec, tols)?;
    let m = spec.order().to_f64();
    let azimuthal = |phi: f64| -> f64 {
        match spec.form() {
            Form::ComplexPlus | Form::ComplexMinus => 1.0,
            Form::Cos => (m * phi).cos().powi(2),
            Form::Sin => (m * phi).sin().powi(2),
        }
    };
    // meridian where |azimuthal| = 1
    let phi0 = match spec.form() {
        Form::Sin => PI / (2.0 * m),
        _ => 0.0,
    };
    let theta_part = integrate(
        |t| harmonic.eval(t, phi0).map(|y| y.norm_sqr()).unwrap_or(f64::NAN) * t.sin(),
        0.0,
        PI,
        tols.quad_abs_tol,
    )?;
    let phi_part = integrate(azimuthal, 0.0, spec.period(), tols.quad_abs_tol)?;
    if !theta_part.converged || !phi_part.converged {
        return Err(AppError::Runtime(
            "normalization quadrature did not converge".into(),
        ));
    }
    Ok((theta_part.value * phi_part.value - 1.0).abs())
}

// ---------------------------------------------------------------------------
// mesh / xyview

fn parse_phi_range(text: &str, period: f64) -> Result<(f64, f64), AppError> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| AppError::Usage(format!("--phi-range expects A:B, got {text:?}")))?;
    let a: f64 = a
        .trim()
        .parse()
        .map_err(|_| AppError::Usage(format!("--phi-range start {a:?} is not a number")))?;
    let b: f64 = b
        .trim()
        .parse()
        .map_err(|_| AppError::Usage(format!("--phi-range end {b:?} is not a number")))?;
    if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) || a >= b {
        return Err(AppError::Usage(format!(
            "--phi-range must satisfy 0 <= A < B <= 1, got {a}:{b}"
        )));
    }
    Ok((a * period, b * period))
}

#[derive(Serialize)]
struct MeshReport {
    out: String,
    format: &'static str,
    vertices: usize,
    faces: usize,
}

#[allow(clippy::too_many_arguments)]
fn cmd_mesh(
    args: &SpecArgs,
    ntheta: usize,
    nphi: usize,
    phi_range: &str,
    format: FormatArg,
    out: &Path,
    tols: &Tolerances,
    json: bool,
) -> Result<i32, AppError> {
    let spec = build_spec(args)?;
    let range = parse_phi_range(phi_range, spec.period())?;
    let mesh = build_surface(&spec, ntheta, nphi, Some(range), tols)?;
    let path = resolve_out(out);
    let mut file = create_out(&path)?;
    let format_name = match format {
        FormatArg::Obj => {
            export_obj(&mesh, &mut file)?;
            "obj"
        }
        FormatArg::Ply => {
            export_ply(&mesh, &mut file)?;
            "ply"
        }
        FormatArg::Csv => {
            export_mesh_csv(&mesh, &mut file)?;
            "csv"
        }
    };
    let report = MeshReport {
        out: path.display().to_string(),
        format: format_name,
        vertices: mesh.vertices.len(),
        faces: mesh.faces.len(),
    };
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!(
            "wrote {} ({} vertices, {} faces, {})",
            report.out, report.vertices, report.faces, report.format
        );
    }
    Ok(0)
}

fn cmd_xyview(
    args: &SpecArgs,
    nphi: usize,
    format: FormatArg,
    out: Option<&Path>,
    tols: &Tolerances,
) -> Result<i32, AppError> {
    if format != FormatArg::Csv {
        return Err(AppError::Usage(
            "xyview writes planar curves; only --format csv is supported".into(),
        ));
    }
    let spec = build_spec(args)?;
    let curve = xy_view(&spec, nphi, tols)?;
    match out {
        Some(path) => {
            let path = resolve_out(path);
            let mut file = create_out(&path)?;
            export_curve_csv(&curve, &mut file)?;
            println!("wrote {} ({} samples)", path.display(), curve.samples.len());
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            export_curve_csv(&curve, &mut lock)?;
            lock.flush()
                .map_err(|e| AppError::Runtime(format!("stdout: {e}")))?;
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Serialize)]
struct ContinuityPair {
    cos: ContinuityReport,
    sin: ContinuityReport,
}

#[derive(Serialize)]
struct AnalyzeReport {
    l: Rational,
    n: Option<u32>,
    class_id: Option<String>,
    spins_covered: Option<String>,
    symmetry: Option<SymmetryReport>,
    continuity: ContinuityPair,
}

fn cmd_analyze(n: Option<u32>, l: Option<&str>, tols: &Tolerances) -> Result<i32, AppError> {
    let degree = match (n, l) {
        (Some(n), None) => {
            if n < 2 {
                return Err(AppError::Usage(format!("--n must be at least 2, got {n}")));
            }
            Rational::new(1, n as i64)
        }
        (None, Some(text)) => {
            let l = parse_rational(text, "--l")?;
            if l <= Rational::ZERO {
                return Err(AppError::Usage(format!("--l must be positive, got {l}")));
            }
            l
        }
        _ => return Err(AppError::Usage("give exactly one of --n or --l".into())),
    };

    // symmetry and class apply to the s = 1/n family only
    let unit_n = if degree.numer() == 1 && degree.denom() >= 2 {
        Some(degree.denom() as u32)
    } else {
        None
    };
    let (class_id, spins_covered) = match unit_n {
        Some(n) => {
            let c = particle_class(n)?;
            (Some(c.class_id.to_string()), Some(c.spins_covered))
        }
        None => (None, None),
    };
    let symmetry = match unit_n {
        Some(n) => Some(classify_symmetry(n, tols)?),
        None => None,
    };
    let report = AnalyzeReport {
        l: degree,
        n: unit_n,
        class_id,
        spins_covered,
        symmetry,
        continuity: ContinuityPair {
            cos: continuity_report(degree, Form::Cos, tols)?,
            sin: continuity_report(degree, Form::Sin, tols)?,
        },
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(0)
}

// ---------------------------------------------------------------------------
// decompose

#[derive(Serialize)]
struct LevelReport {
    level: usize,
    components: Vec<Rational>,
    sum: Rational,
    main_sum: Rational,
    ratio: String,
}

#[derive(Serialize)]
struct DecomposeReport {
    spin: Rational,
    scheme: &'static str,
    depth: usize,
    levels: Vec<LevelReport>,
    tree: DecompositionTree,
}

#[derive(Serialize)]
struct ValidateReport {
    spin: Rational,
    parts: Vec<Rational>,
    valid: bool,
    violations: Vec<String>,
}

fn format_components(components: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in components.iter().enumerate() {
        if i == 0 {
            out.push_str(&c.to_string());
        } else if c.is_negative() {
            out.push_str(&format!(" - {}", -*c));
        } else {
            out.push_str(&format!(" + {c}"));
        }
    }
    out
}

fn cmd_decompose(
    s: &str,
    depth: usize,
    scheme: SchemeArg,
    bound: i64,
    parts: Option<&str>,
    validate: bool,
    json: bool,
) -> Result<i32, AppError> {
    let spin = parse_rational(s, "--s")?;

    if validate {
        let parts_text = parts.expect("clap enforces --parts with --validate");
        let mut parsed = Vec::new();
        for token in parts_text.split(',') {
            parsed.push(parse_rational(token, "--parts")?);
        }
        let verdict = validate_split(spin, &parsed, &RuleSet::default())?;
        let report = ValidateReport {
            spin,
            parts: parsed,
            valid: verdict.valid,
            violations: verdict.violations.iter().map(|r| r.to_string()).collect(),
        };
        if json {
            println!("{}", serde_json::to_string(&report).expect("serializable"));
        } else {
            println!("split: {} = {}", report.spin, format_components(&report.parts));
            if report.valid {
                println!("verdict: valid");
            } else {
                println!("verdict: invalid (violates {})", report.violations.join(", "));
            }
        }
        return Ok(if report.valid { 0 } else { 1 });
    }

    let scheme_core = match scheme {
        SchemeArg::Canonical => Scheme::Canonical,
        SchemeArg::Search => Scheme::Search,
    };
    if scheme_core == Scheme::Search {
        // surface an impossible bound before expanding
        let cfg = SearchConfig {
            denominator_bound: bound,
            ..SearchConfig::default()
        };
        search_splits(spin.abs(), &cfg)?;
    }
    let tree = expand(spin, depth, scheme_core)?;
    let mut levels = Vec::new();
    for level in 1..=depth {
        let components: Vec<Rational> = tree.level(level)?.iter().map(|n| n.value).collect();
        let sum = tree.level_sum(level)?;
        let main = main_sum(&tree, level)?;
        levels.push(LevelReport {
            level,
            components,
            sum,
            main_sum: main,
            ratio: ratio_to(spin, main)?.to_string(),
        });
    }
    let report = DecomposeReport {
        spin,
        scheme: match scheme {
            SchemeArg::Canonical => "canonical",
            SchemeArg::Search => "search",
        },
        depth,
        levels,
        tree,
    };
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("spin: {}  scheme: {}  depth: {}", report.spin, report.scheme, depth);
        for lv in &report.levels {
            println!(
                "level {}: {} = {}  [main sum {} = {}]",
                lv.level,
                lv.sum,
                format_components(&lv.components),
                lv.main_sum,
                lv.ratio
            );
        }
    }
    Ok(0)
}
