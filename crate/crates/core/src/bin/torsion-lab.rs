//! Command-line interface: exact torsion computations with JSON reports on
//! standard output and a human summary on standard error.
//!
//! Exit codes: 0 success, 1 input error, 2 internal inconsistency,
//! 3 self-check failure.

use clap::{Parser, Subcommand, ValueEnum};
use num::Signed;
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;
use torsion_lab::io::{
    parse_basis_document, parse_complex_document, parse_rational, render_exact, render_rational,
    DegreeReport, QuadratureReport, Report, ValueReport,
};
use torsion_lab::scalar::Rational;
use torsion_lab::selfcheck;
use torsion_lab::sphere::{
    product_torsion_closed, sphere_volume, volume_quadrature, weng_you_torsion, CellModel,
    ProductSpec, SphereSpec,
};
use torsion_lab::torsion::{
    to_float_basis, to_float_complex, torsion_exact_breakdown, torsion_float, GradedBasis,
    TorsionError, TorsionValue,
};
use torsion_lab::PiRadical;

#[derive(Parser)]
#[command(name = "torsion-lab", version, about = "Exact torsion of based chain complexes and sphere models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Minimal,
    Hemispheric,
}

impl From<ModelArg> for CellModel {
    fn from(value: ModelArg) -> CellModel {
        match value {
            ModelArg::Minimal => CellModel::Minimal,
            ModelArg::Hemispheric => CellModel::Hemispheric,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Torsion of a round sphere: cell model, harmonic basis, exact engine
    Sphere {
        /// Sphere dimension n >= 1
        #[arg(long)]
        dim: usize,
        /// Radius as a positive rational "p/q"
        #[arg(long, default_value = "1")]
        radius: String,
        /// Rank of the trivial twisting representation
        #[arg(long, default_value_t = 1)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::Minimal)]
        model: ModelArg,
        /// Include per-degree determinants in the report
        #[arg(long)]
        verbose: bool,
    },
    /// Closed-form torsion of a product of two spheres
    Product {
        /// The two sphere dimensions n and k
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        dims: Vec<usize>,
        /// The two radii as positive rationals
        #[arg(long, num_args = 2, default_values = ["1", "1"], value_names = ["A", "B"])]
        radii: Vec<String>,
    },
    /// Spectral-side closed form for odd spheres: 2 pi^(k+1) l^(2k+1) / k!
    Wengyou {
        #[arg(long)]
        k: u64,
        #[arg(long, default_value = "1")]
        radius: String,
    },
    /// Torsion of a complex document with an optional basis document
    Torsion {
        /// Complex document (JSON)
        #[arg(long)]
        complex: PathBuf,
        /// Basis document (JSON); omitted means an empty (acyclic) basis
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Use the floating-point path instead of exact arithmetic
        #[arg(long)]
        float: bool,
        /// Relative tolerance for float rank decisions, in (0, 1e-3]
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Include per-degree determinants in the report
        #[arg(long)]
        verbose: bool,
    },
    /// Exact sphere volume, optionally cross-checked by quadrature
    Volume {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "1")]
        radius: String,
        /// Simpson panel count (even, >= 64) for the quadrature oracle
        #[arg(long)]
        quadrature: Option<usize>,
    },
    /// Run every property suite; exits 0 only if all pass
    Selfcheck,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let start = Instant::now();
    let command_name = command_name(&cli.command);
    match run(cli.command) {
        Ok((mut report, code)) => {
            report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            std::process::exit(code);
        }
        Err(failure) => {
            let mut report = Report::new(command_name);
            report.status = "error".to_string();
            report.error = Some(failure.message.clone());
            report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Sphere { .. } => "sphere",
        Command::Product { .. } => "product",
        Command::Wengyou { .. } => "wengyou",
        Command::Torsion { .. } => "torsion",
        Command::Volume { .. } => "volume",
        Command::Selfcheck => "selfcheck",
    }
}

fn positive_rational(text: &str, what: &str) -> Result<Rational, Failure> {
    let value = parse_rational(text).map_err(|e| Failure::input(format!("{what}: {e}")))?;
    if value.is_positive() {
        Ok(value)
    } else {
        Err(Failure::input(format!("{what} must be positive, got {text}")))
    }
}

fn degree_reports(dets: &[PiRadical]) -> Vec<DegreeReport> {
    dets.iter()
        .enumerate()
        .map(|(degree, det)| DegreeReport { degree, det: ValueReport::from_exact(det) })
        .collect()
}

fn run(command: Command) -> Result<(Report, i32), Failure> {
    match command {
        Command::Sphere { dim, radius, rank, model, verbose } => {
            let radius = positive_rational(&radius, "--radius")?;
            let model = CellModel::from(model);
            let spec = SphereSpec::new(dim, radius.clone(), rank, model)
                .ok_or_else(|| Failure::input("sphere needs --dim >= 1 and --rank >= 1"))?;
            let breakdown = torsion_exact_breakdown(&spec.complex(), &spec.harmonic_basis())
                .map_err(torsion_failure)?;
            let closed = spec.closed_torsion();
            if breakdown.torsion != closed {
                return Err(Failure::internal(format!(
                    "engine torsion {} disagrees with the closed form {}",
                    render_exact(&breakdown.torsion),
                    render_exact(&closed)
                )));
            }
            let mut report = Report::new("sphere");
            report.input = Some(json!({
                "dim": dim,
                "radius": render_rational(&radius),
                "rank": rank,
                "model": model.name(),
            }));
            report.torsion = Some(ValueReport::from_exact(&breakdown.torsion));
            if verbose {
                report.per_degree = Some(degree_reports(&breakdown.degree_dets));
            }
            summarize_torsion(&breakdown.torsion, &format!("S^{dim}"));
            Ok((report, 0))
        }
        Command::Product { dims, radii } => {
            let (n, k) = (dims[0], dims[1]);
            let a = positive_rational(&radii[0], "--radii")?;
            let b = positive_rational(&radii[1], "--radii")?;
            let spec = ProductSpec::new(n, k, a.clone(), b.clone())
                .ok_or_else(|| Failure::input("product needs both dimensions >= 1"))?;
            let torsion = product_torsion_closed(&spec);
            let mut report = Report::new("product");
            report.input = Some(json!({
                "dims": [n, k],
                "radii": [render_rational(&a), render_rational(&b)],
            }));
            report.torsion = Some(ValueReport::from_exact(&torsion));
            summarize_torsion(&torsion, &format!("S^{n} x S^{k}"));
            Ok((report, 0))
        }
        Command::Wengyou { k, radius } => {
            let radius = positive_rational(&radius, "--radius")?;
            let torsion = weng_you_torsion(k, &radius);
            let mut report = Report::new("wengyou");
            report.input = Some(json!({ "k": k, "radius": render_rational(&radius) }));
            report.torsion = Some(ValueReport::from_exact(&torsion));
            summarize_torsion(&torsion, &format!("S^{}", 2 * k + 1));
            Ok((report, 0))
        }
        Command::Torsion { complex, basis, float, tol, verbose } => {
            let complex_text = std::fs::read_to_string(&complex)
                .map_err(|e| Failure::input(format!("{}: {e}", complex.display())))?;
            let parsed = parse_complex_document(&complex_text)
                .map_err(|e| Failure::input(e.to_string()))?;
            let chain = parsed.complex();
            let graded = match &basis {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                    parse_basis_document(&text, chain.degrees().len())
                        .map_err(|e| Failure::input(e.to_string()))?
                }
                None => GradedBasis::empty(chain.degrees().len()),
            };
            let mut report = Report::new("torsion");
            report.input = Some(json!({
                "complex": complex.display().to_string(),
                "basis": basis.as_ref().map(|p| p.display().to_string()),
                "float": float,
                "tol": tol,
            }));
            if float {
                let fc = to_float_complex(chain)
                    .map_err(|e| Failure::input(format!("complex does not fit in floats: {e}")))?;
                let fb = to_float_basis(&graded)
                    .map_err(|e| Failure::input(format!("basis does not fit in floats: {e}")))?;
                match torsion_float(&fc, &fb, tol).map_err(torsion_failure)? {
                    TorsionValue::Float { value, relative_error } => {
                        report.torsion = Some(ValueReport::from_float(value, relative_error));
                        eprintln!("torsion ~= {value:.15e} (relative error <= {relative_error:.3e})");
                    }
                    TorsionValue::Exact(_) => unreachable!("float path yields floats"),
                }
            } else {
                let breakdown =
                    torsion_exact_breakdown(chain, &graded).map_err(torsion_failure)?;
                report.torsion = Some(ValueReport::from_exact(&breakdown.torsion));
                if verbose {
                    report.per_degree = Some(degree_reports(&breakdown.degree_dets));
                }
                summarize_torsion(&breakdown.torsion, "complex");
            }
            Ok((report, 0))
        }
        Command::Volume { dim, radius, quadrature } => {
            let radius = positive_rational(&radius, "--radius")?;
            if dim < 1 {
                return Err(Failure::input("--dim must be at least 1"));
            }
            let volume = sphere_volume(dim, &radius);
            let mut report = Report::new("volume");
            report.input = Some(json!({ "dim": dim, "radius": render_rational(&radius) }));
            report.volume = Some(ValueReport::from_exact(&volume));
            if let Some(panels) = quadrature {
                if panels < 64 || panels % 2 != 0 {
                    return Err(Failure::input("--quadrature must be even and at least 64"));
                }
                let numeric = volume_quadrature(dim, &radius, panels);
                let exact = volume
                    .to_f64()
                    .map_err(|e| Failure::internal(format!("volume overflows floats: {e}")))?;
                report.quadrature = Some(QuadratureReport {
                    panels,
                    value: numeric,
                    relative_difference: (numeric - exact).abs() / exact,
                });
            }
            eprintln!(
                "Vol(S^{dim}, l={}) = {}",
                render_rational(&radius),
                render_exact(&volume)
            );
            Ok((report, 0))
        }
        Command::Selfcheck => {
            let suites = selfcheck::run_all();
            let all_passed = suites.iter().all(|s| s.passed);
            for suite in &suites {
                eprintln!(
                    "{} {} ({} cases, {} failures){}",
                    if suite.passed { "PASS" } else { "FAIL" },
                    suite.name,
                    suite.cases,
                    suite.failures,
                    if suite.detail.is_empty() {
                        String::new()
                    } else {
                        format!(": {}", suite.detail)
                    }
                );
            }
            let mut report = Report::new("selfcheck");
            report.suites = Some(suites);
            report.status = if all_passed { "ok".to_string() } else { "fail".to_string() };
            Ok((report, if all_passed { 0 } else { 3 }))
        }
    }
}

fn torsion_failure(e: TorsionError) -> Failure {
    match e {
        TorsionError::SingularDegree { .. } | TorsionError::NotSquare { .. } => {
            Failure::internal(e.to_string())
        }
        _ => Failure::input(e.to_string()),
    }
}

fn summarize_torsion(torsion: &PiRadical, what: &str) {
    match torsion.to_f64() {
        Ok(f) => eprintln!("torsion({what}) = {} ~= {f:.15e}", render_exact(torsion)),
        Err(_) => eprintln!("torsion({what}) = {}", render_exact(torsion)),
    }
}
