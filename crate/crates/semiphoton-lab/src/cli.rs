//! Command-line front end.
//!
//! Subcommands: `constants`, `model-params`, `verify <suite>`, `fields`,
//! `ring-charge`, `audit`. Global flags select the constants file
//! (`--constants`, falling back to `SEMIPHOTON_CONSTANTS`), the output format
//! (`--format csv|json|table`), an output file (`--out`), and the table
//! precision (`--precision`, significant digits in 6..=17).
//!
//! Exit codes are a stable contract: 0 on success, 1 when a verification or
//! audit run fails, 2 on usage or load errors. CSV and JSON outputs use
//! round-trip float formatting; `--precision` shapes table output only. Row
//! and column order are fixed, so outputs are byte-stable.

use std::env;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constants::{load_constants, PhysicalConstants};
use crate::electron_model::{audit_consistency, flux_quantum, AuditStatus, ElectronModelParams};
use crate::em_correspondence::{poynting, sample_trig_solution, System, TrigSolutionParams};
use crate::ring_dynamics::{
    current_samples, net_ring_charge, plane_charge_closed_form, Polarization, RingWaveConfig,
};
use crate::verify::{self, Suite};
use crate::{Error, Result};

/// Relative threshold under which a ring charge is reported as neutral.
const NEUTRALITY_THRESHOLD: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "semiphoton-lab",
    version,
    about = "Ring-wave lepton model: operator algebra checks, field solutions, ring charges, and the torus-model audit"
)]
struct Cli {
    /// Path to a JSON constants file; overrides SEMIPHOTON_CONSTANTS.
    #[arg(long, global = true, value_name = "PATH")]
    constants: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Significant digits for table output (6..=17).
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Algebra,
    Fields,
    Ring,
    Model,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Fields => Suite::Fields,
            SuiteArg::Ring => Suite::Ring,
            SuiteArg::Model => Suite::Model,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Prime,
    #[value(name = "double_prime", alias = "double-prime")]
    DoublePrime,
}

impl From<SystemArg> for System {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Prime => System::Prime,
            SystemArg::DoublePrime => System::DoublePrime,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolarizationArg {
    Plane,
    Circular,
}

impl From<PolarizationArg> for Polarization {
    fn from(p: PolarizationArg) -> Self {
        match p {
            PolarizationArg::Plane => Polarization::Plane,
            PolarizationArg::Circular => Polarization::Circular,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the loaded physical constants with their provenance.
    Constants,
    /// Print the derived torus-model quantities.
    ModelParams,
    /// Run an invariant suite; exits 0 only if every check passes.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Sample a trigonometric field solution over one period at y = 0.
    Fields {
        #[arg(long, value_enum)]
        system: SystemArg,
        /// Field amplitude.
        #[arg(long)]
        a0: f64,
        /// Angular frequency (rad/s); the wavenumber follows as omega/c.
        #[arg(long)]
        omega: f64,
        /// Number of samples over one period (at least 2).
        #[arg(long)]
        samples: usize,
    },
    /// Net charge of the model ring wave by Simpson quadrature.
    RingCharge {
        #[arg(long, value_enum)]
        polarization: PolarizationArg,
        /// Quadrature subintervals (at least 100).
        #[arg(long)]
        steps: usize,
    },
    /// Evaluate the model-chain consistency audit.
    Audit,
}

/// Parse arguments from the process environment and run. Returns the process
/// exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    if !(6..=17).contains(&cli.precision) {
        return Err(Error::InvalidInput(format!(
            "precision must lie in 6..=17, got {}",
            cli.precision
        )));
    }
    let source = cli
        .constants
        .clone()
        .or_else(|| env::var_os("SEMIPHOTON_CONSTANTS").map(PathBuf::from));
    let k = load_constants(source.as_deref())?;
    let provenance = match &source {
        Some(path) => format!("file {}", path.display()),
        None => "defaults (CODATA 2018)".to_string(),
    };

    let (output, code) = match cli.command {
        Command::Constants => (render_constants(&k, &provenance, cli.format, cli.precision), 0),
        Command::ModelParams => (render_model_params(&k, cli.format, cli.precision)?, 0),
        Command::Verify { suite } => render_verify(&k, suite.into(), cli.format, cli.precision),
        Command::Fields {
            system,
            a0,
            omega,
            samples,
        } => (
            render_fields(&k, system.into(), a0, omega, samples, cli.format, cli.precision)?,
            0,
        ),
        Command::RingCharge {
            polarization,
            steps,
        } => (
            render_ring_charge(&k, polarization.into(), steps, cli.format, cli.precision)?,
            0,
        ),
        Command::Audit => render_audit(&k, cli.format, cli.precision)?,
    };

    match &cli.out {
        Some(path) => fs::write(path, output)?,
        None => print!("{output}"),
    }
    Ok(code)
}

/// Fixed-significant-digit scientific form for table output.
fn sig(x: f64, precision: usize) -> String {
    format!("{:.*e}", precision - 1, x)
}

fn key_value_table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in rows {
        out.push_str(&format!("{key:<width$}  {value}\n"));
    }
    out
}

fn render_constants(k: &PhysicalConstants, provenance: &str, format: Format, precision: usize) -> String {
    match format {
        Format::Json => {
            // The pure record, reloadable through --constants.
            let mut s = serde_json::to_string_pretty(k).expect("constants serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("field,value\n");
            for (name, value) in constant_rows(k) {
                out.push_str(&format!("{name},{value}\n"));
            }
            out
        }
        Format::Table => {
            let mut rows = vec![("source", provenance.to_string())];
            rows.extend(
                constant_rows(k)
                    .into_iter()
                    .map(|(name, value)| (name, sig(value, precision))),
            );
            key_value_table(&rows)
        }
    }
}

fn constant_rows(k: &PhysicalConstants) -> Vec<(&'static str, f64)> {
    vec![
        ("c", k.c),
        ("hbar", k.hbar),
        ("h", k.h),
        ("e", k.e),
        ("m_e", k.m_e),
        ("epsilon_0", k.epsilon_0),
        ("alpha", k.alpha),
    ]
}

#[derive(Serialize)]
struct ModelParamsView {
    lambda_p: f64,
    r_s: f64,
    r_c: f64,
    zeta: f64,
    omega_p: f64,
    omega_s: f64,
    e0: f64,
    q: f64,
    m_s: f64,
    alpha_q: f64,
    phi0: f64,
    phi0_ratio_to_h_over_e: f64,
}

fn render_model_params(k: &PhysicalConstants, format: Format, precision: usize) -> Result<String> {
    let m = ElectronModelParams::from_constants(k)?;
    let flux = flux_quantum(k);
    let view = ModelParamsView {
        lambda_p: m.lambda_p,
        r_s: m.r_s,
        r_c: m.r_c,
        zeta: m.zeta,
        omega_p: m.omega_p,
        omega_s: m.omega_s,
        e0: m.e0,
        q: m.q,
        m_s: m.m_s,
        alpha_q: m.alpha_q,
        phi0: flux.closed_form,
        phi0_ratio_to_h_over_e: flux.ratio_to_h_over_e,
    };
    let rows = [
        ("lambda_p", view.lambda_p),
        ("r_s", view.r_s),
        ("r_c", view.r_c),
        ("zeta", view.zeta),
        ("omega_p", view.omega_p),
        ("omega_s", view.omega_s),
        ("e0", view.e0),
        ("q", view.q),
        ("m_s", view.m_s),
        ("alpha_q", view.alpha_q),
        ("phi0", view.phi0),
        ("phi0_ratio_to_h_over_e", view.phi0_ratio_to_h_over_e),
    ];
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&view).expect("model params serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("field,value\n");
            for (name, value) in rows {
                out.push_str(&format!("{name},{value}\n"));
            }
            out
        }
        Format::Table => {
            let rows: Vec<_> = rows
                .into_iter()
                .map(|(name, value)| (name, sig(value, precision)))
                .collect();
            key_value_table(&rows)
        }
    })
}

fn render_verify(k: &PhysicalConstants, suite: Suite, format: Format, precision: usize) -> (String, i32) {
    let checks = verify::run(suite, k);
    let all_passed = checks.iter().all(|c| c.passed);
    let output = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&checks).expect("checks serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("suite,name,observed,bound,passed\n");
            for c in &checks {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    c.suite, c.name, c.observed, c.bound, c.passed
                ));
            }
            out
        }
        Format::Table => {
            let name_width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut out = String::new();
            for c in &checks {
                out.push_str(&format!(
                    "{}  {:<7}  {:<name_width$}  observed {:>width$}  bound {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.suite,
                    c.name,
                    sig(c.observed, precision),
                    c.bound,
                    width = precision + 7,
                ));
            }
            out.push_str(&format!(
                "{} of {} checks passed\n",
                checks.iter().filter(|c| c.passed).count(),
                checks.len()
            ));
            out
        }
    };
    (output, if all_passed { 0 } else { 1 })
}

#[derive(Serialize)]
struct FieldRow {
    t: f64,
    y: f64,
    #[serde(rename = "Ex")]
    ex: f64,
    #[serde(rename = "Ey")]
    ey: f64,
    #[serde(rename = "Ez")]
    ez: f64,
    #[serde(rename = "Hx")]
    hx: f64,
    #[serde(rename = "Hy")]
    hy: f64,
    #[serde(rename = "Hz")]
    hz: f64,
    #[serde(rename = "Sx")]
    sx: f64,
    #[serde(rename = "Sy")]
    sy: f64,
    #[serde(rename = "Sz")]
    sz: f64,
}

const FIELD_HEADER: &str = "t,y,Ex,Ey,Ez,Hx,Hy,Hz,Sx,Sy,Sz";

fn render_fields(
    k: &PhysicalConstants,
    system: System,
    a0: f64,
    omega: f64,
    samples: usize,
    format: Format,
    precision: usize,
) -> Result<String> {
    if samples < 2 {
        return Err(Error::InvalidInput(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let params = TrigSolutionParams::new(a0, omega, omega / k.c, system, k.c)?;
    let period = params.period();
    let rows: Vec<FieldRow> = (0..samples)
        .map(|i| {
            let t = i as f64 * period / samples as f64;
            let state = sample_trig_solution(&params, t, 0.0);
            let s = poynting(&state);
            FieldRow {
                t,
                y: 0.0,
                ex: state.e.x,
                ey: state.e.y,
                ez: state.e.z,
                hx: state.h.x,
                hy: state.h.y,
                hz: state.h.z,
                sx: s.x,
                sy: s.y,
                sz: s.z,
            }
        })
        .collect();
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("field rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from(FIELD_HEADER);
            out.push('\n');
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.t, r.y, r.ex, r.ey, r.ez, r.hx, r.hy, r.hz, r.sx, r.sy, r.sz
                ));
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            let cells: Vec<&str> = FIELD_HEADER.split(',').collect();
            let width = precision + 8;
            for cell in &cells {
                out.push_str(&format!("{cell:>width$}"));
            }
            out.push('\n');
            for r in &rows {
                for v in [r.t, r.y, r.ex, r.ey, r.ez, r.hx, r.hy, r.hz, r.sx, r.sy, r.sz] {
                    out.push_str(&format!("{:>width$}", sig(v, precision)));
                }
                out.push('\n');
            }
            out
        }
    })
}

#[derive(Serialize)]
struct RingChargeView {
    polarization: &'static str,
    steps: usize,
    charge: f64,
    /// Closed form of the plane-polarized charge on the same ring; the
    /// reference scale for neutrality.
    plane_reference: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    relative_difference: Option<f64>,
    classification: &'static str,
}

fn render_ring_charge(
    k: &PhysicalConstants,
    polarization: Polarization,
    steps: usize,
    format: Format,
    precision: usize,
) -> Result<String> {
    let model = ElectronModelParams::from_constants(k)?;
    let cross_section = std::f64::consts::PI * model.r_c * model.r_c;
    let config = RingWaveConfig::new(model.r_s, model.e0, cross_section, polarization, k.hbar, k.c)?;
    let charge = net_ring_charge(&config, steps)?;
    let plane_reference = plane_charge_closed_form(&config);
    let relative_difference = match polarization {
        Polarization::Plane => Some((charge / plane_reference - 1.0).abs()),
        Polarization::Circular => None,
    };
    let classification = if charge.abs() < NEUTRALITY_THRESHOLD * plane_reference.abs() {
        "neutral"
    } else {
        "charged"
    };
    let view = RingChargeView {
        polarization: match polarization {
            Polarization::Plane => "plane",
            Polarization::Circular => "circular",
        },
        steps,
        charge,
        plane_reference,
        relative_difference,
        classification,
    };
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&view).expect("ring charge serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            // Plot-ready current trace at the quadrature nodes.
            let mut out = String::from("phase,j_n,j_tau,in_plane_projection\n");
            for r in current_samples(&config, steps + steps % 2) {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.phase, r.j_n, r.j_tau, r.in_plane_projection
                ));
            }
            out
        }
        Format::Table => {
            let mut rows = vec![
                ("polarization", view.polarization.to_string()),
                ("steps", view.steps.to_string()),
                ("charge", sig(view.charge, precision)),
                ("plane_reference", sig(view.plane_reference, precision)),
            ];
            if let Some(rel) = view.relative_difference {
                rows.push(("relative_difference", sig(rel, precision)));
            }
            rows.push(("classification", view.classification.to_string()));
            key_value_table(&rows)
        }
    })
}

fn render_audit(k: &PhysicalConstants, format: Format, precision: usize) -> Result<(String, i32)> {
    let report = audit_consistency(k)?;
    let code = if report.as_documented() { 0 } else { 1 };
    let status_label = |s: AuditStatus| match s {
        AuditStatus::Consistent => "consistent",
        AuditStatus::DiscrepantWithStatedFactor => "discrepant with stated factor",
    };
    let output = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.entries).expect("audit serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("id,lhs,rhs,residual,status,factor,note\n");
            for e in &report.entries {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    e.id,
                    e.lhs,
                    e.rhs,
                    e.residual,
                    status_label(e.status),
                    e.factor.map(|f| f.to_string()).unwrap_or_default(),
                    e.note
                ));
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "{:<5} {:>w$} {:>w$} {:>w$}  {:<30} {}\n",
                "id",
                "lhs",
                "rhs",
                "residual",
                "status",
                "note",
                w = precision + 7,
            );
            for e in &report.entries {
                let status = match e.factor {
                    Some(f) => format!("{} {:.6}", status_label(e.status), f),
                    None => status_label(e.status).to_string(),
                };
                out.push_str(&format!(
                    "{:<5} {:>w$} {:>w$} {:>w$}  {:<30} {}\n",
                    e.id,
                    sig(e.lhs, precision),
                    sig(e.rhs, precision),
                    sig(e.residual, precision),
                    status,
                    e.note,
                    w = precision + 7,
                ));
            }
            out.push_str(&format!(
                "audit: {}\n",
                if code == 0 {
                    "all entries match their documented status"
                } else {
                    "unexpected inconsistency"
                }
            ));
            out
        }
    };
    Ok((output, code))
}
