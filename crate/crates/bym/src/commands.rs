use std::path::{Path, PathBuf};

use bym_core::bundle::curvature;
use bym_core::config::{default_ym_tolerance, DEFAULT_COND_CAP, TOL_BASE_POINT};
use bym_core::matrix::{frobenius, CMatrix, DensityMatrix};
use bym_core::metric::{bures_distance, bures_metric, fidelity_root};
use bym_core::transport::{holonomy, transport};
use bym_core::yangmills::{verify_with, VerifyConfig};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::io::{self, fmt_f64, to_json, MatrixFile};
use crate::report::ReportFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Human,
}

/// Output of a command: text for the chosen sink and whether the command
/// counts as passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn no_csv(command: &str) -> CliError {
    CliError::Usage(format!(
        "--format csv is only supported by verify, not {command}"
    ))
}

pub struct VerifyArgs {
    pub dim: usize,
    pub seed: u64,
    pub samples: usize,
    pub tol: Option<f64>,
    pub cond_cap: Option<f64>,
    pub normalized: bool,
}

pub fn verify_config(args: &VerifyArgs) -> CliResult<VerifyConfig> {
    let mut cfg = VerifyConfig::new(args.dim, args.seed, args.samples, args.normalized);
    cfg.tol = args.tol.unwrap_or_else(|| default_ym_tolerance(args.dim));
    cfg.cond_cap = args.cond_cap.unwrap_or(DEFAULT_COND_CAP);
    cfg.validate()
        .map_err(|e| CliError::Usage(format!("{}: {e}", e.name())))?;
    Ok(cfg)
}

/// Runs the campaign. In human format one progress line per sample goes to
/// `progress`.
pub fn cmd_verify(
    args: &VerifyArgs,
    format: Format,
    mut progress: impl FnMut(&str),
) -> CliResult<Output> {
    let cfg = verify_config(args)?;
    let report = verify_with(&cfg, |s, rows| {
        if format == Format::Human {
            let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
            let scale = rows.first().map_or(0.0, |r| r.scale);
            progress(&format!(
                "sample {}/{}: max residual {worst:.3e}, scale {scale:.3e}",
                s + 1,
                cfg.samples
            ));
        }
    })?;
    let file = ReportFile::new(&report, cfg.cond_cap);
    let text = match format {
        Format::Json => to_json(&file),
        Format::Csv => file.to_csv(),
        Format::Human => file.to_human(),
    };
    Ok(Output {
        text,
        passed: report.passed,
    })
}

#[derive(Serialize)]
struct DistanceOut {
    distance: f64,
    fidelity: f64,
}

pub fn cmd_distance(rho: &Path, mu: &Path, format: Format) -> CliResult<Output> {
    let a = io::read_density(rho, true)?;
    let b = io::read_density(mu, true)?;
    let out = DistanceOut {
        distance: bures_distance(&a, &b)?,
        fidelity: fidelity_root(&a, &b)?,
    };
    Ok(Output::ok(match format {
        Format::Json => to_json(&out),
        Format::Human => format!(
            "distance {}\nfidelity {}\n",
            fmt_f64(out.distance),
            fmt_f64(out.fidelity)
        ),
        Format::Csv => return Err(no_csv("distance")),
    }))
}

#[derive(Serialize)]
struct MetricOut {
    metric: f64,
}

pub fn cmd_metric(rho: &Path, x: &Path, y: &Path, format: Format) -> CliResult<Output> {
    let d = io::read_density(rho, false)?;
    let x = io::read_hermitian(x)?;
    let y = io::read_hermitian(y)?;
    let metric = bures_metric(&d, &x, &y)?;
    Ok(Output::ok(match format {
        Format::Json => to_json(&MetricOut { metric }),
        Format::Human => format!("metric {}\n", fmt_f64(metric)),
        Format::Csv => return Err(no_csv("metric")),
    }))
}

fn matrix_human(m: &CMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|j| format!("{:+.6e}{:+.6e}i", m[(i, j)].re, m[(i, j)].im))
            .collect();
        out.push_str(&row.join("  "));
        out.push('\n');
    }
    out
}

/// `Ω(GW, T)`.
pub fn cmd_curvature(w: &Path, g: &Path, t: &Path, format: Format) -> CliResult<Output> {
    let w = io::read_purification(w)?;
    let g = io::read_hermitian(g)?;
    let t = io::read_matrix(t)?;
    let omega = curvature(&w, &g, &t)?;
    Ok(Output::ok(match format {
        Format::Json => to_json(&MatrixFile::from_matrix(&omega)),
        Format::Human => matrix_human(&omega),
        Format::Csv => return Err(no_csv("curvature")),
    }))
}

#[derive(Debug, Serialize)]
struct TransportOut {
    steps: usize,
    max_step: f64,
    closed: bool,
    #[serde(rename = "final")]
    final_w: MatrixFile,
    holonomy: Option<MatrixFile>,
}

fn is_closed(curve: &[DensityMatrix]) -> bool {
    let (first, last) = (&curve[0], &curve[curve.len() - 1]);
    frobenius(&(first.matrix() - last.matrix()))
        <= TOL_BASE_POINT * frobenius(first.matrix()).max(1.0)
}

pub fn cmd_transport(curve_path: &Path, start: &Path, format: Format) -> CliResult<Output> {
    let curve = io::read_curve(curve_path)?;
    let w0 = io::read_purification(start)?;
    let wm = transport(&curve, &w0)?;
    let closed = is_closed(&curve);
    let u = if closed {
        Some(holonomy(&w0, &wm)?)
    } else {
        None
    };
    let max_step = curve
        .windows(2)
        .map(|p| frobenius(&(p[1].matrix() - p[0].matrix())))
        .fold(0.0, f64::max);
    let out = TransportOut {
        steps: curve.len() - 1,
        max_step,
        closed,
        final_w: MatrixFile::from_matrix(wm.matrix()),
        holonomy: u.as_ref().map(MatrixFile::from_matrix),
    };
    Ok(Output::ok(match format {
        Format::Json => to_json(&out),
        Format::Human => {
            let mut s = format!("steps {}  max step {:.3e}\nfinal W\n", out.steps, max_step);
            s.push_str(&matrix_human(wm.matrix()));
            if let Some(u) = &u {
                s.push_str("holonomy\n");
                s.push_str(&matrix_human(u));
            }
            s
        }
        Format::Csv => return Err(no_csv("transport")),
    }))
}

/// `--out` relative to `BYM_OUT_DIR` when that is set.
pub fn resolve_out(out: &Path, out_dir: Option<&Path>) -> PathBuf {
    match out_dir {
        Some(dir) if out.is_relative() => dir.join(out),
        _ => out.to_path_buf(),
    }
}
