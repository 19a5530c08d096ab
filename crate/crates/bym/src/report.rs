use std::fmt::Write;

use bym_core::yangmills::{ProbeResidual, YMReport};
use serde::{Deserialize, Serialize};

use crate::io::fmt_f64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeRow {
    pub sample: usize,
    pub probe_id: String,
    pub residual: f64,
    pub scale: f64,
}

impl From<&ProbeResidual> for ProbeRow {
    fn from(r: &ProbeResidual) -> Self {
        ProbeRow {
            sample: r.sample,
            probe_id: r.probe_id.clone(),
            residual: r.residual,
            scale: r.scale,
        }
    }
}

/// JSON form of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub dim: usize,
    pub seed: u64,
    pub normalized: bool,
    pub samples: usize,
    pub max_residual: f64,
    pub scale: f64,
    pub tolerance: f64,
    pub cond_cap: f64,
    pub general_point_residual: f64,
    pub equivariance_defect: f64,
    pub passed: bool,
    pub per_probe: Vec<ProbeRow>,
}

impl ReportFile {
    pub fn new(report: &YMReport, cond_cap: f64) -> Self {
        ReportFile {
            dim: report.dim,
            seed: report.seed,
            normalized: report.normalized_case,
            samples: report.samples,
            max_residual: report.max_residual,
            scale: report.scale,
            tolerance: report.tolerance,
            cond_cap,
            general_point_residual: report.general_point_residual,
            equivariance_defect: report.equivariance_defect,
            passed: report.passed,
            per_probe: report.residuals.iter().map(ProbeRow::from).collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,seed,sample,probe_id,residual,scale\n");
        for r in &self.per_probe {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                self.dim,
                self.seed,
                r.sample,
                r.probe_id,
                fmt_f64(r.residual),
                fmt_f64(r.scale)
            );
        }
        out
    }

    pub fn to_human(&self) -> String {
        let threshold = self.tolerance * self.scale.max(1.0);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "dim {}  seed {}  samples {}  {}",
            self.dim,
            self.seed,
            self.samples,
            if self.normalized {
                "normalized"
            } else {
                "unnormalized"
            }
        );
        let _ = writeln!(out, "max residual            {:.3e}", self.max_residual);
        let _ = writeln!(
            out,
            "general point residual  {:.3e}",
            self.general_point_residual
        );
        let _ = writeln!(
            out,
            "equivariance defect     {:.3e}",
            self.equivariance_defect
        );
        let _ = writeln!(out, "curvature scale         {:.3e}", self.scale);
        let _ = writeln!(
            out,
            "threshold               {:.3e}  (tol {:.1e}, cond cap {:.1e})",
            threshold, self.tolerance, self.cond_cap
        );
        let _ = writeln!(out, "{}", if self.passed { "PASSED" } else { "FAILED" });
        out
    }
}
