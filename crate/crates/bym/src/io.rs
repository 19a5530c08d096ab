use std::fs;
use std::io::Write;
use std::path::Path;

use bym_core::config::TOL_TRACE;
use bym_core::matrix::{trace, CMatrix, Complex64, DensityMatrix, HermitianMatrix, Purification};
use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::error::{CliError, CliResult};

/// On-disk form of a square complex matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &CMatrix) -> Self {
        let n = m.nrows();
        let entries = (0..n)
            .map(|i| {
                (0..m.ncols())
                    .map(|j| [m[(i, j)].re, m[(i, j)].im])
                    .collect()
            })
            .collect();
        MatrixFile { dim: n, entries }
    }

    pub fn to_matrix(&self) -> Result<CMatrix, String> {
        let n = self.dim;
        if n == 0 {
            return Err("dim must be at least 1".into());
        }
        if self.entries.len() != n {
            return Err(format!("expected {n} rows, found {}", self.entries.len()));
        }
        let mut m = CMatrix::zeros(n, n);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != n {
                return Err(format!("row {i} has {} entries, expected {n}", row.len()));
            }
            for (j, [re, im]) in row.iter().enumerate() {
                if !re.is_finite() || !im.is_finite() {
                    return Err(format!("entry ({i}, {j}) is not finite"));
                }
                m[(i, j)] = Complex64::new(*re, *im);
            }
        }
        Ok(m)
    }
}

/// Compact JSON with every float printed as `d.dddddddddddddddde±x`.
struct FullPrecision;

impl Formatter for FullPrecision {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Serializes `value` followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FullPrecision);
    value.serialize(&mut ser).expect("in-memory serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// `{:.16e}`, i.e. 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

pub fn read_matrix(path: &Path) -> CliResult<CMatrix> {
    let file: MatrixFile = read_json(path)?;
    file.to_matrix().map_err(|m| CliError::parse(path, m))
}

pub fn has_unit_trace(m: &CMatrix) -> bool {
    (trace(m).re - 1.0).abs() <= TOL_TRACE
}

/// A faithful state; `require_unit_trace` additionally enforces `Tr ϱ = 1`.
pub fn density_from(path: &Path, m: CMatrix, require_unit_trace: bool) -> CliResult<DensityMatrix> {
    let normalized = require_unit_trace || has_unit_trace(&m);
    DensityMatrix::new(m, normalized).map_err(|e| CliError::in_file(path, e))
}

pub fn read_density(path: &Path, require_unit_trace: bool) -> CliResult<DensityMatrix> {
    let m = read_matrix(path)?;
    density_from(path, m, require_unit_trace)
}

pub fn read_hermitian(path: &Path) -> CliResult<HermitianMatrix> {
    HermitianMatrix::new(read_matrix(path)?).map_err(|e| CliError::in_file(path, e))
}

pub fn read_purification(path: &Path) -> CliResult<Purification> {
    let m = read_matrix(path)?;
    let normalized = has_unit_trace(&(&m * m.adjoint()));
    Purification::new(m, normalized).map_err(|e| CliError::in_file(path, e))
}

pub fn read_curve(path: &Path) -> CliResult<Vec<DensityMatrix>> {
    let files: Vec<MatrixFile> = read_json(path)?;
    files
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let m = f
                .to_matrix()
                .map_err(|msg| CliError::parse(path, format!("point {k}: {msg}")))?;
            let normalized = has_unit_trace(&m);
            DensityMatrix::new(m, normalized)
                .map_err(|e| CliError::parse(path, format!("point {k}: {}: {e}", e.name())))
        })
        .collect()
}

pub fn write_matrix(path: &Path, m: &CMatrix) -> CliResult<()> {
    write_text(path, &to_json(&MatrixFile::from_matrix(m)))
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}
