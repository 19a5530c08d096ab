//! File formats and command implementations behind the `bym` binary.
//!
//! Matrices are stored as `{"dim": n, "entries": [[[re, im], ...], ...]}`
//! (row-major), curves as JSON arrays of such objects. Every float is
//! written with 17 significant digits, so parsing an emitted file and
//! writing it again reproduces it byte for byte.

pub mod commands;
pub mod error;
pub mod io;
pub mod report;

pub use error::{CliError, CliResult};
