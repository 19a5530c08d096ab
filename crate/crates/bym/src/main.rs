use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bym::commands::{self, Format, Output, VerifyArgs};
use bym::{io, CliError, CliResult};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bym",
    version,
    about = "Bures metric, Uhlmann connection and Yang-Mills checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,

    /// Write output here instead of standard output. Relative paths are
    /// resolved against $BYM_OUT_DIR when it is set.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Yang-Mills equation on random purifications.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Relative tolerance [default: 1e-10 for dim 2, else 1e-8].
        #[arg(long)]
        tol: Option<f64>,
        /// Cap on the eigenvalue ratio of WW* [default: 1e3].
        #[arg(long)]
        cond_cap: Option<f64>,
        /// Sample purifications with Tr WW* = 1.
        #[arg(long)]
        normalized: bool,
    },
    /// Bures distance and root fidelity of two states.
    Distance { rho: PathBuf, mu: PathBuf },
    /// Bures metric g(X, Y) at a state.
    Metric {
        rho: PathBuf,
        x: PathBuf,
        y: PathBuf,
    },
    /// Curvature Ω(GW, T) at a purification W.
    Curvature { w: PathBuf, g: PathBuf, t: PathBuf },
    /// Parallel transport of a purification along a curve of states.
    Transport { curve: PathBuf, start: PathBuf },
}

fn run(cli: Cli) -> CliResult<Output> {
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Human => Format::Human,
    };
    match cli.command {
        Command::Verify {
            dim,
            seed,
            samples,
            tol,
            cond_cap,
            normalized,
        } => {
            let args = VerifyArgs {
                dim: dim as usize,
                seed,
                samples: samples as usize,
                tol,
                cond_cap,
                normalized,
            };
            commands::cmd_verify(&args, format, |line| eprintln!("{line}"))
        }
        Command::Distance { rho, mu } => commands::cmd_distance(&rho, &mu, format),
        Command::Metric { rho, x, y } => commands::cmd_metric(&rho, &x, &y, format),
        Command::Curvature { w, g, t } => commands::cmd_curvature(&w, &g, &t, format),
        Command::Transport { curve, start } => commands::cmd_transport(&curve, &start, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let result = run(cli).and_then(|output| {
        match out {
            Some(path) => {
                let dir = std::env::var_os("BYM_OUT_DIR").map(PathBuf::from);
                io::write_text(&commands::resolve_out(&path, dir.as_deref()), &output.text)?;
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(output.text.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| CliError::io("<stdout>", e))?;
            }
        }
        Ok(output.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
