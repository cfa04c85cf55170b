//! `sullivan`: batch front end for the sullivan library.
//!
//! Exit codes: 0 success, 1 domain error (parse, validation, precondition),
//! 2 usage error.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "sullivan",
    version,
    about = "Exact rational homotopy computations"
)]
struct Cli {
    /// Emit JSON (schema 1) instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct DegreeArgs {
    /// CDGA file.
    file: PathBuf,
    /// Maximal degree.
    #[arg(short = 'N', long = "max-degree", default_value_t = 12)]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology dimensions and representatives through degree N.
    Cohomology(DegreeArgs),
    /// Minimal Sullivan model of a CDGA, certified through degree N.
    MinimalModel(DegreeArgs),
    /// Loop-space cohomology H*(ΩX) through degree N; non-minimal inputs are
    /// replaced by their minimal model first.
    Loop(DegreeArgs),
    /// Free-loop-space model and its cohomology through degree N.
    FreeLoop(DegreeArgs),
    /// Path-space model (relative Sullivan algebra over ΛV ⊗ ΛV).
    PathSpace {
        /// CDGA file of a minimal model.
        file: PathBuf,
        /// Bound on the number of series terms.
        #[arg(long, default_value_t = sullivan::sullivan::DEFAULT_SERIES_CAP)]
        series_cap: usize,
    },
    /// Ellipticity verdict, formal dimension, exponent identities.
    Classify {
        #[command(flatten)]
        degree: DegreeArgs,
        /// Degree bound for the finiteness search.
        #[arg(short = 'B', long = "bound", default_value_t = 60)]
        bound: u32,
    },
    /// Full invariant report (classification, category, Poincaré series).
    /// Cuplength, the category bound and the word-length quotients are
    /// computed through degree N.
    Invariants {
        #[command(flatten)]
        degree: DegreeArgs,
        /// Degree bound for the finiteness search.
        #[arg(short = 'B', long = "bound", default_value_t = 60)]
        bound: u32,
    },
    /// Verify Stokes' formula for the integration map on a simplicial set.
    PlVerify {
        /// Simplicial-set file.
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        file: Option<PathBuf>,
        /// Built-in complex: delta2, delta3 or bddelta3.
        #[arg(long, value_name = "NAME")]
        builtin: Option<String>,
        /// Number of sampled forms.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Polynomial degree cap of sampled forms.
        #[arg(long, default_value_t = 3)]
        poly_cap: u32,
        /// RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Parse and validate a CDGA or simplicial-set file.
    Validate { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Cohomology(a) => commands::cohomology(&a.file, a.n),
        Command::MinimalModel(a) => commands::minimal_model(&a.file, a.n),
        Command::Loop(a) => commands::loop_space(&a.file, a.n),
        Command::FreeLoop(a) => commands::free_loop(&a.file, a.n),
        Command::PathSpace { file, series_cap } => commands::path_space(file, *series_cap),
        Command::Classify { degree, bound } => commands::classify(&degree.file, degree.n, *bound),
        Command::Invariants { degree, bound } => {
            commands::invariants(&degree.file, degree.n, *bound)
        }
        Command::PlVerify {
            file,
            builtin,
            trials,
            poly_cap,
            seed,
        } => commands::pl_verify(
            file.as_deref(),
            builtin.as_deref(),
            *trials,
            *poly_cap,
            *seed,
        ),
        Command::Validate { file } => commands::validate(file),
    };
    match result {
        Ok(report) => {
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&report.json).expect("json");
                s.push('\n');
                s
            } else {
                report.text
            };
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text.as_bytes())
                    .map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) if report.ok => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
