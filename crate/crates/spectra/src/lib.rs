//! Command-line workbench on top of `spectra-core`: Maass coefficient
//! ingestion, experiment configuration and CSV / JSON-lines output.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{CommandFactory, FromArgMatches};

pub mod cli;
mod commands;
pub mod config;
pub mod emit;
pub mod ingest;
pub mod record;

use cli::{Cli, OutputFormat};
use emit::Format;

/// Environment variable naming a default output directory.
pub const OUT_DIR_ENV: &str = "SPECTRA_OUT_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Numerical(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Numerical(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Validation(_) => "validation",
            CliError::Numerical(_) => "numerical",
            CliError::Io { .. } => "io",
        }
    }

    /// `error kind=<kind> message=<json string>`
    pub fn one_line(&self) -> String {
        let msg = self.to_string().replace('\n', " ");
        format!("error kind={} message={}", self.kind(), serde_json::Value::from(msg.trim()))
    }
}

impl From<spectra_core::Error> for CliError {
    fn from(e: spectra_core::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

fn command() -> clap::Command {
    Cli::command().mut_subcommands(|s| s.allow_negative_numbers(true).args_override_self(true))
}

fn clap_error(e: clap::Error) -> CliError {
    // keep the message, drop clap's usage and tip lines
    let text = e.render().to_string();
    let msg: Vec<&str> = text
        .lines()
        .take_while(|l| !l.starts_with("Usage:") && !l.trim_start().starts_with("tip:"))
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    let msg = msg.join(" ");
    let msg = msg.trim_start_matches("error: ");
    CliError::Usage(if msg.is_empty() { "invalid arguments".into() } else { msg.to_string() })
}

/// Output destination: `--out`, else `$SPECTRA_OUT_DIR/<command>.<ext>`,
/// else stdout.
fn destination(out: &Option<PathBuf>, name: &str, format: Format) -> Option<PathBuf> {
    if let Some(p) = out {
        return Some(p.clone());
    }
    std::env::var_os(OUT_DIR_ENV)
        .filter(|d| !d.is_empty())
        .map(|d| Path::new(&d).join(format!("{name}.{}", format.extension())))
}

/// Parses `argv` (program name first), runs the command and writes its
/// records. Returns the process exit code; errors are printed to stderr as
/// one line.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match try_run(argv) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.one_line());
            e.exit_code()
        }
    }
}

fn try_run<I, T>(argv: I) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let mut cmd = command();
    let argv = config::merge_config(&cmd, argv)?;
    let matches = match cmd.try_get_matches_from_mut(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{}", e.render());
                return Ok(());
            }
            return Err(clap_error(e));
        }
    };
    let cli = Cli::from_arg_matches(&matches).map_err(clap_error)?;

    let name = cli.command.name();
    let out = cli.command.output();
    let format = match out.format {
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Jsonl => Format::JsonLines,
    };
    let path = destination(&out.out, name, format);
    let timing = out.timing;

    let start = Instant::now();
    let mut records = commands::execute(&cli.command)?;
    if timing {
        let secs = start.elapsed().as_secs_f64();
        for r in &mut records {
            r.set("duration_s", secs);
        }
    }
    emit::emit_results(&records, format, path.as_deref())
}
