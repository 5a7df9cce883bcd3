//! Command-line front end: argument handling, serialization and the five
//! commands of `kzrat`.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod render;
pub mod schema;

use std::path::Path;

use args::{Cli, Command};
use config::RunConfig;
use error::{CliError, CliResult};

fn emit(text: &str, out: Option<&Path>) -> CliResult<Option<String>> {
    match out {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(None)
        }
        None => Ok(Some(text.to_string())),
    }
}

/// Runs one parsed command. Returns what should go to standard output
/// (nothing when `--out` was given).
pub fn run(cli: &Cli) -> CliResult<Option<String>> {
    match &cli.command {
        Command::Basis(a) => emit(&commands::cmd_basis(&RunConfig::from_args(a)?)?, a.output.out.as_deref()),
        Command::Series(a) => emit(&commands::cmd_series(&RunConfig::from_args(a)?)?, a.output.out.as_deref()),
        Command::Verify(a) => {
            let doc = commands::read_document(&a.file)?;
            let (text, ok) = commands::cmd_verify(&doc, a.output.format)?;
            let printed = emit(&text, a.output.out.as_deref())?;
            if ok {
                Ok(printed)
            } else {
                if let Some(t) = printed {
                    print!("{t}");
                }
                Err(CliError::Verification(format!("{} has a nonzero residual", a.file.display())))
            }
        }
        Command::Audit(o) => emit(&commands::cmd_audit(o.format)?, o.out.as_deref()),
        Command::Independence(a) => {
            let docs = a
                .files
                .iter()
                .map(|f| commands::read_document(f))
                .collect::<CliResult<Vec<_>>>()?;
            emit(&commands::cmd_independence(&docs, a.output.format)?, a.output.out.as_deref())
        }
    }
}
