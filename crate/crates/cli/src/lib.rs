//! Command-line front end for the `limelight` library.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit code: 0 on success, 2 for missing or invalid input, 3 when the
//! document has nothing to explain, 64 for bad usage or configuration.

mod args;
mod commands;
mod config;
mod failure;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use commands::{METRICS_FILE, MODEL_FILE, RUN_FILE, VOCAB_FILE};
pub use config::AppConfig;
pub use failure::Failure;

use args::Command;

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "LIMELIGHT_CONFIG";

/// Runs the CLI with the config file named by `LIMELIGHT_CONFIG`, if set.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var_os(CONFIG_ENV).map(PathBuf::from), out, err)
}

/// Like [`run`], with the environment's config path passed explicitly.
pub fn run_with_env<I, T>(args: I, env_config: Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    64
                }
            };
        }
    };
    let config_file = cli.config.clone().or(env_config);
    match dispatch(&cli.command, config_file, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.code()
        }
    }
}

fn dispatch(command: &Command, config_file: Option<PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    let file = config_file.as_deref();
    match command {
        Command::Train(a) => {
            let kv = commands::base_config(file, &a.overrides())?;
            commands::cmd_train(&AppConfig::from_kv(&kv)?, out)
        }
        Command::Evaluate(a) => commands::cmd_evaluate(a, &commands::base_config(file, &[])?, out),
        Command::Explain(a) => commands::cmd_explain(a, &commands::base_config(file, &a.overrides())?, out),
        Command::InspectDict(a) => commands::cmd_inspect_dict(a, &commands::base_config(file, &[])?, out),
    }
}
