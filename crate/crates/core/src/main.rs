use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use orbiquiver::cli::{error_json, exit_code, parse_config, render, run, Options};
use orbiquiver::Error;

/// Runs one job described by a JSON (or TOML) config and prints a JSON report.
#[derive(Parser, Debug)]
#[command(name = "orbiquiver", version)]
struct Args {
    /// Config file, or `-` for standard input.
    config: PathBuf,
    /// Also write a human-readable rendering to standard error.
    #[arg(long)]
    pretty: bool,
    /// Seed for randomized jobs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest twist in hom tables.
    #[arg(long, default_value_t = 3)]
    max_twist: i64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read_config(path: &PathBuf) -> Result<String, Error> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(e.to_string()))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = Options { seed: args.seed, max_twist: args.max_twist };
    let outcome = read_config(&args.config).and_then(|t| parse_config(&t)).and_then(|job| run(&job, &opts));
    let (text, code) = match outcome {
        Ok(report) => {
            if args.pretty {
                if let Some(p) = &report.pretty {
                    eprint!("{p}");
                }
            }
            (render(&report.json), 0)
        }
        Err(e) => (render(&error_json(&e)), exit_code(&e)),
    };
    match &args.out {
        Some(path) if code == 0 => {
            if let Err(e) = std::fs::write(path, &text) {
                let err = Error::InternalError(format!("{}: {e}", path.display()));
                print!("{}", render(&error_json(&err)));
                return ExitCode::from(4);
            }
        }
        _ => print!("{text}"),
    }
    ExitCode::from(code as u8)
}
