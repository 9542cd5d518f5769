//! Argument definitions, command dispatch, and exit-code mapping.
//!
//! Exit codes: 0 success or valid certificate, 1 invalid certificate,
//! 2 unusable input or arguments, 3 internal error.

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use egz_core::oracle::{check_selection, classify_selection, Verdict};
use egz_core::{egz, MAX_MODULUS};

use crate::bench;
use crate::generate::{self, Distribution};
use crate::instance::{self, OutputFormat};

/// A command failure, mapped onto a process exit code.
#[derive(Debug, PartialEq, Eq)]
pub enum CliError {
    /// Unusable input or arguments: exit 2.
    Usage(String),
    /// Structurally sound but invalid certificate: exit 1.
    Invalid(String),
    /// Internal failure, always a bug: exit 3.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invalid(_) => 1,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Invalid(msg) => write!(f, "invalid certificate: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "egz",
    version,
    about = "Finds n of 2n-1 integers whose sum is divisible by n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and print a verified certificate.
    Solve {
        /// Instance file; `-` or absent reads stdin.
        file: Option<PathBuf>,
        /// Certificate layout to print.
        #[arg(long, value_enum, default_value_t = OutputFormat::Mask)]
        format: OutputFormat,
    },
    /// Check a certificate against an instance.
    Verify {
        /// Instance file.
        instance: PathBuf,
        /// Certificate file: a 0/1 mask or 1-based positions.
        certificate: PathBuf,
    },
    /// Print a reproducible random instance.
    Gen {
        /// Modulus.
        #[arg(long)]
        n: u64,
        /// Generator seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Value distribution.
        #[arg(long, value_enum, default_value_t = Distribution::Uniform)]
        dist: Distribution,
    },
    /// Time the solver and print CSV records.
    Bench {
        /// Moduli to benchmark, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        /// Timed runs per modulus.
        #[arg(long)]
        trials: u32,
        /// Untimed runs per modulus before timing.
        #[arg(long, default_value_t = 1)]
        warmup: u32,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { file, format } => cmd_solve(file.as_deref(), format),
        Command::Verify {
            instance,
            certificate,
        } => cmd_verify(&instance, &certificate),
        Command::Gen { n, seed, dist } => cmd_gen(n, seed, dist),
        Command::Bench { n, trials, warmup } => cmd_bench(&n, trials, warmup),
    }
}

fn internal(err: impl fmt::Display) -> CliError {
    CliError::Internal(err.to_string())
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|err| CliError::Usage(format!("cannot read {}: {err}", path.display()))),
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|err| CliError::Usage(format!("cannot read stdin: {err}")))?;
            Ok(text)
        }
    }
}

fn cmd_solve(file: Option<&Path>, format: OutputFormat) -> Result<(), CliError> {
    let text = read_input(file)?;
    let (n, values) = instance::parse_instance(&text).map_err(CliError::Usage)?;
    let selection = egz(n, &values).map_err(internal)?;
    if !check_selection(n, &values, selection.mask()).map_err(internal)? {
        return Err(CliError::Internal(
            "solver produced an invalid certificate".to_string(),
        ));
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    instance::write_certificate(&mut out, &selection, format).map_err(internal)?;
    out.flush().map_err(internal)
}

fn cmd_verify(instance_path: &Path, certificate_path: &Path) -> Result<(), CliError> {
    let instance_text = read_input(Some(instance_path))?;
    let (n, values) = instance::parse_instance(&instance_text).map_err(CliError::Usage)?;
    let certificate_text = read_input(Some(certificate_path))?;
    let mask = instance::parse_certificate(&certificate_text, n).map_err(CliError::Usage)?;
    match classify_selection(n, &values, &mask) {
        Ok(Verdict::Valid) => {
            println!("valid");
            Ok(())
        }
        Ok(Verdict::WrongCardinality { selected }) => Err(CliError::Invalid(format!(
            "{selected} positions selected, expected {n}"
        ))),
        Ok(Verdict::SumNotDivisible { remainder }) => Err(CliError::Invalid(format!(
            "selected sum leaves remainder {remainder} modulo {n}"
        ))),
        Err(err) => Err(CliError::Usage(err.to_string())),
    }
}

fn cmd_gen(n: u64, seed: u64, dist: Distribution) -> Result<(), CliError> {
    if n == 0 || n > MAX_MODULUS {
        return Err(CliError::Usage(format!(
            "n must be between 1 and {MAX_MODULUS}, got {n}"
        )));
    }
    let values = generate::instance_values(n, seed, dist);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    writeln!(out, "{n}").map_err(internal)?;
    for value in values {
        writeln!(out, "{value}").map_err(internal)?;
    }
    out.flush().map_err(internal)
}

fn cmd_bench(ns: &[u64], trials: u32, warmup: u32) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".to_string()));
    }
    for &n in ns {
        if n < 2 || n > MAX_MODULUS {
            return Err(CliError::Usage(format!(
                "bench requires moduli between 2 and {MAX_MODULUS}, got {n}"
            )));
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    writeln!(out, "n,kind,trial,elapsed_ns").map_err(internal)?;
    for &n in ns {
        let records = bench::time_solves(n, trials, warmup).map_err(internal)?;
        for record in records {
            writeln!(
                out,
                "{},{},{},{}",
                record.n, record.kind, record.trial, record.elapsed_ns
            )
            .map_err(internal)?;
        }
        out.flush().map_err(internal)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::error::ErrorKind;

    #[test]
    fn parses_solve_defaults() {
        let cli = Cli::try_parse_from(["egz", "solve"]).unwrap();
        match cli.command {
            Command::Solve { file, format } => {
                assert!(file.is_none());
                assert_eq!(format, OutputFormat::Mask);
            }
            other => panic!("unexpected command {other:?}"),
        }
    }

    #[test]
    fn parses_bench_list() {
        let cli = Cli::try_parse_from(["egz", "bench", "--n", "4,6,8", "--trials", "2"]).unwrap();
        match cli.command {
            Command::Bench { n, trials, warmup } => {
                assert_eq!(n, vec![4, 6, 8]);
                assert_eq!(trials, 2);
                assert_eq!(warmup, 1);
            }
            other => panic!("unexpected command {other:?}"),
        }
    }

    #[test]
    fn gen_requires_n() {
        let err = Cli::try_parse_from(["egz", "gen"]).unwrap_err();
        assert_eq!(err.kind(), ErrorKind::MissingRequiredArgument);
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(CliError::Invalid(String::new()).exit_code(), 1);
        assert_eq!(CliError::Internal(String::new()).exit_code(), 3);
    }

    #[test]
    fn bench_validates_arguments() {
        assert_eq!(
            cmd_bench(&[5], 0, 1),
            Err(CliError::Usage("trials must be at least 1".to_string()))
        );
        assert!(matches!(cmd_bench(&[1], 2, 1), Err(CliError::Usage(_))));
    }
}
