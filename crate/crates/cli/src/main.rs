use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qyoung::commands::{self, Basis};
use qyoung::report::Mode;
use qyoung::suites::run_suite;
use qyoung::{eval, Result};

#[derive(Parser)]
#[command(name = "qyoung", version, about = "Exact verification of q-Young operator identities in Cl(B,V)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Pretty,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Young,
    Hecke,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random points per check in sampled mode.
        #[arg(long, default_value_t = 8)]
        points: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the canonical form of an expression.
    Expand {
        expr: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Print the matrix of left multiplication in H(3, q).
    Matrix {
        expr: String,
        #[arg(long, value_enum, default_value = "young")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "pretty")]
        format: MatrixFormat,
    },
    /// Solve for Garnir elements or intertwiners.
    Solve {
        #[command(subcommand)]
        problem: Problem,
        #[arg(long, value_enum, default_value = "text", global = true)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Problem {
    /// All G with Y21_123 * G = 0.
    Garnir,
    /// All T with T * A = B * T.
    Intertwiner {
        /// Two operator names, e.g. `Y21_123,Y21_132`.
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 3)]
        rank: usize,
    },
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { suite, mode, seed, points, format } => {
            let mode = match mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Sampled => Mode::Sampled,
            };
            let start = Instant::now();
            let report = run_suite(&suite, mode, seed, points)?;
            match format {
                Format::Json => emit(&(report.to_json() + "\n")),
                Format::Text => {
                    emit(&report.to_text());
                    eprintln!("finished in {:.2}s", start.elapsed().as_secs_f64());
                }
            }
            Ok(report.all_passed())
        }
        Command::Expand { expr, n } => {
            emit(&(eval::expand(&expr, n)? + "\n"));
            Ok(true)
        }
        Command::Matrix { expr, basis, format } => {
            let basis = match basis {
                BasisArg::Young => Basis::Young,
                BasisArg::Hecke => Basis::Hecke,
            };
            let m = commands::matrix(&expr, basis)?;
            match format {
                MatrixFormat::Json => emit(&(json(&m) + "\n")),
                MatrixFormat::Pretty => emit(&m.pretty()),
            }
            Ok(true)
        }
        Command::Solve { problem, format } => {
            let out = match problem {
                Problem::Garnir => commands::solve_garnir()?,
                Problem::Intertwiner { pair, rank } => commands::solve_intertwiner(&pair, rank)?,
            };
            match format {
                Format::Json => emit(&(json(&out) + "\n")),
                Format::Text => emit(&out.text()),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
