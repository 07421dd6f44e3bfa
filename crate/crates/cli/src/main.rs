//! Command-line interface: every analysis in the library as a subcommand
//! with JSON/CSV output, plus `paper-suite`, which runs the verification
//! battery and prints a pass/fail table.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.

mod commands;
mod output;
mod stencil_io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::OutputSink;

#[derive(Parser)]
#[command(
    name = "semidisc",
    version,
    about = "Order and stability analysis of semidiscrete (2r+1)-point schemes for u_t = a(u) u_x"
)]
struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Also write the primary output (JSON or CSV) to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Suppress stdout (files given via --out are still written).
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Composition-derivative engine checks.
    Fdb {
        #[command(subcommand)]
        command: FdbCommand,
    },
    /// Determinant identity verification.
    Lemmas {
        #[command(subcommand)]
        command: LemmasCommand,
    },
    /// Exact stencil generation and analysis.
    Stencil {
        #[command(subcommand)]
        command: StencilCommand,
    },
    /// Certifies that no (2r+1)-point scheme exceeds order 2r.
    Barrier {
        /// Stencil radius.
        #[arg(long)]
        r: usize,
    },
    /// Empirical order measurement.
    Order {
        #[command(subcommand)]
        command: OrderCommand,
    },
    /// Fourier stability analysis of the forward Euler update.
    Stability {
        #[command(subcommand)]
        command: StabilityCommand,
    },
    /// Integrates a problem and emits the norm series as CSV.
    Run(RunArgs),
    /// Grid-refinement convergence study, emitted as CSV.
    Converge(ConvergeArgs),
    /// Runs the whole verification battery and prints a pass/fail table.
    PaperSuite,
}

#[derive(Subcommand)]
enum FdbCommand {
    /// Spot-checks derivatives of weight s against a difference oracle.
    Check {
        /// Derivative order (weight) to test, 1..=8.
        #[arg(long)]
        s: usize,
        /// Number of accepted random cases.
        #[arg(long)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum LemmasCommand {
    /// Compares both closed forms against the elimination oracle on random
    /// rational inputs.
    Verify {
        /// Largest matrix size, 2..=12.
        #[arg(long)]
        n_max: usize,
        /// Number of random trials.
        #[arg(long)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum StencilCommand {
    /// Generates the unique maximal-order (2r) stencil.
    Gen {
        /// Stencil radius.
        #[arg(long)]
        r: usize,
    },
    /// Prints the exact moments of a stencil file.
    Moments {
        /// Path to a stencil JSON file.
        #[arg(long)]
        file: PathBuf,
        /// Largest moment index.
        #[arg(long)]
        kmax: usize,
    },
}

#[derive(Subcommand)]
enum OrderCommand {
    /// Fits the truncation slope of a built-in scheme.
    Measure {
        /// Built-in scheme name (central2|central4|central6|upwind1|upwind3|burgers).
        #[arg(long)]
        scheme: String,
        /// Expansion point.
        #[arg(long, default_value_t = 0.7)]
        x: f64,
    },
}

#[derive(Subcommand)]
enum StabilityCommand {
    /// Evaluates the amplification symbol at one point.
    Symbol {
        /// Path to a stencil JSON file.
        #[arg(long)]
        stencil: PathBuf,
        /// Time-step ratio dt/h.
        #[arg(long)]
        lambda: f64,
        /// Frequency in [0, 2pi).
        #[arg(long)]
        theta: f64,
    },
    /// Finds the maximal stable time-step ratio.
    Cfl {
        /// Path to a stencil JSON file.
        #[arg(long)]
        stencil: PathBuf,
    },
    /// Certifies unconditional forward-Euler instability of the
    /// maximal-order stencil of radius r.
    Certify {
        /// Stencil radius.
        #[arg(long)]
        r: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IntegratorArg {
    Fe,
    Ssprk3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Advection,
    Burgers,
}

#[derive(Args)]
struct RunArgs {
    /// Scheme name (central2|central4|central6|upwind1|upwind3|weno3|weno5)
    /// or a stencil JSON path.
    #[arg(long)]
    scheme: String,
    #[arg(long, value_enum, default_value_t = IntegratorArg::Ssprk3)]
    integrator: IntegratorArg,
    /// Number of grid nodes.
    #[arg(long = "N")]
    n: usize,
    #[arg(long, default_value_t = 0.4)]
    cfl: f64,
    /// Final time.
    #[arg(long = "T", default_value_t = 1.0)]
    t_final: f64,
    #[arg(long, value_enum, default_value_t = ProblemArg::Advection)]
    problem: ProblemArg,
}

#[derive(Args)]
struct ConvergeArgs {
    /// Scheme name or a stencil JSON path.
    #[arg(long)]
    scheme: String,
    #[arg(long, value_enum, default_value_t = IntegratorArg::Ssprk3)]
    integrator: IntegratorArg,
    /// Comma-separated grid sizes.
    #[arg(long = "N", value_delimiter = ',', default_values_t = [40, 80, 160, 320])]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 0.4)]
    cfl: f64,
    /// Final time.
    #[arg(long = "T", default_value_t = 1.0)]
    t_final: f64,
    #[arg(long, value_enum, default_value_t = ProblemArg::Advection)]
    problem: ProblemArg,
}

/// Command outcomes the shell can react to.
#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: unknown names, out-of-range arguments, broken files.
    Usage(String),
    /// The command ran but the check it performs did not pass.
    Check(String),
}

impl From<semidisc::Error> for CliError {
    fn from(e: semidisc::Error) -> Self {
        match e {
            semidisc::Error::Domain(_) => CliError::Usage(e.to_string()),
            other => CliError::Check(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let sink = OutputSink::new(cli.out.clone(), cli.quiet);
    match dispatch(&cli, &sink) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli, sink: &OutputSink) -> CliResult {
    let seed = cli.seed;
    match &cli.command {
        Command::Fdb {
            command: FdbCommand::Check { s, trials },
        } => commands::analysis::fdb_check(*s, *trials, seed, sink),
        Command::Lemmas {
            command: LemmasCommand::Verify { n_max, trials },
        } => commands::analysis::lemmas_verify(*n_max, *trials, seed, sink),
        Command::Stencil { command } => match command {
            StencilCommand::Gen { r } => commands::analysis::stencil_gen(*r, seed, sink),
            StencilCommand::Moments { file, kmax } => {
                commands::analysis::stencil_moments(file, *kmax, seed, sink)
            }
        },
        Command::Barrier { r } => commands::analysis::barrier(*r, seed, sink),
        Command::Order {
            command: OrderCommand::Measure { scheme, x },
        } => commands::analysis::order_measure(scheme, *x, seed, sink),
        Command::Stability { command } => match command {
            StabilityCommand::Symbol {
                stencil,
                lambda,
                theta,
            } => commands::analysis::stability_symbol(stencil, *lambda, *theta, seed, sink),
            StabilityCommand::Cfl { stencil } => {
                commands::analysis::stability_cfl(stencil, seed, sink)
            }
            StabilityCommand::Certify { r } => {
                commands::analysis::stability_certify(*r, seed, sink)
            }
        },
        Command::Run(args) => commands::simulate::run(args, seed, sink),
        Command::Converge(args) => commands::simulate::converge(args, seed, sink),
        Command::PaperSuite => commands::battery::paper_suite(seed, sink),
    }
}
