use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

mod commands;

use commands::Failure;

/// Lattices of torsion classes for small algebras and abstract relations.
#[derive(Parser)]
#[command(name = "torslat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Torsion lattice of a quiver presentation, with brick edge labels.
    BuildTors {
        quiver: PathBuf,
        #[command(flatten)]
        out: Output,
        /// Write the brick list, one dimension vector per line.
        #[arg(long)]
        bricks: Option<PathBuf>,
    },
    /// Torsion lattice of an abstract relation, with a factorizability verdict.
    BuildRel {
        relation: PathBuf,
        #[command(flatten)]
        out: Output,
        /// Read `X ↪ Y` as "same targets" instead of "same sources".
        #[arg(long)]
        literal_mono: bool,
    },
    /// Run the full property suite on a quiver or relation file.
    Check { input: PathBuf },
    /// Table of covers and their brick labels.
    Labels { input: PathBuf },
    /// Table of join irreducibles and their kappa images.
    Kappa { input: PathBuf },
    /// Quotient by the ideal generated by extra zero relations.
    Quotient {
        quiver: PathBuf,
        /// A relation path as comma-separated arrow indices; repeatable.
        #[arg(long = "ideal", value_name = "ARROWS", required = true)]
        ideal: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Search for a relation whose torsion lattice is the given lattice.
    Realize {
        lattice: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_bricks: usize,
        /// Accept any reflexive relation, not only factorizable ones.
        #[arg(long)]
        unfiltered: bool,
        #[command(flatten)]
        limit: Limit,
    },
    /// Sweep every reflexive relation on up to N points.
    Sweep {
        #[arg(long, default_value_t = 4)]
        max_bricks: usize,
        #[command(flatten)]
        limit: Limit,
    },
    /// All lattices up to a size, up to isomorphism.
    Census {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[command(flatten)]
        limit: Limit,
    },
}

#[derive(Args)]
struct Output {
    /// Write the DOT diagram here instead of stdout.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the JSON summary here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct Limit {
    /// Wall-clock limit in seconds.
    #[arg(long, value_name = "SECONDS")]
    time_limit: Option<f64>,
}

impl Limit {
    fn duration(&self) -> Result<Option<Duration>, Failure> {
        match self.time_limit {
            None => Ok(None),
            Some(s) if s.is_finite() && s > 0.0 => Ok(Some(Duration::from_secs_f64(s))),
            Some(s) => Err(Failure::Parse(format!("invalid time limit {s}"))),
        }
    }
}

fn threads() -> Result<usize, Failure> {
    match std::env::var("TORSLAT_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Failure::Parse(format!(
                "TORSLAT_THREADS must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    use commands::*;
    match cli.command {
        Command::BuildTors {
            quiver,
            out,
            bricks,
        } => build_tors(&quiver, &out.into(), bricks.as_deref()),
        Command::BuildRel {
            relation,
            out,
            literal_mono,
        } => build_rel(&relation, &out.into(), literal_mono),
        Command::Check { input } => check(&input),
        Command::Labels { input } => labels(&input),
        Command::Kappa { input } => kappa(&input),
        Command::Quotient { quiver, ideal, out } => quotient(&quiver, &ideal, &out.into()),
        Command::Realize {
            lattice,
            max_bricks,
            unfiltered,
            limit,
        } => realize(&lattice, max_bricks, unfiltered, limit.duration()?),
        Command::Sweep { max_bricks, limit } => sweep(max_bricks, limit.duration()?, threads()?),
        Command::Census { max_size, limit } => census(max_size, limit.duration()?),
    }
}

impl From<Output> for commands::Sinks {
    fn from(o: Output) -> Self {
        commands::Sinks {
            dot: o.dot,
            json: o.json,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
