use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use neutrosophic::batch::{read_input, InputFormat};
use neutrosophic::measures::DefinednessProfile;
use neutrosophic::norms::TNormFamily;
use neutrosophic::report::{run_analyze, run_logic, run_rank, LogicOp, Scheme};
use neutrosophic::selfcheck::run_selfcheck;
use neutrosophic::types::{make_triple, NeutrosophicTriple};
use neutrosophic::{Error, Result};

/// Neutrosophic feature extraction, ranking and logic.
#[derive(Parser)]
#[command(name = "neutro", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a JSON feature report for every record.
    Analyze {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value = "rational")]
        profile: DefinednessProfile,
        #[arg(long, default_value = "product")]
        tnorm: TNormFamily,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank records by neutrosophic score, highest first.
    Rank {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value = "rational")]
        profile: DefinednessProfile,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose one or two triples and apply an operator.
    Logic {
        #[arg(long)]
        op: LogicOp,
        #[arg(long, default_value = "tetra")]
        scheme: Scheme,
        #[arg(long, default_value = "product")]
        tnorm: TNormFamily,
        #[arg(long, default_value = "rational")]
        profile: DefinednessProfile,
        /// Left operand as "T,I,F".
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        lhs: NeutrosophicTriple,
        /// Right operand as "T,I,F"; omit for negation.
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        rhs: Option<NeutrosophicTriple>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every invariant on seeded random inputs.
    Selfcheck {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(clap::Args)]
struct InputArgs {
    /// CSV or JSON-lines file; standard input when omitted or "-".
    #[arg(long)]
    input: Option<PathBuf>,
    /// Overrides the format guessed from the file extension.
    #[arg(long)]
    format: Option<InputFormat>,
}

fn parse_triple(s: &str) -> Result<NeutrosophicTriple> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [t, i, f] = parts[..] else {
        return Err(Error::InvalidParameter(format!(
            "expected \"T,I,F\", got {s:?}"
        )));
    };
    let num = |x: &str| {
        x.parse::<f64>()
            .map_err(|_| Error::InvalidParameter(format!("{x:?} is not a decimal number")))
    };
    make_triple(num(t)?, num(i)?, num(f)?)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze {
            io,
            profile,
            tnorm,
            out,
        } => {
            let batch = read_input(io.input.as_deref(), io.format)?;
            emit(
                &run_analyze(&batch, profile, tnorm).to_json(),
                out.as_deref(),
            )?;
        }
        Command::Rank { io, profile, out } => {
            let batch = read_input(io.input.as_deref(), io.format)?;
            emit(&run_rank(&batch, profile).to_json(), out.as_deref())?;
        }
        Command::Logic {
            op,
            scheme,
            tnorm,
            profile,
            lhs,
            rhs,
            out,
        } => {
            emit(
                &run_logic(op, scheme, tnorm, profile, lhs, rhs)?.to_json(),
                out.as_deref(),
            )?;
        }
        Command::Selfcheck { samples, seed, tol } => {
            let summary = run_selfcheck(samples, seed, tol)?;
            emit(&summary.render(), None)?;
            return Ok(summary.exit_code());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("neutro: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
