use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use toric_fano::io::{
    self, build_fan_for, build_flag_for, emit_flag_info, emit_polytope, emit_report, emit_spec,
    emit_sweep, parse_range, presets, Format,
};
use toric_fano::toric_fiber::{barycenter, canonical_polytope};
use toric_fano::{Error, ProblemSpec};

/// Decide whether a homogeneous toric bundle over a flag manifold is Fano.
///
/// Exit status: 0 Fano, 1 not Fano (including the boundary case), 2 invalid input.
#[derive(Parser)]
#[command(name = "toric-fano", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "human")]
    json: bool,
    /// Human-readable output (default).
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Fano criterion for a problem document ("-" reads stdin).
    Check { file: PathBuf },
    /// Print the canonical polytope of the fiber.
    Polytope { file: PathBuf },
    /// Print the flag manifold data: R_o, R_m^+, z(k), z_V, chamber.
    FlagInfo { file: PathBuf },
    /// Evaluate (or with --emit, print) a built-in family member.
    Preset {
        /// hirzebruch | so4n-cp2
        name: String,
        #[arg(long)]
        n: Option<u64>,
        /// Print the problem document instead of evaluating it.
        #[arg(long)]
        emit: bool,
    },
    /// Evaluate a built-in family over an inclusive parameter range.
    Sweep {
        name: String,
        /// Inclusive range, e.g. 0..6
        #[arg(long)]
        range: String,
    },
}

fn read_spec(file: &PathBuf) -> Result<ProblemSpec, String> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("reading {}: {e}", file.display()))?
    };
    io::parse_spec(&text).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = if cli.json {
        Format::Json
    } else {
        Format::Human
    };
    let err = |e: Error| e.to_string();
    let verdict_code = |ok: bool| {
        if ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    };
    match cli.command {
        Command::Check { file } => {
            let spec = read_spec(&file)?;
            let report = io::check(&spec).map_err(err)?;
            print!("{}", emit_report(&report, format));
            Ok(verdict_code(report.verdict))
        }
        Command::Polytope { file } => {
            let spec = read_spec(&file)?;
            let fan = build_fan_for(&spec).map_err(err)?;
            let poly = canonical_polytope(&fan).map_err(err)?;
            print!("{}", emit_polytope(&poly, &barycenter(&poly), format));
            Ok(ExitCode::SUCCESS)
        }
        Command::FlagInfo { file } => {
            let spec = read_spec(&file)?;
            let fm = build_flag_for(&spec).map_err(err)?;
            print!("{}", emit_flag_info(&fm, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Preset { name, n, emit } => {
            let n = n.unwrap_or_else(|| presets::default_parameter(&name));
            let spec = presets::preset(&name, n).map_err(err)?;
            if emit {
                print!("{}", emit_spec(&spec));
                return Ok(ExitCode::SUCCESS);
            }
            let report = io::check(&spec).map_err(err)?;
            print!("{}", emit_report(&report, format));
            Ok(verdict_code(report.verdict))
        }
        Command::Sweep { name, range } => {
            let range =
                parse_range(&range).ok_or_else(|| format!("bad range {range:?}, expected A..B"))?;
            let rows = io::sweep(&name, range).map_err(err)?;
            print!("{}", emit_sweep(&rows, format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
