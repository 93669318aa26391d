use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use matred::commands::{self, CommandResult, ReductMethod};
use matred::format::{parse_matroid, parse_set_arg};
use matred::Matroid;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Command {
    /// Closure of --set, by rank and by hyperplanes
    Closure,
    /// All closed sets
    Flats,
    /// Flats of rank one below the ground set
    Hyperplanes,
    /// Maximal independent sets
    Bases,
    /// Reducts of --set
    Reducts,
    /// Exhaustive theorem checks (n <= 8)
    Verify,
    /// Maximum-weight base for --weights; negative weights still yield a base
    Greedy,
}

/// Matroid closure operators, dependence spaces and reducts.
///
/// Exit status: 0 success, 1 verification failure, 2 input error.
#[derive(Debug, Parser)]
#[command(name = "matred", version)]
struct Args {
    command: Command,
    /// Matroid description file
    #[arg(long)]
    matroid: PathBuf,
    /// Subset in 1-based notation, e.g. {1,3}
    #[arg(long)]
    set: Option<String>,
    #[arg(long, default_value = "all", value_parser = parse_method)]
    method: ReductMethod,
    /// Comma-separated weights, one per element
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
}

fn parse_method(s: &str) -> Result<ReductMethod, String> {
    s.parse()
}

fn input_error(message: String) -> CommandResult {
    CommandResult::usage_error(message)
}

fn required_set(args: &Args, m: &Matroid) -> Result<matred::SubsetMask, CommandResult> {
    let text = args
        .set
        .as_deref()
        .ok_or_else(|| input_error("--set is required for this command".into()))?;
    parse_set_arg(text, m.universe_size()).map_err(CommandResult::from)
}

fn run(args: &Args) -> CommandResult {
    let text = match std::fs::read_to_string(&args.matroid) {
        Ok(t) => t,
        Err(e) => return input_error(format!("cannot read {}: {e}", args.matroid.display())),
    };
    let m = match parse_matroid(&text) {
        Ok(m) => m,
        Err(e) => return e.into(),
    };
    match args.command {
        Command::Closure => match required_set(args, &m) {
            Ok(x) => commands::cmd_closure(&m, x),
            Err(r) => r,
        },
        Command::Flats => commands::cmd_flats(&m),
        Command::Hyperplanes => commands::cmd_hyperplanes(&m),
        Command::Bases => commands::cmd_bases(&m),
        Command::Reducts => match required_set(args, &m) {
            Ok(x) => commands::cmd_reducts(&m, x, args.method),
            Err(r) => r,
        },
        Command::Verify => commands::cmd_verify(&m),
        Command::Greedy => {
            let Some(w) = args.weights.as_deref() else {
                return input_error("--weights is required for greedy".into());
            };
            let parsed: Result<Vec<f64>, _> = w.split(',').map(|x| x.trim().parse::<f64>()).collect();
            match parsed {
                Ok(weights) => commands::cmd_greedy(&m, &weights),
                Err(e) => input_error(format!("bad weight list '{w}': {e}")),
            }
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&args);
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    ExitCode::from(result.status.code() as u8)
}
