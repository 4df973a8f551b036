//! `grovermaze`: solve mazes with a sink-projected Grover walk.
//!
//! Exit status: 0 ok, 1 verification failure, 2 input error, 3 the walk
//! does not settle (the report is still written).

mod input;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grovermaze::graph::SinkPlacement;
use grovermaze::walk::{DEFAULT_MAX_STEPS, DEFAULT_TOL};
use serde::Serialize;

use input::{load_file, load_ladder, load_tree, parse_tuple, InputError, Loaded};
use report::{heatmap, solve, solve_text, spectrum, spectrum_text, Method, SolveOptions};

#[derive(Parser)]
#[command(name = "grovermaze", version, about = "Maze solving with a Grover walk and a sink")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Limit distribution, survival probability and route for one maze.
    Solve {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Arcs with `|φ(a)|` above this fraction of the largest amplitude form the route.
        #[arg(long, default_value_t = 0.1, value_parser = unit_interval)]
        threshold: f64,
    },
    /// Dimension of the -1 eigenspace and unimodular obstructions.
    Spectrum {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Invariant suite over a seeded corpus.
    Verify {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<verify::Fault>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Grid maze or JSON edge list.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Ladder maze `m,l,k`.
    #[arg(long, value_parser = parse_tuple::<3>)]
    ladder: Option<[u64; 3]>,
    /// Random tree `n,seed`, start 0 and goal n-1.
    #[arg(long, value_parser = parse_tuple::<2>)]
    tree: Option<[u64; 2]>,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Sink::Start)]
    sink: Sink,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Accepted for symmetry with `verify`; inputs here are deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sink {
    Start,
    Goal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Pgm,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

fn unit_interval(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x < 1.0 => Ok(x),
        _ => Err(format!("{s:?} is not in (0, 1)")),
    }
}

fn load(source: &Source) -> Result<Loaded, InputError> {
    match (&source.input, source.ladder, source.tree) {
        (Some(path), _, _) => load_file(path),
        (_, Some([m, l, k]), _) => load_ladder(m as usize, l as usize, k as usize),
        (_, _, Some([n, seed])) => load_tree(n as usize, seed),
        _ => unreachable!("clap requires one source"),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Solve { source, common, method, tol, max_steps, threshold } => {
            let loaded = load(&source)?;
            if common.format == Format::Pgm && loaded.grid.is_none() {
                return Err(InputError("pgm output needs a grid maze input".into()));
            }
            let g = loaded.maze.decorate(placement(common.sink))?;
            let opts = SolveOptions { method, tol, max_steps, threshold };
            let (rep, unsettled) = solve(&g, loaded.ladder.as_ref(), &opts)?;
            print!(
                "{}",
                match common.format {
                    Format::Json => to_json(&rep),
                    Format::Text => solve_text(&rep),
                    Format::Pgm => heatmap(loaded.grid.as_ref().unwrap(), &rep.limit_probability),
                }
            );
            Ok(if unsettled { ExitCode::from(3) } else { ExitCode::SUCCESS })
        }
        Command::Spectrum { source, common } => {
            let loaded = load(&source)?;
            let g = loaded.maze.decorate(placement(common.sink))?;
            let rep = spectrum(&g);
            match common.format {
                Format::Json => print!("{}", to_json(&rep)),
                Format::Text => print!("{}", spectrum_text(&rep)),
                Format::Pgm => return Err(InputError("spectrum has no pgm output".into())),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { format, seed, inject_fault } => {
            let rep = verify::run(seed, inject_fault);
            match format {
                Format::Json => print!("{}", to_json(&rep)),
                Format::Text => {
                    for c in &rep.checks {
                        println!("[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                    }
                }
                Format::Pgm => return Err(InputError("verify has no pgm output".into())),
            }
            Ok(if rep.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn placement(sink: Sink) -> SinkPlacement {
    match sink {
        Sink::Start => SinkPlacement::AtStart,
        Sink::Goal => SinkPlacement::AtGoal,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
