use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use urel_bench::acceptance::{run_selected, CRITERIA};
use urel_bench::compare::{common_radii, compare, Profile};
use urel_bench::io::{embedded_landmarks, read_rows, write_landmarks};
use urel_bench::{config, BenchError, RunRequest, SolverChoice};

/// Radially symmetric ultra-relativistic Euler benchmarks.
#[derive(Parser, Debug)]
#[command(name = "urel", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one case and write its CSV files.
    Run {
        /// Case id, 1 to 5.
        #[arg(long, required_unless_present = "config")]
        case: Option<u32>,
        /// radsym, ode or euler2d.
        #[arg(long, required_unless_present = "config")]
        solver: Option<String>,
        /// N for radsym, cells per side for euler2d, output intervals for ode.
        #[arg(long, required_unless_present = "config")]
        n: Option<usize>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Space dimension (3 only for cases 1 and 2).
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long)]
        t_end: Option<f64>,
        /// radsym: also write every stride-th level.
        #[arg(long)]
        stride: Option<usize>,
        /// key = value run file; replaces the other options.
        #[arg(long, conflicts_with_all = ["case", "solver", "n"])]
        config: Option<PathBuf>,
    },
    /// Distances between the final-time profiles of two CSV files.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Run the acceptance criteria and print a pass/fail table.
    Accept {
        /// Criterion ids; all when omitted.
        ids: Vec<u32>,
    },
    /// Write the landmark table.
    Landmarks {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> Result<ExitCode, BenchError> {
    match command {
        Command::Run { case, solver, n, out, d, t_end, stride, config: file } => {
            let (request, out) = match file {
                Some(path) => {
                    let cfg = config::load(&path)?;
                    (cfg.request, cfg.out)
                }
                None => {
                    let solver: SolverChoice = solver.unwrap_or_default().parse()?;
                    let (case, n) = (case.unwrap_or_default(), n.unwrap_or_default());
                    (RunRequest { case, d, solver, resolution: n, t_end, stride }, out)
                }
            };
            let artifacts = request.run()?;
            for path in artifacts.write_to(&out)? {
                println!("{}", path.display());
            }
            if artifacts.floor_events > 0 {
                eprintln!("warning: {} pressure floor events", artifacts.floor_events);
            }
        }
        Command::Compare { a, b } => {
            let load = |p: &PathBuf| -> Result<Profile, BenchError> {
                let file = std::fs::File::open(p).map_err(|source| BenchError::Io { path: p.clone(), source })?;
                Profile::from_rows(&read_rows(file)?)
            };
            let (pa, pb) = (load(&a)?, load(&b)?);
            println!("{}", compare(&pa, &pb, &common_radii(&pa, &pb))?);
        }
        Command::Accept { ids } => {
            let ids = if ids.is_empty() { (1..=CRITERIA).collect() } else { ids };
            let results = run_selected(&ids);
            for r in &results {
                println!("{r}");
            }
            if results.iter().any(|r| !r.passed) {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Landmarks { out } => {
            let table = embedded_landmarks();
            match out {
                Some(path) => {
                    let file = std::fs::File::create(&path).map_err(|source| BenchError::Io { path: path.clone(), source })?;
                    write_landmarks(file, &table)?;
                }
                None => write_landmarks(std::io::stdout().lock(), &table)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
