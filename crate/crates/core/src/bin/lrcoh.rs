use clap::Parser;
use lrcoh::cli::{load_problem, parse_grid, run, Command, RunError, RunOptions};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact Lie-Rinehart cohomology computations from problem files.
#[derive(Parser, Debug)]
#[command(name = "lrcoh", version)]
struct Args {
    /// verify-mf, verify-syzygies, check-connection, complex-check,
    /// cohomology, horizontal, gauss-manin, gysin or cusp
    command: String,
    problem: PathBuf,
    #[arg(long)]
    max_degree: Option<i64>,
    /// Parameter ranges, e.g. `m=2..5,n=2..5`
    #[arg(long)]
    grid: Option<String>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match execute(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("lrcoh: {msg}");
            ExitCode::from(2)
        }
    }
}

fn execute(args: &Args) -> Result<bool, String> {
    let command = Command::parse(&args.command)
        .ok_or_else(|| format!("unknown command '{}'", args.command))?;
    let text = std::fs::read_to_string(&args.problem)
        .map_err(|e| format!("{}: {e}", args.problem.display()))?;
    let file = load_problem(&text).map_err(|e| format!("{}: {e}", args.problem.display()))?;
    let grid = match &args.grid {
        Some(g) => parse_grid(g).map_err(|e| format!("--grid: {e}"))?,
        None => Vec::new(),
    };
    let opts = RunOptions {
        max_degree: args.max_degree,
        grid,
    };
    let report = run(command, &file, &opts).map_err(|e| match e {
        RunError::Parse(p) => format!("{}: {p}", args.problem.display()),
        other => other.to_string(),
    })?;
    let text = report.render();
    match &args.out {
        Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(report.ok())
}
