//! `qchr`: solve rule programs and game presets, print JSON reports.

mod bench;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use qchr::engine::{solve, solve_plain, SolveOptions};
use qchr::games::{connect4, matrix, nim, Connect4, Connect4Host, Matrix, MatrixHost};
use qchr::{parse_goal, parse_program, RunReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Nim,
    Matrix,
    Connect4,
}

#[derive(Debug, Parser)]
#[command(name = "qchr", version, about = "Quantified constraint handling rules solver")]
pub struct Args {
    /// Rule program to load
    #[arg(long, conflicts_with = "preset", requires = "goal")]
    program: Option<PathBuf>,
    /// Built-in game model
    #[arg(long)]
    preset: Option<Preset>,
    /// Goal for --program, e.g. "nimfibo(4)"
    #[arg(long)]
    goal: Option<String>,
    /// Nim heap size (largest heap for --bench nim)
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 4)]
    rows: usize,
    #[arg(long, default_value_t = 4)]
    cols: usize,
    /// Matrix instance file
    #[arg(long, conflicts_with_all = ["seed", "density"])]
    matrix: Option<PathBuf>,
    /// Matrix game depth (largest depth for --bench matrix)
    #[arg(long)]
    depth: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    density: Option<f64>,
    /// Write a random matrix instance to FILE and exit
    #[arg(long, value_name = "FILE", requires = "depth")]
    gen_matrix: Option<PathBuf>,
    /// Cache verdicts of repeated sub-games
    #[arg(long)]
    tabling: bool,
    #[arg(long, default_value_t = 300_000)]
    timeout_ms: u64,
    #[arg(long)]
    failure_limit: Option<u64>,
    /// Report the first moves of the existential player
    #[arg(long)]
    witness: bool,
    /// Human-readable table instead of JSON
    #[arg(long)]
    pretty: bool,
    /// Run a benchmark suite
    #[arg(long, value_name = "SUITE", conflicts_with_all = ["program", "preset", "gen_matrix"])]
    bench: Option<Preset>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    reps: u32,
}

impl Args {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            tabling: self.tabling,
            failure_limit: self.failure_limit,
            time_limit_ms: Some(self.timeout_ms),
            collect_witness: self.witness,
        }
    }
}

pub struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn density(args: &Args) -> Result<f64, Failure> {
    let d = args.density.unwrap_or(0.5);
    if !(0.0..=1.0).contains(&d) {
        return Err(Failure(format!("--density must be within [0, 1], got {d}")));
    }
    Ok(d)
}

fn load_matrix(args: &Args) -> Result<Matrix, Failure> {
    if let Some(path) = &args.matrix {
        let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        return Ok(Matrix::parse(&text)?);
    }
    let depth = args.depth.ok_or(Failure("matrix preset needs --matrix or --depth".into()))?;
    if depth > 24 {
        return Err(Failure(format!("depth {depth} is too large")));
    }
    Ok(Matrix::random(depth, args.seed.unwrap_or(0), density(args)?))
}

pub fn run_nim(n: u32, opts: &SolveOptions) -> RunReport {
    RunReport::from_result(format!("nim-{n}"), &solve_plain(&nim::program(), &nim::goal(n as i64), opts))
}

pub fn run_matrix(id: String, m: Matrix, opts: &SolveOptions) -> RunReport {
    let depth = m.depth();
    let mut host = MatrixHost::new(Arc::new(m));
    let r = solve(&matrix::program(), &MatrixHost::registry(), &matrix::goal(depth), &mut host, opts);
    RunReport::from_result(id, &r)
}

pub fn run_connect4(rows: usize, cols: usize, opts: &SolveOptions) -> RunReport {
    let mut host = Connect4Host::new(Connect4 { rows, cols });
    let r = solve(&connect4::program(cols), &Connect4Host::registry(), &connect4::goal(), &mut host, opts);
    RunReport::from_result(format!("connect4-{rows}x{cols}"), &r)
}

fn single(args: &Args) -> Result<RunReport, Failure> {
    let opts = args.options();
    if let Some(path) = &args.program {
        let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        let program = parse_program(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        let goal_text = args.goal.as_deref().unwrap_or_default();
        let goal = parse_goal(goal_text).map_err(|e| Failure(format!("goal: {e}")))?;
        let r = solve_plain(&program, &goal, &opts);
        return Ok(RunReport::from_result(goal_text.trim(), &r));
    }
    match args.preset {
        Some(Preset::Nim) => {
            let n = args.n.ok_or(Failure("nim preset needs --n".into()))?;
            Ok(run_nim(n, &opts))
        }
        Some(Preset::Matrix) => {
            let m = load_matrix(args)?;
            let id = match &args.matrix {
                Some(p) => format!("matrix-{}", p.display()),
                None => format!("matrix-d{}-s{}", m.depth(), args.seed.unwrap_or(0)),
            };
            Ok(run_matrix(id, m, &opts))
        }
        Some(Preset::Connect4) => {
            if args.rows == 0 || args.cols == 0 {
                return Err(Failure("--rows and --cols must be positive".into()));
            }
            Ok(run_connect4(args.rows, args.cols, &opts))
        }
        None => Err(Failure("one of --program, --preset, --bench or --gen-matrix is required".into())),
    }
}

pub fn table(reports: &[RunReport]) -> String {
    let mut out = format!(
        "{:<24} {:>8} {:>12} {:>12} {:>10} {:>12}  witness\n",
        "instance", "outcome", "failures", "rules", "table", "ms"
    );
    for r in reports {
        let witness = r.witness.as_ref().map(|w| format!("{w:?}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{:<24} {:>8} {:>12} {:>12} {:>10} {:>12.3}  {witness}",
            r.instance, r.outcome, r.failures, r.rule_applications, r.table_hits, r.elapsed_ms
        );
    }
    out
}

fn emit(reports: &[RunReport], pretty: bool, as_list: bool) -> Result<(), Failure> {
    if pretty {
        print!("{}", table(reports));
    } else if as_list {
        println!("{}", serde_json::to_string(reports)?);
    } else {
        println!("{}", serde_json::to_string(&reports[0])?);
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &Args) -> Result<ExitCode, Failure> {
    if let Some(path) = &args.gen_matrix {
        let m = Matrix::random(args.depth.unwrap_or(0), args.seed.unwrap_or(0), density(args)?);
        std::fs::write(path, m.to_string()).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(suite) = args.bench {
        let reports = bench::run_suite(suite, args)?;
        emit(&reports, args.pretty, true)?;
        return Ok(ExitCode::SUCCESS);
    }
    let report = single(args)?;
    emit(std::slice::from_ref(&report), args.pretty, false)?;
    Ok(match report.valid {
        Some(true) => ExitCode::SUCCESS,
        Some(false) => ExitCode::from(1),
        None => {
            eprintln!("error: {}", report.outcome);
            ExitCode::from(2)
        }
    })
}
