//! Benchmark suites: every instance is solved `reps` times; the report
//! carries the mean time and the counters, which must agree across runs.

use crate::{density, run_connect4, run_matrix, run_nim, Args, Failure, Preset};
use qchr::games::Matrix;
use qchr::RunReport;

fn repeat(reps: u32, mut once: impl FnMut() -> RunReport) -> RunReport {
    let first = once();
    let mut total = first.elapsed_ms;
    for _ in 1..reps {
        let next = once();
        total += next.elapsed_ms;
        if next.untimed() != first.untimed() {
            return RunReport {
                outcome: "nondeterministic".into(),
                valid: None,
                ..first
            };
        }
    }
    RunReport {
        elapsed_ms: total / reps as f64,
        ..first
    }
}

pub fn run_suite(suite: Preset, args: &Args) -> Result<Vec<RunReport>, Failure> {
    let opts = args.options();
    let reps = args.reps;
    let reports = match suite {
        Preset::Nim => {
            let max = args.n.unwrap_or(80);
            (2..=max).map(|n| repeat(reps, || run_nim(n, &opts))).collect()
        }
        Preset::Matrix => {
            let max = args.depth.unwrap_or(8);
            if max > 24 {
                return Err(Failure(format!("depth {max} is too large")));
            }
            let (seed, density) = (args.seed.unwrap_or(0), density(args)?);
            (4.min(max)..=max)
                .map(|d| {
                    let id = format!("matrix-d{d}-s{seed}");
                    repeat(reps, || run_matrix(id.clone(), Matrix::random(d, seed, density), &opts))
                })
                .collect()
        }
        Preset::Connect4 => [(3, 3), (4, 3), (4, 4)]
            .into_iter()
            .map(|(r, c)| repeat(reps, || run_connect4(r, c, &opts)))
            .collect(),
    };
    Ok(reports)
}
