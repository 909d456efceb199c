//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use qchr::builtins::Host;
use qchr::engine::{solve, solve_plain, SolveOptions};
use qchr::games::{connect4, matrix, nim, Connect4, Connect4Host, Matrix, MatrixHost};
use qchr::term::{QuantKind, Quantified, Var};
use qchr::{parse_goal, parse_program, Constraint, RunReport, SolveError, SolveResult, Term};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    check(t <= limit, || format!("{what} took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn plain() -> SolveOptions {
    SolveOptions::default()
}

fn tabled() -> SolveOptions {
    SolveOptions {
        tabling: true,
        ..Default::default()
    }
}

fn nim_run(n: i64, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve_plain(&nim::program(), &nim::goal(n), opts)
}

fn matrix_run(m: &Arc<Matrix>) -> Result<(SolveResult, bool), SolveError> {
    let mut host = MatrixHost::new(m.clone());
    let d0 = host.digest();
    let r = solve(&matrix::program(), &MatrixHost::registry(), &matrix::goal(m.depth()), &mut host, &plain())?;
    Ok((r, host.digest() == d0))
}

fn connect4_run(game: Connect4) -> Result<(SolveResult, bool), SolveError> {
    let mut host = Connect4Host::new(game);
    let d0 = host.digest();
    let r = solve(&connect4::program(game.cols), &Connect4Host::registry(), &connect4::goal(), &mut host, &plain())?;
    Ok((r, host.digest() == d0))
}

fn err(e: SolveError) -> String {
    e.to_string()
}

const FIB: [u32; 8] = [2, 3, 5, 8, 13, 21, 34, 55];

fn calculus_conformance() -> Outcome {
    let start = Instant::now();
    for (src, goal) in [
        ("r1 @ a \\ b <=> true.\nr2 @ a, c <=> true.", "b, c, a"),
        ("r1 @ a, b \\ c <=> d.\nr2 @ a, b, d <=> true.", "a, b, c"),
    ] {
        let r = solve_plain(&parse_program(src).unwrap(), &parse_goal(goal).unwrap(), &plain()).map_err(err)?;
        check(r.valid && r.residue.is_empty(), || format!("goal {goal}: valid={} residue={:?}", r.valid, r.residue))?;
    }
    let opts = SolveOptions {
        collect_witness: true,
        ..Default::default()
    };
    let r = nim_run(4, &opts).map_err(err)?;
    check(r.valid && r.witness == Some(vec![1]), || format!("nimfibo(4): valid={} witness={:?}", r.valid, r.witness))?;
    let t = within(start, Duration::from_secs(1), "examples")?;
    Ok(format!("simpagation and kept-head programs end with empty stores, nimfibo(4) witness [1], {t:.2?}"))
}

fn random_body(rng: &mut ChaCha8Rng, depth: u32) -> Vec<Constraint> {
    let it = Term::var("I", 0);
    (0..rng.random_range(1..4))
        .map(|_| match rng.random_range(0..if depth == 0 { 5 } else { 6 }) {
            0 => Constraint::True,
            1 => Constraint::False,
            2 => Constraint::user("p", vec![it.clone(), Term::int(rng.random_range(-5..5))]),
            3 => Constraint::Equality(it.clone(), Term::int(rng.random_range(-5..5))),
            4 => Constraint::user("q", vec![]),
            _ => {
                let kind = if rng.random_bool(0.5) { QuantKind::Exists } else { QuantKind::Forall };
                let l = rng.random_range(-3..3);
                Constraint::quantified(
                    kind,
                    Quantified {
                        iterator: Var::new("J", 1),
                        lower: Term::int(l),
                        upper: Term::int(l + rng.random_range(-1..3)),
                        body: random_body(rng, depth - 1),
                    },
                )
            }
        })
        .collect()
}

fn quantifier_axioms() -> Outcome {
    let start = Instant::now();
    let program = parse_program("r1 @ p(X, Y) <=> X = Y.\nr2 @ q <=> false.").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let cases = 200;
    for case in 0..cases {
        let body = random_body(&mut rng, 2);
        let l = rng.random_range(-10..10);
        let u = l - rng.random_range(1..5);
        for (kind, expect) in [(QuantKind::Forall, true), (QuantKind::Exists, false)] {
            let q = Constraint::quantified(
                kind,
                Quantified {
                    iterator: Var::new("I", 0),
                    lower: Term::int(l),
                    upper: Term::int(u),
                    body: body.clone(),
                },
            );
            let r = solve_plain(&program, &[q], &plain()).map_err(err)?;
            check(r.valid == expect, || format!("case {case}: {kind:?} over [{l}..{u}] gave {}", r.valid))?;
        }
    }
    let t = within(start, Duration::from_secs(1), "quantifier axioms")?;
    Ok(format!("{cases} random bodies, empty forall valid, empty exists invalid, {t:.2?}"))
}

fn nim_oracle() -> Outcome {
    let start = Instant::now();
    for n in 2..=25u32 {
        let losing = !nim::oracle(n);
        check(losing == FIB.contains(&n), || format!("oracle: n={n} losing={losing}"))?;
        let r = nim_run(n as i64, &plain()).map_err(err)?;
        check(r.valid == !losing, || format!("n={n}: engine {} oracle {}", r.valid, !losing))?;
    }
    let t = within(start, Duration::from_secs(60), "nim 2..25")?;
    Ok(format!("n=2..25 match oracle, losing set = Fibonacci, {t:.2?}"))
}

fn nim_tabling() -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 2..=80u32 {
        let start = Instant::now();
        let r = nim_run(n as i64, &tabled()).map_err(err)?;
        slowest = slowest.max(within(start, Duration::from_secs(5), &format!("tabled n={n}"))?);
        check(r.valid == nim::oracle(n), || format!("tabled n={n} gave {}", r.valid))?;
        if n <= 30 {
            let p = nim_run(n as i64, &plain()).map_err(err)?;
            check(p.valid == r.valid, || format!("n={n}: tabling changed the verdict"))?;
        }
    }
    Ok(format!("n=2..80 tabled, slowest {slowest:.2?}; n<=30 on/off agree"))
}

fn matrix_game() -> Outcome {
    let mut deepest = Duration::ZERO;
    let mut valid = 0;
    for depth in 2..=8 {
        for seed in 0..20 {
            let m = Arc::new(Matrix::random(depth, seed, 0.5));
            let start = Instant::now();
            let (r, _) = matrix_run(&m).map_err(err)?;
            if depth == 8 {
                deepest = deepest.max(within(start, Duration::from_secs(5), &format!("depth 8 seed {seed}"))?);
            }
            check(r.valid == matrix::oracle(&m), || format!("depth {depth} seed {seed} disagrees"))?;
            valid += r.valid as u32;
        }
        for (fill, expect) in [(true, true), (false, false)] {
            let (r, _) = matrix_run(&Arc::new(Matrix::filled(depth, fill))).map_err(err)?;
            check(r.valid == expect, || format!("depth {depth} uniform {fill} gave {}", r.valid))?;
        }
    }
    Ok(format!("140 random matrices match oracle ({valid} valid), uniform ok, depth 8 max {deepest:.2?}"))
}

fn connect_four() -> Outcome {
    let mut summary = Vec::new();
    for (rows, cols) in [(3, 3), (4, 3), (4, 4)] {
        let game = Connect4 { rows, cols };
        let start = Instant::now();
        let (r, _) = connect4_run(game).map_err(err)?;
        let t = within(start, Duration::from_secs(60), &format!("{rows}x{cols}"))?;
        let expect = connect4::oracle(game).ok_or("board too large for the oracle")?;
        check(r.valid == expect, || format!("{rows}x{cols}: engine {} oracle {expect}", r.valid))?;
        summary.push(format!("{rows}x{cols}={} ({} failures, {t:.2?})", r.valid, r.stats.failures));
    }
    Ok(summary.join(", "))
}

fn rollback_purity() -> Outcome {
    let start = Instant::now();
    for depth in [3, 6] {
        let (_, same) = matrix_run(&Arc::new(Matrix::random(depth, 1, 0.5))).map_err(err)?;
        check(same, || format!("matrix depth {depth} left the host changed"))?;
    }
    for (rows, cols) in [(3, 3), (4, 3)] {
        let (_, same) = connect4_run(Connect4 { rows, cols }).map_err(err)?;
        check(same, || format!("connect-four {rows}x{cols} left the board changed"))?;
    }
    // failed search: nimfibo(5) is invalid
    let r = nim_run(5, &plain()).map_err(err)?;
    check(!r.valid, || "nimfibo(5) should fail".into())?;

    let registry = Connect4Host::registry();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sequences = 2000;
    for s in 0..sequences {
        let (rows, cols) = (rng.random_range(1..7), rng.random_range(1..8));
        let mut host = Connect4Host::new(Connect4 { rows, cols });
        let d0 = host.digest();
        let mut marks = vec![(host.checkpoint(), host.digest())];
        for _ in 0..rng.random_range(0..40) {
            match rng.random_range(0..4) {
                0 => marks.push((host.checkpoint(), host.digest())),
                1 if marks.len() > 1 => {
                    let (mark, digest) = marks.pop().unwrap();
                    host.rollback(mark);
                    check(host.digest() == digest, || format!("sequence {s}: partial rollback differs"))?;
                }
                _ => {
                    let col = rng.random_range(1..=cols as i64);
                    registry
                        .invoke_effect(&mut host, "coin", &[qchr::Value::Int(col)])
                        .map_err(|e| e.to_string())?;
                }
            }
        }
        host.rollback(marks[0].0);
        check(host.digest() == d0, || format!("sequence {s}: digest differs after rollback"))?;
    }
    let t = within(start, Duration::from_secs(10), "rollback checks")?;
    Ok(format!("game hosts restored, {sequences} random effect/rollback sequences, {t:.2?}"))
}

fn reports() -> Vec<(String, Result<SolveResult, SolveError>)> {
    let mut out = Vec::new();
    for n in 2..=25 {
        out.push((format!("nim-{n}"), nim_run(n, &plain())));
    }
    for n in [30, 50, 80] {
        out.push((format!("nim-tabled-{n}"), nim_run(n, &tabled())));
    }
    for depth in 2..=8 {
        for seed in 0..20 {
            let m = Arc::new(Matrix::random(depth, seed, 0.5));
            out.push((format!("matrix-d{depth}-s{seed}"), matrix_run(&m).map(|r| r.0)));
        }
    }
    for (rows, cols) in [(3, 3), (4, 3), (4, 4)] {
        out.push((format!("connect4-{rows}x{cols}"), connect4_run(Connect4 { rows, cols }).map(|r| r.0)));
    }
    out
}

fn determinism() -> Outcome {
    let render = |runs: Vec<(String, Result<SolveResult, SolveError>)>| -> Vec<String> {
        runs.iter()
            .map(|(id, r)| serde_json::to_string(&RunReport::from_result(id.clone(), r).untimed()).unwrap())
            .collect()
    };
    let (a, b) = (render(reports()), render(reports()));
    for (x, y) in a.iter().zip(&b) {
        check(x == y, || format!("reports differ:\n  {x}\n  {y}"))?;
    }
    Ok(format!("{} instances, identical reports apart from elapsed_ms", a.len()))
}

fn dsl_equivalence() -> Outcome {
    let parsed = parse_program(nim::SOURCE).map_err(|e| e.to_string())?;
    for n in 2..=15 {
        let goal = parse_goal(&format!("nimfibo({n})")).map_err(|e| e.to_string())?;
        let a = solve_plain(&parsed, &goal, &plain()).map_err(err)?;
        let b = nim_run(n, &plain()).map_err(err)?;
        check(a.valid == b.valid && a.stats.counters() == b.stats.counters(), || {
            format!("n={n}: text {} / {:?}, preset {} / {:?}", a.valid, a.stats.counters(), b.valid, b.stats.counters())
        })?;
    }
    Ok("n=2..15 identical verdicts and counters".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("calculus conformance", calculus_conformance),
        ("quantifier axioms", quantifier_axioms),
        ("nim oracle equivalence", nim_oracle),
        ("tabling speed and soundness", nim_tabling),
        ("matrix game", matrix_game),
        ("connect-four", connect_four),
        ("rollback and purity", rollback_purity),
        ("determinism", determinism),
        ("dsl equivalence", dsl_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
