//! Fibonacci Nim: the first player takes between 1 and n-1 matches, then
//! each player takes between 1 and twice the previous move. Whoever takes
//! the last match wins.

use std::collections::HashMap;

use crate::program::{Program, Quantifier, Rule};
use crate::term::{Atom, Constraint, Op, QuantKind, Term, Var};

/// The same model as [`program`], as rule text.
pub const SOURCE: &str = "\
l @ nimfibo(R) ==> nimfiboe(R-1, R).
e @ nimfiboe(N, R) <=> exists It in [1..min(N, R)] | nimfibou(2*It, R-It).
u @ nimfibou(N, R) <=> forall It in [1..min(N, R)] | nimfiboe(2*It, R-It).
";

fn move_rule(name: &str, head: &str, kind: QuantKind, next: &str) -> Rule {
    let (n, r, it) = (Term::var("N", 0), Term::var("R", 1), Var::new("It", 2));
    let it_t = Term::Var(it.clone());
    Rule {
        name: name.into(),
        kept: Vec::new(),
        deleted: vec![Atom::new(head, vec![n.clone(), r.clone()])],
        quantifier: Some(Quantifier {
            kind,
            iterator: it,
            lower: Term::int(1),
            upper: Term::binary(Op::Min, n, r.clone()),
        }),
        guard: Vec::new(),
        body: vec![Constraint::user(
            next,
            vec![
                Term::binary(Op::Mul, Term::int(2), it_t.clone()),
                Term::binary(Op::Sub, r, it_t),
            ],
        )],
    }
}

pub fn program() -> Program {
    let r = Term::var("R", 0);
    let l = Rule {
        name: "l".into(),
        kept: vec![Atom::new("nimfibo", vec![r.clone()])],
        deleted: Vec::new(),
        quantifier: None,
        guard: Vec::new(),
        body: vec![Constraint::user(
            "nimfiboe",
            vec![Term::binary(Op::Sub, r.clone(), Term::int(1)), r],
        )],
    };
    Program {
        rules: vec![
            l,
            move_rule("e", "nimfiboe", QuantKind::Exists, "nimfibou"),
            move_rule("u", "nimfibou", QuantKind::Forall, "nimfiboe"),
        ],
    }
}

pub fn goal(n: i64) -> Vec<Constraint> {
    vec![Constraint::user("nimfibo", vec![Term::int(n)])]
}

/// Whether the first player can force taking the last match from a heap
/// of `n`.
pub fn oracle(n: u32) -> bool {
    fn wins(left: u32, max_take: u32, memo: &mut HashMap<(u32, u32), bool>) -> bool {
        if let Some(&w) = memo.get(&(left, max_take)) {
            return w;
        }
        let w = (1..=max_take.min(left)).any(|take| take == left || !wins(left - take, 2 * take, memo));
        memo.insert((left, max_take), w);
        w
    }
    wins(n, n.saturating_sub(1), &mut HashMap::new())
}
