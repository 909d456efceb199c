//! Expression evaluation against the equality classes and the host.

use crate::builtins::{Host, Registry};
use crate::eq::EqClasses;
use crate::error::EvalError;
use crate::term::{Op, Term, Value};

fn int(v: Value) -> Result<i64, EvalError> {
    v.as_int().ok_or_else(|| EvalError::NotInt(v.to_string()))
}

/// Evaluate a term to a constant. Variables must be bound to a constant
/// through the equality classes.
pub fn eval_expr<H: Host>(t: &Term, eq: &EqClasses, reg: &Registry<H>, host: &H) -> Result<Value, EvalError> {
    match t {
        Term::Const(v) => Ok(v.clone()),
        Term::Var(v) => eq
            .value_of(v.id)
            .cloned()
            .ok_or_else(|| EvalError::Unbound(v.name.to_string())),
        Term::Expr(e) => {
            let args = e
                .args
                .iter()
                .map(|a| eval_expr(a, eq, reg, host))
                .collect::<Result<Vec<_>, _>>()?;
            let arith = |f: fn(i64, i64) -> Option<i64>, sym: &str| -> Result<Value, EvalError> {
                let (a, b) = (int(args[0].clone())?, int(args[1].clone())?);
                f(a, b)
                    .map(Value::Int)
                    .ok_or_else(|| EvalError::Overflow(format!("{a} {sym} {b}")))
            };
            match &e.op {
                Op::Add => arith(i64::checked_add, "+"),
                Op::Sub => arith(i64::checked_sub, "-"),
                Op::Mul => arith(i64::checked_mul, "*"),
                Op::Min => arith(|a, b| Some(a.min(b)), "min"),
                Op::Call(name) => reg.call(host, name, &args),
            }
        }
    }
}

/// Reduce a constraint argument to a variable or constant: expressions are
/// evaluated, variables are kept as they are.
pub fn normalize_arg<H: Host>(t: &Term, eq: &EqClasses, reg: &Registry<H>, host: &H) -> Result<Term, EvalError> {
    match t {
        Term::Expr(_) => eval_expr(t, eq, reg, host).map(Term::Const),
        _ => Ok(t.clone()),
    }
}
