//! Terms, expressions and constraints.
//!
//! A [`Term`] is either a logic variable, a constant ([`Value`]) or an
//! arithmetic/host-call expression. Constraints that reach the store only
//! ever carry variables and constants: expressions are evaluated when a
//! constraint is activated.

use std::fmt;
use std::sync::Arc;

/// Interned-ish name used for functors, symbols and host calls.
pub type Name = Arc<str>;

/// Symbol used for the "true" truth value in game models.
pub const TOP: &str = "top";
/// Symbol used for the "false" truth value in game models.
pub const BOT: &str = "bot";

/// A constant: an integer or a symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Int(i64),
    Sym(Name),
}

impl Value {
    pub fn sym(s: &str) -> Self {
        Value::Sym(Arc::from(s))
    }

    pub fn top() -> Self {
        Value::sym(TOP)
    }

    pub fn bot() -> Self {
        Value::sym(BOT)
    }

    pub fn truth(b: bool) -> Self {
        if b {
            Value::top()
        } else {
            Value::bot()
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            Value::Sym(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Sym(s) => write!(f, "{s}"),
        }
    }
}

/// A logic variable.
///
/// Inside a parsed rule the id is the rule-local slot; inside a solve
/// session it is unique for the whole session.
#[derive(Debug, Clone)]
pub struct Var {
    pub name: Name,
    pub id: u32,
}

impl Var {
    pub fn new(name: &str, id: u32) -> Self {
        Var {
            name: Arc::from(name),
            id,
        }
    }
}

// Identity is the id; the name is only for printing.
impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for Var {}

impl std::hash::Hash for Var {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Min,
    /// Call into the builtin registry.
    Call(Name),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expr {
    pub op: Op,
    pub args: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Const(Value),
    Expr(Box<Expr>),
}

impl Term {
    pub fn int(i: i64) -> Self {
        Term::Const(Value::Int(i))
    }

    pub fn sym(s: &str) -> Self {
        Term::Const(Value::sym(s))
    }

    pub fn var(name: &str, id: u32) -> Self {
        Term::Var(Var::new(name, id))
    }

    pub fn binary(op: Op, lhs: Term, rhs: Term) -> Self {
        Term::Expr(Box::new(Expr {
            op,
            args: vec![lhs, rhs],
        }))
    }

    pub fn call(name: &str, args: Vec<Term>) -> Self {
        Term::Expr(Box::new(Expr {
            op: Op::Call(Arc::from(name)),
            args,
        }))
    }

    /// True for variables and constants, the only terms allowed in the store
    /// and in rule heads.
    pub fn is_simple(&self) -> bool {
        !matches!(self, Term::Expr(_))
    }

    pub fn as_value(&self) -> Option<&Value> {
        match self {
            Term::Const(v) => Some(v),
            _ => None,
        }
    }

    /// Visit every variable in the term.
    pub fn for_each_var(&self, f: &mut impl FnMut(&Var)) {
        match self {
            Term::Var(v) => f(v),
            Term::Const(_) => {}
            Term::Expr(e) => e.args.iter().for_each(|a| a.for_each_var(f)),
        }
    }

    /// Replace variables through `f`; variables for which `f` returns `None`
    /// are left untouched.
    pub fn substitute(&self, f: &dyn Fn(&Var) -> Option<Term>) -> Term {
        match self {
            Term::Var(v) => f(v).unwrap_or_else(|| self.clone()),
            Term::Const(_) => self.clone(),
            Term::Expr(e) => Term::Expr(Box::new(Expr {
                op: e.op.clone(),
                args: e.args.iter().map(|a| a.substitute(f)).collect(),
            })),
        }
    }
}

impl From<Value> for Term {
    fn from(v: Value) -> Self {
        Term::Const(v)
    }
}

/// A user-defined constraint `functor(args...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub functor: Name,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(functor: &str, args: Vec<Term>) -> Self {
        Atom {
            functor: Arc::from(functor),
            args,
        }
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    pub fn substitute(&self, f: &dyn Fn(&Var) -> Option<Term>) -> Atom {
        Atom {
            functor: self.functor.clone(),
            args: self.args.iter().map(|a| a.substitute(f)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuantKind {
    Exists,
    Forall,
}

impl QuantKind {
    pub fn keyword(self) -> &'static str {
        match self {
            QuantKind::Exists => "exists",
            QuantKind::Forall => "forall",
        }
    }
}

/// Body of a quantified constraint: iterator, integer interval and the
/// constraints to solve for each iterator value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quantified {
    pub iterator: Var,
    pub lower: Term,
    pub upper: Term,
    pub body: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Constraint {
    User(Atom),
    Equality(Term, Term),
    True,
    False,
    Exists(Quantified),
    Forall(Quantified),
}

impl Constraint {
    pub fn user(functor: &str, args: Vec<Term>) -> Self {
        Constraint::User(Atom::new(functor, args))
    }

    pub fn quantified(kind: QuantKind, q: Quantified) -> Self {
        match kind {
            QuantKind::Exists => Constraint::Exists(q),
            QuantKind::Forall => Constraint::Forall(q),
        }
    }

    pub fn substitute(&self, f: &dyn Fn(&Var) -> Option<Term>) -> Constraint {
        match self {
            Constraint::User(a) => Constraint::User(a.substitute(f)),
            Constraint::Equality(l, r) => Constraint::Equality(l.substitute(f), r.substitute(f)),
            Constraint::True => Constraint::True,
            Constraint::False => Constraint::False,
            Constraint::Exists(q) => Constraint::Exists(q.substitute(f)),
            Constraint::Forall(q) => Constraint::Forall(q.substitute(f)),
        }
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(&Var)) {
        match self {
            Constraint::User(a) => a.args.iter().for_each(|t| t.for_each_var(f)),
            Constraint::Equality(l, r) => {
                l.for_each_var(f);
                r.for_each_var(f);
            }
            Constraint::True | Constraint::False => {}
            Constraint::Exists(q) | Constraint::Forall(q) => {
                f(&q.iterator);
                q.lower.for_each_var(f);
                q.upper.for_each_var(f);
                q.body.iter().for_each(|c| c.for_each_var(f));
            }
        }
    }
}

impl Quantified {
    pub fn substitute(&self, f: &dyn Fn(&Var) -> Option<Term>) -> Quantified {
        // The iterator is bound by the quantifier and never substituted.
        let it = self.iterator.id;
        let inner = |v: &Var| if v.id == it { None } else { f(v) };
        Quantified {
            iterator: self.iterator.clone(),
            lower: self.lower.substitute(f),
            upper: self.upper.substitute(f),
            body: self.body.iter().map(|c| c.substitute(&inner)).collect(),
        }
    }
}

// Printing. The output reparses to the same structure.

fn op_prec(op: &Op) -> u8 {
    match op {
        Op::Add | Op::Sub => 1,
        Op::Mul => 2,
        Op::Min | Op::Call(_) => 3,
    }
}

fn fmt_operand(t: &Term, parent: u8, right: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Term::Expr(e) = t {
        let p = op_prec(&e.op);
        if p < parent || (right && p == parent && p < 3) {
            return write!(f, "({t})");
        }
    }
    write!(f, "{t}")
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{}", v.name),
            Term::Const(c) => write!(f, "{c}"),
            Term::Expr(e) => match &e.op {
                Op::Min => write!(f, "min({}, {})", e.args[0], e.args[1]),
                Op::Call(name) => {
                    write!(f, "{name}(")?;
                    write_list(f, &e.args)?;
                    write!(f, ")")
                }
                op => {
                    let sym = match op {
                        Op::Add => "+",
                        Op::Sub => "-",
                        _ => "*",
                    };
                    let p = op_prec(op);
                    fmt_operand(&e.args[0], p, false, f)?;
                    write!(f, " {sym} ")?;
                    fmt_operand(&e.args[1], p, true, f)
                }
            },
        }
    }
}

pub(crate) fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.functor)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            write_list(f, &self.args)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::User(a) => write!(f, "{a}"),
            Constraint::Equality(l, r) => write!(f, "{l} = {r}"),
            Constraint::True => write!(f, "true"),
            Constraint::False => write!(f, "false"),
            Constraint::Exists(q) => write!(f, "exists {q}"),
            Constraint::Forall(q) => write!(f, "forall {q}"),
        }
    }
}

impl fmt::Display for Quantified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} in [{}..{}] {{ ",
            self.iterator.name, self.lower, self.upper
        )?;
        write_list(f, &self.body)?;
        write!(f, " }}")
    }
}
