//! Recursive-descent parser for the rule language.
//!
//! ```text
//! program := rule+
//! rule    := NAME '@' heads ('<=>' | '==>') quant? guard? body '.'
//! heads   := atoms ('\' atoms)?
//! quant   := ('exists' | 'forall') IDENT 'in' '[' expr '..' expr ']' '|'
//! guard   := cmp (',' cmp)* '|'
//! body    := item (',' item)*        item := atom | expr '=' expr | true | false
//! ```
//!
//! Names starting with an uppercase letter or `_` are variables, everything
//! else is a functor or symbol. The iterator of a quantifier may be written
//! in either case. `%` starts a line comment.

use std::collections::{HashMap, HashSet};

use crate::error::ParseError;
use crate::program::{CmpOp, Comparison, Program, Quantifier, Rule};
use crate::term::{Atom, Constraint, Expr, Name, Op, QuantKind, Term, Value, Var};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Var(String),
    Int(i64),
    At,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Backslash,
    SimpArrow,
    PropArrow,
    Bar,
    Dot,
    DotDot,
    Plus,
    Minus,
    Star,
    Cmp(CmpOp),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Var(s) => format!("`{s}`"),
            Tok::Int(i) => format!("`{i}`"),
            Tok::Eof => "end of input".into(),
            Tok::Cmp(op) => format!("`{}`", op.symbol()),
            other => {
                let s = match other {
                    Tok::At => "@",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::LBracket => "[",
                    Tok::RBracket => "]",
                    Tok::Comma => ",",
                    Tok::Backslash => "\\",
                    Tok::SimpArrow => "<=>",
                    Tok::PropArrow => "==>",
                    Tok::Bar => "|",
                    Tok::Dot => ".",
                    Tok::DotDot => "..",
                    Tok::Plus => "+",
                    Tok::Minus => "-",
                    _ => "*",
                };
                format!("`{s}`")
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let rest = &chars[i..];
        let starts = |s: &str| rest.len() >= s.len() && s.chars().zip(rest).all(|(a, b)| a == *b);
        let fixed: Option<(Tok, usize)> = if starts("<=>") {
            Some((Tok::SimpArrow, 3))
        } else if starts("==>") {
            Some((Tok::PropArrow, 3))
        } else if starts("<=") {
            Some((Tok::Cmp(CmpOp::Le), 2))
        } else if starts(">=") {
            Some((Tok::Cmp(CmpOp::Ge), 2))
        } else if starts("!=") {
            Some((Tok::Cmp(CmpOp::Ne), 2))
        } else if starts("..") {
            Some((Tok::DotDot, 2))
        } else {
            match c {
                '@' => Some((Tok::At, 1)),
                '(' => Some((Tok::LParen, 1)),
                ')' => Some((Tok::RParen, 1)),
                '[' => Some((Tok::LBracket, 1)),
                ']' => Some((Tok::RBracket, 1)),
                ',' => Some((Tok::Comma, 1)),
                '\\' => Some((Tok::Backslash, 1)),
                '|' => Some((Tok::Bar, 1)),
                '.' => Some((Tok::Dot, 1)),
                '+' => Some((Tok::Plus, 1)),
                '-' => Some((Tok::Minus, 1)),
                '*' => Some((Tok::Star, 1)),
                '=' => Some((Tok::Cmp(CmpOp::Eq), 1)),
                '<' => Some((Tok::Cmp(CmpOp::Lt), 1)),
                '>' => Some((Tok::Cmp(CmpOp::Gt), 1)),
                _ => None,
            }
        };
        if let Some((tok, n)) = fixed {
            out.push(Spanned { tok, line: l0, col: c0 });
            i += n;
            col += n;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s
                .parse::<i64>()
                .map_err(|_| ParseError::syntax(l0, c0, format!("integer literal {s} out of range")))?;
            col += i - start;
            out.push(Spanned { tok: Tok::Int(v), line: l0, col: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            let tok = if c.is_ascii_uppercase() || c == '_' {
                Tok::Var(s)
            } else {
                Tok::Ident(s)
            };
            out.push(Spanned { tok, line: l0, col: c0 });
            continue;
        }
        return Err(ParseError::syntax(l0, c0, format!("unexpected character `{c}`")));
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

/// Parser knobs.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Reject quantified rules whose iterator never occurs in the body.
    pub deny_unused_iterator: bool,
}

/// Variable scope of one rule or goal.
#[derive(Default)]
struct Scope {
    names: HashMap<String, u32>,
    next: u32,
    iterator: Option<(String, u32)>,
}

impl Scope {
    fn var(&mut self, name: &str) -> Var {
        if name == "_" {
            self.next += 1;
            return Var::new(name, self.next - 1);
        }
        if let Some((it, id)) = &self.iterator {
            if it == name {
                return Var::new(name, *id);
            }
        }
        let next = &mut self.next;
        let id = *self.names.entry(name.to_string()).or_insert_with(|| {
            *next += 1;
            *next - 1
        });
        Var::new(name, id)
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

/// Comparison-or-constraint, before we know whether we are in a guard.
struct Item {
    lhs: Term,
    cmp: Option<(CmpOp, Term)>,
    line: usize,
    col: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.col)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let (l, c) = self.here();
        Err(ParseError::syntax(l, c, msg))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", tok.describe(), self.peek().describe()))
        }
    }

    fn expr(&mut self, scope: &mut Scope) -> Result<Term, ParseError> {
        let mut lhs = self.product(scope)?;
        loop {
            let op = match self.peek() {
                Tok::Plus => Op::Add,
                Tok::Minus => Op::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.product(scope)?;
            lhs = Term::binary(op, lhs, rhs);
        }
    }

    fn product(&mut self, scope: &mut Scope) -> Result<Term, ParseError> {
        let mut lhs = self.unary(scope)?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.unary(scope)?;
            lhs = Term::binary(Op::Mul, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self, scope: &mut Scope) -> Result<Term, ParseError> {
        if *self.peek() != Tok::Minus {
            return self.primary(scope);
        }
        self.bump();
        if let Tok::Int(i) = *self.peek() {
            self.bump();
            return Ok(Term::int(-i));
        }
        let inner = self.unary(scope)?;
        Ok(Term::binary(Op::Sub, Term::int(0), inner))
    }

    fn primary(&mut self, scope: &mut Scope) -> Result<Term, ParseError> {
        let (line, col) = self.here();
        match self.bump() {
            Tok::Int(i) => Ok(Term::int(i)),
            Tok::Var(name) => Ok(Term::Var(scope.var(&name))),
            Tok::LParen => {
                let e = self.expr(scope)?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let mut args = Vec::new();
                    if *self.peek() != Tok::RParen {
                        args.push(self.expr(scope)?);
                        while *self.peek() == Tok::Comma {
                            self.bump();
                            args.push(self.expr(scope)?);
                        }
                    }
                    self.expect(Tok::RParen)?;
                    let op = if name == "min" && args.len() == 2 {
                        Op::Min
                    } else {
                        Op::Call(Name::from(name.as_str()))
                    };
                    Ok(Term::Expr(Box::new(Expr { op, args })))
                } else if scope.iterator.as_ref().is_some_and(|(it, _)| *it == name) {
                    Ok(Term::Var(scope.var(&name)))
                } else {
                    Ok(Term::Const(Value::sym(&name)))
                }
            }
            other => Err(ParseError::syntax(
                line,
                col,
                format!("expected an expression, found {}", other.describe()),
            )),
        }
    }

    fn item(&mut self, scope: &mut Scope) -> Result<Item, ParseError> {
        let (line, col) = self.here();
        let lhs = self.expr(scope)?;
        let cmp = if let Tok::Cmp(op) = *self.peek() {
            self.bump();
            Some((op, self.expr(scope)?))
        } else {
            None
        };
        Ok(Item { lhs, cmp, line, col })
    }

    fn items(&mut self, scope: &mut Scope) -> Result<Vec<Item>, ParseError> {
        let mut v = vec![self.item(scope)?];
        while *self.peek() == Tok::Comma {
            self.bump();
            v.push(self.item(scope)?);
        }
        Ok(v)
    }

    fn atom_from(item_term: Term, line: usize, col: usize) -> Result<Atom, ParseError> {
        match item_term {
            Term::Const(Value::Sym(s)) => Ok(Atom {
                functor: s,
                args: Vec::new(),
            }),
            Term::Expr(e) => {
                let functor = match e.op {
                    Op::Call(n) => n,
                    Op::Min => Name::from("min"),
                    _ => return Err(ParseError::syntax(line, col, "expected a constraint, found arithmetic")),
                };
                Ok(Atom { functor, args: e.args })
            }
            other => Err(ParseError::syntax(line, col, format!("expected a constraint, found `{other}`"))),
        }
    }

    fn body_item(item: Item) -> Result<Constraint, ParseError> {
        match item.cmp {
            Some((CmpOp::Eq, rhs)) => Ok(Constraint::Equality(item.lhs, rhs)),
            Some((op, _)) => Err(ParseError::syntax(
                item.line,
                item.col,
                format!("comparison `{}` is only allowed in a guard", op.symbol()),
            )),
            None => match &item.lhs {
                Term::Const(Value::Sym(s)) if &**s == "true" => Ok(Constraint::True),
                Term::Const(Value::Sym(s)) if &**s == "false" => Ok(Constraint::False),
                _ => Self::atom_from(item.lhs, item.line, item.col).map(Constraint::User),
            },
        }
    }

    fn head_atoms(&mut self, scope: &mut Scope) -> Result<Vec<Atom>, ParseError> {
        let mut atoms = Vec::new();
        loop {
            let (line, col) = self.here();
            if !matches!(self.peek(), Tok::Ident(_)) {
                return self.error(if atoms.is_empty() {
                    format!("empty head: expected a constraint, found {}", self.peek().describe())
                } else {
                    format!("expected a constraint, found {}", self.peek().describe())
                });
            }
            let t = self.primary(scope)?;
            let atom = Self::atom_from(t, line, col)?;
            if let Some(bad) = atom.args.iter().find(|a| !a.is_simple()) {
                return Err(ParseError::syntax(
                    line,
                    col,
                    format!("head arguments must be variables or constants, found `{bad}`"),
                ));
            }
            atoms.push(atom);
            if *self.peek() != Tok::Comma {
                return Ok(atoms);
            }
            self.bump();
        }
    }

    fn rule(&mut self, opts: &ParseOptions) -> Result<Rule, ParseError> {
        let name = match self.bump() {
            Tok::Ident(n) | Tok::Var(n) => n,
            other => {
                self.pos -= 1;
                return self.error(format!("expected a rule name, found {}", other.describe()));
            }
        };
        self.expect(Tok::At)?;
        let mut scope = Scope::default();
        let first = self.head_atoms(&mut scope)?;
        let (kept, deleted, arrow) = if *self.peek() == Tok::Backslash {
            self.bump();
            let second = self.head_atoms(&mut scope)?;
            if *self.peek() != Tok::SimpArrow {
                return self.error("simpagation rules use `<=>`");
            }
            (first, second, self.bump())
        } else {
            match self.peek() {
                Tok::SimpArrow => (Vec::new(), first, self.bump()),
                Tok::PropArrow => (first, Vec::new(), self.bump()),
                other => return self.error(format!("expected `<=>` or `==>`, found {}", other.describe())),
            }
        };
        debug_assert!(matches!(arrow, Tok::SimpArrow | Tok::PropArrow));

        let quantifier = self.quantifier(&mut scope)?;
        let mut guard = Vec::new();
        let mut items = self.items(&mut scope)?;
        if *self.peek() == Tok::Bar {
            self.bump();
            for it in items {
                match it.cmp {
                    Some((op, rhs)) => guard.push(Comparison { lhs: it.lhs, op, rhs }),
                    None => return Err(ParseError::syntax(it.line, it.col, "guards may only contain comparisons")),
                }
            }
            items = self.items(&mut scope)?;
        }
        let body = items.into_iter().map(Self::body_item).collect::<Result<Vec<_>, _>>()?;
        self.expect(Tok::Dot)?;

        if let (Some(q), true) = (&quantifier, opts.deny_unused_iterator) {
            let mut used = false;
            body.iter().for_each(|c| c.for_each_var(&mut |v| used |= v.id == q.iterator.id));
            if !used {
                return self.error(format!("iterator {} is not used in the body of rule {name}", q.iterator.name));
            }
        }
        Ok(Rule {
            name: Name::from(name.as_str()),
            kept,
            deleted,
            quantifier,
            guard,
            body,
        })
    }

    fn quantifier(&mut self, scope: &mut Scope) -> Result<Option<Quantifier>, ParseError> {
        let kind = match (self.peek(), self.peek_at(1)) {
            (Tok::Ident(k), Tok::Ident(_) | Tok::Var(_)) if k == "exists" => QuantKind::Exists,
            (Tok::Ident(k), Tok::Ident(_) | Tok::Var(_)) if k == "forall" => QuantKind::Forall,
            _ => return Ok(None),
        };
        self.bump();
        let it_name = match self.bump() {
            Tok::Ident(n) | Tok::Var(n) => n,
            _ => unreachable!(),
        };
        if it_name == "_" || scope.names.contains_key(&it_name) {
            return self.error(format!("iterator `{it_name}` must be a fresh name"));
        }
        match self.bump() {
            Tok::Ident(k) if k == "in" => {}
            other => {
                self.pos -= 1;
                return self.error(format!("expected `in`, found {}", other.describe()));
            }
        }
        self.expect(Tok::LBracket)?;
        let lower = self.expr(scope)?;
        self.expect(Tok::DotDot)?;
        let upper = self.expr(scope)?;
        self.expect(Tok::RBracket)?;
        self.expect(Tok::Bar)?;
        let id = scope.next;
        scope.next += 1;
        scope.iterator = Some((it_name.clone(), id));
        Ok(Some(Quantifier {
            kind,
            iterator: Var::new(&it_name, id),
            lower,
            upper,
        }))
    }
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    parse_program_with(text, &ParseOptions::default())
}

pub fn parse_program_with(text: &str, opts: &ParseOptions) -> Result<Program, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let mut rules = Vec::new();
    let mut names = HashSet::new();
    while *p.peek() != Tok::Eof {
        let rule = p.rule(opts)?;
        if !names.insert(rule.name.clone()) {
            return Err(ParseError::DuplicateRule(rule.name.to_string()));
        }
        rules.push(rule);
    }
    if rules.is_empty() {
        return p.error("a program needs at least one rule");
    }
    Ok(Program { rules })
}

/// Parse a comma-separated goal. Variables may appear as plain arguments
/// but not inside expressions, which must be evaluable as written.
pub fn parse_goal(text: &str) -> Result<Vec<Constraint>, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let mut scope = Scope::default();
    let items = p.items(&mut scope)?;
    if *p.peek() == Tok::Dot {
        p.bump();
    }
    if *p.peek() != Tok::Eof {
        return p.error(format!("unexpected {} after goal", p.peek().describe()));
    }
    for it in &items {
        let sides = std::iter::once(&it.lhs).chain(it.cmp.as_ref().map(|(_, r)| r));
        for e in sides.filter(|t| !t.is_simple()) {
            // a bare atom is parsed as a call; only its arguments are expressions
            let args: Vec<&Term> = match e {
                Term::Expr(x) if it.cmp.is_none() => x.args.iter().filter(|a| !a.is_simple()).collect(),
                _ => vec![e],
            };
            for a in args {
                let mut unbound = None;
                a.for_each_var(&mut |v| {
                    unbound.get_or_insert_with(|| v.name.to_string());
                });
                if let Some(name) = unbound {
                    return Err(ParseError::syntax(
                        it.line,
                        it.col,
                        format!("unbound variable {name} in goal expression `{a}`"),
                    ));
                }
            }
        }
    }
    let goal = items.into_iter().map(Parser::body_item).collect::<Result<Vec<_>, _>>()?;
    Ok(goal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn propagation_rule() {
        let p = parse_program("l @ nimfibo(R) ==> nimfiboe(R-1,R).").unwrap();
        let r = &p.rules[0];
        assert_eq!(&*r.name, "l");
        assert_eq!(r.kept.len(), 1);
        assert!(r.deleted.is_empty());
        assert!(r.is_propagation());
        assert_eq!(r.kept[0], Atom::new("nimfibo", vec![Term::var("R", 0)]));
        assert_eq!(
            r.body,
            vec![Constraint::user(
                "nimfiboe",
                vec![Term::binary(Op::Sub, Term::var("R", 0), Term::int(1)), Term::var("R", 0)]
            )]
        );
    }

    #[test]
    fn existential_simplification_with_lowercase_iterator() {
        let p = parse_program("e @ nimfiboe(N,R) <=> exists it in [1..min(N,R)] | nimfibou(2*it,R-it).").unwrap();
        let r = &p.rules[0];
        assert!(r.is_simplification());
        let q = r.quantifier.as_ref().unwrap();
        assert_eq!(q.kind, QuantKind::Exists);
        assert_eq!(q.iterator.id, 2);
        assert_eq!(q.lower, Term::int(1));
        assert_eq!(q.upper, Term::binary(Op::Min, Term::var("N", 0), Term::var("R", 1)));
        let it = Term::var("it", 2);
        assert_eq!(
            r.body,
            vec![Constraint::user(
                "nimfibou",
                vec![
                    Term::binary(Op::Mul, Term::int(2), it.clone()),
                    Term::binary(Op::Sub, Term::var("R", 1), it)
                ]
            )]
        );
    }

    #[test]
    fn empty_head_is_a_syntax_error() {
        let err = parse_program("x @ <=> true.").unwrap_err();
        match err {
            ParseError::Syntax { line, col, message } => {
                assert_eq!((line, col), (1, 5));
                assert!(message.contains("empty head"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn simpagation_with_guard() {
        let p = parse_program("r @ a(X) \\ b(Y) <=> X < Y, Y != 3 | c(X + Y).").unwrap();
        let r = &p.rules[0];
        assert_eq!(r.kept.len(), 1);
        assert_eq!(r.deleted.len(), 1);
        assert_eq!(r.guard.len(), 2);
        assert_eq!(r.guard[1].op, CmpOp::Ne);
    }

    #[test]
    fn quantifier_and_guard_together() {
        let p = parse_program("r @ p(N) <=> forall I in [1..N] | N > 0 | q(I), true.").unwrap();
        let r = &p.rules[0];
        assert_eq!(r.quantifier.as_ref().unwrap().kind, QuantKind::Forall);
        assert_eq!(r.guard.len(), 1);
        assert_eq!(r.body[1], Constraint::True);
    }

    #[test]
    fn anonymous_variables_are_distinct() {
        let p = parse_program("r @ p(_, _) <=> true.").unwrap();
        let args = &p.rules[0].deleted[0].args;
        assert_ne!(args[0], args[1]);
    }

    #[test]
    fn body_equality_and_comments() {
        let src = "% leaf test\ne0 @ mge(0) <=> leaf() = 1. % trailing\n";
        let p = parse_program(src).unwrap();
        assert_eq!(
            p.rules[0].body,
            vec![Constraint::Equality(Term::call("leaf", vec![]), Term::int(1))]
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_program("r @ a <=> b\n  c.").unwrap_err();
        assert_eq!(
            err,
            ParseError::syntax(2, 3, "expected `.`, found `c`")
        );
        assert!(matches!(parse_program("r @ a(X+1) <=> true."), Err(ParseError::Syntax { .. })));
        assert!(parse_program("r @ a ==> X < 1 | b.").is_ok());
        assert!(matches!(parse_program("r @ a <=> b < 1."), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_program("r @ a <=> b | c."), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_program("r @ a \\ b ==> c."), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_program("r @ a <=> ¬b."), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn duplicate_rule_names_are_rejected() {
        let err = parse_program("r @ a <=> true.\nr @ b <=> true.").unwrap_err();
        assert_eq!(err, ParseError::DuplicateRule("r".into()));
    }

    #[test]
    fn unused_iterator_only_rejected_on_request() {
        let src = "r @ p <=> exists I in [1..2] | q.";
        assert!(parse_program(src).is_ok());
        let strict = ParseOptions {
            deny_unused_iterator: true,
        };
        assert!(parse_program_with(src, &strict).is_err());
    }

    #[test]
    fn goals() {
        assert_eq!(parse_goal("nimfibo(4)").unwrap(), vec![Constraint::user("nimfibo", vec![Term::int(4)])]);
        assert_eq!(
            parse_goal("b,c,a").unwrap(),
            vec![
                Constraint::user("b", vec![]),
                Constraint::user("c", vec![]),
                Constraint::user("a", vec![])
            ]
        );
        assert!(matches!(parse_goal("nimfibo("), Err(ParseError::Syntax { .. })));
        assert!(parse_goal("X = 3, p(X)").is_ok());
        assert!(matches!(parse_goal("p(X + 1)"), Err(ParseError::Syntax { .. })));
        assert_eq!(parse_goal("p(2*3)").unwrap().len(), 1);
    }

    #[test]
    fn negative_literals() {
        let p = parse_program("r @ p(-1) <=> q(3 - -2, -X).").unwrap();
        assert_eq!(p.rules[0].deleted[0].args[0], Term::int(-1));
        let printed = p.to_string();
        assert_eq!(parse_program(&printed).unwrap(), p);
    }
}
