//! Rules and programs.

use std::fmt;

use crate::term::{write_list, Atom, Constraint, Name, QuantKind, Term, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Eq => "=",
            CmpOp::Ne => "!=",
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
        }
    }
}

/// One guard conjunct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Comparison {
    pub lhs: Term,
    pub op: CmpOp,
    pub rhs: Term,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quantifier {
    pub kind: QuantKind,
    pub iterator: Var,
    pub lower: Term,
    pub upper: Term,
}

/// A (possibly quantified) simpagation rule `name @ kept \ deleted <=> ...`.
///
/// Variables are numbered per rule, starting at 0, in order of first
/// occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub name: Name,
    pub kept: Vec<Atom>,
    pub deleted: Vec<Atom>,
    pub quantifier: Option<Quantifier>,
    pub guard: Vec<Comparison>,
    pub body: Vec<Constraint>,
}

impl Rule {
    pub fn is_propagation(&self) -> bool {
        self.deleted.is_empty()
    }

    pub fn is_simplification(&self) -> bool {
        self.kept.is_empty()
    }

    /// Heads in matching order: kept heads first, then deleted heads.
    pub fn heads(&self) -> impl Iterator<Item = &Atom> {
        self.kept.iter().chain(self.deleted.iter())
    }

    /// Number of variable slots used by the rule.
    pub fn slot_count(&self) -> usize {
        let mut max: Option<u32> = None;
        let mut see = |v: &Var| max = Some(max.map_or(v.id, |m: u32| m.max(v.id)));
        for h in self.heads() {
            h.args.iter().for_each(|t| t.for_each_var(&mut see));
        }
        if let Some(q) = &self.quantifier {
            see(&q.iterator);
            q.lower.for_each_var(&mut see);
            q.upper.for_each_var(&mut see);
        }
        for g in &self.guard {
            g.lhs.for_each_var(&mut see);
            g.rhs.for_each_var(&mut see);
        }
        for c in &self.body {
            c.for_each_var(&mut see);
        }
        max.map_or(0, |m| m as usize + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Program {
    pub rules: Vec<Rule>,
}

impl Program {
    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| &*r.name == name)
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.op.symbol(), self.rhs)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ ", self.name)?;
        if self.deleted.is_empty() {
            write_list(f, &self.kept)?;
            write!(f, " ==> ")?;
        } else {
            if !self.kept.is_empty() {
                write_list(f, &self.kept)?;
                write!(f, " \\ ")?;
            }
            write_list(f, &self.deleted)?;
            write!(f, " <=> ")?;
        }
        if let Some(q) = &self.quantifier {
            write!(
                f,
                "{} {} in [{}..{}] | ",
                q.kind.keyword(),
                q.iterator.name,
                q.lower,
                q.upper
            )?;
        }
        if !self.guard.is_empty() {
            write_list(f, &self.guard)?;
            write!(f, " | ")?;
        }
        write_list(f, &self.body)?;
        write!(f, ".")
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
