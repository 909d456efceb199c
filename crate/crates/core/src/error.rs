use thiserror::Error;

use crate::engine::Stats;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable {0} is not bound to a constant")]
    Unbound(String),
    #[error("unknown host call {0}")]
    UnknownCall(String),
    #[error("{name} expects {expected} arguments, got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("expected an integer, found {0}")]
    NotInt(String),
    #[error("integer overflow in {0}")]
    Overflow(String),
    #[error("effect {0} cannot be used inside an expression")]
    EffectInExpression(String),
    #[error("pure function {0} cannot be used as a constraint")]
    NotAnEffect(String),
    #[error("{0}")]
    Host(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("builtin {0} is already registered")]
    DuplicateName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("duplicate rule name {0}")]
    DuplicateRule(String),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    Failures,
    Time,
}

impl std::fmt::Display for Limit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Limit::Failures => write!(f, "failure limit"),
            Limit::Time => write!(f, "time limit"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    /// The search was cut off; `stats` holds the counters at that point.
    #[error("{limit} exceeded")]
    LimitExceeded { limit: Limit, stats: Stats },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("malformed constraint: {0}")]
    Malformed(String),
}
