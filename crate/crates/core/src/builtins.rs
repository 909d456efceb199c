//! Host functions and effectful built-in constraints.
//!
//! A [`Host`] owns whatever mutable state a model needs (a game board, the
//! current sub-matrix). The engine checkpoints it before every
//! backtrackable choice and rolls it back afterwards.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{EvalError, RegistryError};
use crate::term::{Name, Value};

pub type Mark = usize;

pub trait Host {
    fn checkpoint(&mut self) -> Mark;
    /// Restore the state observed when `mark` was taken.
    fn rollback(&mut self, mark: Mark);
    /// Bytes identifying the observable state. Equal digests must imply
    /// identical answers from every registered call.
    fn digest(&self) -> Vec<u8>;
}

/// Host for programs that need no state.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoHost;

impl Host for NoHost {
    fn checkpoint(&mut self) -> Mark {
        0
    }
    fn rollback(&mut self, _mark: Mark) {}
    fn digest(&self) -> Vec<u8> {
        Vec::new()
    }
}

pub type PureFn<H> = Box<dyn Fn(&H, &[Value]) -> Result<Value, EvalError> + Send + Sync>;
/// Returns `Ok(false)` when the effect fails (e.g. a full column).
pub type EffectFn<H> = Box<dyn Fn(&mut H, &[Value]) -> Result<bool, EvalError> + Send + Sync>;

pub enum Handler<H> {
    Pure(PureFn<H>),
    Effect(EffectFn<H>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    Pure,
    Effect,
}

struct Builtin<H> {
    arity: usize,
    handler: Handler<H>,
}

pub struct Registry<H> {
    entries: HashMap<Name, Builtin<H>>,
}

impl<H> Default for Registry<H> {
    fn default() -> Self {
        Registry {
            entries: HashMap::new(),
        }
    }
}

impl<H> std::fmt::Debug for Registry<H> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut names: Vec<_> = self.entries.keys().collect();
        names.sort();
        f.debug_struct("Registry").field("names", &names).finish()
    }
}

impl<H: Host> Registry<H> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, name: &str, arity: usize, handler: Handler<H>) -> Result<(), RegistryError> {
        if self.entries.contains_key(name) {
            return Err(RegistryError::DuplicateName(name.to_string()));
        }
        self.entries
            .insert(Arc::from(name), Builtin { arity, handler });
        Ok(())
    }

    pub fn register_pure(
        &mut self,
        name: &str,
        arity: usize,
        f: impl Fn(&H, &[Value]) -> Result<Value, EvalError> + Send + Sync + 'static,
    ) -> Result<(), RegistryError> {
        self.register(name, arity, Handler::Pure(Box::new(f)))
    }

    pub fn register_effect(
        &mut self,
        name: &str,
        arity: usize,
        f: impl Fn(&mut H, &[Value]) -> Result<bool, EvalError> + Send + Sync + 'static,
    ) -> Result<(), RegistryError> {
        self.register(name, arity, Handler::Effect(Box::new(f)))
    }

    pub fn kind(&self, name: &str) -> Option<BuiltinKind> {
        self.entries.get(name).map(|b| match b.handler {
            Handler::Pure(_) => BuiltinKind::Pure,
            Handler::Effect(_) => BuiltinKind::Effect,
        })
    }

    fn lookup(&self, name: &str, got: usize) -> Result<&Builtin<H>, EvalError> {
        let b = self
            .entries
            .get(name)
            .ok_or_else(|| EvalError::UnknownCall(name.to_string()))?;
        if b.arity != got {
            return Err(EvalError::Arity {
                name: name.to_string(),
                expected: b.arity,
                got,
            });
        }
        Ok(b)
    }

    /// Call a pure function from expression position.
    pub fn call(&self, host: &H, name: &str, args: &[Value]) -> Result<Value, EvalError> {
        match &self.lookup(name, args.len())?.handler {
            Handler::Pure(f) => {
                #[cfg(debug_assertions)]
                let before = host.digest();
                let out = f(host, args);
                #[cfg(debug_assertions)]
                debug_assert_eq!(before, host.digest(), "pure builtin {name} changed host state");
                out
            }
            Handler::Effect(_) => Err(EvalError::EffectInExpression(name.to_string())),
        }
    }

    /// Run an effectful built-in constraint.
    pub fn invoke_effect(&self, host: &mut H, name: &str, args: &[Value]) -> Result<bool, EvalError> {
        match &self.lookup(name, args.len())?.handler {
            Handler::Effect(f) => f(host, args),
            Handler::Pure(_) => Err(EvalError::NotAnEffect(name.to_string())),
        }
    }
}

/// Argument helper for handlers.
pub fn int_arg(args: &[Value], i: usize) -> Result<i64, EvalError> {
    args[i]
        .as_int()
        .ok_or_else(|| EvalError::NotInt(args[i].to_string()))
}
