//! Goal-directed proof search.
//!
//! The solver threads a single store through conjunctions, commits to the
//! first rule instance that matches (rules in textual order, partners in
//! ascending token order) and only backtracks inside existential and
//! universal constraints. Every mutation of the store, the equality
//! classes and the propagation history is trailed; the host keeps its own
//! undo log behind [`Host::checkpoint`].

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use serde::Serialize;

use crate::builtins::{BuiltinKind, Host, Mark, NoHost, Registry};
use crate::eq::{EqClasses, EqUndo, Resolved, Union};
use crate::error::{EvalError, Limit, SolveError};
use crate::eval::{eval_expr, normalize_arg};
use crate::program::{CmpOp, Comparison, Program};
use crate::store::{Store, TokenId};
use crate::term::{Atom, Constraint, Name, QuantKind, Quantified, Term, Value, Var};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub tabling: bool,
    pub failure_limit: Option<u64>,
    pub time_limit_ms: Option<u64>,
    pub collect_witness: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Stats {
    pub failures: u64,
    pub rule_applications: u64,
    pub inactivations: u64,
    pub exists_nodes: u64,
    pub forall_nodes: u64,
    pub table_hits: u64,
    pub elapsed_ms: f64,
}

impl Stats {
    /// Everything except the wall-clock time.
    pub fn counters(&self) -> [u64; 6] {
        [
            self.failures,
            self.rule_applications,
            self.inactivations,
            self.exists_nodes,
            self.forall_nodes,
            self.table_hits,
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub valid: bool,
    pub stats: Stats,
    /// Values chosen by the outermost existential constraints, in order.
    pub witness: Option<Vec<i64>>,
    /// Constraints left in the store at the end of a successful proof, with
    /// bound variables replaced by their values.
    pub residue: Vec<Atom>,
}

/// Result of a successful head match.
#[derive(Debug, Clone, PartialEq)]
pub struct Match {
    pub rule: usize,
    /// Rule-variable bindings, indexed by slot.
    pub bindings: Vec<Option<Term>>,
    /// Tokens matched by the kept heads, in head order.
    pub kept: Vec<TokenId>,
    /// Tokens matched by the deleted heads, in head order.
    pub deleted: Vec<TokenId>,
}

#[derive(Debug, Clone, Copy)]
pub struct Checkpoint {
    trail: usize,
    host: Mark,
}

#[derive(Debug)]
enum Undo {
    Added(TokenId),
    Removed(TokenId, Atom),
    Eq(EqUndo),
    Fired(FiredKey),
}

type FiredKey = (usize, Vec<TokenId>);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct TableKey {
    functor: Name,
    args: Vec<Value>,
    host: Vec<u8>,
    store: Vec<String>,
}

/// Observable state, for comparing before and after a backtracked branch.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub tokens: Vec<(TokenId, Atom)>,
    pub partition: Vec<(u32, u32, Option<Value>)>,
    pub digest: Vec<u8>,
}

#[derive(Debug, Clone, Copy)]
struct Occurrence {
    arity: usize,
    rule: usize,
}

pub struct Session<'a, H: Host> {
    program: &'a Program,
    registry: &'a Registry<H>,
    host: &'a mut H,
    opts: SolveOptions,
    /// functor -> rules mentioning it in a head, textual order, deduplicated
    occurrences: HashMap<Name, Vec<Occurrence>>,
    slots: Vec<usize>,
    store: Store,
    eq: EqClasses,
    trail: Vec<Undo>,
    fired: HashSet<FiredKey>,
    table: HashMap<TableKey, bool>,
    next_var: u32,
    depth: usize,
    witness: Vec<i64>,
    stats: Stats,
    started: Instant,
    ticks: u64,
}

/// Solve `goal` against `program`. The host is restored to its initial
/// state before returning.
pub fn solve<H: Host>(
    program: &Program,
    registry: &Registry<H>,
    goal: &[Constraint],
    host: &mut H,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    Session::new(program, registry, host, opts.clone()).run_goal(goal)
}

/// [`solve`] for programs that use no builtins.
pub fn solve_plain(program: &Program, goal: &[Constraint], opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve(program, &Registry::<NoHost>::new(), goal, &mut NoHost, opts)
}

impl<'a, H: Host> Session<'a, H> {
    pub fn new(program: &'a Program, registry: &'a Registry<H>, host: &'a mut H, opts: SolveOptions) -> Self {
        let mut occurrences: HashMap<Name, Vec<Occurrence>> = HashMap::new();
        for (i, rule) in program.rules.iter().enumerate() {
            for head in rule.heads() {
                let occ = occurrences.entry(head.functor.clone()).or_default();
                if !occ.iter().any(|o| o.rule == i && o.arity == head.arity()) {
                    occ.push(Occurrence {
                        arity: head.arity(),
                        rule: i,
                    });
                }
            }
        }
        Session {
            program,
            registry,
            host,
            opts,
            occurrences,
            slots: program.rules.iter().map(|r| r.slot_count()).collect(),
            store: Store::new(),
            eq: EqClasses::new(),
            trail: Vec::new(),
            fired: HashSet::new(),
            table: HashMap::new(),
            next_var: 0,
            depth: 0,
            witness: Vec::new(),
            stats: Stats::default(),
            started: Instant::now(),
            ticks: 0,
        }
    }

    pub fn store(&self) -> &Store {
        &self.store
    }

    pub fn eq(&self) -> &EqClasses {
        &self.eq
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn host(&self) -> &H {
        self.host
    }

    pub fn fresh_var(&mut self, name: &str) -> Var {
        self.next_var += 1;
        Var::new(name, self.next_var - 1)
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            tokens: self.store.iter().map(|(t, a)| (t, a.clone())).collect(),
            partition: self.eq.partition(self.eq.known_vars()),
            digest: self.host.digest(),
        }
    }

    pub fn checkpoint(&mut self) -> Checkpoint {
        Checkpoint {
            trail: self.trail.len(),
            host: self.host.checkpoint(),
        }
    }

    pub fn rollback(&mut self, cp: Checkpoint) {
        while self.trail.len() > cp.trail {
            match self.trail.pop().expect("trail shorter than checkpoint") {
                Undo::Added(t) => {
                    self.store.remove(t);
                }
                Undo::Removed(t, atom) => self.store.restore(t, atom),
                Undo::Eq(u) => self.eq.undo(u),
                Undo::Fired(k) => {
                    self.fired.remove(&k);
                }
            }
        }
        self.host.rollback(cp.host);
    }

    /// Rename the variables of a parsed goal apart into session variables.
    pub fn freshen(&mut self, goal: &[Constraint]) -> Vec<Constraint> {
        let mut map: HashMap<u32, Var> = HashMap::new();
        for c in goal {
            c.for_each_var(&mut |v| {
                let next = &mut self.next_var;
                map.entry(v.id).or_insert_with(|| {
                    *next += 1;
                    Var::new(&v.name, *next - 1)
                });
            });
        }
        goal.iter()
            .map(|c| rename(c, &map))
            .collect()
    }

    /// Solve a parsed goal and undo everything afterwards.
    pub fn run_goal(&mut self, goal: &[Constraint]) -> Result<SolveResult, SolveError> {
        self.started = Instant::now();
        let cp = self.checkpoint();
        let goal = self.freshen(goal);
        let outcome = self.solve_sequence(&goal);
        let residue = match outcome {
            Ok(true) => self.residue(),
            _ => Vec::new(),
        };
        self.rollback(cp);
        self.stats.elapsed_ms = self.started.elapsed().as_secs_f64() * 1e3;
        let valid = match outcome {
            Ok(v) => v,
            Err(SolveError::LimitExceeded { limit, .. }) => {
                return Err(SolveError::LimitExceeded {
                    limit,
                    stats: self.stats.clone(),
                })
            }
            Err(e) => return Err(e),
        };
        let witness = (valid && self.opts.collect_witness).then(|| self.witness.clone());
        Ok(SolveResult {
            valid,
            stats: self.stats.clone(),
            witness,
            residue,
        })
    }

    fn residue(&self) -> Vec<Atom> {
        self.store
            .iter()
            .map(|(_, a)| Atom {
                functor: a.functor.clone(),
                args: a
                    .args
                    .iter()
                    .map(|t| match self.eq.resolve(t) {
                        Resolved::Const(v) => Term::Const(v),
                        Resolved::Var(_) => t.clone(),
                    })
                    .collect(),
            })
            .collect()
    }

    fn tick(&mut self) -> Result<(), SolveError> {
        self.ticks += 1;
        if self.ticks.is_multiple_of(1024) {
            if let Some(ms) = self.opts.time_limit_ms {
                if self.started.elapsed().as_millis() as u64 > ms {
                    return Err(self.limit(Limit::Time));
                }
            }
        }
        Ok(())
    }

    fn limit(&self, limit: Limit) -> SolveError {
        let mut stats = self.stats.clone();
        stats.elapsed_ms = self.started.elapsed().as_secs_f64() * 1e3;
        SolveError::LimitExceeded { limit, stats }
    }

    fn fail(&mut self) -> Result<bool, SolveError> {
        self.stats.failures += 1;
        match self.opts.failure_limit {
            Some(max) if self.stats.failures > max => Err(self.limit(Limit::Failures)),
            _ => Ok(false),
        }
    }

    fn normalize(&self, t: &Term) -> Result<Term, EvalError> {
        normalize_arg(t, &self.eq, self.registry, self.host)
    }

    fn eval(&self, t: &Term) -> Result<Value, EvalError> {
        eval_expr(t, &self.eq, self.registry, self.host)
    }

    fn eval_int(&self, t: &Term) -> Result<i64, EvalError> {
        let v = self.eval(t)?;
        v.as_int().ok_or_else(|| EvalError::NotInt(v.to_string()))
    }

    /// Solve the constraints left to right, threading the store.
    pub fn solve_sequence(&mut self, goal: &[Constraint]) -> Result<bool, SolveError> {
        for c in goal {
            if !self.activate(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn activate(&mut self, c: &Constraint) -> Result<bool, SolveError> {
        self.tick()?;
        match c {
            Constraint::True => Ok(true),
            Constraint::False => self.fail(),
            Constraint::Equality(l, r) => {
                let (l, r) = (self.normalize(l)?, self.normalize(r)?);
                self.add_equality(&l, &r)
            }
            Constraint::User(atom) => self.activate_user(atom),
            Constraint::Exists(q) => self.eliminate_exists(q),
            Constraint::Forall(q) => self.eliminate_forall(q),
        }
    }

    fn activate_user(&mut self, atom: &Atom) -> Result<bool, SolveError> {
        match self.registry.kind(&atom.functor) {
            Some(BuiltinKind::Effect) => {
                let args = atom.args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                if self.registry.invoke_effect(self.host, &atom.functor, &args)? {
                    return Ok(true);
                }
                return self.fail();
            }
            Some(BuiltinKind::Pure) => return Err(EvalError::NotAnEffect(atom.functor.to_string()).into()),
            None => {}
        }
        let args = atom.args.iter().map(|a| self.normalize(a)).collect::<Result<Vec<_>, _>>()?;
        let token = self.store.add(Atom {
            functor: atom.functor.clone(),
            args,
        });
        self.trail.push(Undo::Added(token));
        self.run_occurrences(token)
    }

    /// Try every rule on a live token; store it if none applies.
    fn run_occurrences(&mut self, token: TokenId) -> Result<bool, SolveError> {
        let Some(atom) = self.store.get(token) else {
            return Ok(true);
        };
        let arity = atom.arity();
        let rules: Vec<usize> = self
            .occurrences
            .get(&atom.functor)
            .map(|v| v.iter().filter(|o| o.arity == arity).map(|o| o.rule).collect())
            .unwrap_or_default();
        for rule in rules {
            if let Some(m) = self.try_apply(token, rule)? {
                return self.apply(m);
            }
        }
        self.stats.inactivations += 1;
        Ok(true)
    }

    /// Find partners for `active` so that the rule's heads match and its
    /// guard is entailed. The active token may sit at any head position.
    pub fn try_apply(&mut self, active: TokenId, rule_idx: usize) -> Result<Option<Match>, SolveError> {
        let rule = &self.program.rules[rule_idx];
        let Some(atom) = self.store.get(active) else {
            return Ok(None);
        };
        let heads: Vec<&Atom> = rule.heads().collect();
        for (pos, head) in heads.iter().enumerate() {
            if head.functor != atom.functor || head.arity() != atom.arity() {
                continue;
            }
            let mut env = vec![None; self.slots[rule_idx]];
            let mut used = Vec::with_capacity(heads.len());
            if self.match_heads(rule_idx, &heads, 0, pos, active, &mut env, &mut used)? {
                let kept = used[..rule.kept.len()].to_vec();
                let deleted = used[rule.kept.len()..].to_vec();
                return Ok(Some(Match {
                    rule: rule_idx,
                    bindings: env,
                    kept,
                    deleted,
                }));
            }
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn match_heads(
        &self,
        rule_idx: usize,
        heads: &[&Atom],
        idx: usize,
        active_pos: usize,
        active: TokenId,
        env: &mut Vec<Option<Term>>,
        used: &mut Vec<TokenId>,
    ) -> Result<bool, SolveError> {
        if idx == heads.len() {
            let rule = &self.program.rules[rule_idx];
            if rule.is_propagation() && self.fired.contains(&(rule_idx, used.clone())) {
                return Ok(false);
            }
            return self.guard_entailed(&rule.guard, env);
        }
        let head = heads[idx];
        let candidates = if idx == active_pos {
            vec![active]
        } else {
            self.store.tokens_of(&head.functor, head.arity())
        };
        for cand in candidates {
            if idx != active_pos && (cand == active || used.contains(&cand)) {
                continue;
            }
            let saved = env.clone();
            let stored = self.store.get(cand).expect("indexed token is live");
            if self.match_atom(head, stored, env) {
                used.push(cand);
                if self.match_heads(rule_idx, heads, idx + 1, active_pos, active, env, used)? {
                    return Ok(true);
                }
                used.pop();
            }
            *env = saved;
        }
        Ok(false)
    }

    /// Match a head pattern against a stored constraint modulo the equality
    /// classes, extending `env`.
    fn match_atom(&self, pattern: &Atom, stored: &Atom, env: &mut [Option<Term>]) -> bool {
        for (p, s) in pattern.args.iter().zip(&stored.args) {
            match p {
                Term::Const(c) => {
                    if self.eq.resolve(s) != Resolved::Const(c.clone()) {
                        return false;
                    }
                }
                Term::Var(v) => match &env[v.id as usize] {
                    Some(bound) => {
                        if self.eq.resolve(bound) != self.eq.resolve(s) {
                            return false;
                        }
                    }
                    None => env[v.id as usize] = Some(s.clone()),
                },
                Term::Expr(_) => return false,
            }
        }
        true
    }

    fn guard_entailed(&self, guard: &[Comparison], env: &[Option<Term>]) -> Result<bool, SolveError> {
        for cmp in guard {
            // A variable the heads did not bind cannot be entailed.
            let mut unbound = false;
            let mut check = |v: &Var| unbound |= env.get(v.id as usize).is_none_or(|b| b.is_none());
            cmp.lhs.for_each_var(&mut check);
            cmp.rhs.for_each_var(&mut check);
            if unbound {
                return Ok(false);
            }
            let subst = |v: &Var| env[v.id as usize].clone();
            let (l, r) = (cmp.lhs.substitute(&subst), cmp.rhs.substitute(&subst));
            let holds = match (self.eval(&l), self.eval(&r)) {
                (Ok(a), Ok(b)) => match cmp.op {
                    CmpOp::Eq => a == b,
                    CmpOp::Ne => a != b,
                    op => match (a.as_int(), b.as_int()) {
                        (Some(x), Some(y)) => match op {
                            CmpOp::Lt => x < y,
                            CmpOp::Le => x <= y,
                            CmpOp::Gt => x > y,
                            _ => x >= y,
                        },
                        _ => false,
                    },
                },
                // Without values only the identity of two classes is known.
                (Err(EvalError::Unbound(_)), _) | (_, Err(EvalError::Unbound(_))) => {
                    cmp.op == CmpOp::Eq && l.is_simple() && r.is_simple() && self.eq.resolve(&l) == self.eq.resolve(&r)
                }
                (Err(e), _) | (_, Err(e)) => return Err(e.into()),
            };
            if !holds {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn apply(&mut self, m: Match) -> Result<bool, SolveError> {
        let program = self.program;
        let rule = &program.rules[m.rule];
        self.stats.rule_applications += 1;
        if rule.is_propagation() {
            let key = (m.rule, m.kept.clone());
            self.fired.insert(key.clone());
            self.trail.push(Undo::Fired(key));
        }
        for &t in &m.deleted {
            let atom = self.store.remove(t).expect("matched token is live");
            self.trail.push(Undo::Removed(t, atom));
        }
        // Body-only variables become fresh session variables.
        let mut env = m.bindings.clone();
        let mut names: Vec<Option<Name>> = vec![None; env.len()];
        let collect = |v: &Var, names: &mut Vec<Option<Name>>| names[v.id as usize] = Some(v.name.clone());
        rule.body.iter().for_each(|c| c.for_each_var(&mut |v| collect(v, &mut names)));
        if let Some(q) = &rule.quantifier {
            collect(&q.iterator, &mut names);
        }
        for (slot, value) in env.iter_mut().enumerate() {
            if value.is_none() {
                if let Some(name) = &names[slot] {
                    self.next_var += 1;
                    *value = Some(Term::Var(Var::new(name, self.next_var - 1)));
                }
            }
        }
        let subst = |v: &Var| env.get(v.id as usize).cloned().flatten();
        let body: Vec<Constraint> = rule.body.iter().map(|c| c.substitute(&subst)).collect();

        match &rule.quantifier {
            None => self.apply_plain(&m, &body),
            Some(q) => {
                let lower = self.eval_int(&q.lower.substitute(&subst))?;
                let upper = self.eval_int(&q.upper.substitute(&subst))?;
                let iterator = match subst(&q.iterator) {
                    Some(Term::Var(v)) => v,
                    _ => unreachable!("iterator slot is always a fresh variable"),
                };
                let quantified = Quantified {
                    iterator,
                    lower: Term::int(lower),
                    upper: Term::int(upper),
                    body,
                };
                self.activate(&Constraint::quantified(q.kind, quantified))
            }
        }
    }

    /// Solve the body of a quantifier-free rule, then re-activate the kept
    /// heads that survived it.
    fn apply_plain(&mut self, m: &Match, body: &[Constraint]) -> Result<bool, SolveError> {
        if !self.solve_sequence(body)? {
            return Ok(false);
        }
        for &t in &m.kept {
            if self.store.contains(t) && !self.run_occurrences(t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn bounds(&self, q: &Quantified) -> Result<(i64, i64), SolveError> {
        Ok((self.eval_int(&q.lower)?, self.eval_int(&q.upper)?))
    }

    /// Try the iterator values from the lower bound upwards; the first value
    /// whose body succeeds proves the constraint. All effects are local.
    pub fn eliminate_exists(&mut self, q: &Quantified) -> Result<bool, SolveError> {
        self.stats.exists_nodes += 1;
        let (lower, upper) = self.bounds(q)?;
        let outermost = self.depth == 0;
        self.depth += 1;
        let result = (|| {
            for x in lower..=upper {
                let cp = self.checkpoint();
                let ok = self.solve_instance(q, x);
                self.rollback(cp);
                if ok? {
                    if outermost && self.opts.collect_witness {
                        self.witness.push(x);
                    }
                    return Ok(true);
                }
                self.fail()?;
            }
            Ok(false)
        })();
        self.depth -= 1;
        result
    }

    /// Every iterator value must succeed. An empty interval is trivially
    /// true.
    pub fn eliminate_forall(&mut self, q: &Quantified) -> Result<bool, SolveError> {
        self.stats.forall_nodes += 1;
        let (lower, upper) = self.bounds(q)?;
        self.depth += 1;
        let result = (|| {
            for x in lower..=upper {
                let cp = self.checkpoint();
                let ok = self.solve_instance(q, x);
                self.rollback(cp);
                if !ok? {
                    return self.fail();
                }
            }
            Ok(true)
        })();
        self.depth -= 1;
        result
    }

    fn solve_instance(&mut self, q: &Quantified, x: i64) -> Result<bool, SolveError> {
        let it = q.iterator.id;
        let subst = |v: &Var| (v.id == it).then(|| Term::int(x));
        let body: Vec<Constraint> = q.body.iter().map(|c| c.substitute(&subst)).collect();
        if self.opts.tabling {
            if let [Constraint::User(atom)] = body.as_slice() {
                if self.registry.kind(&atom.functor).is_none() {
                    let args = atom.args.iter().map(|a| self.normalize(a)).collect::<Result<Vec<_>, _>>()?;
                    let ground = Atom {
                        functor: atom.functor.clone(),
                        args,
                    };
                    let Some(key) = self.table_key(&ground) else {
                        return self.activate(&Constraint::User(ground));
                    };
                    if let Some(&verdict) = self.table.get(&key) {
                        self.stats.table_hits += 1;
                        return Ok(verdict);
                    }
                    let verdict = self.activate(&Constraint::User(ground))?;
                    self.table.insert(key, verdict);
                    return Ok(verdict);
                }
            }
        }
        self.solve_sequence(&body)
    }

    fn table_key(&self, goal: &Atom) -> Option<TableKey> {
        let args = goal
            .args
            .iter()
            .map(|a| match self.eq.resolve(a) {
                Resolved::Const(v) => Some(v),
                Resolved::Var(_) => None,
            })
            .collect::<Option<Vec<_>>>()?;
        // Resident constraints can take part in the sub-proof, so they are
        // part of the key.
        let mut store: Vec<String> = self
            .store
            .iter()
            .map(|(_, a)| format!("{}{:?}", a.functor, a.args.iter().map(|t| self.eq.resolve(t)).collect::<Vec<_>>()))
            .collect();
        store.sort_unstable();
        Some(TableKey {
            functor: goal.functor.clone(),
            args,
            host: self.host.digest(),
            store,
        })
    }

    /// Add `x = y`. On success every stored constraint that mentions the
    /// merged class is re-activated in token order.
    pub fn add_equality(&mut self, x: &Term, y: &Term) -> Result<bool, SolveError> {
        if !x.is_simple() || !y.is_simple() {
            return Err(SolveError::Malformed(format!("equality on unevaluated terms {x} = {y}")));
        }
        let (res, undo) = self.eq.union(x, y);
        if res == Union::Inconsistent {
            return Ok(false);
        }
        let root = match &undo {
            EqUndo::Noop => return Ok(true),
            EqUndo::SetConst { root } => *root,
            EqUndo::Link { root, .. } => *root,
        };
        self.trail.push(Undo::Eq(undo));
        let touched: Vec<TokenId> = self
            .store
            .iter()
            .filter(|(_, a)| {
                a.args
                    .iter()
                    .any(|t| matches!(t, Term::Var(v) if self.eq.find(v.id) == root))
            })
            .map(|(t, _)| t)
            .collect();
        for t in touched {
            if self.store.contains(t) && !self.run_occurrences(t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn rename(c: &Constraint, map: &HashMap<u32, Var>) -> Constraint {
    let f = |v: &Var| map.get(&v.id).cloned().map(Term::Var);
    match c {
        Constraint::Exists(q) | Constraint::Forall(q) => {
            let kind = if matches!(c, Constraint::Exists(_)) {
                QuantKind::Exists
            } else {
                QuantKind::Forall
            };
            let it = map.get(&q.iterator.id).cloned().unwrap_or_else(|| q.iterator.clone());
            let inner = Quantified {
                iterator: it,
                lower: q.lower.substitute(&f),
                upper: q.upper.substitute(&f),
                body: q.body.iter().map(|b| rename(b, map)).collect(),
            };
            Constraint::quantified(kind, inner)
        }
        other => other.substitute(&f),
    }
}
