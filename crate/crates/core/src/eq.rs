//! Equality classes over session variables and constants.
//!
//! Union-find without path compression so that every union can be undone
//! exactly. Each class carries at most one constant; merging two classes
//! holding different constants is reported as an inconsistency and leaves
//! the structure untouched.

use std::collections::HashMap;

use crate::term::{Term, Value};

/// What a term denotes modulo the current equalities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Resolved {
    Const(Value),
    /// Unbound class, identified by its root variable id.
    Var(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Union {
    /// Classes merged, or already equal.
    Ok,
    Inconsistent,
}

/// Undo information for one successful union.
#[derive(Debug, Clone, PartialEq)]
pub enum EqUndo {
    Noop,
    /// `child` was linked below `root`.
    Link {
        child: u32,
        root: u32,
        root_rank_bumped: bool,
    },
    /// A constant was attached to an unbound root.
    SetConst { root: u32 },
}

#[derive(Debug, Clone, Default)]
struct Node {
    parent: u32,
    rank: u32,
    constant: Option<Value>,
}

#[derive(Debug, Clone, Default)]
pub struct EqClasses {
    // Variables absent from the map are singleton, unbound classes.
    nodes: HashMap<u32, Node>,
}

impl EqClasses {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn find(&self, mut var: u32) -> u32 {
        while let Some(n) = self.nodes.get(&var) {
            if n.parent == var {
                break;
            }
            var = n.parent;
        }
        var
    }

    fn constant_of_root(&self, root: u32) -> Option<&Value> {
        self.nodes.get(&root).and_then(|n| n.constant.as_ref())
    }

    /// Resolve a variable or constant. Expressions must be evaluated first.
    pub fn resolve(&self, t: &Term) -> Resolved {
        match t {
            Term::Const(v) => Resolved::Const(v.clone()),
            Term::Var(v) => {
                let root = self.find(v.id);
                match self.constant_of_root(root) {
                    Some(c) => Resolved::Const(c.clone()),
                    None => Resolved::Var(root),
                }
            }
            Term::Expr(_) => panic!("resolve called on an unevaluated expression"),
        }
    }

    /// The constant bound to `var`'s class, if any.
    pub fn value_of(&self, var: u32) -> Option<&Value> {
        self.constant_of_root(self.find(var))
    }

    fn node_mut(&mut self, var: u32) -> &mut Node {
        self.nodes.entry(var).or_insert_with(|| Node {
            parent: var,
            rank: 0,
            constant: None,
        })
    }

    /// Merge the classes of `x` and `y`.
    pub fn union(&mut self, x: &Term, y: &Term) -> (Union, EqUndo) {
        match (self.resolve(x), self.resolve(y)) {
            (Resolved::Const(a), Resolved::Const(b)) => {
                if a == b {
                    (Union::Ok, EqUndo::Noop)
                } else {
                    (Union::Inconsistent, EqUndo::Noop)
                }
            }
            (Resolved::Var(r), Resolved::Const(c)) | (Resolved::Const(c), Resolved::Var(r)) => {
                self.node_mut(r).constant = Some(c);
                (Union::Ok, EqUndo::SetConst { root: r })
            }
            (Resolved::Var(a), Resolved::Var(b)) if a == b => (Union::Ok, EqUndo::Noop),
            (Resolved::Var(a), Resolved::Var(b)) => {
                let ra = self.node_mut(a).rank;
                let rb = self.node_mut(b).rank;
                let (root, child) = if ra >= rb { (a, b) } else { (b, a) };
                let bumped = ra == rb;
                self.node_mut(child).parent = root;
                let root_node = self.node_mut(root);
                if bumped {
                    root_node.rank += 1;
                }
                (
                    Union::Ok,
                    EqUndo::Link {
                        child,
                        root,
                        root_rank_bumped: bumped,
                    },
                )
            }
        }
    }

    pub fn undo(&mut self, u: EqUndo) {
        match u {
            EqUndo::Noop => {}
            EqUndo::SetConst { root } => {
                self.node_mut(root).constant = None;
                self.drop_if_trivial(root);
            }
            EqUndo::Link {
                child,
                root,
                root_rank_bumped,
            } => {
                self.node_mut(child).parent = child;
                if root_rank_bumped {
                    self.node_mut(root).rank -= 1;
                }
                self.drop_if_trivial(child);
                self.drop_if_trivial(root);
            }
        }
    }

    // Keeps the map equal to what it was before the undone union.
    fn drop_if_trivial(&mut self, var: u32) {
        if let Some(n) = self.nodes.get(&var) {
            let has_children = n.rank > 0;
            if n.parent == var && !has_children && n.constant.is_none() {
                self.nodes.remove(&var);
            }
        }
    }

    /// Canonical view of the partition over the given variables: for each
    /// variable, the smallest member id of its class among `vars`, plus the
    /// class constant. Used to compare states for equality in tests.
    pub fn partition(&self, vars: impl IntoIterator<Item = u32>) -> Vec<(u32, u32, Option<Value>)> {
        let mut vars: Vec<u32> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        let mut first_of_root: HashMap<u32, u32> = HashMap::new();
        vars.iter()
            .map(|&v| {
                let root = self.find(v);
                let rep = *first_of_root.entry(root).or_insert(v);
                (v, rep, self.constant_of_root(root).cloned())
            })
            .collect()
    }

    /// Variables ever touched by a union, in ascending order.
    pub fn known_vars(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.nodes.keys().copied().collect();
        v.sort_unstable();
        v
    }
}
