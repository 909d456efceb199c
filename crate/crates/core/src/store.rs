//! Identified multiset of suspended user constraints.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::term::{Atom, Name};

/// Identifier of a stored constraint. Never reused within a session.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenId(pub u64);

impl std::fmt::Display for TokenId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Store {
    tokens: BTreeMap<TokenId, Atom>,
    index: HashMap<Name, BTreeMap<usize, BTreeSet<TokenId>>>,
    last: u64,
}

impl Store {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a constraint under a fresh token. Arguments must already be
    /// variables or constants.
    pub fn add(&mut self, atom: Atom) -> TokenId {
        debug_assert!(atom.args.iter().all(|a| a.is_simple()));
        self.last += 1;
        let id = TokenId(self.last);
        self.insert(id, atom);
        id
    }

    /// Put a previously removed constraint back under its old token.
    pub(crate) fn restore(&mut self, id: TokenId, atom: Atom) {
        debug_assert!(id.0 <= self.last);
        self.insert(id, atom);
    }

    fn insert(&mut self, id: TokenId, atom: Atom) {
        self.index
            .entry(atom.functor.clone())
            .or_default()
            .entry(atom.arity())
            .or_default()
            .insert(id);
        self.tokens.insert(id, atom);
    }

    pub fn remove(&mut self, id: TokenId) -> Option<Atom> {
        let atom = self.tokens.remove(&id)?;
        if let Some(by_arity) = self.index.get_mut(&atom.functor) {
            if let Some(set) = by_arity.get_mut(&atom.arity()) {
                set.remove(&id);
                if set.is_empty() {
                    by_arity.remove(&atom.arity());
                }
            }
            if by_arity.is_empty() {
                self.index.remove(&atom.functor);
            }
        }
        Some(atom)
    }

    pub fn get(&self, id: TokenId) -> Option<&Atom> {
        self.tokens.get(&id)
    }

    pub fn contains(&self, id: TokenId) -> bool {
        self.tokens.contains_key(&id)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Live tokens with the given functor and arity, ascending.
    pub fn tokens_of(&self, functor: &str, arity: usize) -> Vec<TokenId> {
        self.index
            .get(functor)
            .and_then(|m| m.get(&arity))
            .map(|set| set.iter().copied().collect())
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (TokenId, &Atom)> {
        self.tokens.iter().map(|(k, v)| (*k, v))
    }

    /// Largest token id handed out so far.
    pub fn last_token(&self) -> u64 {
        self.last
    }

    /// Check that the functor index agrees with the token map.
    pub fn index_consistent(&self) -> bool {
        let indexed: usize = self
            .index
            .values()
            .flat_map(|m| m.values())
            .map(|s| s.len())
            .sum();
        indexed == self.tokens.len()
            && self.index.iter().all(|(f, by_arity)| {
                by_arity.iter().all(|(a, set)| {
                    set.iter().all(|id| {
                        self.tokens
                            .get(id)
                            .is_some_and(|c| &c.functor == f && c.arity() == *a)
                    })
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::Term;
    use proptest::prelude::*;

    #[test]
    fn first_token_is_one() {
        let mut s = Store::new();
        assert_eq!(s.add(Atom::new("a", vec![])), TokenId(1));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn multiset_keeps_duplicates_apart() {
        let mut s = Store::new();
        let t1 = s.add(Atom::new("a", vec![]));
        let t2 = s.add(Atom::new("a", vec![]));
        assert_ne!(t1, t2);
        assert_eq!(s.tokens_of("a", 0), vec![t1, t2]);
    }

    #[test]
    fn indexed_by_functor_and_arity() {
        let mut s = Store::new();
        let t = s.add(Atom::new("nimfibou", vec![Term::int(2), Term::int(3)]));
        assert_eq!(s.tokens_of("nimfibou", 2), vec![t]);
        assert!(s.tokens_of("nimfibou", 1).is_empty());
        assert!(s.index_consistent());
    }

    #[test]
    fn removed_ids_are_not_reused() {
        let mut s = Store::new();
        let t1 = s.add(Atom::new("a", vec![]));
        s.remove(t1);
        let t2 = s.add(Atom::new("a", vec![]));
        assert!(t2 > t1);
    }

    proptest! {
        #[test]
        fn live_count_and_index_track_operations(ops in proptest::collection::vec((0u8..3, any::<prop::sample::Index>()), 0..60)) {
            let mut s = Store::new();
            let mut live: Vec<TokenId> = Vec::new();
            let (mut adds, mut dels) = (0usize, 0usize);
            let mut last = 0;
            for (op, idx) in ops {
                if op < 2 || live.is_empty() {
                    let name = if op == 0 { "p" } else { "q" };
                    let t = s.add(Atom::new(name, vec![Term::int(adds as i64)]));
                    prop_assert!(t.0 > last);
                    last = t.0;
                    live.push(t);
                    adds += 1;
                } else {
                    let t = live.remove(idx.index(live.len()));
                    prop_assert!(s.remove(t).is_some());
                    dels += 1;
                }
                prop_assert_eq!(s.len(), adds - dels);
                prop_assert!(s.index_consistent());
            }
        }
    }
}
