//! Unweighted finite-state transducers.
//!
//! A [`Transducer`] denotes a relation between analysis-side strings (input
//! labels) and surface-side strings (output labels). Machines are immutable
//! once built; every algebraic operation returns a new value.

mod lookup;
mod ops;
mod text;

use std::collections::BTreeSet;
use std::fmt;

use crate::symbol::{format_symbols, Symbol};

pub use lookup::DEFAULT_MAX_OUTPUT;
pub use text::ParseFstError;

pub type StateId = usize;

/// An `input:output` label on a transition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairLabel {
    pub input: Symbol,
    pub output: Symbol,
}

impl PairLabel {
    pub fn new(input: Symbol, output: Symbol) -> Self {
        PairLabel { input, output }
    }

    pub fn identity(symbol: Symbol) -> Self {
        PairLabel {
            input: symbol.clone(),
            output: symbol,
        }
    }

    pub fn epsilon() -> Self {
        PairLabel::identity(Symbol::Epsilon)
    }

    pub fn inverted(&self) -> Self {
        PairLabel {
            input: self.output.clone(),
            output: self.input.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub label: PairLabel,
    pub target: StateId,
}

/// One element of a transducer's relation. Neither side contains epsilon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringPair {
    pub analysis: Vec<Symbol>,
    pub surface: Vec<Symbol>,
}

impl StringPair {
    pub fn new(analysis: Vec<Symbol>, surface: Vec<Symbol>) -> Self {
        StringPair { analysis, surface }
    }
}

impl fmt::Display for StringPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}, {:?})",
            format_symbols(&self.analysis),
            format_symbols(&self.surface)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transducer {
    start: StateId,
    finals: Vec<bool>,
    transitions: Vec<Vec<Transition>>,
}

impl Default for Transducer {
    fn default() -> Self {
        Transducer::empty()
    }
}

impl Transducer {
    /// A machine with a single non-final start state.
    pub fn empty() -> Self {
        Transducer {
            start: 0,
            finals: vec![false],
            transitions: vec![Vec::new()],
        }
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().enumerate().filter_map(|(i, &f)| f.then_some(i))
    }

    pub fn transitions(&self, state: StateId) -> &[Transition] {
        &self.transitions[state]
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().map(Vec::len).sum()
    }

    /// Iterates `(from, label, to)` over every transition.
    pub fn all_transitions(&self) -> impl Iterator<Item = (StateId, &PairLabel, StateId)> + '_ {
        self.transitions
            .iter()
            .enumerate()
            .flat_map(|(from, ts)| ts.iter().map(move |t| (from, &t.label, t.target)))
    }

    pub fn add_state(&mut self) -> StateId {
        self.finals.push(false);
        self.transitions.push(Vec::new());
        self.finals.len() - 1
    }

    /// Panics if `state` does not exist.
    pub fn set_final(&mut self, state: StateId, is_final: bool) {
        self.finals[state] = is_final;
    }

    /// Panics if `state` does not exist.
    pub fn set_start(&mut self, state: StateId) {
        assert!(state < self.state_count(), "start state {state} out of range");
        self.start = state;
    }

    /// Panics if either endpoint does not exist.
    pub fn add_transition(&mut self, from: StateId, label: PairLabel, to: StateId) {
        assert!(
            from < self.state_count() && to < self.state_count(),
            "transition {from} -> {to} out of range"
        );
        self.transitions[from].push(Transition { label, target: to });
    }

    /// Symbols appearing on the input side, epsilon excluded.
    pub fn input_alphabet(&self) -> BTreeSet<Symbol> {
        self.all_transitions()
            .map(|(_, l, _)| l.input.clone())
            .filter(|s| !s.is_epsilon())
            .collect()
    }

    /// Symbols appearing on the output side, epsilon excluded.
    pub fn output_alphabet(&self) -> BTreeSet<Symbol> {
        self.all_transitions()
            .map(|(_, l, _)| l.output.clone())
            .filter(|s| !s.is_epsilon())
            .collect()
    }

    /// Copies `other`'s states into `self`, returning the offset added to
    /// every state id of `other`.
    fn absorb(&mut self, other: &Transducer) -> usize {
        let offset = self.state_count();
        self.finals.extend_from_slice(&other.finals);
        for ts in &other.transitions {
            self.transitions.push(
                ts.iter()
                    .map(|t| Transition {
                        label: t.label.clone(),
                        target: t.target + offset,
                    })
                    .collect(),
            );
        }
        offset
    }
}
