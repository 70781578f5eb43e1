//! Shared test support: random small transducers and a set-level model of
//! the transducer algebra over length-bounded languages.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use sorani_fst::fst::{PairLabel, StringPair, Transducer};
use sorani_fst::Symbol;

pub type Language = BTreeSet<StringPair>;

/// Length cap used when comparing languages.
pub const CAP: usize = 6;

/// Largest capped relation the generator keeps. The set model of
/// concatenation is quadratic in relation size, so denser machines are
/// rejected and regenerated, as are machines whose relation is empty.
pub const MAX_PAIRS: usize = 2000;

pub const ALPHABET: [char; 4] = ['a', 'b', 'c', 'd'];

/// A symbol from the first `size` letters, or epsilon when `allow_eps`.
fn arb_symbol(size: usize, allow_eps: bool) -> BoxedStrategy<Symbol> {
    let letters = proptest::sample::select(ALPHABET[..size].to_vec()).prop_map(Symbol::Char);
    if allow_eps {
        prop_oneof![3 => letters, 1 => Just(Symbol::Epsilon)].boxed()
    } else {
        letters.boxed()
    }
}

/// Random transducer with 1 to 5 states over an alphabet of 1 to 4 letters.
/// With `input_eps` false, no transition reads epsilon on the input side.
pub fn arb_transducer_with(input_eps: bool) -> BoxedStrategy<Transducer> {
    (1usize..=5, 1usize..=4)
        .prop_flat_map(move |(states, size)| {
            let edge = (
                0..states,
                arb_symbol(size, input_eps),
                arb_symbol(size, true),
                0..states,
            );
            (
                Just(states),
                proptest::collection::vec(any::<bool>(), states),
                proptest::collection::vec(edge, 0..=10),
                0..states,
            )
        })
        .prop_map(|(states, finals, edges, start)| {
            let mut t = Transducer::empty();
            for _ in 1..states {
                t.add_state();
            }
            t.set_start(start);
            for (s, f) in finals.into_iter().enumerate() {
                t.set_final(s, f);
            }
            for (from, i, o, to) in edges {
                t.add_transition(from, PairLabel::new(i, o), to);
            }
            t
        })
        .prop_filter("capped relation empty or too dense for the set model", |t| {
            let small = t.enumerate(3).len();
            (1..=150).contains(&small) && t.enumerate(CAP).len() <= MAX_PAIRS
        })
        .boxed()
}

pub fn arb_transducer() -> BoxedStrategy<Transducer> {
    arb_transducer_with(true)
}

pub fn lang(t: &Transducer) -> Language {
    t.enumerate(CAP)
}

fn join(x: &StringPair, y: &StringPair) -> StringPair {
    StringPair::new(
        x.analysis.iter().chain(&y.analysis).cloned().collect(),
        x.surface.iter().chain(&y.surface).cloned().collect(),
    )
}

pub fn union_model(a: &Language, b: &Language) -> Language {
    a.union(b).cloned().collect()
}

pub fn concat_model(a: &Language, b: &Language) -> Language {
    let mut out = Language::new();
    for x in a {
        for y in b {
            if x.analysis.len() + y.analysis.len() <= CAP && x.surface.len() + y.surface.len() <= CAP {
                out.insert(join(x, y));
            }
        }
    }
    out
}

pub fn star_model(a: &Language) -> Language {
    let mut out = Language::from([StringPair::new(vec![], vec![])]);
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        frontier = concat_model(&frontier, a)
            .into_iter()
            .filter(|p| !out.contains(p))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

pub fn invert_model(a: &Language) -> Language {
    a.iter()
        .map(|p| StringPair::new(p.surface.clone(), p.analysis.clone()))
        .collect()
}

/// Exact only when every intermediate string is within the cap, which holds
/// when `a`'s machine never reads epsilon.
pub fn compose_model(a: &Language, b: &Language) -> Language {
    let mut out = Language::new();
    for x in a {
        for y in b.iter().filter(|y| y.analysis == x.surface) {
            out.insert(StringPair::new(x.analysis.clone(), y.surface.clone()));
        }
    }
    out
}
