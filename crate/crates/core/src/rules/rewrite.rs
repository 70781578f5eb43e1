//! Single-symbol context-dependent rewrite rules, `in -> out / LEFT _ RIGHT`.
//!
//! Contexts are tested against the input string: a site is eligible when
//! the symbol before it is in `LEFT` and the symbol after it is in `RIGHT`.
//! An obligatory rule rewrites every eligible site, so the compiled machine
//! is a function; an optional rule may also leave a site unchanged.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::fst::{PairLabel, StateId, Transducer};
use crate::symbol::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("rule must not rewrite epsilon to epsilon")]
    EpsilonToEpsilon,
    #[error("rule targets must be characters or epsilon, found {0}")]
    NonCharTarget(String),
    #[error("rewrite alphabet is empty")]
    EmptyAlphabet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Context {
    Class(BTreeSet<char>),
    /// `#`: start of string on the left, end of string on the right.
    Boundary,
    /// `*`: any symbol or a boundary.
    Any,
}

impl Context {
    fn matches(&self, c: char) -> bool {
        match self {
            Context::Class(set) => set.contains(&c),
            Context::Boundary => false,
            Context::Any => true,
        }
    }

    fn matches_boundary(&self) -> bool {
        !matches!(self, Context::Class(_))
    }

    fn chars(&self) -> impl Iterator<Item = char> + '_ {
        match self {
            Context::Class(set) => Some(set.iter().copied()),
            _ => None,
        }
        .into_iter()
        .flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub input: Symbol,
    pub output: Symbol,
    pub left: Context,
    pub right: Context,
    pub obligatory: bool,
}

impl RewriteRule {
    pub fn new(
        input: Symbol,
        output: Symbol,
        left: Context,
        right: Context,
        obligatory: bool,
    ) -> Result<Self, RewriteError> {
        for s in [&input, &output] {
            if let Symbol::Tag(_) = s {
                return Err(RewriteError::NonCharTarget(s.to_string()));
            }
        }
        if input.is_epsilon() && output.is_epsilon() {
            return Err(RewriteError::EpsilonToEpsilon);
        }
        Ok(RewriteRule {
            input,
            output,
            left,
            right,
            obligatory,
        })
    }

    /// `0 -> out / LEFT _ RIGHT`
    pub fn insertion(output: char, left: Context, right: Context) -> Self {
        RewriteRule::new(Symbol::Epsilon, Symbol::Char(output), left, right, true)
            .expect("insertion of a character is valid")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Pending {
    None,
    /// A rewrite happened; the next input symbol must satisfy RIGHT.
    NeedRight,
    /// An eligible site was left alone; the next symbol must not satisfy RIGHT.
    NeedNotRight,
}

/// Compiles `rule` to an identity-except-at-sites transducer over
/// `alphabet` plus every character the rule itself mentions.
pub fn compile_rewrite(rule: &RewriteRule, alphabet: &BTreeSet<char>) -> Result<Transducer, RewriteError> {
    if alphabet.is_empty() {
        return Err(RewriteError::EmptyAlphabet);
    }
    let mut sigma = alphabet.clone();
    sigma.extend(rule.left.chars());
    sigma.extend(rule.right.chars());
    sigma.extend(rule.input.as_char());
    sigma.extend(rule.output.as_char());

    // state key: (left context satisfied, pending right-context obligation)
    let mut index: HashMap<(bool, Pending), StateId> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut t = Transducer::empty();
    let start = (rule.left.matches_boundary(), Pending::None);
    index.insert(start, 0);
    queue.push_back(start);

    let mut state_of = |key: (bool, Pending), t: &mut Transducer, queue: &mut VecDeque<(bool, Pending)>| {
        *index.entry(key).or_insert_with(|| {
            queue.push_back(key);
            t.add_state()
        })
    };

    let right_at_end = rule.right.matches_boundary();
    while let Some(key @ (left_ok, pending)) = queue.pop_front() {
        let src = state_of(key, &mut t, &mut queue);
        let accepts_end = match pending {
            Pending::None => !(rule.input.is_epsilon() && rule.obligatory && left_ok && right_at_end),
            Pending::NeedRight => right_at_end,
            Pending::NeedNotRight => !right_at_end,
        };
        t.set_final(src, accepts_end);

        if rule.input.is_epsilon() {
            // insertion
            if pending == Pending::None && left_ok {
                let dst = state_of((left_ok, Pending::NeedRight), &mut t, &mut queue);
                t.add_transition(src, PairLabel::new(Symbol::Epsilon, rule.output.clone()), dst);
            }
            for &c in &sigma {
                let allowed = match pending {
                    Pending::NeedRight => rule.right.matches(c),
                    _ => !(rule.obligatory && left_ok && rule.right.matches(c)),
                };
                if allowed {
                    let dst = state_of((rule.left.matches(c), Pending::None), &mut t, &mut queue);
                    t.add_transition(src, PairLabel::identity(Symbol::Char(c)), dst);
                }
            }
            continue;
        }

        for &c in &sigma {
            let ok = match pending {
                Pending::None => true,
                Pending::NeedRight => rule.right.matches(c),
                Pending::NeedNotRight => !rule.right.matches(c),
            };
            if !ok {
                continue;
            }
            let next_left = rule.left.matches(c);
            let sym = Symbol::Char(c);
            if left_ok && rule.input == sym {
                let dst = state_of((next_left, Pending::NeedRight), &mut t, &mut queue);
                t.add_transition(src, PairLabel::new(sym.clone(), rule.output.clone()), dst);
                let keep = if rule.obligatory {
                    Pending::NeedNotRight
                } else {
                    Pending::None
                };
                let dst = state_of((next_left, keep), &mut t, &mut queue);
                t.add_transition(src, PairLabel::identity(sym), dst);
            } else {
                let dst = state_of((next_left, Pending::None), &mut t, &mut queue);
                t.add_transition(src, PairLabel::identity(sym), dst);
            }
        }
    }
    Ok(t.trim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{chars, format_symbols};

    fn vowels() -> Context {
        Context::Class("aeêiîouû".chars().collect())
    }

    fn apply(t: &Transducer, s: &str) -> Vec<String> {
        t.lookup(&chars(s)).iter().map(|o| format_symbols(o)).collect()
    }

    #[test]
    fn y_insertion_between_vowels() {
        let rule = RewriteRule::insertion('y', vowels(), vowels());
        let t = compile_rewrite(&rule, &"dergnwbc".chars().collect()).unwrap();
        assert_eq!(apply(&t, "dergae"), ["dergaye"]);
        assert_eq!(apply(&t, "nawe"), ["nawe"]);
        assert_eq!(apply(&t, "abc"), ["abc"]);
        assert_eq!(apply(&t, "aee"), ["ayeye"]);
        assert_eq!(apply(&t, ""), [""]);
    }

    #[test]
    fn substitution_and_deletion() {
        let v = vowels();
        let rule = RewriteRule::new(
            Symbol::Char('e'),
            Symbol::Char('i'),
            Context::Boundary,
            Context::Any,
            true,
        )
        .unwrap();
        let t = compile_rewrite(&rule, &"ek".chars().collect()).unwrap();
        assert_eq!(apply(&t, "eke"), ["ike"]);
        assert_eq!(apply(&t, "e"), ["i"]);

        let rule = RewriteRule::new(Symbol::Char('e'), Symbol::Epsilon, v.clone(), Context::Boundary, true).unwrap();
        let t = compile_rewrite(&rule, &"aek".chars().collect()).unwrap();
        assert_eq!(apply(&t, "ae"), ["a"]);
        assert_eq!(apply(&t, "aek"), ["aek"]);
        assert_eq!(apply(&t, "kae"), ["ka"]);

        let rule = RewriteRule::new(Symbol::Char('k'), Symbol::Char('g'), v.clone(), v, false).unwrap();
        let t = compile_rewrite(&rule, &"ak".chars().collect()).unwrap();
        assert_eq!(apply(&t, "aka"), ["aga", "aka"]);
    }

    #[test]
    fn insertion_at_word_end() {
        let rule = RewriteRule::insertion('n', Context::Class(['a'].into()), Context::Boundary);
        let t = compile_rewrite(&rule, &"ab".chars().collect()).unwrap();
        assert_eq!(apply(&t, "aba"), ["aban"]);
        assert_eq!(apply(&t, "ab"), ["ab"]);
    }

    #[test]
    fn errors() {
        let rule = RewriteRule::insertion('y', vowels(), vowels());
        assert_eq!(
            compile_rewrite(&rule, &BTreeSet::new()),
            Err(RewriteError::EmptyAlphabet)
        );
        assert_eq!(
            RewriteRule::new(Symbol::Epsilon, Symbol::Epsilon, Context::Any, Context::Any, true),
            Err(RewriteError::EpsilonToEpsilon)
        );
    }
}
