use std::collections::{HashMap, VecDeque};

use super::{PairLabel, StateId, Transducer, Transition};
use crate::symbol::Symbol;

impl Transducer {
    /// Denotes exactly `{(ε, ε)}`.
    pub fn epsilon() -> Self {
        let mut t = Transducer::empty();
        t.set_final(0, true);
        t
    }

    /// A linear machine spelling one pair.
    pub fn from_pairs(labels: &[PairLabel]) -> Self {
        let mut t = Transducer::empty();
        let mut cur = t.start();
        for label in labels {
            let next = t.add_state();
            t.add_transition(cur, label.clone(), next);
            cur = next;
        }
        t.set_final(cur, true);
        t
    }

    /// Identity relation on a single string.
    pub fn identity(symbols: &[Symbol]) -> Self {
        let labels: Vec<PairLabel> = symbols.iter().cloned().map(PairLabel::identity).collect();
        Transducer::from_pairs(&labels)
    }

    /// Maps `analysis` to `surface`, aligning position by position and padding
    /// the shorter side with epsilons on the right.
    pub fn string_pair(analysis: &[Symbol], surface: &[Symbol]) -> Self {
        let n = analysis.len().max(surface.len());
        let labels: Vec<PairLabel> = (0..n)
            .map(|i| {
                PairLabel::new(
                    analysis.get(i).cloned().unwrap_or(Symbol::Epsilon),
                    surface.get(i).cloned().unwrap_or(Symbol::Epsilon),
                )
            })
            .collect();
        Transducer::from_pairs(&labels)
    }

    pub fn concat(&self, other: &Transducer) -> Transducer {
        let mut t = self.clone();
        let offset = t.absorb(other);
        let finals: Vec<StateId> = self.finals().collect();
        for f in finals {
            t.set_final(f, false);
            t.add_transition(f, PairLabel::epsilon(), other.start() + offset);
        }
        t
    }

    pub fn union(&self, other: &Transducer) -> Transducer {
        Transducer::union_all([self, other])
    }

    /// Union of any number of machines through one fresh start state.
    pub fn union_all<'a>(machines: impl IntoIterator<Item = &'a Transducer>) -> Transducer {
        let mut t = Transducer::empty();
        for m in machines {
            let offset = t.absorb(m);
            t.add_transition(0, PairLabel::epsilon(), m.start() + offset);
        }
        t
    }

    pub fn star(&self) -> Transducer {
        let mut t = Transducer::epsilon();
        let offset = t.absorb(self);
        t.add_transition(0, PairLabel::epsilon(), self.start() + offset);
        for f in self.finals() {
            t.add_transition(f + offset, PairLabel::epsilon(), 0);
        }
        t
    }

    pub fn plus(&self) -> Transducer {
        self.concat(&self.star())
    }

    pub fn optional(&self) -> Transducer {
        self.union(&Transducer::epsilon())
    }

    /// Swaps input and output on every transition.
    pub fn invert(&self) -> Transducer {
        let mut t = self.clone();
        for ts in &mut t.transitions {
            for tr in ts.iter_mut() {
                tr.label = tr.label.inverted();
            }
        }
        t
    }

    /// Relational composition: `(x, z)` such that `(x, y)` is in `self` and
    /// `(y, z)` is in `other`.
    ///
    /// Epsilon moves go through the usual three-state filter so each aligned
    /// pair of paths yields exactly one path in the result.
    pub fn compose(&self, other: &Transducer) -> Transducer {
        // filter 0: no pending epsilon moves, 1: after a left-only move,
        // 2: after a right-only move
        type Key = (StateId, StateId, u8);
        let mut index: HashMap<Key, StateId> = HashMap::new();
        let mut queue: VecDeque<Key> = VecDeque::new();
        let mut out = Transducer::empty();

        let start = (self.start(), other.start(), 0u8);
        index.insert(start, 0);
        queue.push_back(start);

        let mut intern = |key: Key, out: &mut Transducer, queue: &mut VecDeque<Key>| -> StateId {
            *index.entry(key).or_insert_with(|| {
                queue.push_back(key);
                out.add_state()
            })
        };

        while let Some(key @ (qa, qb, filter)) = queue.pop_front() {
            let src = intern(key, &mut out, &mut queue);
            if self.is_final(qa) && other.is_final(qb) {
                out.set_final(src, true);
            }
            for ta in self.transitions(qa) {
                let a_out_eps = ta.label.output.is_epsilon();
                if a_out_eps && filter != 2 {
                    let dst = intern((ta.target, qb, 1), &mut out, &mut queue);
                    out.add_transition(src, PairLabel::new(ta.label.input.clone(), Symbol::Epsilon), dst);
                }
                for tb in other.transitions(qb) {
                    let b_in_eps = tb.label.input.is_epsilon();
                    let matched = if a_out_eps {
                        b_in_eps && filter == 0
                    } else {
                        ta.label.output == tb.label.input
                    };
                    if matched {
                        let dst = intern((ta.target, tb.target, 0), &mut out, &mut queue);
                        out.add_transition(
                            src,
                            PairLabel::new(ta.label.input.clone(), tb.label.output.clone()),
                            dst,
                        );
                    }
                }
            }
            if filter != 1 {
                for tb in other.transitions(qb) {
                    if tb.label.input.is_epsilon() {
                        let dst = intern((qa, tb.target, 2), &mut out, &mut queue);
                        out.add_transition(src, PairLabel::new(Symbol::Epsilon, tb.label.output.clone()), dst);
                    }
                }
            }
        }
        out
    }

    /// Removes states that are not on any start-to-final path.
    pub fn trim(&self) -> Transducer {
        let n = self.state_count();
        let mut accessible = vec![false; n];
        let mut stack = vec![self.start()];
        accessible[self.start()] = true;
        while let Some(s) = stack.pop() {
            for t in self.transitions(s) {
                if !accessible[t.target] {
                    accessible[t.target] = true;
                    stack.push(t.target);
                }
            }
        }

        let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (from, _, to) in self.all_transitions() {
            reverse[to].push(from);
        }
        let mut coaccessible = vec![false; n];
        let mut stack: Vec<StateId> = self.finals().collect();
        for &f in &stack {
            coaccessible[f] = true;
        }
        while let Some(s) = stack.pop() {
            for &p in &reverse[s] {
                if !coaccessible[p] {
                    coaccessible[p] = true;
                    stack.push(p);
                }
            }
        }

        if !(accessible[self.start()] && coaccessible[self.start()]) {
            return Transducer::empty();
        }

        let mut remap = vec![None; n];
        let mut out = Transducer {
            start: 0,
            finals: Vec::new(),
            transitions: Vec::new(),
        };
        // keep the start state at id 0
        let order = std::iter::once(self.start()).chain((0..n).filter(|&s| s != self.start()));
        for s in order {
            if accessible[s] && coaccessible[s] {
                remap[s] = Some(out.add_state());
            }
        }
        for s in 0..n {
            let Some(ns) = remap[s] else { continue };
            out.finals[ns] = self.finals[s];
            out.transitions[ns] = self.transitions[s]
                .iter()
                .filter_map(|t| {
                    remap[t.target].map(|target| Transition {
                        label: t.label.clone(),
                        target,
                    })
                })
                .collect();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::fst::StringPair;
    use crate::symbol::{chars, parse_symbols};

    fn pair(a: &str, s: &str) -> StringPair {
        StringPair::new(parse_symbols(a).unwrap(), parse_symbols(s).unwrap())
    }

    fn single(a: &str, s: &str) -> Transducer {
        Transducer::string_pair(&parse_symbols(a).unwrap(), &parse_symbols(s).unwrap())
    }

    fn lang(t: &Transducer, k: usize) -> BTreeSet<StringPair> {
        t.enumerate(k)
    }

    #[test]
    fn empty_and_epsilon() {
        assert!(lang(&Transducer::empty(), 5).is_empty());
        assert_eq!(lang(&Transducer::epsilon(), 3), BTreeSet::from([pair("", "")]));
        assert_eq!(lang(&Transducer::empty().star(), 4), lang(&Transducer::epsilon(), 4));
    }

    #[test]
    fn union_and_concat_identities() {
        let t = single("ab", "c").union(&single("", "x"));
        assert_eq!(lang(&Transducer::empty().union(&t), 5), lang(&t, 5));
        assert!(lang(&Transducer::empty().concat(&t), 5).is_empty());
        assert_eq!(lang(&Transducer::epsilon().concat(&t), 5), lang(&t, 5));
        assert_eq!(lang(&t.concat(&Transducer::epsilon()), 5), lang(&t, 5));
        assert_eq!(lang(&t.union(&t), 5), lang(&t, 5));
    }

    #[test]
    fn from_pairs_tag_to_two_chars() {
        let t = Transducer::from_pairs(&[
            PairLabel::new(Symbol::tag("1s").unwrap(), Symbol::Char('i')),
            PairLabel::new(Symbol::Epsilon, Symbol::Char('m')),
        ]);
        assert_eq!(lang(&t, 3), BTreeSet::from([pair("<1s>", "im")]));
        assert_eq!(lang(&Transducer::from_pairs(&[]), 3), lang(&Transducer::epsilon(), 3));
        let xw = Transducer::identity(&chars("xw"));
        assert_eq!(lang(&xw, 3), BTreeSet::from([pair("xw", "xw")]));
    }

    #[test]
    fn concat_singletons() {
        let t = single("na", "na").concat(&single("w", "w"));
        assert_eq!(lang(&t, 5), BTreeSet::from([pair("naw", "naw")]));
    }

    #[test]
    fn star_bounded() {
        let t = single("a", "b").star();
        let expected = BTreeSet::from([pair("", ""), pair("a", "b"), pair("aa", "bb"), pair("aaa", "bbb")]);
        assert_eq!(lang(&t, 3), expected);
        let s = single("a", "b");
        assert_eq!(lang(&s.plus(), 3), lang(&s.concat(&s.star()), 3));
        assert!(!lang(&s.plus(), 3).contains(&pair("", "")));
        assert_eq!(lang(&s.optional(), 3), lang(&s.union(&Transducer::epsilon()), 3));
    }

    #[test]
    fn invert_singleton() {
        let t = single("<1s>", "im");
        assert_eq!(lang(&t.invert(), 3), BTreeSet::from([pair("im", "<1s>")]));
        assert_eq!(t.invert().invert(), t);
    }

    #[test]
    fn compose_chains_middle_side() {
        let a = single("A", "b");
        let b = single("b", "c");
        assert_eq!(lang(&a.compose(&b), 3), BTreeSet::from([pair("A", "c")]));
    }

    #[test]
    fn compose_with_epsilons_on_both_sides() {
        // a: x -> "" then "" -> y ; b inserts z before reading y
        let a = Transducer::from_pairs(&[
            PairLabel::new(Symbol::Char('x'), Symbol::Epsilon),
            PairLabel::new(Symbol::Epsilon, Symbol::Char('y')),
        ]);
        let b = Transducer::from_pairs(&[
            PairLabel::new(Symbol::Epsilon, Symbol::Char('z')),
            PairLabel::new(Symbol::Char('y'), Symbol::Char('y')),
        ]);
        let c = a.compose(&b);
        assert_eq!(lang(&c, 3), BTreeSet::from([pair("x", "zy")]));
        // one path only: the result accepts the pair along a single route
        assert_eq!(c.trim().count_paths(), 1);
    }

    #[test]
    fn trim_drops_orphans() {
        let mut t = Transducer::empty();
        for _ in 0..4 {
            t.add_state();
        }
        t.add_transition(1, PairLabel::identity(Symbol::Char('a')), 2);
        assert_eq!(t.state_count(), 5);
        let trimmed = t.trim();
        assert_eq!(trimmed.state_count(), 1);
        assert_eq!(trimmed.transition_count(), 0);

        let c = single("ab", "ab").concat(&single("c", "d").union(&single("", "e")));
        assert_eq!(lang(&c.trim(), 6), lang(&c, 6));
        let tt = c.trim();
        assert!(tt.state_count() <= c.state_count());
    }

    impl Transducer {
        /// Number of accepting paths in an acyclic machine.
        fn count_paths(&self) -> usize {
            fn go(t: &Transducer, s: StateId) -> usize {
                let here = usize::from(t.is_final(s));
                here + t.transitions(s).iter().map(|tr| go(t, tr.target)).sum::<usize>()
            }
            go(self, self.start())
        }
    }
}
