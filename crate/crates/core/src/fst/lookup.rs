use std::collections::{BTreeSet, HashMap, HashSet};

use super::{StateId, StringPair, Transducer};
use crate::symbol::Symbol;

/// Output-length cap used by [`Transducer::lookup`]. Only machines whose
/// epsilon-input cycles emit output can reach it.
pub const DEFAULT_MAX_OUTPUT: usize = 256;

/// Hash-consed prefix tree of symbol strings; a node id stands for the string
/// spelled on the path from the root.
struct StringTrie {
    nodes: Vec<(usize, Option<Symbol>, usize)>,
    children: HashMap<(usize, Symbol), usize>,
}

impl StringTrie {
    const ROOT: usize = 0;

    fn new() -> Self {
        StringTrie {
            nodes: vec![(0, None, 0)],
            children: HashMap::new(),
        }
    }

    fn len(&self, node: usize) -> usize {
        self.nodes[node].2
    }

    /// Appends `sym` to the string at `node`; epsilon leaves it unchanged.
    fn push(&mut self, node: usize, sym: &Symbol) -> usize {
        if sym.is_epsilon() {
            return node;
        }
        if let Some(&child) = self.children.get(&(node, sym.clone())) {
            return child;
        }
        let id = self.nodes.len();
        let len = self.nodes[node].2 + 1;
        self.nodes.push((node, Some(sym.clone()), len));
        self.children.insert((node, sym.clone()), id);
        id
    }

    fn spell(&self, mut node: usize) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.len(node));
        while let (parent, Some(sym), _) = &self.nodes[node] {
            out.push(sym.clone());
            node = *parent;
        }
        out.reverse();
        out
    }
}

impl Transducer {
    /// All output strings paired with `input`, sorted and deduplicated.
    ///
    /// Epsilon symbols in `input` are ignored. Equivalent to
    /// [`lookup_bounded`](Self::lookup_bounded) with [`DEFAULT_MAX_OUTPUT`].
    pub fn lookup(&self, input: &[Symbol]) -> Vec<Vec<Symbol>> {
        self.lookup_bounded(input, DEFAULT_MAX_OUTPUT)
    }

    /// Like [`lookup`](Self::lookup) but drops any output longer than
    /// `max_output` symbols.
    ///
    /// A configuration `(state, input position, output so far)` is expanded
    /// at most once: revisiting a `(state, position)` pair is only possible
    /// after the output has grown, so epsilon cycles terminate.
    pub fn lookup_bounded(&self, input: &[Symbol], max_output: usize) -> Vec<Vec<Symbol>> {
        let input: Vec<&Symbol> = input.iter().filter(|s| !s.is_epsilon()).collect();
        let mut trie = StringTrie::new();
        let mut seen: HashSet<(StateId, usize, usize)> = HashSet::new();
        let mut stack = vec![(self.start(), 0usize, StringTrie::ROOT)];
        let mut results: BTreeSet<usize> = BTreeSet::new();
        seen.insert(stack[0]);

        while let Some((state, pos, out)) = stack.pop() {
            if pos == input.len() && self.is_final(state) {
                results.insert(out);
            }
            for t in self.transitions(state) {
                let next_pos = if t.label.input.is_epsilon() {
                    pos
                } else if pos < input.len() && *input[pos] == t.label.input {
                    pos + 1
                } else {
                    continue;
                };
                let next_out = trie.push(out, &t.label.output);
                if trie.len(next_out) > max_output {
                    continue;
                }
                let config = (t.target, next_pos, next_out);
                if seen.insert(config) {
                    stack.push(config);
                }
            }
        }

        let mut outputs: Vec<Vec<Symbol>> = results.into_iter().map(|n| trie.spell(n)).collect();
        outputs.sort();
        outputs
    }

    /// Every pair in the relation whose sides are both at most `max_side_len`
    /// symbols long.
    pub fn enumerate(&self, max_side_len: usize) -> BTreeSet<StringPair> {
        // only states on a path to a final state can contribute
        let machine = self.trim();
        let mut inputs = StringTrie::new();
        let mut outputs = StringTrie::new();
        let root = (machine.start(), StringTrie::ROOT, StringTrie::ROOT);
        let mut seen: HashSet<(StateId, usize, usize)> = HashSet::from([root]);
        let mut stack = vec![root];
        let mut found: BTreeSet<(usize, usize)> = BTreeSet::new();

        while let Some((state, i, o)) = stack.pop() {
            if machine.is_final(state) {
                found.insert((i, o));
            }
            for t in machine.transitions(state) {
                let ni = inputs.push(i, &t.label.input);
                let no = outputs.push(o, &t.label.output);
                if inputs.len(ni) > max_side_len || outputs.len(no) > max_side_len {
                    continue;
                }
                let config = (t.target, ni, no);
                if seen.insert(config) {
                    stack.push(config);
                }
            }
        }

        found
            .into_iter()
            .map(|(i, o)| StringPair::new(inputs.spell(i), outputs.spell(o)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fst::PairLabel;
    use crate::symbol::{chars, format_symbols, parse_symbols};

    fn words(v: Vec<Vec<Symbol>>) -> Vec<String> {
        v.iter().map(|s| format_symbols(s)).collect()
    }

    #[test]
    fn lookup_sorted_and_deduplicated() {
        let a = Transducer::string_pair(&chars("x"), &chars("b"));
        let b = Transducer::string_pair(&chars("x"), &parse_symbols("<T>").unwrap());
        let c = Transducer::string_pair(&chars("x"), &chars("a"));
        let t = Transducer::union_all([&a, &b, &c, &a]);
        assert_eq!(words(t.lookup(&chars("x"))), vec!["a", "b", "<T>"]);
        assert!(t.lookup(&chars("y")).is_empty());
        assert!(t.lookup(&chars("")).is_empty());
    }

    #[test]
    fn terminates_on_epsilon_cycles() {
        let mut t = Transducer::epsilon();
        let s = t.add_state();
        t.add_transition(0, PairLabel::epsilon(), s);
        t.add_transition(s, PairLabel::epsilon(), 0);
        t.add_transition(s, PairLabel::identity(Symbol::Char('a')), s);
        assert_eq!(words(t.lookup(&chars("aa"))), vec!["aa"]);

        // an epsilon-input loop that emits output yields outputs up to the cap
        let mut g = Transducer::epsilon();
        g.add_transition(0, PairLabel::new(Symbol::Epsilon, Symbol::Char('z')), 0);
        let outs = g.lookup_bounded(&[], 3);
        assert_eq!(words(outs), vec!["", "z", "zz", "zzz"]);
    }

    #[test]
    fn enumerate_handles_cycles() {
        let mut t = Transducer::epsilon();
        t.add_transition(0, PairLabel::epsilon(), 0);
        t.add_transition(0, PairLabel::new(Symbol::Char('a'), Symbol::Epsilon), 0);
        let got: Vec<String> = t.enumerate(2).iter().map(|p| format_symbols(&p.analysis)).collect();
        assert_eq!(got, vec!["", "a", "aa"]);
    }
}
