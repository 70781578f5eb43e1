//! Base-form lexicon: lemmas with part of speech and, for verbs, the past
//! and present stems plus transitivity.
//!
//! The on-disk format is tab-separated, one entry per line:
//!
//! ```text
//! # comment
//! naw	noun
//! xwardin	verb	xward	xo	trans
//! ```

#![allow(clippy::tabs_in_doc_comments)]

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fst::{PairLabel, Transducer};
use crate::symbol::{chars, Symbol};

/// Latin-script Sorani vowels.
pub const VOWELS: [char; 8] = ['a', 'e', 'ê', 'i', 'î', 'o', 'u', 'û'];

pub fn is_vowel(c: char) -> bool {
    VOWELS.contains(&c)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LexiconError {
    #[error("line {line}: expected {expected} fields for {pos}, found {found}")]
    FieldCount {
        line: usize,
        pos: PartOfSpeech,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: duplicate entry {lemma:?} ({pos})")]
    Duplicate {
        line: usize,
        lemma: String,
        pos: PartOfSpeech,
    },
    #[error("line {line}: unknown part of speech {found:?}")]
    UnknownPos { line: usize, found: String },
    #[error("line {line}: empty {field}")]
    Empty { line: usize, field: &'static str },
    #[error("line {line}: transitivity must be `trans` or `intrans`, found {found:?}")]
    Transitivity { line: usize, found: String },
    #[error("empty lemma")]
    EmptyLemma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartOfSpeech {
    Noun,
    Adjective,
    Adverb,
    Verb,
}

impl PartOfSpeech {
    pub fn name(self) -> &'static str {
        match self {
            PartOfSpeech::Noun => "noun",
            PartOfSpeech::Adjective => "adjective",
            PartOfSpeech::Adverb => "adverb",
            PartOfSpeech::Verb => "verb",
        }
    }

    /// Tag appended to the lemma in analysis strings.
    pub fn tag(self) -> &'static str {
        match self {
            PartOfSpeech::Noun => "noun",
            PartOfSpeech::Adjective => "adj",
            PartOfSpeech::Adverb => "adv",
            PartOfSpeech::Verb => "verb",
        }
    }
}

impl fmt::Display for PartOfSpeech {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PartOfSpeech {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "noun" => Ok(PartOfSpeech::Noun),
            "adjective" | "adj" => Ok(PartOfSpeech::Adjective),
            "adverb" | "adv" => Ok(PartOfSpeech::Adverb),
            "verb" => Ok(PartOfSpeech::Verb),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbStems {
    pub past: String,
    pub present: String,
    pub transitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub lemma: String,
    pub pos: PartOfSpeech,
    /// Present exactly when `pos` is [`PartOfSpeech::Verb`].
    pub verb: Option<VerbStems>,
}

impl LexiconEntry {
    pub fn new(lemma: &str, pos: PartOfSpeech) -> Self {
        assert!(pos != PartOfSpeech::Verb, "verbs need stems; use LexiconEntry::verb");
        LexiconEntry {
            lemma: lemma.to_string(),
            pos,
            verb: None,
        }
    }

    pub fn verb(lemma: &str, past: &str, present: &str, transitive: bool) -> Self {
        LexiconEntry {
            lemma: lemma.to_string(),
            pos: PartOfSpeech::Verb,
            verb: Some(VerbStems {
                past: past.to_string(),
                present: present.to_string(),
                transitive,
            }),
        }
    }

    fn transitivity(&self) -> &'static str {
        match &self.verb {
            Some(v) if v.transitive => "transitive",
            _ => "intransitive",
        }
    }

    pub fn past_stem_tag(&self) -> String {
        format!("verb-{}-past-stem", self.transitivity())
    }

    pub fn present_stem_tag(&self) -> String {
        format!("verb-{}-present-stem", self.transitivity())
    }

    /// Checks the infinitive rule: a lemma ending in `in` has the rest as its
    /// past stem. Returns a warning message on mismatch.
    pub fn past_stem_warning(&self) -> Option<String> {
        let v = self.verb.as_ref()?;
        match self.lemma.strip_suffix("in") {
            Some(expected) if expected == v.past => None,
            Some(expected) => Some(format!(
                "{}: past stem {:?} differs from infinitive-derived {:?}",
                self.lemma, v.past, expected
            )),
            None => Some(format!(
                "{}: infinitive does not end in \"in\"; past stem {:?} not validated",
                self.lemma, v.past
            )),
        }
    }
}

/// `true` iff the last character of `word` is a vowel.
pub fn ends_in_vowel(word: &str) -> Result<bool, LexiconError> {
    word.chars().last().map(is_vowel).ok_or(LexiconError::EmptyLemma)
}

/// Identity over `text`, then an epsilon-to-tag emission on the analysis side.
fn stem_machine(text: &str, tag: &str) -> Transducer {
    let mut labels: Vec<PairLabel> = chars(text).into_iter().map(PairLabel::identity).collect();
    labels.push(PairLabel::new(
        Symbol::tag(tag).expect("stem tags are well formed"),
        Symbol::Epsilon,
    ));
    Transducer::from_pairs(&labels)
}

/// The base machines for one entry: a single machine for nouns, adjectives
/// and adverbs; `[past, present]` for verbs.
pub fn entry_to_fst(entry: &LexiconEntry) -> Vec<Transducer> {
    match &entry.verb {
        Some(v) => vec![
            stem_machine(&v.past, &entry.past_stem_tag()),
            stem_machine(&v.present, &entry.present_stem_tag()),
        ],
        None => vec![stem_machine(&entry.lemma, entry.pos.tag())],
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
    index: HashMap<(String, PartOfSpeech), usize>,
    warnings: Vec<String>,
}

impl Lexicon {
    pub fn new() -> Self {
        Lexicon::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = LexiconEntry>) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::new();
        for (i, e) in entries.into_iter().enumerate() {
            lex.insert(e, i + 1)?;
        }
        Ok(lex)
    }

    fn insert(&mut self, entry: LexiconEntry, line: usize) -> Result<(), LexiconError> {
        let key = (entry.lemma.clone(), entry.pos);
        if self.index.contains_key(&key) {
            return Err(LexiconError::Duplicate {
                line,
                lemma: entry.lemma,
                pos: entry.pos,
            });
        }
        if let Some(w) = entry.past_stem_warning() {
            self.warnings.push(format!("line {line}: {w}"));
        }
        for stem in stems(&entry) {
            if stem
                .chars()
                .zip(stem.chars().skip(1))
                .any(|(a, b)| is_vowel(a) && is_vowel(b))
            {
                self.warnings.push(format!(
                    "line {line}: {stem:?} contains adjacent vowels; the y-insertion rule will apply inside it"
                ));
            }
        }
        self.index.insert(key, self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn get(&self, lemma: &str, pos: PartOfSpeech) -> Option<&LexiconEntry> {
        self.index.get(&(lemma.to_string(), pos)).map(|&i| &self.entries[i])
    }

    pub fn by_pos(&self, pos: PartOfSpeech) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.iter().filter(move |e| e.pos == pos)
    }

    /// Validation warnings recorded while loading.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Writes the TSV form read by [`parse_lexicon`].
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.lemma);
            out.push('\t');
            out.push_str(e.pos.name());
            if let Some(v) = &e.verb {
                let t = if v.transitive { "trans" } else { "intrans" };
                out.push_str(&format!("\t{}\t{}\t{}", v.past, v.present, t));
            }
            out.push('\n');
        }
        out
    }
}

fn stems(entry: &LexiconEntry) -> Vec<&str> {
    match &entry.verb {
        Some(v) => vec![v.past.as_str(), v.present.as_str()],
        None => vec![entry.lemma.as_str()],
    }
}

/// Loads a lexicon. Any error rejects the whole document.
pub fn parse_lexicon(text: &str) -> Result<Lexicon, LexiconError> {
    let mut lex = Lexicon::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim_end_matches('\r');
        if content.trim().is_empty() || content.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split('\t').map(str::trim).collect();
        let lemma = fields[0];
        if lemma.is_empty() {
            return Err(LexiconError::Empty { line, field: "lemma" });
        }
        let pos_text = fields.get(1).copied().unwrap_or("");
        let pos: PartOfSpeech = pos_text.parse().map_err(|_| LexiconError::UnknownPos {
            line,
            found: pos_text.to_string(),
        })?;
        let expected = if pos == PartOfSpeech::Verb { 5 } else { 2 };
        if fields.len() != expected {
            return Err(LexiconError::FieldCount {
                line,
                pos,
                expected,
                found: fields.len(),
            });
        }
        let entry = if pos == PartOfSpeech::Verb {
            let (past, present) = (fields[2], fields[3]);
            if past.is_empty() {
                return Err(LexiconError::Empty {
                    line,
                    field: "past stem",
                });
            }
            if present.is_empty() {
                return Err(LexiconError::Empty {
                    line,
                    field: "present stem",
                });
            }
            let transitive = match fields[4] {
                "trans" => true,
                "intrans" => false,
                other => {
                    return Err(LexiconError::Transitivity {
                        line,
                        found: other.to_string(),
                    })
                }
            };
            LexiconEntry::verb(lemma, past, present, transitive)
        } else {
            LexiconEntry::new(lemma, pos)
        };
        lex.insert(entry, line)?;
    }
    Ok(lex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{format_symbols, parse_symbols};

    #[test]
    fn parses_verb_and_noun() {
        let lex = parse_lexicon("# seed\nxwardin\tverb\txward\txo\ttrans\n\nnaw\tnoun\n").unwrap();
        assert_eq!(lex.len(), 2);
        let v = lex.get("xwardin", PartOfSpeech::Verb).unwrap();
        let stems = v.verb.as_ref().unwrap();
        assert_eq!(stems.past, "xward");
        assert_eq!(stems.present, "xo");
        assert!(stems.transitive);
        assert!(lex.warnings().is_empty());
        assert!(lex.get("naw", PartOfSpeech::Noun).unwrap().verb.is_none());
    }

    #[test]
    fn load_errors() {
        assert!(matches!(
            parse_lexicon("naw\tnoun\nnaw\tnoun\n"),
            Err(LexiconError::Duplicate { line: 2, .. })
        ));
        assert!(parse_lexicon("naw\tnoun\nnaw\tadjective\n").is_ok());
        assert!(matches!(
            parse_lexicon("naw\tthing\n"),
            Err(LexiconError::UnknownPos { line: 1, .. })
        ));
        assert!(matches!(
            parse_lexicon("ok\tnoun\nxwardin\tverb\txward\n"),
            Err(LexiconError::FieldCount {
                line: 2,
                expected: 5,
                found: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_lexicon("naw\tnoun\textra\n"),
            Err(LexiconError::FieldCount { expected: 2, .. })
        ));
        assert!(matches!(
            parse_lexicon("\tnoun\n"),
            Err(LexiconError::Empty { field: "lemma", .. })
        ));
        assert!(matches!(
            parse_lexicon("x\tverb\tx\ty\tmaybe\n"),
            Err(LexiconError::Transitivity { .. })
        ));
    }

    #[test]
    fn past_stem_validation_warns() {
        let lex =
            parse_lexicon("girtin\tverb\tgirt\tgir\ttrans\nçûn\tverb\tçû\tç\tintrans\nxwardin\tverb\txwa\txo\ttrans\n")
                .unwrap();
        assert_eq!(lex.warnings().len(), 2);
        assert!(lex.warnings()[0].contains("çûn"));
        assert!(lex.warnings()[1].contains("xwardin"));
    }

    #[test]
    fn vowel_final() {
        assert_eq!(ends_in_vowel("derga"), Ok(true));
        assert_eq!(ends_in_vowel("naw"), Ok(false));
        assert_eq!(ends_in_vowel("gułê"), Ok(true));
        assert_eq!(ends_in_vowel(""), Err(LexiconError::EmptyLemma));
    }

    #[test]
    fn entry_machines() {
        let naw = entry_to_fst(&LexiconEntry::new("naw", PartOfSpeech::Noun));
        assert_eq!(naw.len(), 1);
        let analyses: Vec<String> = naw[0]
            .invert()
            .lookup(&parse_symbols("naw").unwrap())
            .iter()
            .map(|o| format_symbols(o))
            .collect();
        assert_eq!(analyses, ["naw<noun>"]);

        let xw = entry_to_fst(&LexiconEntry::verb("xwardin", "xward", "xo", true));
        let past: Vec<String> = xw[0]
            .invert()
            .lookup(&parse_symbols("xward").unwrap())
            .iter()
            .map(|o| format_symbols(o))
            .collect();
        assert_eq!(past, ["xward<verb-transitive-past-stem>"]);

        let kew = LexiconEntry::verb("kewtin", "kewt", "kew", false);
        assert_eq!(kew.past_stem_tag(), "verb-intransitive-past-stem");
        assert_eq!(kew.present_stem_tag(), "verb-intransitive-present-stem");
    }

    #[test]
    fn tsv_round_trip() {
        let text = "naw\tnoun\nciwan\tadjective\nkewtin\tverb\tkewt\tkew\tintrans\n";
        let lex = parse_lexicon(text).unwrap();
        assert_eq!(lex.to_tsv(), text);
        assert_eq!(parse_lexicon(&lex.to_tsv()).unwrap(), lex);
    }
}
