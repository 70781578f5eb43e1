//! Sorani Kurdish morphology.
//!
//! [`oracle`] inflects words directly from feature bundles. [`Grammar`] is
//! the compiled transducer built from the shipped `.kfst` grammar and a
//! lexicon, and [`analyses_agree`] cross-checks the two.

pub mod agree;
pub mod analysis;
pub mod features;
pub mod golden;
pub mod oracle;
pub mod tags;

use thiserror::Error;

pub use agree::{analyses_agree, AgreementReport, Disagreement};
pub use features::{
    AdverbStrategy, Degree, FeatureError, IzafaKind, NounFeatures, NounForm, Number, Person, PersonNumber, Tense,
    VerbFeatures,
};
pub use oracle::{
    apply_phonology, conjugate_verb, form_adverb, grade_adjective, inflect_adjective_phrase, inflect_noun,
};
pub use tags::{TagInfo, TagSet};

use crate::fst::Transducer;
use crate::lexicon::{ends_in_vowel, entry_to_fst, parse_lexicon, Lexicon, LexiconError, PartOfSpeech};
use crate::rules::{compile_source, Environment, RuleError, RuleSource};
use crate::symbol::{chars, format_symbols, parse_symbols, SymbolError};

/// The shipped grammar source.
pub const GRAMMAR_SOURCE: &str = include_str!("../../data/sorani.kfst");
/// The shipped seed lexicon.
pub const SEED_LEXICON: &str = include_str!("../../data/seed.tsv");
/// Golden noun forms: lemma, form, number, expected.
pub const TABLE1: &str = include_str!("../../data/table1.tsv");
/// Golden adjective phrases: noun, adjective, izafa, form, number, expected.
pub const TABLE2: &str = include_str!("../../data/table2.tsv");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrammarError {
    #[error("grammar: {0}")]
    Rules(#[from] RuleError),
    #[error("lexicon: {0}")]
    Lexicon(#[from] LexiconError),
}

/// Base groups the lexicon exports, by variable name.
fn lexicon_groups(lex: &Lexicon) -> Result<Vec<(String, Vec<Transducer>)>, LexiconError> {
    let mut groups: Vec<(&str, Vec<(String, Transducer)>)> = ["noun", "adj", "adv", "past-tr", "past-in", "pres"]
        .into_iter()
        .map(|g| (g, Vec::new()))
        .collect();
    let mut push = |name: &str, stem: &str, m: Transducer| {
        let slot = groups.iter_mut().find(|(g, _)| *g == name).expect("known group");
        slot.1.push((stem.to_string(), m));
    };
    for entry in lex.entries() {
        let mut machines = entry_to_fst(entry).into_iter();
        match (&entry.verb, entry.pos) {
            (Some(v), _) => {
                let past = machines.next().expect("verbs have a past machine");
                let present = machines.next().expect("verbs have a present machine");
                push(if v.transitive { "past-tr" } else { "past-in" }, &v.past, past);
                push("pres", &v.present, present);
            }
            (None, pos) => {
                let group = match pos {
                    PartOfSpeech::Noun => "noun",
                    PartOfSpeech::Adjective => "adj",
                    _ => "adv",
                };
                push(group, &entry.lemma, machines.next().expect("one machine"));
            }
        }
    }
    let mut out = Vec::new();
    for (group, members) in groups {
        let (mut vowel, mut consonant) = (Vec::new(), Vec::new());
        for (stem, m) in &members {
            if ends_in_vowel(stem)? {
                vowel.push(m.clone());
            } else {
                consonant.push(m.clone());
            }
        }
        out.push((group.to_string(), members.into_iter().map(|(_, m)| m).collect()));
        out.push((format!("{group}-v"), vowel));
        out.push((format!("{group}-c"), consonant));
    }
    Ok(out)
}

/// Variables a grammar can reference: `$noun$`, `$adj$`, `$adv$`,
/// `$past-tr$`, `$past-in$` and `$pres$`, each with `-v` and `-c` variants
/// for vowel-final and consonant-final stems.
pub fn lexicon_environment(lex: &Lexicon) -> Result<Environment, LexiconError> {
    let mut env = Environment::new();
    for (name, machines) in lexicon_groups(lex)? {
        let m = if machines.is_empty() {
            Transducer::empty()
        } else {
            Transducer::union_all(&machines)
        };
        env.define(&name, m).expect("group names are distinct");
    }
    Ok(env)
}

/// Compiles `source` against the lexicon. The result maps analysis strings
/// to surface forms.
pub fn build_grammar_fst(lex: &Lexicon, source: &RuleSource) -> Result<Transducer, GrammarError> {
    Ok(compile_source(source, lexicon_environment(lex)?)?)
}

/// A compiled grammar: generation and analysis machines plus the lexicon
/// they were built from.
#[derive(Debug, Clone)]
pub struct Grammar {
    lexicon: Lexicon,
    generator: Transducer,
    analyzer: Transducer,
}

impl Grammar {
    pub fn build(lexicon: Lexicon, source: &RuleSource) -> Result<Self, GrammarError> {
        let generator = build_grammar_fst(&lexicon, source)?;
        Ok(Grammar::from_parts(lexicon, generator))
    }

    pub fn from_parts(lexicon: Lexicon, generator: Transducer) -> Self {
        let analyzer = generator.invert();
        Grammar {
            lexicon,
            generator,
            analyzer,
        }
    }

    /// The shipped grammar over the shipped seed lexicon.
    pub fn seed() -> Result<Self, GrammarError> {
        Grammar::build(
            parse_lexicon(SEED_LEXICON)?,
            &RuleSource::new("sorani.kfst", GRAMMAR_SOURCE),
        )
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn generator(&self) -> &Transducer {
        &self.generator
    }

    pub fn analyzer(&self) -> &Transducer {
        &self.analyzer
    }

    /// Sorted analyses of a surface form.
    pub fn analyze(&self, surface: &str) -> Vec<String> {
        self.analyzer
            .lookup(&chars(surface))
            .iter()
            .map(|o| format_symbols(o))
            .collect()
    }

    /// Sorted surface forms of an analysis string.
    pub fn generate(&self, analysis: &str) -> Result<Vec<String>, SymbolError> {
        let input = parse_symbols(analysis)?;
        Ok(self
            .generator
            .lookup(&input)
            .iter()
            .map(|o| format_symbols(o))
            .collect())
    }
}
