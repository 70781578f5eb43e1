//! Cross-check of the compiled grammar against the string-level oracle over
//! every feature bundle of every lexicon entry.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::features::{AdverbStrategy, Degree, IzafaKind, NounFeatures, Tense, VerbFeatures};
use super::{analysis, oracle, Grammar, GRAMMAR_SOURCE};
use crate::lexicon::{Lexicon, PartOfSpeech};
use crate::rules::RuleSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The grammar's outputs for the analysis differ from the oracle's.
    Generation,
    /// Some oracle surface form does not analyze back to the analysis.
    Analysis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub category: &'static str,
    pub direction: Direction,
    pub analysis: String,
    pub expected: Vec<String>,
    pub found: Vec<String>,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Generation => write!(
                f,
                "[{}] generate {}: oracle {:?}, grammar {:?}",
                self.category, self.analysis, self.expected, self.found
            ),
            Direction::Analysis => write!(
                f,
                "[{}] analyze {:?}: missing {}, grammar {:?}",
                self.category, self.expected, self.analysis, self.found
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AgreementReport {
    /// Checks run per category. Each bundle counts once per direction.
    pub checks: BTreeMap<&'static str, usize>,
    pub disagreements: Vec<Disagreement>,
}

impl AgreementReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn total_checks(&self) -> usize {
        self.checks.values().sum()
    }

    pub fn checks_in(&self, category: &str) -> usize {
        self.checks.get(category).copied().unwrap_or(0)
    }
}

struct Checker<'g> {
    grammar: &'g Grammar,
    report: AgreementReport,
}

impl Checker<'_> {
    fn check(&mut self, category: &'static str, analysis: String, expected: Vec<String>) {
        *self.report.checks.entry(category).or_default() += 2;
        let generated = self.grammar.generate(&analysis).unwrap_or_default();
        let wanted: BTreeSet<&String> = expected.iter().collect();
        if generated.iter().collect::<BTreeSet<_>>() != wanted {
            self.report.disagreements.push(Disagreement {
                category,
                direction: Direction::Generation,
                analysis: analysis.clone(),
                expected: expected.clone(),
                found: generated,
            });
        }
        for surface in &expected {
            let analyses = self.grammar.analyze(surface);
            if !analyses.contains(&analysis) {
                self.report.disagreements.push(Disagreement {
                    category,
                    direction: Direction::Analysis,
                    analysis: analysis.clone(),
                    expected: vec![surface.clone()],
                    found: analyses,
                });
                break;
            }
        }
    }
}

fn verb_category(f: &VerbFeatures) -> &'static str {
    match (f.tense, f.object.is_some()) {
        (Tense::Past, false) => "past",
        (Tense::Past, true) => "past-object",
        (Tense::Present, _) => "present",
        (Tense::Imperative, _) => "imperative",
    }
}

/// Runs every bundle of every entry of the grammar's lexicon through both
/// the grammar and the oracle.
pub fn check_grammar(grammar: &Grammar) -> AgreementReport {
    let mut c = Checker {
        grammar,
        report: AgreementReport::default(),
    };
    let lex = grammar.lexicon();
    let ok = |r: Result<String, _>| vec![r.expect("lexicon entries are nonempty")];
    let adjectives: Vec<&str> = lex.by_pos(PartOfSpeech::Adjective).map(|e| e.lemma.as_str()).collect();

    for entry in lex.entries() {
        let lemma = entry.lemma.as_str();
        match entry.pos {
            PartOfSpeech::Noun => {
                for f in NounFeatures::all() {
                    c.check(
                        "noun",
                        analysis::noun(lemma, f),
                        ok(oracle::inflect_noun_token(lemma, f)),
                    );
                    for adj in &adjectives {
                        for kind in IzafaKind::ALL {
                            c.check(
                                "izafa",
                                analysis::adjective_phrase(lemma, adj, kind, f),
                                ok(oracle::inflect_adjective_phrase_tokens(lemma, adj, kind, f)),
                            );
                        }
                    }
                }
            }
            PartOfSpeech::Adjective => {
                for d in Degree::ALL {
                    c.check(
                        "adjective-degree",
                        analysis::graded_adjective(lemma, d),
                        ok(oracle::grade_adjective(lemma, d)),
                    );
                }
            }
            PartOfSpeech::Adverb => {
                c.check("adverb", format!("{lemma}<adv>"), vec![lemma.to_string()]);
            }
            PartOfSpeech::Verb => {
                let transitive = entry.verb.as_ref().is_some_and(|v| v.transitive);
                for f in VerbFeatures::all(transitive) {
                    let a = analysis::verb(entry, f).expect("verb entry");
                    c.check(verb_category(&f), a, ok(oracle::conjugate_verb(entry, f)));
                }
            }
        }
        if let Some(strategy) = analysis::adverb_strategy(entry.pos) {
            c.check(
                "adverb",
                analysis::adverb(lemma, entry.pos),
                ok(oracle::form_adverb(lemma, strategy)),
            );
            for tag in ["RA", "DIM"] {
                c.check(
                    "derivation",
                    analysis::derived(lemma, entry.pos, tag),
                    oracle::derive(lemma, tag).expect("nonempty lemma"),
                );
            }
        }
    }
    debug_assert!(AdverbStrategy::ALL.len() == 2);
    c.report
}

/// Builds the shipped grammar over `lex` and checks it against the oracle.
pub fn analyses_agree(lex: &Lexicon) -> AgreementReport {
    let grammar = Grammar::build(lex.clone(), &RuleSource::new("sorani.kfst", GRAMMAR_SOURCE))
        .expect("the shipped grammar compiles against any valid lexicon");
    check_grammar(&grammar)
}
