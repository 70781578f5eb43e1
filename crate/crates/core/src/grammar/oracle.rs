//! Direct string-level inflection. These functions spell out the same
//! morphology as the compiled grammar without going through a transducer,
//! and serve as the reference it is checked against.

use super::features::{
    AdverbStrategy, Degree, FeatureError, IzafaKind, NounFeatures, NounForm, Number, PersonNumber, Tense, VerbFeatures,
};
use super::tags::TagSet;
use crate::lexicon::{is_vowel, LexiconEntry};

/// Preposed demonstrative determiner.
pub const DETERMINER: &str = "em ";

fn ends_vowel(s: &str) -> bool {
    s.chars().last().is_some_and(is_vowel)
}

fn nonempty<'a>(s: &'a str, what: &'static str) -> Result<&'a str, FeatureError> {
    if s.is_empty() {
        Err(FeatureError::Empty(what))
    } else {
        Ok(s)
    }
}

/// Concatenates morphs, inserting `y` wherever a vowel-final morph meets a
/// vowel-initial one. Empty morphs contribute nothing.
pub fn apply_phonology<S: AsRef<str>>(morphs: &[S]) -> String {
    let mut out = String::new();
    for m in morphs.iter().map(AsRef::as_ref).filter(|m| !m.is_empty()) {
        if ends_vowel(&out) && m.chars().next().is_some_and(is_vowel) {
            out.push('y');
        }
        out.push_str(m);
    }
    out
}

/// The nominal suffix for a form and number, chosen by whether the host
/// ends in a vowel. Before phonology.
fn nominal_suffix(after_vowel: bool, f: NounFeatures) -> &'static str {
    use NounForm::*;
    use Number::*;
    match (f.form, f.number, after_vowel) {
        (Absolute, _, _) => "",
        (Indefinite, Singular, false) => "êk",
        (Indefinite, Singular, true) => "yek",
        (Indefinite, Plural, _) => "an",
        (Definite, Singular, false) => "eke",
        (Definite, Singular, true) => "ke",
        (Definite, Plural, false) => "ekan",
        (Definite, Plural, true) => "kan",
        (Demonstrative, Singular, _) => "e",
        (Demonstrative, Plural, _) => "ane",
    }
}

fn with_determiner(form: NounForm, phrase: String) -> String {
    if form == NounForm::Demonstrative {
        format!("{DETERMINER}{phrase}")
    } else {
        phrase
    }
}

/// The suffixed word alone, without a demonstrative determiner.
pub fn inflect_noun_token(lemma: &str, f: NounFeatures) -> Result<String, FeatureError> {
    let lemma = nonempty(lemma, "lemma")?;
    f.validate()?;
    Ok(apply_phonology(&[lemma, nominal_suffix(ends_vowel(lemma), f)]))
}

/// A noun form as a phrase: demonstratives carry the determiner `em`.
pub fn inflect_noun(lemma: &str, f: NounFeatures) -> Result<String, FeatureError> {
    Ok(with_determiner(f.form, inflect_noun_token(lemma, f)?))
}

/// Izafa marker on the noun of a loose construction.
fn loose_izafa_suffix(after_vowel: bool, f: NounFeatures) -> &'static str {
    use NounForm::*;
    use Number::*;
    match (f.form, f.number, after_vowel) {
        (Absolute, _, false) => "î",
        (Absolute, _, true) => "y",
        (Indefinite, Singular, false) => "êki",
        (Indefinite, Singular, true) => "yeki",
        (Indefinite, Plural, _) => "anî",
        (Definite, Singular, false) => "eke",
        (Definite, Singular, true) => "ke",
        (Definite, Plural, false) => "ekanî",
        (Definite, Plural, true) => "kanî",
        (Demonstrative, _, _) => "e",
    }
}

/// The phrase without a demonstrative determiner.
pub fn inflect_adjective_phrase_tokens(
    noun: &str,
    adj: &str,
    kind: IzafaKind,
    f: NounFeatures,
) -> Result<String, FeatureError> {
    let noun = nonempty(noun, "noun")?;
    let adj = nonempty(adj, "adjective")?;
    f.validate()?;
    let (head, modifier) = match kind {
        IzafaKind::Loose => {
            let head = apply_phonology(&[noun, loose_izafa_suffix(ends_vowel(noun), f)]);
            let modifier = match f.form {
                NounForm::Demonstrative => apply_phonology(&[adj, nominal_suffix(ends_vowel(adj), f)]),
                _ => adj.to_string(),
            };
            (head, modifier)
        }
        IzafaKind::Close => (
            apply_phonology(&[noun, "e"]),
            apply_phonology(&[adj, nominal_suffix(ends_vowel(adj), f)]),
        ),
    };
    Ok(format!("{head} {modifier}"))
}

pub fn inflect_adjective_phrase(
    noun: &str,
    adj: &str,
    kind: IzafaKind,
    f: NounFeatures,
) -> Result<String, FeatureError> {
    Ok(with_determiner(
        f.form,
        inflect_adjective_phrase_tokens(noun, adj, kind, f)?,
    ))
}

pub fn grade_adjective(adj: &str, degree: Degree) -> Result<String, FeatureError> {
    let adj = nonempty(adj, "adjective")?;
    let suffix = match degree {
        Degree::Comparative => "tir",
        Degree::Superlative => "tirîn",
    };
    Ok(apply_phonology(&[adj, suffix]))
}

pub fn form_adverb(base: &str, strategy: AdverbStrategy) -> Result<String, FeatureError> {
    let base = nonempty(base, "base")?;
    Ok(match strategy {
        AdverbStrategy::SuffixAne => apply_phonology(&[base, "ane"]),
        AdverbStrategy::PrefixBe => apply_phonology(&["be", base]),
    })
}

/// Every form of `base` suffixed with one allomorph of `tag` (`RA` or
/// `DIM`), sorted and deduplicated.
pub fn derive(base: &str, tag: &str) -> Result<Vec<String>, FeatureError> {
    let base = nonempty(base, "base")?;
    let mut out: Vec<String> = TagSet::standard()
        .allomorphs(tag)
        .iter()
        .map(|a| apply_phonology(&[base, a]))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Drops the initial `i` of a verbal ending after a vowel-final host.
fn elide<'a>(host: &str, ending: &'a str) -> &'a str {
    match ending.strip_prefix('i') {
        Some(rest) if ends_vowel(host) && !rest.is_empty() => rest,
        _ => ending,
    }
}

const POSSESSIVE: [&str; 6] = ["im", "it", "î", "man", "tan", "yan"];
/// Copular person endings; third singular is zero in the past.
const COPULA_PAST: [&str; 6] = ["im", "î", "", "în", "in", "in"];
const COPULA_PRESENT: [&str; 6] = ["im", "î", "e", "în", "in", "in"];

/// Pushes an ending onto the morph list, eliding against the text so far.
fn push_ending(morphs: &mut Vec<String>, ending: &str) {
    let host = morphs.concat();
    morphs.push(elide(&host, ending).to_string());
}

pub fn conjugate_verb(entry: &LexiconEntry, f: VerbFeatures) -> Result<String, FeatureError> {
    let stems = entry.verb.as_ref().ok_or_else(|| FeatureError::NotAVerb {
        lemma: entry.lemma.clone(),
    })?;
    f.validate(stems.transitive)?;
    let mut morphs: Vec<String> = Vec::new();
    let person = |pn: PersonNumber| pn.index();
    match f.tense {
        Tense::Past => {
            if f.negated {
                morphs.push("ne".into());
            }
            morphs.push(stems.past.clone());
            let table = if stems.transitive { &POSSESSIVE } else { &COPULA_PAST };
            push_ending(&mut morphs, table[person(f.subject)]);
            if let Some(obj) = f.object {
                push_ending(&mut morphs, COPULA_PAST[person(obj)]);
            }
        }
        Tense::Present => {
            let prefix = if f.negated {
                "na"
            } else if f.subjunctive {
                "bi"
            } else {
                "de"
            };
            morphs.push(prefix.into());
            morphs.push(stems.present.clone());
            push_ending(&mut morphs, COPULA_PRESENT[person(f.subject)]);
        }
        Tense::Imperative => {
            morphs.push(if f.negated { "me" } else { "bi" }.into());
            morphs.push(stems.present.clone());
            if f.subject.number == Number::Plural {
                push_ending(&mut morphs, "in");
            }
        }
    }
    Ok(apply_phonology(&morphs))
}
