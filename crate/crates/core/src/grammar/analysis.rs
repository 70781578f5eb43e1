//! Analysis strings for feature bundles, in the grammar's fixed tag order:
//! stem tag, NEG/SUB/IMP/NMP, CON, person-number, object clitic,
//! DEF/IND/DEM with number, COMP/SUP, AD.

use super::features::{AdverbStrategy, Degree, IzafaKind, NounFeatures, NounForm, Number, Person, Tense, VerbFeatures};
use crate::lexicon::{LexiconEntry, PartOfSpeech};

fn nominal_tags(f: NounFeatures) -> String {
    match f.form.tag() {
        Some(t) => format!("<{t}><{}>", f.number.tag()),
        None => String::new(),
    }
}

pub fn noun(lemma: &str, f: NounFeatures) -> String {
    format!("{lemma}<noun>{}", nominal_tags(f))
}

pub fn adjective_phrase(noun: &str, adj: &str, kind: IzafaKind, f: NounFeatures) -> String {
    match kind {
        IzafaKind::Loose => {
            let adj_tags = if f.form == NounForm::Demonstrative {
                nominal_tags(f)
            } else {
                String::new()
            };
            format!("{noun}<noun><IZ-loose>{} {adj}<adj>{adj_tags}", nominal_tags(f))
        }
        IzafaKind::Close => format!("{noun}<noun><IZ-close> {adj}<adj>{}", nominal_tags(f)),
    }
}

pub fn graded_adjective(adj: &str, degree: Degree) -> String {
    format!("{adj}<adj><{}>", degree.tag())
}

/// The strategy each base category uses: adjectives take the suffix,
/// nouns the prefix.
pub fn adverb_strategy(pos: PartOfSpeech) -> Option<AdverbStrategy> {
    match pos {
        PartOfSpeech::Adjective => Some(AdverbStrategy::SuffixAne),
        PartOfSpeech::Noun => Some(AdverbStrategy::PrefixBe),
        _ => None,
    }
}

pub fn adverb(base: &str, pos: PartOfSpeech) -> String {
    format!("{base}<{}><AD>", pos.tag())
}

/// `tag` is `RA` or `DIM`.
pub fn derived(base: &str, pos: PartOfSpeech, tag: &str) -> String {
    format!("{base}<{}><{tag}>", pos.tag())
}

/// `None` when `entry` is not a verb.
pub fn verb(entry: &LexiconEntry, f: VerbFeatures) -> Option<String> {
    let stems = entry.verb.as_ref()?;
    let mut s = match f.tense {
        Tense::Past => format!("{}<{}>", stems.past, entry.past_stem_tag()),
        _ => format!("{}<{}>", stems.present, entry.present_stem_tag()),
    };
    match f.tense {
        Tense::Past => {
            if f.negated {
                s.push_str("<NEG>");
            }
            s.push_str(&format!("<past-{}>", f.subject));
            // the third singular object is phonologically null and unmarked
            if let Some(obj) = f
                .object
                .filter(|o| !(o.person == Person::Third && o.number == Number::Singular))
            {
                s.push_str(&format!("<obj-{obj}>"));
            }
        }
        Tense::Present => {
            s.push_str(if f.negated {
                "<NEG>"
            } else if f.subjunctive {
                "<SUB>"
            } else {
                "<CON>"
            });
            s.push_str(&format!("<pres-{}>", f.subject));
        }
        Tense::Imperative => {
            s.push_str(if f.negated { "<NMP>" } else { "<IMP>" });
            s.push_str(&format!("<imp-{}>", f.subject));
        }
    }
    Some(s)
}
