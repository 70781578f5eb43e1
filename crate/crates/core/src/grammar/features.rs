//! Feature bundles selecting one inflected form.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FeatureError {
    #[error("absolute nouns have no plural form")]
    AbsolutePlural,
    #[error("invalid verb features: {0}")]
    Verb(&'static str),
    #[error("{lemma:?} is not a verb")]
    NotAVerb { lemma: String },
    #[error("empty {0}")]
    Empty(&'static str),
    #[error("unknown {kind} {value:?}")]
    Unknown { kind: &'static str, value: String },
}

fn unknown(kind: &'static str, value: &str) -> FeatureError {
    FeatureError::Unknown {
        kind,
        value: value.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NounForm {
    Absolute,
    Indefinite,
    Definite,
    Demonstrative,
}

impl NounForm {
    pub const ALL: [NounForm; 4] = [
        NounForm::Absolute,
        NounForm::Indefinite,
        NounForm::Definite,
        NounForm::Demonstrative,
    ];

    /// Analysis tag, absent for the absolute form.
    pub fn tag(self) -> Option<&'static str> {
        match self {
            NounForm::Absolute => None,
            NounForm::Indefinite => Some("IND"),
            NounForm::Definite => Some("DEF"),
            NounForm::Demonstrative => Some("DEM"),
        }
    }
}

impl FromStr for NounForm {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, FeatureError> {
        match s {
            "absolute" | "abs" => Ok(NounForm::Absolute),
            "indefinite" | "ind" => Ok(NounForm::Indefinite),
            "definite" | "def" => Ok(NounForm::Definite),
            "demonstrative" | "dem" => Ok(NounForm::Demonstrative),
            _ => Err(unknown("noun form", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Number {
    Singular,
    Plural,
}

impl Number {
    pub const ALL: [Number; 2] = [Number::Singular, Number::Plural];

    pub fn tag(self) -> &'static str {
        match self {
            Number::Singular => "SG",
            Number::Plural => "PL",
        }
    }

    fn letter(self) -> char {
        match self {
            Number::Singular => 's',
            Number::Plural => 'p',
        }
    }
}

impl FromStr for Number {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, FeatureError> {
        match s {
            "sg" | "singular" => Ok(Number::Singular),
            "pl" | "plural" => Ok(Number::Plural),
            _ => Err(unknown("number", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NounFeatures {
    pub form: NounForm,
    pub number: Number,
}

impl NounFeatures {
    pub fn new(form: NounForm, number: Number) -> Result<Self, FeatureError> {
        let f = NounFeatures { form, number };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), FeatureError> {
        if self.form == NounForm::Absolute && self.number == Number::Plural {
            return Err(FeatureError::AbsolutePlural);
        }
        Ok(())
    }

    /// The seven valid bundles, in table order.
    pub fn all() -> impl Iterator<Item = NounFeatures> {
        NounForm::ALL
            .into_iter()
            .flat_map(|form| Number::ALL.into_iter().map(move |number| NounFeatures { form, number }))
            .filter(|f| f.validate().is_ok())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IzafaKind {
    Loose,
    Close,
}

impl IzafaKind {
    pub const ALL: [IzafaKind; 2] = [IzafaKind::Loose, IzafaKind::Close];

    pub fn tag(self) -> &'static str {
        match self {
            IzafaKind::Loose => "IZ-loose",
            IzafaKind::Close => "IZ-close",
        }
    }
}

impl FromStr for IzafaKind {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, FeatureError> {
        match s {
            "loose" => Ok(IzafaKind::Loose),
            "close" => Ok(IzafaKind::Close),
            _ => Err(unknown("izafa kind", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    Comparative,
    Superlative,
}

impl Degree {
    pub const ALL: [Degree; 2] = [Degree::Comparative, Degree::Superlative];

    pub fn tag(self) -> &'static str {
        match self {
            Degree::Comparative => "COMP",
            Degree::Superlative => "SUP",
        }
    }
}

impl FromStr for Degree {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, FeatureError> {
        match s {
            "comparative" | "comp" => Ok(Degree::Comparative),
            "superlative" | "sup" => Ok(Degree::Superlative),
            _ => Err(unknown("degree", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdverbStrategy {
    SuffixAne,
    PrefixBe,
}

impl AdverbStrategy {
    pub const ALL: [AdverbStrategy; 2] = [AdverbStrategy::SuffixAne, AdverbStrategy::PrefixBe];
}

impl FromStr for AdverbStrategy {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, FeatureError> {
        match s {
            "suffix-ane" | "suffix_ane" | "ane" => Ok(AdverbStrategy::SuffixAne),
            "prefix-be" | "prefix_be" | "be" => Ok(AdverbStrategy::PrefixBe),
            _ => Err(unknown("adverb strategy", s)),
        }
    }
}

/// Grammatical person, 1 to 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Person {
    First,
    Second,
    Third,
}

impl Person {
    pub const ALL: [Person; 3] = [Person::First, Person::Second, Person::Third];

    pub fn from_number(n: u8) -> Option<Person> {
        match n {
            1 => Some(Person::First),
            2 => Some(Person::Second),
            3 => Some(Person::Third),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PersonNumber {
    pub person: Person,
    pub number: Number,
}

impl PersonNumber {
    pub fn new(person: Person, number: Number) -> Self {
        PersonNumber { person, number }
    }

    pub fn all() -> impl Iterator<Item = PersonNumber> {
        Number::ALL
            .into_iter()
            .flat_map(|n| Person::ALL.into_iter().map(move |p| PersonNumber::new(p, n)))
    }

    /// Position 0..6 in the order 1s 2s 3s 1p 2p 3p.
    pub fn index(self) -> usize {
        let n = match self.number {
            Number::Singular => 0,
            Number::Plural => 3,
        };
        n + self.person as usize
    }
}

impl fmt::Display for PersonNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.person.number(), self.number.letter())
    }
}

impl FromStr for PersonNumber {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, FeatureError> {
        let mut it = s.chars();
        let (Some(p), Some(n), None) = (it.next(), it.next(), it.next()) else {
            return Err(unknown("person-number", s));
        };
        let person = p
            .to_digit(10)
            .and_then(|d| Person::from_number(d as u8))
            .ok_or_else(|| unknown("person-number", s))?;
        let number = match n {
            's' => Number::Singular,
            'p' => Number::Plural,
            _ => return Err(unknown("person-number", s)),
        };
        Ok(PersonNumber { person, number })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tense {
    Past,
    Present,
    Imperative,
}

impl FromStr for Tense {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, FeatureError> {
        match s {
            "past" => Ok(Tense::Past),
            "present" => Ok(Tense::Present),
            "imperative" => Ok(Tense::Imperative),
            _ => Err(unknown("tense", s)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VerbFeatures {
    pub tense: Tense,
    pub subject: PersonNumber,
    pub negated: bool,
    pub progressive: bool,
    pub subjunctive: bool,
    pub object: Option<PersonNumber>,
}

impl VerbFeatures {
    pub fn past(subject: PersonNumber) -> Self {
        VerbFeatures {
            tense: Tense::Past,
            subject,
            negated: false,
            progressive: false,
            subjunctive: false,
            object: None,
        }
    }

    pub fn present(subject: PersonNumber) -> Self {
        VerbFeatures {
            tense: Tense::Present,
            progressive: true,
            ..VerbFeatures::past(subject)
        }
    }

    pub fn imperative(number: Number) -> Self {
        VerbFeatures {
            tense: Tense::Imperative,
            ..VerbFeatures::past(PersonNumber::new(Person::Second, number))
        }
    }

    pub fn negated(self) -> Self {
        VerbFeatures { negated: true, ..self }
    }

    pub fn with_object(self, object: PersonNumber) -> Self {
        VerbFeatures {
            object: Some(object),
            ..self
        }
    }

    /// Checks the feature combination against a verb of the given
    /// transitivity.
    pub fn validate(&self, transitive: bool) -> Result<(), FeatureError> {
        let err = |m| Err(FeatureError::Verb(m));
        if self.progressive && self.subjunctive {
            return err("progressive and subjunctive are mutually exclusive");
        }
        if self.object.is_some() && !(transitive && self.tense == Tense::Past) {
            return err("an object clitic needs a transitive verb in the past");
        }
        match self.tense {
            Tense::Past if self.progressive || self.subjunctive => {
                err("progressive and subjunctive are present-tense features")
            }
            Tense::Imperative if self.subject.person != Person::Second => err("imperatives are second person"),
            Tense::Imperative if self.progressive || self.subjunctive => {
                err("imperatives take neither progressive nor subjunctive")
            }
            Tense::Present if self.negated && self.subjunctive => err("negation and subjunctive share one slot"),
            Tense::Present if !(self.negated || self.progressive || self.subjunctive) => {
                err("a present form needs a negative, progressive or subjunctive prefix")
            }
            _ => Ok(()),
        }
    }

    /// Every valid bundle for a verb of the given transitivity: past forms
    /// (with object clitics when transitive), present forms and imperatives.
    pub fn all(transitive: bool) -> Vec<VerbFeatures> {
        let mut out = Vec::new();
        for subject in PersonNumber::all() {
            for negated in [false, true] {
                let base = VerbFeatures {
                    negated,
                    ..VerbFeatures::past(subject)
                };
                out.push(base);
                if transitive {
                    out.extend(PersonNumber::all().map(|o| base.with_object(o)));
                }
            }
            let present = VerbFeatures::present(subject);
            out.push(present);
            out.push(VerbFeatures {
                progressive: false,
                ..present.negated()
            });
            out.push(VerbFeatures {
                progressive: false,
                subjunctive: true,
                ..present
            });
        }
        for number in Number::ALL {
            out.push(VerbFeatures::imperative(number));
            out.push(VerbFeatures::imperative(number).negated());
        }
        debug_assert!(out.iter().all(|f| f.validate(transitive).is_ok()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noun_grid_has_seven_cells() {
        assert_eq!(NounFeatures::all().count(), 7);
        assert_eq!(
            NounFeatures::new(NounForm::Absolute, Number::Plural),
            Err(FeatureError::AbsolutePlural)
        );
    }

    #[test]
    fn person_number_text() {
        for pn in PersonNumber::all() {
            assert_eq!(pn.to_string().parse::<PersonNumber>().unwrap(), pn);
        }
        assert_eq!(
            PersonNumber::all().map(|p| p.index()).collect::<Vec<_>>(),
            [0, 1, 2, 3, 4, 5]
        );
        assert!("4s".parse::<PersonNumber>().is_err());
        assert!("1x".parse::<PersonNumber>().is_err());
        assert!("1sg".parse::<PersonNumber>().is_err());
    }

    #[test]
    fn verb_validation() {
        let s1 = PersonNumber::new(Person::First, Number::Singular);
        assert!(VerbFeatures::past(s1).validate(false).is_ok());
        assert!(VerbFeatures::past(s1).with_object(s1).validate(false).is_err());
        assert!(VerbFeatures::past(s1).with_object(s1).validate(true).is_ok());
        let imp = VerbFeatures {
            subject: s1,
            ..VerbFeatures::imperative(Number::Singular)
        };
        assert!(imp.validate(true).is_err());
        let both = VerbFeatures {
            subjunctive: true,
            ..VerbFeatures::present(s1)
        };
        assert!(both.validate(true).is_err());
        let bare = VerbFeatures {
            progressive: false,
            ..VerbFeatures::present(s1)
        };
        assert!(bare.validate(true).is_err());
    }

    #[test]
    fn verb_grid_sizes() {
        // past 12 (+72 with objects), present 18, imperative 4
        assert_eq!(VerbFeatures::all(false).len(), 12 + 18 + 4);
        assert_eq!(VerbFeatures::all(true).len(), 12 + 72 + 18 + 4);
    }
}
