//! Reference noun and adjective-phrase forms shipped with the grammar.

use super::features::{IzafaKind, NounFeatures};
use super::{TABLE1, TABLE2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounCase {
    pub lemma: String,
    pub features: NounFeatures,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhraseCase {
    pub noun: String,
    pub adjective: String,
    pub kind: IzafaKind,
    pub features: NounFeatures,
    pub expected: String,
}

fn rows(text: &str, width: usize) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(move |l| {
            let fields: Vec<&str> = l.split('\t').collect();
            assert_eq!(fields.len(), width, "malformed fixture row {l:?}");
            fields
        })
}

fn features(form: &str, number: &str) -> NounFeatures {
    NounFeatures::new(
        form.parse().expect("fixture form"),
        number.parse().expect("fixture number"),
    )
    .expect("fixture features are valid")
}

pub fn table1() -> Vec<NounCase> {
    rows(TABLE1, 4)
        .map(|f| NounCase {
            lemma: f[0].to_string(),
            features: features(f[1], f[2]),
            expected: f[3].to_string(),
        })
        .collect()
}

pub fn table2() -> Vec<PhraseCase> {
    rows(TABLE2, 6)
        .map(|f| PhraseCase {
            noun: f[0].to_string(),
            adjective: f[1].to_string(),
            kind: f[2].parse().expect("fixture izafa kind"),
            features: features(f[3], f[4]),
            expected: f[5].to_string(),
        })
        .collect()
}
