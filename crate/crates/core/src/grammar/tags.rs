//! Inventory of inflectional morphemes and clitics with their allomorphs.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TagInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub allomorphs: &'static [&'static str],
}

const fn tag(name: &'static str, description: &'static str, allomorphs: &'static [&'static str]) -> TagInfo {
    TagInfo {
        name,
        description,
        allomorphs,
    }
}

static INVENTORY: &[TagInfo] = &[
    tag("1s", "connected possessive pronoun, 1sg", &["im"]),
    tag("2s", "connected possessive pronoun, 2sg", &["it"]),
    tag("3s", "connected possessive pronoun, 3sg", &["î"]),
    tag("1p", "connected possessive pronoun, 1pl", &["man"]),
    tag("2p", "connected possessive pronoun, 2pl", &["tan"]),
    tag("3p", "connected possessive pronoun, 3pl", &["yan"]),
    tag("C1", "copula, 1sg", &["im"]),
    tag("C2", "copula, 2sg", &["î", "ît"]),
    tag("C3", "copula, 3sg", &["heye", "hes", "e"]),
    tag("C4", "copula, 1pl", &["în", "heyn"]),
    tag("C5", "copula, 2pl", &["in", "hen"]),
    tag("C6", "copula, 3pl", &["in", "hen"]),
    tag("IMP", "imperative marker", &["bi", "b"]),
    tag("NMP", "negative imperative", &["me"]),
    tag("NEG", "negative marker", &["ne", "na"]),
    tag("SUB", "subjunctive marker", &["bi"]),
    tag("PL", "plural suffix", &["an", "gel", "ha", "at"]),
    tag("DEF", "definite marker", &["eke"]),
    tag("IND", "indefinite marker", &["êk", "yek"]),
    tag("CON", "progressive marker", &["de", "e"]),
    tag(
        "RA",
        "relative adjective",
        &["î", "y", "în", "yin", "çî", "nok", "ko", "û", "île", "yile", "emenî"],
    ),
    tag("COMP", "comparative marker", &["tir"]),
    tag("SUP", "superlative marker", &["tirîn"]),
    tag("AD", "adverb marker", &["ane", "be", "an"]),
    tag(
        "DIM",
        "diminutive",
        &[
            "çe", "ke", "ik", "ko", "oke", "oł", "ołe", "ołik", "ołke", "ełe", "elûke", "yekołe", "îlane", "île",
            "ûlke", "ûle", "le", "łe",
        ],
    ),
];

/// The morpheme inventory, addressable by tag name.
#[derive(Debug, Clone, Copy)]
pub struct TagSet {
    entries: &'static [TagInfo],
}

impl Default for TagSet {
    fn default() -> Self {
        TagSet::standard()
    }
}

impl TagSet {
    pub fn standard() -> Self {
        TagSet { entries: INVENTORY }
    }

    pub fn entries(&self) -> &'static [TagInfo] {
        self.entries
    }

    pub fn get(&self, name: &str) -> Option<&'static TagInfo> {
        self.entries.iter().find(|t| t.name == name)
    }

    /// Allomorphs of `name`; panics on an unknown tag, which is a programming
    /// error since the inventory is fixed.
    pub fn allomorphs(&self, name: &str) -> &'static [&'static str] {
        self.get(name)
            .unwrap_or_else(|| panic!("unknown tag {name}"))
            .allomorphs
    }
}
