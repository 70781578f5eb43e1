//! Alphabet symbols shared by both sides of a transducer.
//!
//! A symbol is a single Unicode character, a multicharacter tag such as
//! `<DEF>` or `<past-1s>`, or epsilon. The alphabet is open: tags are created
//! on demand and need no registration.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("invalid tag name {0:?}: tags must be nonempty and contain no '<', '>', ':' or whitespace")]
    InvalidTag(String),
    #[error("unterminated tag starting at character {0}")]
    UnterminatedTag(usize),
}

/// One alphabet element.
///
/// The derived ordering puts characters before tags, orders characters by
/// code point and tags by name; this is the order lookup results use.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Char(char),
    Tag(Arc<str>),
    Epsilon,
}

impl Symbol {
    /// Builds a tag symbol, validating the name.
    pub fn tag(name: &str) -> Result<Symbol, SymbolError> {
        if is_valid_tag_name(name) {
            Ok(Symbol::Tag(Arc::from(name)))
        } else {
            Err(SymbolError::InvalidTag(name.to_string()))
        }
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, Symbol::Epsilon)
    }

    pub fn is_char(&self) -> bool {
        matches!(self, Symbol::Char(_))
    }

    pub fn as_char(&self) -> Option<char> {
        match self {
            Symbol::Char(c) => Some(*c),
            _ => None,
        }
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol::Char(c)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Char(c) => write!(f, "{c}"),
            Symbol::Tag(name) => write!(f, "<{name}>"),
            Symbol::Epsilon => Ok(()),
        }
    }
}

pub fn is_valid_tag_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c == '<' || c == '>' || c == ':' || c.is_whitespace())
}

/// Splits a string such as `xward<verb-transitive-past-stem><past-1s>` into
/// symbols. Every `<...>` group becomes one tag, everything else one
/// character symbol each.
pub fn parse_symbols(text: &str) -> Result<Vec<Symbol>, SymbolError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '<' {
            let close = chars[i + 1..]
                .iter()
                .position(|&c| c == '>')
                .ok_or(SymbolError::UnterminatedTag(i))?;
            let name: String = chars[i + 1..i + 1 + close].iter().collect();
            out.push(Symbol::tag(&name)?);
            i += close + 2;
        } else {
            out.push(Symbol::Char(chars[i]));
            i += 1;
        }
    }
    Ok(out)
}

/// Renders symbols back to the string form accepted by [`parse_symbols`].
pub fn format_symbols(symbols: &[Symbol]) -> String {
    symbols.iter().map(|s| s.to_string()).collect()
}

/// Character symbols for every char of `text`.
pub fn chars(text: &str) -> Vec<Symbol> {
    text.chars().map(Symbol::Char).collect()
}
