//! Line-oriented text form of a transducer.
//!
//! ```text
//! FST <state_count> <start>
//! F <id>
//! T <from> <in> <out> <to>
//! ```
//!
//! Symbols are written as `<TAG>`, a single character, or `@0@` for epsilon.
//! A character symbol may be a space, so transition lines are split by
//! position rather than on whitespace.

use std::fmt::Write as _;

use thiserror::Error;

use super::{PairLabel, Transducer};
use crate::symbol::{is_valid_tag_name, Symbol};

const EPSILON_TEXT: &str = "@0@";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseFstError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `FST <state_count> <start>` header")]
    MissingHeader,
    #[error("line {line}: state {state} out of range (state count {count})")]
    StateOutOfRange { line: usize, state: usize, count: usize },
}

fn render(sym: &Symbol, out: &mut String) {
    match sym {
        Symbol::Epsilon => out.push_str(EPSILON_TEXT),
        other => write!(out, "{other}").unwrap(),
    }
}

impl Transducer {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "FST {} {}", self.state_count(), self.start()).unwrap();
        for f in self.finals() {
            writeln!(out, "F {f}").unwrap();
        }
        for (from, label, to) in self.all_transitions() {
            write!(out, "T {from} ").unwrap();
            render(&label.input, &mut out);
            out.push(' ');
            render(&label.output, &mut out);
            writeln!(out, " {to}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Transducer, ParseFstError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty());

        let (hline, header) = lines.next().ok_or(ParseFstError::MissingHeader)?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (count, start) = match fields.as_slice() {
            ["FST", n, s] => (number(n, hline)?, number(s, hline)?),
            _ => return Err(ParseFstError::MissingHeader),
        };
        if count == 0 || start >= count {
            return Err(ParseFstError::StateOutOfRange {
                line: hline,
                state: start,
                count,
            });
        }

        let mut t = Transducer::empty();
        for _ in 1..count {
            t.add_state();
        }
        t.set_start(start);
        let check = |state: usize, line: usize| {
            if state < count {
                Ok(state)
            } else {
                Err(ParseFstError::StateOutOfRange { line, state, count })
            }
        };

        for (line, content) in lines {
            if let Some(rest) = content.strip_prefix("F ") {
                let f = check(number(rest.trim(), line)?, line)?;
                t.set_final(f, true);
            } else if let Some(rest) = content.strip_prefix("T ") {
                let mut cur = Cursor { rest, line };
                let from = check(number(cur.field()?, line)?, line)?;
                let input = cur.symbol()?;
                let output = cur.symbol()?;
                let to = check(number(cur.rest.trim_end(), line)?, line)?;
                t.add_transition(from, PairLabel::new(input, output), to);
            } else {
                return Err(ParseFstError::Syntax {
                    line,
                    message: format!("unrecognized line {content:?}"),
                });
            }
        }
        Ok(t)
    }
}

fn number(s: &str, line: usize) -> Result<usize, ParseFstError> {
    s.parse().map_err(|_| ParseFstError::Syntax {
        line,
        message: format!("expected a state number, found {s:?}"),
    })
}

struct Cursor<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, message: &str) -> ParseFstError {
        ParseFstError::Syntax {
            line: self.line,
            message: message.to_string(),
        }
    }

    /// Consumes a space-terminated field.
    fn field(&mut self) -> Result<&'a str, ParseFstError> {
        let end = self.rest.find(' ').ok_or_else(|| self.error("truncated transition"))?;
        let f = &self.rest[..end];
        self.rest = &self.rest[end + 1..];
        Ok(f)
    }

    /// Consumes one rendered symbol plus its trailing space.
    fn symbol(&mut self) -> Result<Symbol, ParseFstError> {
        let rest = self.rest;
        let (sym, used) = if rest.starts_with("@0@ ") {
            (Symbol::Epsilon, EPSILON_TEXT.len())
        } else if let Some(tag) = rest
            .strip_prefix('<')
            .and_then(|r| r.find('>').map(|end| &r[..end]))
            .filter(|name| is_valid_tag_name(name))
        {
            (Symbol::tag(tag).expect("validated"), tag.len() + 2)
        } else {
            let c = rest.chars().next().ok_or_else(|| self.error("missing symbol"))?;
            (Symbol::Char(c), c.len_utf8())
        };
        if !rest[used..].starts_with(' ') {
            return Err(self.error("symbol must be followed by a space"));
        }
        self.rest = &rest[used + 1..];
        Ok(sym)
    }
}
