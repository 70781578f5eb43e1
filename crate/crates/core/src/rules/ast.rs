use std::fmt;

use crate::symbol::Symbol;

/// Expression tree of one `.kfst` definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AstNode {
    /// `analysis:surface`, sides aligned left with epsilon padding.
    PairLiteral {
        analysis: Vec<Symbol>,
        surface: Vec<Symbol>,
    },
    /// A bare string, tag, or `<>`.
    Identity(Vec<Symbol>),
    VarRef(String),
    Concat(Vec<AstNode>),
    Union(Vec<AstNode>),
    Star(Box<AstNode>),
    Plus(Box<AstNode>),
    Optional(Box<AstNode>),
    Compose(Box<AstNode>, Box<AstNode>),
}

impl AstNode {
    fn precedence(&self) -> u8 {
        match self {
            AstNode::Compose(..) => 0,
            AstNode::Union(_) => 1,
            AstNode::Concat(_) => 2,
            AstNode::Star(_) | AstNode::Plus(_) | AstNode::Optional(_) => 3,
            AstNode::PairLiteral { .. } | AstNode::Identity(_) | AstNode::VarRef(_) => 4,
        }
    }
}

/// Writes one side of a literal: `<>`, `<TAG>`, a bare run, or a quoted
/// string when the characters need it.
fn write_side(f: &mut fmt::Formatter<'_>, side: &[Symbol]) -> fmt::Result {
    match side {
        [] => write!(f, "<>"),
        [Symbol::Tag(name)] => write!(f, "<{name}>"),
        syms => {
            let text: String = syms.iter().filter_map(Symbol::as_char).collect();
            let bare = !text.is_empty()
                && text
                    .chars()
                    .all(|c| !c.is_whitespace() && !"$<>:|()*+?=%\"\\#{}".contains(c));
            if bare {
                write!(f, "{text}")
            } else {
                write!(f, "\"")?;
                for c in text.chars() {
                    if c == '"' || c == '\\' {
                        write!(f, "\\")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "\"")
            }
        }
    }
}

/// Renders `child` at a position that needs at least `min` precedence.
fn write_child(f: &mut fmt::Formatter<'_>, child: &AstNode, min: u8) -> fmt::Result {
    if child.precedence() < min {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for AstNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AstNode::PairLiteral { analysis, surface } => {
                write_side(f, analysis)?;
                write!(f, ":")?;
                write_side(f, surface)
            }
            AstNode::Identity(syms) => write_side(f, syms),
            AstNode::VarRef(name) => write!(f, "${name}$"),
            AstNode::Concat(items) => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write_child(f, item, 3)?;
                }
                Ok(())
            }
            AstNode::Union(items) => {
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write_child(f, item, 2)?;
                }
                Ok(())
            }
            AstNode::Star(c) => {
                write_child(f, c, 3)?;
                write!(f, "*")
            }
            AstNode::Plus(c) => {
                write_child(f, c, 3)?;
                write!(f, "+")
            }
            AstNode::Optional(c) => {
                write_child(f, c, 3)?;
                write!(f, "?")
            }
            AstNode::Compose(l, r) => {
                write_child(f, l, 0)?;
                write!(f, " || ")?;
                write_child(f, r, 1)
            }
        }
    }
}
