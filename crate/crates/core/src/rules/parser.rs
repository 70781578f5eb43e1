use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::ast::AstNode;
use super::lexer::{Token, TokenKind};
use super::rewrite::{Context, RewriteRule};
use super::RuleError;
use crate::symbol::{chars, Symbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub expr: AstNode,
    pub line: usize,
}

/// A parsed `.kfst` document.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    pub classes: BTreeMap<String, BTreeSet<char>>,
    pub definitions: Vec<Definition>,
    pub rules: Vec<RewriteRule>,
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    defined: HashSet<String>,
}

/// Parses a whole document. `predefined` names variables supplied by the
/// caller's environment; any other variable must be defined before use.
pub fn parse<'a>(tokens: &[Token], predefined: impl IntoIterator<Item = &'a str>) -> Result<Document, RuleError> {
    let mut p = Parser {
        tokens,
        pos: 0,
        defined: predefined.into_iter().map(str::to_string).collect(),
    };
    p.document()
}

/// Parses a single expression with no variable checking.
pub fn parse_expression(tokens: &[Token]) -> Result<AstNode, RuleError> {
    let mut p = Parser {
        tokens,
        pos: 0,
        defined: HashSet::new(),
    };
    let expr = p.expr_unchecked()?;
    while p.eat(&TokenKind::Newline) {}
    if let Some(t) = p.peek() {
        return Err(p.syntax(t, "trailing input after expression"));
    }
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, at: &Token, message: &str) -> RuleError {
        RuleError::Syntax {
            line: at.line,
            col: at.col,
            message: message.to_string(),
        }
    }

    fn eof(&self) -> RuleError {
        let (line, col) = self.tokens.last().map_or((1, 1), |t| (t.line, t.col));
        RuleError::Syntax {
            line,
            col,
            message: "unexpected end of input".into(),
        }
    }

    fn document(&mut self) -> Result<Document, RuleError> {
        let mut doc = Document::default();
        while let Some(tok) = self.peek() {
            self.pos += 1;
            match &tok.kind {
                TokenKind::Newline => {}
                TokenKind::Class { name, members } => {
                    if doc.classes.contains_key(name) {
                        return Err(RuleError::Redefined {
                            name: name.clone(),
                            line: tok.line,
                        });
                    }
                    doc.classes.insert(name.clone(), members.iter().copied().collect());
                }
                TokenKind::Rule {
                    input,
                    output,
                    left,
                    right,
                    optional,
                } => {
                    let rule = RewriteRule::new(
                        rule_symbol(input, tok)?,
                        rule_symbol(output, tok)?,
                        rule_context(left, &doc.classes, tok)?,
                        rule_context(right, &doc.classes, tok)?,
                        !optional,
                    )
                    .map_err(|e| RuleError::InvalidRule {
                        line: tok.line,
                        message: e.to_string(),
                    })?;
                    doc.rules.push(rule);
                }
                TokenKind::VarDef(name) => {
                    if self.defined.contains(name) {
                        return Err(RuleError::Redefined {
                            name: name.clone(),
                            line: tok.line,
                        });
                    }
                    let expr = self.expr()?;
                    match self.peek() {
                        None => {}
                        Some(t) if t.kind == TokenKind::Newline => self.pos += 1,
                        Some(t) => return Err(self.syntax(t, "expected end of statement")),
                    }
                    self.defined.insert(name.clone());
                    doc.definitions.push(Definition {
                        name: name.clone(),
                        expr,
                        line: tok.line,
                    });
                }
                _ => return Err(self.syntax(tok, "expected a definition, #CLASS or #RULE")),
            }
        }
        Ok(doc)
    }

    fn expr(&mut self) -> Result<AstNode, RuleError> {
        self.compose(true)
    }

    fn expr_unchecked(&mut self) -> Result<AstNode, RuleError> {
        self.compose(false)
    }

    fn compose(&mut self, check: bool) -> Result<AstNode, RuleError> {
        let mut left = self.union(check)?;
        while self.eat(&TokenKind::Compose) {
            let right = self.union(check)?;
            left = AstNode::Compose(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn union(&mut self, check: bool) -> Result<AstNode, RuleError> {
        let mut items = vec![self.concat(check)?];
        while self.eat(&TokenKind::Pipe) {
            items.push(self.concat(check)?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            AstNode::Union(items)
        })
    }

    fn starts_atom(kind: &TokenKind) -> bool {
        matches!(
            kind,
            TokenKind::LParen
                | TokenKind::Var(_)
                | TokenKind::Tag(_)
                | TokenKind::Epsilon
                | TokenKind::Chars(_)
                | TokenKind::Quoted(_)
        )
    }

    fn concat(&mut self, check: bool) -> Result<AstNode, RuleError> {
        let mut items = vec![self.postfix(check)?];
        while self.peek().is_some_and(|t| Self::starts_atom(&t.kind)) {
            items.push(self.postfix(check)?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            AstNode::Concat(items)
        })
    }

    fn postfix(&mut self, check: bool) -> Result<AstNode, RuleError> {
        let mut node = self.atom(check)?;
        loop {
            node = if self.eat(&TokenKind::Star) {
                AstNode::Star(Box::new(node))
            } else if self.eat(&TokenKind::Plus) {
                AstNode::Plus(Box::new(node))
            } else if self.eat(&TokenKind::Question) {
                AstNode::Optional(Box::new(node))
            } else {
                return Ok(node);
            };
        }
    }

    fn side(&mut self) -> Result<Vec<Symbol>, RuleError> {
        let tok = self.peek().ok_or_else(|| self.eof())?;
        let syms = match &tok.kind {
            TokenKind::Chars(s) | TokenKind::Quoted(s) => chars(s),
            TokenKind::Tag(name) => vec![Symbol::tag(name).map_err(|e| self.syntax(tok, &e.to_string()))?],
            TokenKind::Epsilon => Vec::new(),
            _ => return Err(self.syntax(tok, "expected a string, tag or <>")),
        };
        self.pos += 1;
        Ok(syms)
    }

    fn atom(&mut self, check: bool) -> Result<AstNode, RuleError> {
        let tok = self.peek().ok_or_else(|| self.eof())?;
        match &tok.kind {
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.compose(check)?;
                if !self.eat(&TokenKind::RParen) {
                    return Err(match self.peek() {
                        Some(t) => self.syntax(t, "expected ')'"),
                        None => self.eof(),
                    });
                }
                Ok(inner)
            }
            TokenKind::Var(name) => {
                if check && !self.defined.contains(name) {
                    return Err(RuleError::Undefined {
                        name: name.clone(),
                        line: tok.line,
                    });
                }
                self.pos += 1;
                Ok(AstNode::VarRef(name.clone()))
            }
            _ => {
                let analysis = self.side()?;
                if self.eat(&TokenKind::Colon) {
                    let surface = self.side()?;
                    Ok(AstNode::PairLiteral { analysis, surface })
                } else {
                    Ok(AstNode::Identity(analysis))
                }
            }
        }
    }
}

fn rule_symbol(word: &str, tok: &Token) -> Result<Symbol, RuleError> {
    let mut it = word.chars();
    match (it.next(), it.next()) {
        (Some('0'), None) => Ok(Symbol::Epsilon),
        (Some(c), None) => Ok(Symbol::Char(c)),
        _ => Err(RuleError::InvalidRule {
            line: tok.line,
            message: format!("rule target {word:?} must be a single character or 0"),
        }),
    }
}

fn rule_context(word: &str, classes: &BTreeMap<String, BTreeSet<char>>, tok: &Token) -> Result<Context, RuleError> {
    if let Some(set) = classes.get(word) {
        return Ok(Context::Class(set.clone()));
    }
    let mut it = word.chars();
    match (it.next(), it.next()) {
        (Some('#'), None) => Ok(Context::Boundary),
        (Some('*'), None) => Ok(Context::Any),
        (Some(c), None) => Ok(Context::Class(BTreeSet::from([c]))),
        _ => Err(RuleError::UnknownClass {
            name: word.to_string(),
            line: tok.line,
        }),
    }
}
