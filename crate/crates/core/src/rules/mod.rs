//! The `.kfst` transducer specification language.
//!
//! A document is a sequence of statements:
//!
//! ```text
//! % comment
//! #CLASS VOWEL = { a e ê i î o u û }
//! $suffix$ = <DEF>:eke | <IND>:êk
//! $ROOT$ = $noun$ $suffix$?
//! #RULE 0 -> y / VOWEL _ VOWEL
//! ```
//!
//! Expressions use juxtaposition for concatenation, `|` for union, `||` for
//! composition and the postfix operators `*`, `+` and `?`. A literal is a
//! character run, a quoted string, a `<TAG>`, or `<>` (epsilon); `a:b` pairs
//! an analysis side with a surface side. `$ROOT$` names the machine the
//! document compiles to, and every `#RULE` is composed onto its surface side
//! in document order.

mod ast;
mod lexer;
mod parser;
mod rewrite;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

pub use ast::AstNode;
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_expression, Definition, Document};
pub use rewrite::{compile_rewrite, Context, RewriteError, RewriteRule};

use crate::fst::Transducer;
use crate::symbol::Symbol;

pub const ROOT: &str = "ROOT";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("line {line}: {message}")]
    Lex { line: usize, message: String },
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("line {line}: variable ${name}$ used before definition")]
    Undefined { name: String, line: usize },
    #[error("line {line}: ${name}$ is already defined")]
    Redefined { name: String, line: usize },
    #[error("line {line}: unknown symbol class {name:?}")]
    UnknownClass { name: String, line: usize },
    #[error("line {line}: invalid rule: {message}")]
    InvalidRule { line: usize, message: String },
    #[error("unresolved variable ${0}$")]
    Unresolved(String),
    #[error("document does not define $ROOT$")]
    MissingRoot,
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("{name}: {inner}")]
    InSource { name: String, inner: Box<RuleError> },
}

/// A named `.kfst` document.
#[derive(Debug, Clone)]
pub struct RuleSource {
    pub name: String,
    pub text: String,
}

impl RuleSource {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        RuleSource {
            name: name.into(),
            text: text.into(),
        }
    }
}

/// Variables and symbol classes visible while compiling.
#[derive(Debug, Clone, Default)]
pub struct Environment {
    variables: HashMap<String, Transducer>,
    classes: BTreeMap<String, BTreeSet<char>>,
}

impl Environment {
    pub fn new() -> Self {
        Environment::default()
    }

    /// Binds `name`; a name can be bound only once.
    pub fn define(&mut self, name: &str, machine: Transducer) -> Result<(), RuleError> {
        if self.variables.contains_key(name) {
            return Err(RuleError::Redefined {
                name: name.to_string(),
                line: 0,
            });
        }
        self.variables.insert(name.to_string(), machine);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Transducer> {
        self.variables.get(name)
    }

    pub fn variable_names(&self) -> impl Iterator<Item = &str> {
        self.variables.keys().map(String::as_str)
    }

    pub fn class(&self, name: &str) -> Option<&BTreeSet<char>> {
        self.classes.get(name)
    }
}

/// Maps an expression onto transducer operations.
pub fn compile(ast: &AstNode, env: &Environment) -> Result<Transducer, RuleError> {
    Ok(match ast {
        AstNode::PairLiteral { analysis, surface } => Transducer::string_pair(analysis, surface),
        AstNode::Identity(symbols) => Transducer::identity(symbols),
        AstNode::VarRef(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| RuleError::Unresolved(name.clone()))?,
        AstNode::Concat(items) => {
            let mut acc: Option<Transducer> = None;
            for item in items {
                let m = compile(item, env)?;
                acc = Some(match acc {
                    None => m,
                    Some(a) => a.concat(&m),
                });
            }
            acc.unwrap_or_else(Transducer::epsilon)
        }
        AstNode::Union(items) => {
            let machines = items.iter().map(|i| compile(i, env)).collect::<Result<Vec<_>, _>>()?;
            Transducer::union_all(&machines)
        }
        AstNode::Star(c) => compile(c, env)?.star(),
        AstNode::Plus(c) => compile(c, env)?.plus(),
        AstNode::Optional(c) => compile(c, env)?.optional(),
        AstNode::Compose(l, r) => compile(l, env)?.compose(&compile(r, env)?).trim(),
    })
}

/// Compiles every definition into `env`, then returns `$ROOT$` with the
/// document's rewrite rules composed onto it.
pub fn compile_document(doc: &Document, env: &mut Environment) -> Result<Transducer, RuleError> {
    for (name, members) in &doc.classes {
        env.classes.insert(name.clone(), members.clone());
    }
    for def in &doc.definitions {
        let machine = compile(&def.expr, env)?.trim();
        env.define(&def.name, machine).map_err(|_| RuleError::Redefined {
            name: def.name.clone(),
            line: def.line,
        })?;
    }
    let mut root = env.get(ROOT).cloned().ok_or(RuleError::MissingRoot)?;
    if doc.rules.is_empty() {
        return Ok(root);
    }
    let mut alphabet: BTreeSet<char> = root.output_alphabet().iter().filter_map(Symbol::as_char).collect();
    for members in doc.classes.values() {
        alphabet.extend(members);
    }
    for rule in &doc.rules {
        let rewrite = compile_rewrite(rule, &alphabet)?;
        root = root.compose(&rewrite).trim();
    }
    Ok(root)
}

/// Tokenizes, parses and compiles `source` against `env`.
pub fn compile_source(source: &RuleSource, mut env: Environment) -> Result<Transducer, RuleError> {
    let located = |e: RuleError| RuleError::InSource {
        name: source.name.clone(),
        inner: Box::new(e),
    };
    let tokens = tokenize(&source.text).map_err(located)?;
    let names: Vec<String> = env.variable_names().map(str::to_string).collect();
    let doc = parse(&tokens, names.iter().map(String::as_str)).map_err(located)?;
    compile_document(&doc, &mut env).map_err(located)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::fst::StringPair;
    use crate::symbol::{chars, format_symbols, parse_symbols};

    fn machine(src: &str) -> Transducer {
        compile(&parse_expression(&tokenize(src).unwrap()).unwrap(), &Environment::new()).unwrap()
    }

    fn pair(a: &str, s: &str) -> StringPair {
        StringPair::new(parse_symbols(a).unwrap(), parse_symbols(s).unwrap())
    }

    #[test]
    fn identity_literal() {
        assert_eq!(machine("naw").enumerate(5), BTreeSet::from([pair("naw", "naw")]));
    }

    #[test]
    fn tag_allomorph_union() {
        let t = machine("<IND>:êk | <IND>:yek");
        let outs: Vec<String> = t
            .lookup(&parse_symbols("<IND>").unwrap())
            .iter()
            .map(|o| format_symbols(o))
            .collect();
        assert_eq!(outs, ["yek", "êk"]);
    }

    #[test]
    fn star_literal() {
        assert_eq!(
            machine("x*").enumerate(2),
            BTreeSet::from([pair("", ""), pair("x", "x"), pair("xx", "xx")])
        );
    }

    #[test]
    fn multichar_surface_pads_right() {
        let t = machine("<DEF>:eke");
        assert_eq!(t.state_count(), 4);
        let first = &t.transitions(0)[0].label;
        assert_eq!(first.input, Symbol::tag("DEF").unwrap());
        assert_eq!(first.output, Symbol::Char('e'));
        assert_eq!(t.transitions(1)[0].label.input, Symbol::Epsilon);
    }

    #[test]
    fn document_with_rule_and_environment() {
        let mut env = Environment::new();
        env.define("stem", Transducer::identity(&chars("derga"))).unwrap();
        let src = RuleSource::new(
            "test.kfst",
            "#CLASS V = { a e }\n$ROOT$ = $stem$ <DEM>:e\n#RULE 0 -> y / V _ V\n",
        );
        let g = compile_source(&src, env).unwrap();
        let out = g.lookup(&parse_symbols("derga<DEM>").unwrap());
        assert_eq!(out, vec![chars("dergaye")]);
    }

    #[test]
    fn document_errors() {
        let err = compile_source(&RuleSource::new("g", "$a$ = x\n"), Environment::new()).unwrap_err();
        assert!(matches!(err, RuleError::InSource { ref inner, .. } if **inner == RuleError::MissingRoot));
        let err = compile_source(&RuleSource::new("g", "$ROOT$ = $nope$\n"), Environment::new()).unwrap_err();
        assert!(err.to_string().starts_with("g: line 1"));
        assert!(compile(&AstNode::VarRef("v".into()), &Environment::new()).is_err());
    }
}
