use super::RuleError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    /// `$name$ =`
    VarDef(String),
    /// `$name$`
    Var(String),
    /// `<name>`
    Tag(String),
    /// `<>`
    Epsilon,
    /// A run of literal characters.
    Chars(String),
    /// `"..."`
    Quoted(String),
    Colon,
    Pipe,
    /// `||`
    Compose,
    LParen,
    RParen,
    Star,
    Plus,
    Question,
    /// End of a statement.
    Newline,
    /// `#CLASS NAME = { a b c }`
    Class {
        name: String,
        members: Vec<char>,
    },
    /// `#RULE in -> out / LEFT _ RIGHT [OPT]`, fields kept verbatim.
    Rule {
        input: String,
        output: String,
        left: String,
        right: String,
        optional: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

const SPECIAL: &[char] = &[
    '$', '<', '>', ':', '|', '(', ')', '*', '+', '?', '=', '%', '"', '\\', '#', '{', '}',
];

fn is_run_char(c: char) -> bool {
    !c.is_whitespace() && !SPECIAL.contains(&c)
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    depth: usize,
    tokens: Vec<Token>,
}

/// Splits a `.kfst` document into tokens. `%` comments are dropped.
pub fn tokenize(text: &str) -> Result<Vec<Token>, RuleError> {
    let mut lx = Lexer {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
        depth: 0,
        tokens: Vec::new(),
    };
    lx.run()?;
    Ok(lx.tokens)
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, line: usize, message: impl Into<String>) -> RuleError {
        RuleError::Lex {
            line,
            message: message.into(),
        }
    }

    fn push(&mut self, kind: TokenKind, line: usize, col: usize) {
        self.tokens.push(Token { kind, line, col });
    }

    fn at_line_start(&self) -> bool {
        self.chars[..self.pos]
            .iter()
            .rev()
            .take_while(|&&c| c != '\n')
            .all(|c| c.is_whitespace())
    }

    fn skip_comment(&mut self) {
        while let Some(c) = self.peek() {
            if c == '\n' {
                break;
            }
            self.bump();
        }
    }

    fn run(&mut self) -> Result<(), RuleError> {
        while let Some(c) = self.peek() {
            let (line, col) = (self.line, self.col);
            match c {
                '\n' => {
                    self.bump();
                    if self.depth == 0 {
                        self.push(TokenKind::Newline, line, col);
                    }
                }
                c if c.is_whitespace() => {
                    self.bump();
                }
                '%' => self.skip_comment(),
                '\\' if self.continues_line() => {
                    // line continuation: drop the backslash and the newline
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                '#' if self.at_line_start() => self.directive()?,
                '$' => self.variable()?,
                '<' => self.tag()?,
                '"' => self.quoted()?,
                ':' => {
                    self.bump();
                    self.push(TokenKind::Colon, line, col);
                }
                '|' => {
                    self.bump();
                    if self.peek() == Some('|') {
                        self.bump();
                        self.push(TokenKind::Compose, line, col);
                    } else {
                        self.push(TokenKind::Pipe, line, col);
                    }
                }
                '(' => {
                    self.bump();
                    self.depth += 1;
                    self.push(TokenKind::LParen, line, col);
                }
                ')' => {
                    self.bump();
                    self.depth = self.depth.saturating_sub(1);
                    self.push(TokenKind::RParen, line, col);
                }
                '*' => {
                    self.bump();
                    self.push(TokenKind::Star, line, col);
                }
                '+' => {
                    self.bump();
                    self.push(TokenKind::Plus, line, col);
                }
                '?' => {
                    self.bump();
                    self.push(TokenKind::Question, line, col);
                }
                c if is_run_char(c) || c == '\\' => self.run_of_chars()?,
                other => return Err(self.error(line, format!("unexpected character {other:?}"))),
            }
        }
        Ok(())
    }

    /// True when the backslash at the cursor is followed only by blanks up to
    /// the end of the line.
    fn continues_line(&self) -> bool {
        self.chars[self.pos + 1..]
            .iter()
            .take_while(|&&c| c != '\n')
            .all(|c| c.is_whitespace())
    }

    fn run_of_chars(&mut self) -> Result<(), RuleError> {
        let (line, col) = (self.line, self.col);
        let mut text = String::new();
        while let Some(c) = self.peek() {
            if c == '\\' {
                if self.continues_line() {
                    break;
                }
                self.bump();
                let escaped = self
                    .bump()
                    .ok_or_else(|| self.error(line, "dangling escape at end of input"))?;
                text.push(escaped);
            } else if is_run_char(c) {
                self.bump();
                text.push(c);
            } else {
                break;
            }
        }
        self.push(TokenKind::Chars(text), line, col);
        Ok(())
    }

    fn variable(&mut self) -> Result<(), RuleError> {
        let (line, col) = (self.line, self.col);
        self.bump();
        let mut name = String::new();
        loop {
            match self.bump() {
                Some('$') => break,
                Some(c) if c.is_alphanumeric() || c == '_' || c == '-' => name.push(c),
                _ => return Err(self.error(line, "unterminated variable name")),
            }
        }
        if name.is_empty() {
            return Err(self.error(line, "empty variable name"));
        }
        let mut k = 0;
        while matches!(self.peek_at(k), Some(' ' | '\t')) {
            k += 1;
        }
        if self.peek_at(k) == Some('=') {
            for _ in 0..=k {
                self.bump();
            }
            self.push(TokenKind::VarDef(name), line, col);
        } else {
            self.push(TokenKind::Var(name), line, col);
        }
        Ok(())
    }

    fn tag(&mut self) -> Result<(), RuleError> {
        let (line, col) = (self.line, self.col);
        self.bump();
        let mut name = String::new();
        loop {
            match self.bump() {
                Some('>') => break,
                Some(c) if c == '<' || c == ':' || c.is_whitespace() => {
                    return Err(self.error(line, "unterminated tag"))
                }
                Some(c) => name.push(c),
                None => return Err(self.error(line, "unterminated tag")),
            }
        }
        let kind = if name.is_empty() {
            TokenKind::Epsilon
        } else {
            TokenKind::Tag(name)
        };
        self.push(kind, line, col);
        Ok(())
    }

    fn quoted(&mut self) -> Result<(), RuleError> {
        let (line, col) = (self.line, self.col);
        self.bump();
        let mut text = String::new();
        loop {
            match self.bump() {
                Some('"') => break,
                Some('\\') => match self.bump() {
                    Some(c) if c != '\n' => text.push(c),
                    _ => return Err(self.error(line, "unterminated string")),
                },
                Some('\n') | None => return Err(self.error(line, "unterminated string")),
                Some(c) => text.push(c),
            }
        }
        self.push(TokenKind::Quoted(text), line, col);
        Ok(())
    }

    fn rest_of_line(&mut self) -> String {
        let mut text = String::new();
        while let Some(c) = self.peek() {
            if c == '\n' || c == '%' {
                break;
            }
            text.push(c);
            self.bump();
        }
        text
    }

    fn directive(&mut self) -> Result<(), RuleError> {
        let (line, col) = (self.line, self.col);
        let text = self.rest_of_line();
        let words: Vec<&str> = text.split_whitespace().collect();
        match words.first().copied() {
            Some("#CLASS") => {
                let bad = || self.error(line, "expected `#CLASS NAME = { c1 c2 ... }`");
                let [_, name, "=", "{", members @ .., "}"] = words.as_slice() else {
                    return Err(bad());
                };
                let mut chars = Vec::new();
                for m in members {
                    let mut it = m.chars();
                    match (it.next(), it.next()) {
                        (Some(c), None) => chars.push(c),
                        _ => return Err(self.error(line, format!("class member {m:?} is not a single character"))),
                    }
                }
                self.push(
                    TokenKind::Class {
                        name: name.to_string(),
                        members: chars,
                    },
                    line,
                    col,
                );
            }
            Some("#RULE") => {
                let (optional, words) = match words.last() {
                    Some(&"[OPT]") | Some(&"OPT") => (true, &words[..words.len() - 1]),
                    _ => (false, &words[..]),
                };
                let [_, input, "->", output, "/", left, "_", right] = words else {
                    return Err(self.error(line, "expected `#RULE in -> out / LEFT _ RIGHT [OPT]`"));
                };
                self.push(
                    TokenKind::Rule {
                        input: input.to_string(),
                        output: output.to_string(),
                        left: left.to_string(),
                        right: right.to_string(),
                        optional,
                    },
                    line,
                    col,
                );
            }
            _ => return Err(self.error(line, format!("unknown directive {:?}", words.first().unwrap_or(&"#")))),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TokenKind::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn variable_definition() {
        assert_eq!(kinds("$v$ = naw"), vec![VarDef("v".into()), Chars("naw".into())]);
        assert_eq!(kinds("$v$ $w$"), vec![Var("v".into()), Var("w".into())]);
    }

    #[test]
    fn pairs_and_union() {
        assert_eq!(
            kinds("a:b | c"),
            vec![Chars("a".into()), Colon, Chars("b".into()), Pipe, Chars("c".into())]
        );
        assert_eq!(kinds("<DEF>:eke"), vec![Tag("DEF".into()), Colon, Chars("eke".into())]);
        assert_eq!(kinds("<>:\"a b\""), vec![Epsilon, Colon, Quoted("a b".into())]);
        assert_eq!(kinds("a || b"), vec![Chars("a".into()), Compose, Chars("b".into())]);
    }

    #[test]
    fn comments_newlines_and_continuations() {
        assert_eq!(
            kinds("a % comment\nb \\\n c\n(d\ne)"),
            vec![
                Chars("a".into()),
                Newline,
                Chars("b".into()),
                Chars("c".into()),
                Newline,
                LParen,
                Chars("d".into()),
                Chars("e".into()),
                RParen
            ]
        );
        assert_eq!(kinds("a\\:b"), vec![Chars("a:b".into())]);
    }

    #[test]
    fn directives() {
        assert_eq!(
            kinds("#CLASS V = { a e ê }"),
            vec![Class {
                name: "V".into(),
                members: vec!['a', 'e', 'ê']
            }]
        );
        assert_eq!(
            kinds("  #RULE 0 -> y / V _ V"),
            vec![Rule {
                input: "0".into(),
                output: "y".into(),
                left: "V".into(),
                right: "V".into(),
                optional: false
            }]
        );
        assert!(matches!(
            kinds("#RULE a -> b / # _ * [OPT]")[0],
            Rule { optional: true, .. }
        ));
    }

    #[test]
    fn lex_errors_carry_line_numbers() {
        for src in ["\n\"abc", "\n<abc", "\n$abc", "\n#CLASS X = { ab }", "\n#FOO"] {
            match tokenize(src) {
                Err(RuleError::Lex { line: 2, .. }) => {}
                other => panic!("{src:?}: {other:?}"),
            }
        }
    }
}
