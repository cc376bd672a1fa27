//! Hand-rolled lexer and recursive-descent parser for the concrete syntax
//!
//! ```text
//! formula := conj            conj  := atom ("&" atom)*
//! atom    := "T" | ident | "<" label ">" atom | "(" formula ")"
//! label   := digits | "w"    ident := [a-z][a-z0-9_]*
//! sequent := formula "|-" formula
//! ```
//!
//! Whitespace between tokens is insignificant. `T` and `w` are reserved and
//! rejected as variable names; numeric labels must fit in a `u64`.

use std::fmt;

use super::{Formula, Modality, Sequent};

/// A syntax error with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Top,
    Ident(String),
    Number(u64),
    OmegaLabel,
    Amp,
    Lt,
    Gt,
    LParen,
    RParen,
    Turnstile,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Top => f.write_str("`T`"),
            Token::Ident(s) => write!(f, "identifier `{s}`"),
            Token::Number(n) => write!(f, "label `{n}`"),
            Token::OmegaLabel => f.write_str("`w`"),
            Token::Amp => f.write_str("`&`"),
            Token::Lt => f.write_str("`<`"),
            Token::Gt => f.write_str("`>`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Turnstile => f.write_str("`|-`"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'&' => {
                out.push((Token::Amp, i));
                i += 1;
            }
            b'<' => {
                out.push((Token::Lt, i));
                i += 1;
            }
            b'>' => {
                out.push((Token::Gt, i));
                i += 1;
            }
            b'(' => {
                out.push((Token::LParen, i));
                i += 1;
            }
            b')' => {
                out.push((Token::RParen, i));
                i += 1;
            }
            b'|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    out.push((Token::Turnstile, i));
                    i += 2;
                } else {
                    return err(i, "expected `|-`");
                }
            }
            b'T' => {
                if matches!(bytes.get(i + 1), Some(c) if is_ident_char(*c)) {
                    return err(i, "`T` cannot start an identifier");
                }
                out.push((Token::Top, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                match text.parse::<u64>() {
                    Ok(n) => out.push((Token::Number(n), start)),
                    Err(_) => return err(start, format!("label `{text}` overflows u64")),
                }
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && is_ident_char(bytes[i]) {
                    i += 1;
                }
                let text = &input[start..i];
                if text == "w" {
                    out.push((Token::OmegaLabel, start));
                } else {
                    out.push((Token::Ident(text.to_string()), start));
                }
            }
            _ => return err(i, format!("unexpected character `{}`", &input[i..i + 1])),
        }
    }
    Ok(out)
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_lowercase() || c.is_ascii_digit() || c == b'_'
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => err(self.here(), format!("expected {want}, found {t}")),
            None => err(self.end, format!("expected {want}, found end of input")),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Token::Amp) {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        // Diamond prefixes are collected iteratively so that deeply nested
        // chains do not recurse.
        let mut labels: Vec<Modality> = Vec::new();
        loop {
            match self.peek() {
                Some(Token::Lt) => {
                    self.pos += 1;
                    let label = match self.bump() {
                        Some(Token::Number(n)) => Modality::Nat(n),
                        Some(Token::OmegaLabel) => Modality::Omega,
                        Some(t) => {
                            return err(
                                self.tokens[self.pos - 1].1,
                                format!("expected a label, found {t}"),
                            )
                        }
                        None => return err(self.end, "expected a label, found end of input"),
                    };
                    self.expect(&Token::Gt)?;
                    labels.push(label);
                }
                _ => break,
            }
        }
        let base = match self.bump() {
            Some(Token::Top) => Formula::Top,
            Some(Token::Ident(name)) => Formula::Var(name),
            Some(Token::LParen) => {
                let inner = self.formula()?;
                self.expect(&Token::RParen)?;
                inner
            }
            Some(Token::OmegaLabel) => {
                return err(self.tokens[self.pos - 1].1, "`w` is reserved for the limit label")
            }
            Some(t) => {
                return err(
                    self.tokens[self.pos - 1].1,
                    format!("expected an atom, found {t}"),
                )
            }
            None => return err(self.end, "expected an atom, found end of input"),
        };
        Ok(labels
            .into_iter()
            .rev()
            .fold(base, |acc, m| Formula::dia(m, acc)))
    }
}

fn parser(input: &str) -> Result<Parser, ParseError> {
    Ok(Parser {
        tokens: lex(input)?,
        pos: 0,
        end: input.len(),
    })
}

pub(super) fn formula(input: &str) -> Result<Formula, ParseError> {
    let mut p = parser(input)?;
    let f = p.formula()?;
    match p.peek() {
        None => Ok(f),
        Some(t) => err(p.here(), format!("unexpected {t} after formula")),
    }
}

pub(super) fn sequent(input: &str) -> Result<Sequent, ParseError> {
    let mut p = parser(input)?;
    let lhs = p.formula()?;
    p.expect(&Token::Turnstile)?;
    let rhs = p.formula()?;
    match p.peek() {
        None => Ok(Sequent::new(lhs, rhs)),
        Some(t) => err(p.here(), format!("unexpected {t} after sequent")),
    }
}
