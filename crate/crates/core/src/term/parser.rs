//! Recursive-descent parser for the term grammar:
//!
//! ```text
//! join    := meet ('|' meet)*
//! meet    := postfix ('&' postfix)*
//! postfix := atom '\''*
//! atom    := IDENT | '0' | '1' | '(' join ')'
//! ```
//!
//! Binary operators associate to the left.

use super::Term;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Prime,
    And,
    Or,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0' => Tok::Zero,
            b'1' => Tok::One,
            b'\'' => Tok::Prime,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{ch}`") });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn join(&mut self) -> Result<Term> {
        let mut t = self.meet()?;
        while self.peek() == Some(&Tok::Or) {
            self.at += 1;
            t = Term::join(t, self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term> {
        let mut t = self.postfix()?;
        while self.peek() == Some(&Tok::And) {
            self.at += 1;
            t = Term::meet(t, self.postfix()?);
        }
        Ok(t)
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Tok::Prime) {
            self.at += 1;
            t = Term::ortho(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.at += 1;
        match tok {
            Tok::Ident(name) => Ok(Term::Var(name)),
            Tok::Zero => Ok(Term::Zero),
            Tok::One => Ok(Term::One),
            Tok::LParen => {
                let inner = self.join()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            other => {
                self.at -= 1;
                self.err(format!("unexpected {}", describe(&other)))
            }
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Prime => "`'`",
        Tok::And => "`&`",
        Tok::Or => "`|`",
        Tok::RParen => "`)`",
        Tok::LParen => "`(`",
        _ => "token",
    }
}

/// Parses a term; errors carry the byte offset of the offending token.
pub fn parse(text: &str) -> Result<Term> {
    let mut p = Parser { toks: lex(text)?, at: 0, end: text.len() };
    let t = p.join()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(t)
}
