//! Relation expressions: integers, variable names, `+ - * ^`, parentheses.
//!
//! Relations are separated by commas or by newlines outside parentheses.
//! Positions in errors are byte offsets into the input.

use num_bigint::BigInt;

use super::poly::Polynomial;
use super::presentation::Presentation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Sep,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' => {
                i += 1;
                continue;
            }
            b'\n' if depth > 0 => {
                i += 1;
                continue;
            }
            b'\n' | b',' => Tok::Sep,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => {
                depth += 1;
                Tok::LParen
            }
            b')' => {
                depth = depth.saturating_sub(1);
                Tok::RParen
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(_, p)| p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = acc.add(&self.product()?)?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = acc.sub(&self.product()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(e)) => {
                self.at += 1;
                let e: u32 = e.try_into().map_err(|_| Error::Syntax {
                    pos,
                    msg: "exponent too large".into(),
                })?;
                if e == 0 {
                    return Err(Error::Syntax {
                        pos,
                        msg: "exponents must be positive".into(),
                    });
                }
                Ok(base.pow(e))
            }
            _ => self.err("expected a positive integer exponent after `^`"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.at += 1;
                Ok(Polynomial::constant(self.nvars(), k))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Polynomial::var(self.nvars(), i)),
                    None => Err(Error::UnknownVariable { name, pos }),
                }
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected {}", describe(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(k) => format!("integer {k}"),
        Tok::Ident(s) => format!("name `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Sep => "separator".into(),
    }
}

/// Parses a comma/newline separated list of relations over `names`.
/// Empty entries are skipped; each relation must be homogeneous.
pub fn parse_relations<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Vec<Polynomial>> {
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        names: &names,
    };
    let mut out = Vec::new();
    while p.peek().is_some() {
        if p.peek() == Some(&Tok::Sep) {
            p.at += 1;
            continue;
        }
        let rel = p.expr()?;
        match p.peek() {
            None | Some(Tok::Sep) => {}
            Some(t) => {
                let t = t.clone();
                return p.err(format!("unexpected {}", describe(&t)));
            }
        }
        if !rel.is_homogeneous() {
            return Err(Error::Inhomogeneous(out.len()));
        }
        out.push(rel);
    }
    Ok(out)
}

/// Identifiers of a relation list in order of first appearance.
pub fn variables_in(text: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for (t, _) in tokenize(text)? {
        if let Tok::Ident(s) = t {
            if !names.contains(&s) {
                names.push(s);
            }
        }
    }
    Ok(names)
}

/// Parses `Z[a,b]/(rels)`, `Z[a,b]`, or a bare relation list whose variables
/// are taken in order of first appearance.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let trimmed = text.trim();
    let body = trimmed
        .strip_prefix("Z[")
        .or_else(|| trimmed.strip_prefix("ℤ["));
    let Some(body) = body else {
        let names = variables_in(trimmed)?;
        let rels = parse_relations(trimmed, &names)?;
        return Presentation::new(names, vec![], rels);
    };
    let offset = body.as_ptr() as usize - text.as_ptr() as usize;
    let close = body.find(']').ok_or(Error::Syntax {
        pos: text.len(),
        msg: "missing `]`".into(),
    })?;
    let names: Vec<String> = body[..close]
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if let Some(bad) = names.iter().find(|n| {
        !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            || n.starts_with(|c: char| c.is_ascii_digit())
    }) {
        return Err(Error::Syntax {
            pos: offset,
            msg: format!("invalid variable name `{bad}`"),
        });
    }
    let rest = body[close + 1..].trim();
    if rest.is_empty() {
        return Presentation::free(names);
    }
    let inner = rest
        .strip_prefix("/(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or(Error::Syntax {
            pos: offset + close + 1,
            msg: "expected `/(relations)` after the variable list".into(),
        })?;
    let rels = parse_relations(inner, &names)?;
    Presentation::new(names, vec![], rels)
}
