//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := literal | identifier | '(' expr ')'
//! literal:= int ['/' int] | 's' ['/' int]
//! ```
//!
//! `s` denotes the generator `sqrt(d)` and is rejected over Q. There is no
//! implicit multiplication.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use super::{Polynomial, VariableSet};
use crate::exactnum::{FieldConfig, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("malformed exponent at position {pos}")]
    MalformedExponent { pos: usize },
    #[error("generator `s` at position {pos} is not available over Q")]
    GeneratorUnavailable { pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
    #[error("unexpected {found} at position {pos}")]
    Unexpected { found: String, pos: usize },
    #[error("expected a constant, found a polynomial in `{0}`")]
    NotConstant(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Gen,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Gen => "`s`".into(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = if word == "s" {
                    Tok::Gen
                } else {
                    Tok::Ident(word.to_string())
                };
                out.push((tok, start));
                continue;
            }
            _ => {}
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError::Unexpected {
                    found: format!("character `{other}`"),
                    pos: start,
                })
            }
        };
        out.push((tok, start));
        i += c.len_utf8();
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a, F> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'a VariableSet,
    cfg: &'a FieldConfig,
    _f: std::marker::PhantomData<F>,
}

impl<F: Scalar> Parser<'_, F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        ParseError::Unexpected {
            found: self.peek().describe(),
            pos: self.pos(),
        }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, caret_pos) = self.bump();
        let (tok, pos) = self.bump();
        let e = match tok {
            Tok::Int(n) => n.to_u32().ok_or(ParseError::MalformedExponent { pos })?,
            _ => return Err(ParseError::MalformedExponent { pos: caret_pos }),
        };
        if matches!(self.peek(), Tok::Slash | Tok::Caret) {
            return Err(ParseError::MalformedExponent { pos: self.pos() });
        }
        Ok(base.pow(e))
    }

    fn denominator(&mut self) -> Result<Option<BigInt>, ParseError> {
        if *self.peek() != Tok::Slash {
            return Ok(None);
        }
        self.bump();
        match self.bump() {
            (Tok::Int(d), pos) if d.is_zero() => Err(ParseError::ZeroDenominator { pos }),
            (Tok::Int(d), _) => Ok(Some(d)),
            (t, pos) => Err(ParseError::Unexpected {
                found: t.describe(),
                pos,
            }),
        }
    }

    fn base(&mut self) -> Result<Polynomial<F>, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(n) => {
                let d = self.denominator()?.unwrap_or_else(|| 1.into());
                let c = F::from_rational(Rational::new(n, d));
                Ok(Polynomial::constant(self.n(), c))
            }
            Tok::Gen => {
                let g = F::generator(self.cfg).ok_or(ParseError::GeneratorUnavailable { pos })?;
                let g = match self.denominator()? {
                    Some(d) => g * F::from_rational(Rational::new(1.into(), d)),
                    None => g,
                };
                Ok(Polynomial::constant(self.n(), g))
            }
            Tok::Ident(name) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.n(), i)),
                None => Err(ParseError::UnknownIdentifier { name, pos }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (t, pos) => Err(ParseError::Unexpected {
                        found: t.describe(),
                        pos,
                    }),
                }
            }
            t => Err(ParseError::Unexpected {
                found: t.describe(),
                pos,
            }),
        }
    }
}

pub fn parse_poly<F: Scalar>(
    text: &str,
    vars: &VariableSet,
    cfg: &FieldConfig,
) -> Result<Polynomial<F>, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        vars,
        cfg,
        _f: std::marker::PhantomData,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parses a constant expression such as `-s/8` or `3/16`.
pub fn parse_scalar<F: Scalar>(text: &str, cfg: &FieldConfig) -> Result<F, ParseError> {
    let p = parse_poly::<F>(text, &VariableSet::empty(), cfg)?;
    if !p.is_constant() {
        return Err(ParseError::NotConstant(text.to_string()));
    }
    Ok(p.constant_term())
}
