//! Shared infix expression syntax for polynomials, curve elements and
//! superalgebra elements.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' integer]
//! atom   := integer | ident ['(' expr ')'] | '(' expr ')'
//! ```
//!
//! The parser only builds a tree; each consumer evaluates it in its own algebra.

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Var { name: String, pos: usize },
    Call { name: String, arg: Box<Expr>, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div { lhs: Box<Expr>, rhs: Box<Expr>, pos: usize },
    Pow { base: Box<Expr>, exp: u32, pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                let value = digits.parse::<BigInt>().map_err(|e| Error::Parse {
                    pos,
                    msg: e.to_string(),
                })?;
                out.push((Tok::Int(value), pos));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((Tok::Ident(name), pos));
                continue;
            }
            '+' => out.push((Tok::Plus, pos)),
            // accept the unicode minus sign too
            '-' | '\u{2212}' => out.push((Tok::Minus, pos)),
            '*' | '\u{00b7}' => out.push((Tok::Star, pos)),
            '/' => out.push((Tok::Slash, pos)),
            '^' => out.push((Tok::Caret, pos)),
            '(' => out.push((Tok::LParen, pos)),
            ')' => out.push((Tok::RParen, pos)),
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    lhs = Expr::Div {
                        lhs: Box::new(lhs),
                        rhs: Box::new(self.factor()?),
                        pos,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            let pos = self.pos();
            self.bump();
            match self.bump() {
                Some((Tok::Int(n), p)) => {
                    let exp = u32::try_from(n).map_err(|_| Error::Parse {
                        pos: p,
                        msg: "exponent too large".into(),
                    })?;
                    Ok(Expr::Pow {
                        base: Box::new(base),
                        exp,
                        pos,
                    })
                }
                _ => Err(Error::Parse {
                    pos,
                    msg: "expected a nonnegative integer exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some((Tok::Int(n), _)) => Ok(Expr::Int(n)),
            Some((Tok::Ident(name), pos)) => {
                if let Some(Tok::LParen) = self.peek() {
                    self.bump();
                    let arg = self.expr()?;
                    self.expect_rparen()?;
                    Ok(Expr::Call {
                        name,
                        arg: Box::new(arg),
                        pos,
                    })
                } else {
                    Ok(Expr::Var { name, pos })
                }
            }
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some((_, pos)) => Err(Error::Parse {
                pos,
                msg: "expected a number, a symbol or '('".into(),
            }),
            None => Err(Error::Parse {
                pos: self.end,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn expect_rparen(&mut self) -> Result<()> {
        match self.peek() {
            Some(Tok::RParen) => {
                self.bump();
                Ok(())
            }
            _ => self.fail("expected ')'"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.fail("trailing input");
    }
    Ok(e)
}

/// Integer value of a constant subtree, used for `/` denominators.
pub(crate) fn const_int(e: &Expr) -> Option<BigInt> {
    match e {
        Expr::Int(n) => Some(n.clone()),
        Expr::Neg(inner) => const_int(inner).map(|n| -n),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("1 - 2*y^4").unwrap();
        match e {
            Expr::Sub(_, rhs) => assert!(matches!(*rhs, Expr::Mul(_, _))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn call_and_position() {
        assert!(matches!(parse("bar(x) * bar(y)").unwrap(), Expr::Mul(_, _)));
        let err = parse("1 + * y").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                pos: 4,
                msg: "expected a number, a symbol or '('".into()
            }
        );
        assert!(matches!(parse("(y").unwrap_err(), Error::Parse { pos: 2, .. }));
        assert!(matches!(parse("y $").unwrap_err(), Error::Parse { pos: 2, .. }));
    }
}
