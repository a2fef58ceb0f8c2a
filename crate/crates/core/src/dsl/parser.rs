//! Recursive-descent parser for bracket identities.
//!
//! ```text
//! identity := expr "=" expr
//! expr     := term { ("+" | "-") term }
//! term     := [ coeff "*" ] factor | "0" | "-" factor
//! factor   := var | "[" expr "," expr [ "," expr ] "]"
//! coeff    := ["-"] integer [ "/" integer ]
//! var      := lowercase letter { letter | digit }
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ast::{Expr, IdentityAst};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
    /// Set for errors that are not a plain unexpected token.
    pub message: Option<String>,
}

impl ParseError {
    /// The message without its position.
    pub fn detail(&self) -> String {
        if let Some(msg) = &self.message {
            return msg.clone();
        }
        match self.expected.as_slice() {
            [] => format!("unexpected {}", self.found),
            [one] => format!("expected {one}, found {}", self.found),
            many => format!("expected one of {}, found {}", many.join(", "), self.found),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line,
            self.column,
            self.detail()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Equals,
    Int(String),
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Ident(s) => format!("variable `{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, first_line: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (first_line, 1);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        let single = |tok| Token {
            tok,
            line: tl,
            column: tc,
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
                continue;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    column += 1;
                }
                continue;
            }
            '[' | ']' | ',' | '+' | '-' | '*' | '/' | '=' => {
                chars.next();
                column += 1;
                out.push(single(match c {
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    _ => Tok::Equals,
                }));
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    column += 1;
                }
                out.push(single(Tok::Int(s)));
            }
            c if c.is_ascii_lowercase() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_alphanumeric() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                    column += 1;
                }
                out.push(single(Tok::Ident(s)));
            }
            other => {
                return Err(ParseError {
                    line: tl,
                    column: tc,
                    expected: Vec::new(),
                    found: format!("character `{other}`"),
                    message: if other.is_uppercase() {
                        Some(format!(
                            "unexpected character `{other}`; variables start with a lowercase letter"
                        ))
                    } else {
                        None
                    },
                });
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
            message: None,
        }
    }

    fn error_at(&self, t: &Token, message: String) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            expected: Vec::new(),
            found: t.tok.describe(),
            message: Some(message),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &[&str]) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn identity(&mut self) -> Result<IdentityAst, ParseError> {
        let lhs = self.expr(&["`=`"])?;
        self.expect(Tok::Equals, &["`+`", "`-`", "`=`"])?;
        let rhs = self.expr(&["end of input"])?;
        self.expect(Tok::Eof, &["`+`", "`-`", "end of input"])?;
        Ok(IdentityAst::new(lhs, rhs))
    }

    /// `follow` lists what may come after the expression, for error messages.
    fn expr(&mut self, follow: &[&str]) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(self.term()?.negate());
                }
                Tok::Star | Tok::Slash | Tok::Int(_) | Tok::Ident(_) | Tok::LBracket => {
                    let mut expected = vec!["`+`", "`-`"];
                    expected.extend_from_slice(follow);
                    return Err(self.error(&expected));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                if let Tok::Int(_) = self.peek().tok {
                    let start = self.peek().clone();
                    let (c, bare_zero) = self.coeff()?;
                    self.scaled(-c, bare_zero, &start)
                } else {
                    Ok(self.factor()?.negate())
                }
            }
            Tok::Int(_) => {
                let start = self.peek().clone();
                let (c, bare_zero) = self.coeff()?;
                self.scaled(c, bare_zero, &start)
            }
            _ => self.factor(),
        }
    }

    /// After a coefficient: either `* factor`, or nothing if it was `0`.
    fn scaled(&mut self, c: Scalar, bare_zero: bool, start: &Token) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Star {
            self.bump();
            let f = self.factor()?;
            return Ok(Expr::Scale(c, Box::new(f)));
        }
        if bare_zero {
            return Ok(Expr::zero());
        }
        if matches!(self.peek().tok, Tok::Ident(_) | Tok::LBracket) {
            return Err(self.error(&["`*`"]));
        }
        Err(self.error_at(
            start,
            format!("a coefficient must be followed by `*`; only `0` may stand alone (found {c})"),
        ))
    }

    /// Integer or integer/integer. The flag marks a plain `0` literal.
    fn coeff(&mut self) -> Result<(Scalar, bool), ParseError> {
        let num_tok = self.bump();
        let Tok::Int(num) = &num_tok.tok else {
            unreachable!("coeff called on a non-integer token")
        };
        let num: BigInt = num.parse().expect("digits");
        if self.peek().tok != Tok::Slash {
            let zero = num.is_zero();
            return Ok((BigRational::from_integer(num).into(), zero));
        }
        self.bump();
        let den_tok = self.peek().clone();
        let Tok::Int(den) = &den_tok.tok else {
            return Err(self.error(&["integer"]));
        };
        self.bump();
        let den: BigInt = den.parse().expect("digits");
        if den.is_zero() {
            return Err(self.error_at(&den_tok, "zero denominator in coefficient".into()));
        }
        Ok((BigRational::new(num, den).into(), false))
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr::Var(name))
            }
            Tok::LBracket => {
                self.bump();
                let mut args = vec![self.expr(&["`,`", "`]`"])?];
                loop {
                    match self.peek().tok {
                        Tok::Comma => {
                            self.bump();
                            args.push(self.expr(&["`,`", "`]`"])?);
                        }
                        Tok::RBracket => {
                            self.bump();
                            break;
                        }
                        _ => return Err(self.error(&["`+`", "`-`", "`,`", "`]`"])),
                    }
                }
                let n = args.len();
                let mut args = args.into_iter().map(Box::new);
                let mut next = || args.next().expect("counted");
                match n {
                    2 => Ok(Expr::Bracket(next(), next())),
                    3 => Ok(Expr::Ternary(next(), next(), next())),
                    _ => Err(self.error_at(
                        &t,
                        format!("bracket with {n} argument(s); brackets take 2 or 3"),
                    )),
                }
            }
            _ => Err(self.error(&["variable", "`[`", "coefficient", "`-`"])),
        }
    }
}

/// Parses one identity. Newlines are whitespace; `#` comments are ignored.
pub fn parse_identity(text: &str) -> Result<IdentityAst, ParseError> {
    parse_identity_at(text, 1)
}

pub(crate) fn parse_identity_at(text: &str, first_line: usize) -> Result<IdentityAst, ParseError> {
    let tokens = lex(text, first_line)?;
    Parser { tokens, pos: 0 }.identity()
}

/// Parses a file with one identity per line; blank and comment lines are skipped.
pub fn parse_identities(text: &str) -> Result<Vec<IdentityAst>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(n, line)| parse_identity_at(line, n + 1))
        .collect()
}
