//! Text syntax for formulas and sequents.
//!
//! ```text
//! formula := term ( "|" formula )?
//! term    := factor ( "&" term )?
//! factor  := atom | "~" factor | "(" formula ")"
//! atom    := [A-Z][A-Za-z0-9_]*
//! sequent := formula ( "," formula )*
//! ```
//!
//! Both connectives are right-associative and `&` binds tighter than `|`.
//! `~` may be applied to any subformula; it is pushed to the literals while
//! parsing. Because tree shape affects derivability, parenthesize to control
//! grouping: `P | Q | R` is `P | (Q | R)`.

use std::fmt;

use crate::formula::{Connective, Formula, Sequent, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn shifted(mut self, offset: usize) -> ParseError {
        self.position += offset;
        self
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text);
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(text);
    let mut formulas = vec![p.formula()?];
    while p.eat(b',') {
        formulas.push(p.formula()?);
    }
    p.expect_end()?;
    Ok(Sequent::new(formulas).expect("at least one formula parsed"))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(ParseError::new(
                self.pos,
                format!("unexpected '{}'", c as char),
            )),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.term()?;
        if self.eat(b'|') {
            let right = self.formula()?;
            Ok(Formula::or(left, right))
        } else {
            Ok(left)
        }
    }

    fn term(&mut self) -> Result<Formula, ParseError> {
        let left = self.factor()?;
        if self.eat(b'&') {
            let right = self.term()?;
            Ok(Formula::and(left, right))
        } else {
            Ok(left)
        }
    }

    fn factor(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(self.factor()?.negate())
            }
            Some(b'(') => {
                self.pos += 1;
                let f = self.formula()?;
                if !self.eat(b')') {
                    return Err(ParseError::new(self.pos, "expected ')'"));
                }
                Ok(f)
            }
            Some(c) if c.is_ascii_uppercase() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Formula::lit(Var::new(name), true))
            }
            Some(c) => Err(ParseError::new(
                self.pos,
                format!("expected a formula, found '{}'", c as char),
            )),
            None => Err(ParseError::new(self.pos, "expected a formula, found end of input")),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Lit { var, positive } => {
                if !positive {
                    f.write_str("~")?;
                }
                write!(f, "{var}")
            }
            Formula::Node { conn, left, right } => {
                let (op, paren_left, paren_right) = match conn {
                    Connective::Or => (" | ", left.is_or(), false),
                    Connective::And => (" & ", !left.is_literal(), right.is_or()),
                };
                write_grouped(f, left, paren_left)?;
                f.write_str(op)?;
                write_grouped(f, right, paren_right)
            }
        }
    }
}

fn write_grouped(f: &mut fmt::Formatter<'_>, formula: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({formula})")
    } else {
        write!(f, "{formula}")
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, formula) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{formula}")?;
        }
        Ok(())
    }
}
