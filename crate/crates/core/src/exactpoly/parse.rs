use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::Rational;

use super::{HomPoly, Vars};

/// Parse failure; `column` is 1-based and counts characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.pos + 1, message: message.into() })
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Ok(text.parse().expect("digits"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

fn is_minus(c: char) -> bool {
    c == '-' || c == '\u{2212}'
}

/// Parse a binary form written as a sum of terms `c*s^i*t^j`, with
/// rational coefficients `p/q`. Every term must have the same total degree.
pub fn parse_hom(text: &str, vars: Vars) -> Result<HomPoly<Rational>, ParseError> {
    parse_inner(text, vars, None)
}

/// Like [`parse_hom`], but the degree is declared up front; this also
/// allows the zero form.
pub fn parse_hom_with_degree(text: &str, vars: Vars, degree: usize) -> Result<HomPoly<Rational>, ParseError> {
    parse_inner(text, vars, Some(degree))
}

fn parse_inner(text: &str, vars: Vars, declared: Option<usize>) -> Result<HomPoly<Rational>, ParseError> {
    let mut lx = Lexer { chars: text.chars().collect(), pos: 0 };
    let mut terms: Vec<(usize, Rational, usize, usize)> = Vec::new();
    let mut first = true;
    loop {
        let Some(c) = lx.peek() else {
            if first {
                return lx.err("empty polynomial");
            }
            break;
        };
        let mut sign = Rational::one();
        if c == '+' || is_minus(c) {
            if is_minus(c) {
                sign = -sign;
            }
            lx.pos += 1;
        } else if !first {
            return lx.err(format!("expected '+' or '-', found '{c}'"));
        }
        first = false;
        let start = {
            lx.skip_ws();
            lx.pos
        };
        let (coef, i, j) = parse_term(&mut lx, vars)?;
        terms.push((start, sign * coef, i, j));
    }
    let degree = match declared {
        Some(d) => d,
        None => {
            let nz = terms.iter().find(|t| !t.1.is_zero());
            match nz.or(terms.first()) {
                Some(t) => t.2 + t.3,
                None => unreachable!(),
            }
        }
    };
    let mut out = HomPoly::zero(vars, degree);
    let mut coeffs: Vec<Rational> = out.coeffs().to_vec();
    for (start, c, i, j) in terms {
        if c.is_zero() && i + j == 0 {
            continue;
        }
        if i + j != degree {
            return Err(ParseError {
                column: start + 1,
                message: format!("term of degree {} in a form of degree {degree}", i + j),
            });
        }
        coeffs[j] = coeffs[j].clone() + c;
    }
    out = HomPoly::new(vars, coeffs);
    Ok(out)
}

fn parse_term(lx: &mut Lexer, vars: Vars) -> Result<(Rational, usize, usize), ParseError> {
    let mut coef = Rational::one();
    let (mut i, mut j) = (0usize, 0usize);
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = lx.number()?;
                let mut q = Rational::from_integer(n);
                if lx.peek() == Some('/') {
                    lx.pos += 1;
                    let d = lx.number()?;
                    if d.is_zero() {
                        return lx.err("zero denominator");
                    }
                    q = q / Rational::from_integer(d);
                }
                coef = coef * q;
            }
            Some(c) if c.is_alphabetic() => {
                let at = lx.pos;
                let name = lx.ident();
                let mut e = 1usize;
                if lx.peek() == Some('^') {
                    lx.pos += 1;
                    let n = lx.number()?;
                    e = n.try_into().map_err(|_| ParseError { column: at + 1, message: "exponent too large".into() })?;
                }
                if name == vars.0 {
                    i += e;
                } else if name == vars.1 {
                    j += e;
                } else {
                    return Err(ParseError {
                        column: at + 1,
                        message: format!("unknown variable '{name}', expected '{}' or '{}'", vars.0, vars.1),
                    });
                }
            }
            Some(c) => return lx.err(format!("unexpected '{c}'")),
            None => return lx.err("unexpected end of input"),
        }
        if lx.peek() == Some('*') {
            lx.pos += 1;
        } else {
            break;
        }
    }
    Ok((coef, i, j))
}
