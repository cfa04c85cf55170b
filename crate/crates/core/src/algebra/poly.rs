//! Text form of algebra elements.
//!
//! ```text
//! poly   := term (('+'|'-') term)*
//! term   := [rat '*'] factor ('*' factor)* | rat
//! factor := ident ['^' posint]
//! rat    := int ['/' posint]
//! ```
//!
//! Whitespace is ignored and `#` starts a comment. A leading sign is allowed.
//! Bare rationals are accepted as constant terms so that printed elements
//! (which may contain a unit term) parse back.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgElement, AlgebraError, Monomial, Universe};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, AlgebraError> {
    let text = match input.find('#') {
        Some(i) => &input[..i],
        None => input,
    };
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            other => {
                return Err(AlgebraError::Parse {
                    pos: i,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    universe: &'a Universe,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.end)
    }

    fn err(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.offset(),
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn poly(&mut self) -> Result<AlgElement, AlgebraError> {
        let mut acc = AlgElement::zero(self.universe);
        let mut negative = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            if negative {
                acc -= &term;
            } else {
                acc += &term;
            }
            match self.peek() {
                None => break,
                Some(Token::Plus) => negative = false,
                Some(Token::Minus) => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgElement, AlgebraError> {
        let mut coeff = Rational::one();
        let mut factors: Vec<(usize, u32)> = Vec::new();
        if let Some(Token::Int(_)) = self.peek() {
            coeff = self.rational()?;
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                }
                _ => {
                    return Ok(AlgElement::constant(self.universe, coeff));
                }
            }
        }
        loop {
            factors.push(self.factor()?);
            if let Some(Token::Star) = self.peek() {
                self.pos += 1;
            } else {
                break;
            }
        }
        // multiply in written order so that the Koszul sign of the text is kept
        let mut acc = AlgElement::constant(self.universe, coeff);
        for (g, p) in factors {
            let letter = AlgElement::generator(self.universe, g).pow(p);
            acc = &acc * &letter;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<(usize, u32), AlgebraError> {
        let name = match self.next() {
            Some(Token::Ident(s)) => s,
            _ => {
                self.pos -= 1;
                return Err(self.err("expected generator name"));
            }
        };
        let g = self
            .universe
            .position(&name)
            .ok_or(AlgebraError::UnknownGenerator(name))?;
        let mut power = 1u32;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(n)) if !n.is_zero() => {
                    power = u32::try_from(n).map_err(|_| self.err("exponent too large"))?;
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.err("expected positive exponent"));
                }
            }
        }
        Ok((g, power))
    }

    fn rational(&mut self) -> Result<Rational, AlgebraError> {
        let num = match self.next() {
            Some(Token::Int(n)) => n,
            _ => unreachable!("caller checked for an integer"),
        };
        if let Some(Token::Slash) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(d)) if !d.is_zero() => return Ok(Rational::new(num, d)),
                _ => {
                    self.pos -= 1;
                    return Err(self.err("expected positive denominator"));
                }
            }
        }
        Ok(Rational::from_integer(num))
    }
}

/// Parses an element over `universe`.
pub fn parse_poly(universe: &Universe, input: &str) -> Result<AlgElement, AlgebraError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(AlgebraError::Parse {
            pos: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        universe,
        tokens,
        pos: 0,
        end: input.len(),
    };
    p.poly()
}

/// Parses a monomial such as `y^2*z`, ignoring any sign.
pub fn parse_monomial(universe: &Universe, input: &str) -> Result<Monomial, AlgebraError> {
    let e = parse_poly(universe, input)?;
    match e.terms().keys().next() {
        Some(m) if e.len() == 1 => Ok(m.clone()),
        _ => Err(AlgebraError::Parse {
            pos: 0,
            message: format!("'{input}' is not a single nonzero monomial"),
        }),
    }
}
