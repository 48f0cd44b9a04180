//! Parser for ternary forms such as `x^3*y + y^3*z + z^3*x`.
//!
//! ```text
//! expr    = term , { ("+" | "-") , term } ;
//! term    = unary , { ["*"] , unary } ;        (* bare juxtaposition multiplies *)
//! unary   = "-" , unary | "+" , unary | power ;
//! power   = atom , [ "^" , integer ] ;
//! atom    = integer , [ "/" , integer ] | variable | "(" , expr , ")" ;
//! variable = "x" | "y" | "z" ;
//! ```
//!
//! Juxtaposition is only recognised when the right-hand factor starts with a
//! variable or `(`, so `2x` and `x^3y` multiply but `x 2` is rejected.
//! Whitespace is ignored everywhere.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactpoly::{xyz, BigRat, MultiPoly};

/// Largest exponent accepted in input.
pub const MAX_EXPONENT: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    /// Byte offset into the source text.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownVariable(char),
    ExponentTooLarge,
    ZeroDenominator,
    NotHomogeneous,
    ZeroPolynomial,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => f.write_str("empty input"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnknownVariable(c) => {
                write!(f, "unknown variable '{c}' (only x, y, z are allowed)")
            }
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent exceeds {MAX_EXPONENT}")
            }
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator"),
            ParseErrorKind::NotHomogeneous => f.write_str("polynomial is not homogeneous"),
            ParseErrorKind::ZeroPolynomial => f.write_str("polynomial is zero"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Var(i) => format!("variable {}", ["x", "y", "z"][*i]),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = c.to_string();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            'x' => Tok::Var(0),
            'y' => Tok::Var(1),
            'z' => Tok::Var(2),
            c if c.is_alphabetic() => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::UnknownVariable(c),
                })
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos(),
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        match self.peek() {
            Some(Tok::Int(n)) => {
                let e = u32::try_from(n.clone())
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or_else(|| self.err(ParseErrorKind::ExponentTooLarge))?;
                self.bump();
                Ok(base.pow(e))
            }
            _ => Err(self.unexpected()),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.bump();
                let mut value = BigRat::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.peek().cloned() {
                        Some(Tok::Int(den)) => {
                            if den.is_zero() {
                                return Err(self.err(ParseErrorKind::ZeroDenominator));
                            }
                            self.bump();
                            value /= BigRat::from_integer(den);
                        }
                        _ => return Err(self.unexpected()),
                    }
                }
                Ok(MultiPoly::constant(xyz(), value))
            }
            Some(Tok::Var(i)) => {
                self.bump();
                Ok(MultiPoly::var(xyz(), ["x", "y", "z"][i]).expect("known variable"))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses any polynomial in `x, y, z` (homogeneous or not, possibly zero).
pub fn parse_polynomial(src: &str) -> Result<MultiPoly, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::Empty,
        });
    }
    let mut p = Parser {
        toks,
        idx: 0,
        end: src.len(),
    };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(poly)
}

/// Parses a nonzero homogeneous form and reports its degree.
pub fn parse_form(src: &str) -> Result<(MultiPoly, u32), ParseError> {
    let poly = parse_polynomial(src)?;
    if poly.is_zero() {
        return Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::ZeroPolynomial,
        });
    }
    match poly.homogeneous_degree() {
        Some(d) => Ok((poly, d)),
        None => Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::NotHomogeneous,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_and_klein() {
        let (f, d) = parse_form("x^3 + y^3 + z^3").unwrap();
        assert_eq!(d, 3);
        assert_eq!(f.to_string(), "x^3 + y^3 + z^3");
        let (k, d) = parse_form("x^3*y + y^3*z + z^3*x").unwrap();
        assert_eq!(d, 4);
        assert_eq!(parse_form("x^3y+y^3z+z^3x").unwrap().0, k);
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_polynomial("-x^2").unwrap().to_string(), "-x^2");
        assert_eq!(parse_polynomial("2x^2y").unwrap().to_string(), "2*x^2*y");
        assert_eq!(
            parse_polynomial("(x+y)^2 - 3/2 z (x)").unwrap().to_string(),
            "x^2 + 2*x*y - 3/2*x*z + y^2"
        );
        assert_eq!(parse_polynomial("x*-y").unwrap().to_string(), "-x*y");
        assert_eq!(parse_polynomial("x - -y").unwrap().to_string(), "x + y");
    }

    #[test]
    fn non_homogeneous_rejected() {
        let err = parse_form("x^2 + y^3").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NotHomogeneous);
        assert_eq!(
            parse_form("x - x").unwrap_err().kind,
            ParseErrorKind::ZeroPolynomial
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_polynomial("x^3 + w").unwrap_err();
        assert_eq!((e.pos, e.kind), (6, ParseErrorKind::UnknownVariable('w')));
        let e = parse_polynomial("x^3 +").unwrap_err();
        assert_eq!((e.pos, e.kind), (5, ParseErrorKind::UnexpectedEnd));
        let e = parse_polynomial("x 2").unwrap_err();
        assert_eq!(e.pos, 2);
        let e = parse_polynomial("(x + y").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        let e = parse_polynomial("x^y").unwrap_err();
        assert_eq!(e.pos, 2);
        let e = parse_polynomial("1/0 x").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);
        assert_eq!(
            parse_polynomial("   ").unwrap_err().kind,
            ParseErrorKind::Empty
        );
        assert_eq!(
            parse_polynomial("x^9999").unwrap_err().kind,
            ParseErrorKind::ExponentTooLarge
        );
        assert_eq!(
            parse_polynomial("x # y").unwrap_err().kind,
            ParseErrorKind::UnexpectedChar('#')
        );
    }
}
