//! Parser for the polynomial text grammar.
//!
//! Grammar: integer or rational coefficients, generator names, `*` for
//! concatenation, `^` for positive integer powers, `+`/`-` between terms,
//! `1` for the empty word. Whitespace is insignificant. Examples:
//! `x^2*y - y*x^2`, `3*x*y + 1/2*y^2 - 1`.

use std::str::FromStr;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;

use crate::error::{Error, Result};

use super::{GeneratorTable, NcPoly, Word};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Star,
    Caret,
    Plus,
    Minus,
    Slash,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::from_str(&src[start..i]).unwrap();
                toks.push((start, Tok::Int(n)));
            }
            c if c.is_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => return Err(err(i, format!("unexpected character {c:?}"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    lx: Lexer<'a>,
    pos: usize,
    gens: &'a Arc<GeneratorTable>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.lx.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.lx.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.lx.src.len())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.lx.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_int(&mut self) -> Result<BigInt> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => Err(err(self.offset(), "expected an integer")),
        }
    }

    /// factor := ident ('^' int)? | int(=1 only, the empty word)
    /// Returns the word the factor contributes.
    fn factor(&mut self) -> Result<Word> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Ident(name)) => {
                let g = self
                    .gens
                    .index_of(&name)
                    .ok_or_else(|| err(at, format!("unknown generator {name:?}")))?;
                let mut exp = 1usize;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    let at = self.offset();
                    let n = self.expect_int()?;
                    exp = usize::try_from(n.clone())
                        .ok()
                        .filter(|&e| e >= 1)
                        .ok_or_else(|| err(at, format!("exponent must be a positive integer, got {n}")))?;
                }
                Ok(Word::new(vec![g as u32; exp]))
            }
            Some(Tok::Int(n)) if n == BigInt::one() => Ok(Word::empty()),
            _ => Err(err(at, "expected a generator name or 1")),
        }
    }

    /// term := coefficient ('*' factors)? | factors
    fn term(&mut self) -> Result<(Word, BigRational)> {
        let mut coeff = BigRational::one();
        let mut word = Word::empty();
        // Optional leading coefficient. A bare `1` is just coefficient 1 with
        // the empty word, which matches the grammar's `1` factor.
        if let Some(Tok::Int(_)) = self.peek() {
            let n = self.expect_int()?;
            let mut c = BigRational::from_integer(n);
            if self.peek() == Some(&Tok::Slash) {
                self.bump();
                let at = self.offset();
                let d = self.expect_int()?;
                if d == BigInt::from(0) {
                    return Err(err(at, "zero denominator"));
                }
                c /= BigRational::from_integer(d);
            }
            coeff = c;
            if self.peek() == Some(&Tok::Star) {
                self.bump();
                word = word.concat(&self.factor()?);
            }
        } else {
            word = word.concat(&self.factor()?);
        }
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            word = word.concat(&self.factor()?);
        }
        Ok((word, coeff))
    }

    fn poly(&mut self) -> Result<NcPoly> {
        let mut out = NcPoly::zero(self.gens);
        let mut sign = BigRational::one();
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            sign = -sign;
        } else if self.peek() == Some(&Tok::Plus) {
            self.bump();
        }
        if self.peek().is_none() {
            return Err(err(self.offset(), "empty polynomial"));
        }
        loop {
            let (w, c) = self.term()?;
            out = out.combine(&NcPoly::monomial(self.gens, w, c)?, &sign)?;
            let at = self.offset();
            match self.bump() {
                None => break,
                Some(Tok::Plus) => sign = BigRational::one(),
                Some(Tok::Minus) => sign = -BigRational::one(),
                Some(_) => return Err(err(at, "expected + or - between terms")),
            }
        }
        Ok(out)
    }
}

/// Parses a polynomial in the text grammar over the given table. A literal
/// `0` parses to the zero polynomial.
pub fn parse_poly(src: &str, gens: &Arc<GeneratorTable>) -> Result<NcPoly> {
    if src.trim() == "0" {
        return Ok(NcPoly::zero(gens));
    }
    let toks = lex(src)?;
    let mut p = Parser { lx: Lexer { src, toks }, pos: 0, gens };
    let poly = p.poly()?;
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<GeneratorTable> {
        Arc::new(GeneratorTable::unit_weights(&["x", "y"]).unwrap())
    }

    #[test]
    fn basic_forms() {
        let g = xy();
        let p = parse_poly("x^2*y - y*x^2", &g).unwrap();
        assert_eq!(p.terms().len(), 2);
        assert_eq!(parse_poly("1", &g).unwrap().constant_coeff(), BigRational::one());
        assert!(parse_poly("0", &g).unwrap().is_zero());
        assert_eq!(parse_poly("x - x", &g).unwrap(), NcPoly::zero(&g));
        let r = parse_poly("1/2*x*y", &g).unwrap();
        assert_eq!(r.terms().len(), 1);
        // 2*1 is the constant 2
        assert_eq!(
            parse_poly("2*1", &g).unwrap().constant_coeff(),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let g = xy();
        match parse_poly("x + z", &g) {
            Err(Error::Parse { pos, .. }) => assert!(pos >= 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly("x ^ 0", &g).is_err());
        assert!(parse_poly("x + ", &g).is_err());
        assert!(parse_poly("1/0", &g).is_err());
        assert!(parse_poly("x y", &g).is_err());
    }
}
