//! Text grammar for polynomials: terms separated by `+`/`-`, factors joined
//! by `*` (or juxtaposition of declared variables), `^` for powers, and
//! parentheses. Whitespace is insignificant.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::scalar::Scalar;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    toks: Vec<(usize, Tok)>,
}

impl<'a> Lexer<'a> {
    fn run(text: &'a str) -> Result<Vec<(usize, Tok)>> {
        let mut lx = Lexer { src: text.as_bytes(), pos: 0, toks: Vec::new() };
        while lx.pos < lx.src.len() {
            let c = lx.src[lx.pos];
            let start = lx.pos;
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    lx.pos += 1;
                }
                b'+' => lx.push1(Tok::Plus),
                b'-' => lx.push1(Tok::Minus),
                b'*' => lx.push1(Tok::Star),
                b'^' => lx.push1(Tok::Caret),
                b'/' => lx.push1(Tok::Slash),
                b'(' => lx.push1(Tok::LParen),
                b')' => lx.push1(Tok::RParen),
                b'0'..=b'9' => {
                    while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_digit() {
                        lx.pos += 1;
                    }
                    let s = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    lx.toks.push((start, Tok::Num(s.parse().unwrap())));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while lx.pos < lx.src.len()
                        && (lx.src[lx.pos].is_ascii_alphanumeric()
                            || lx.src[lx.pos] == b'_'
                            || lx.src[lx.pos] == b'\'')
                    {
                        lx.pos += 1;
                    }
                    let s = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    lx.toks.push((start, Tok::Ident(s.to_string())));
                }
                other => {
                    return Err(Error::Parse {
                        offset: start,
                        message: format!("unexpected character `{}`", other as char),
                    })
                }
            }
        }
        Ok(lx.toks)
    }

    fn push1(&mut self, t: Tok) {
        self.toks.push((self.pos, t));
        self.pos += 1;
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: Vec<(usize, Tok)>,
    idx: usize,
}

/// Parse `text` as an element of `ring`.
pub fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let toks = Lexer::run(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { offset: 0, message: "empty polynomial".into() });
    }
    let mut p = Parser { ring, toks, idx: 0 };
    let poly = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(Error::Parse {
            offset: p.toks[p.idx].0,
            message: "trailing input".into(),
        });
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.idx).map(|(o, _)| *o).unwrap_or_else(|| {
            self.toks.last().map(|(o, _)| o + 1).unwrap_or(0)
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.idx += 1;
                negate = true;
            }
            Some(Tok::Plus) => {
                self.idx += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// A product of factors, joined by `*` or juxtaposition.
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.idx += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// An atom with an optional `^` power (and `/` for rational literals).
    fn factor(&mut self) -> Result<Polynomial> {
        let offset = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.idx += 1;
                    let off2 = self.offset();
                    match self.bump() {
                        Some(Tok::Num(d)) => {
                            let c = Scalar::from_ratio(self.ring.field(), n, d)
                                .map_err(|e| Error::Parse { offset: off2, message: e.to_string() })?;
                            return Ok(Polynomial::constant(self.ring, c));
                        }
                        _ => {
                            return Err(Error::Parse {
                                offset: off2,
                                message: "expected denominator".into(),
                            })
                        }
                    }
                }
                let mut p = Polynomial::constant(
                    self.ring,
                    Scalar::from_ratio(self.ring.field(), n, BigInt::from(1))
                        .map_err(|e| Error::Parse { offset, message: e.to_string() })?,
                );
                if self.peek() == Some(&Tok::Caret) {
                    self.idx += 1;
                    p = p.pow(self.exponent()?);
                }
                Ok(p)
            }
            Some(Tok::Ident(name)) => {
                let vars = self.split_vars(&name, offset)?;
                let mut p = Polynomial::one(self.ring);
                let last = vars.len() - 1;
                for (i, v) in vars.iter().enumerate() {
                    let mut f = Polynomial::var(self.ring, *v);
                    // a power after a juxtaposed group binds to the last variable
                    if i == last && self.peek() == Some(&Tok::Caret) {
                        self.idx += 1;
                        f = f.pow(self.exponent()?);
                    }
                    p = p.mul(&f);
                }
                Ok(p)
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(Error::Parse {
                        offset: self.offset(),
                        message: "expected `)`".into(),
                    });
                }
                if self.peek() == Some(&Tok::Caret) {
                    self.idx += 1;
                    Ok(inner.pow(self.exponent()?))
                } else {
                    Ok(inner)
                }
            }
            _ => Err(Error::Parse { offset, message: "expected a term".into() }),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let offset = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => n.try_into().map_err(|_| Error::Parse {
                offset,
                message: "exponent too large".into(),
            }),
            _ => Err(Error::Parse { offset, message: "expected an exponent".into() }),
        }
    }

    /// Resolve an identifier to variable indices: either an exact variable
    /// name or a juxtaposition of declared names (longest match first).
    fn split_vars(&self, name: &str, offset: usize) -> Result<Vec<usize>> {
        if let Some(i) = self.ring.var_index(name) {
            return Ok(vec![i]);
        }
        let mut out = Vec::new();
        let mut rest = name;
        'outer: while !rest.is_empty() {
            let mut candidates: Vec<&String> = self
                .ring
                .vars()
                .iter()
                .filter(|v| rest.starts_with(v.as_str()))
                .collect();
            candidates.sort_by_key(|v| std::cmp::Reverse(v.len()));
            for c in candidates {
                out.push(self.ring.var_index(c).unwrap());
                rest = &rest[c.len()..];
                continue 'outer;
            }
            return Err(Error::Parse {
                offset,
                message: format!("unknown variable `{}`", name),
            });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::scalar::Field;

    fn ring() -> PolyRing {
        PolyRing::new(&["u", "v", "t", "w"], Field::Rationals, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn parse_basic() {
        let r = ring();
        let f = parse_polynomial(&r, "u*w - t*v").unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.degree(), Some(2));
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
    }

    #[test]
    fn parse_binomial_power() {
        let r = ring();
        let f = parse_polynomial(&r, "(u+v)^2").unwrap();
        let g = parse_polynomial(&r, "u^2 + 2*u*v + v^2").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn juxtaposition() {
        let r = ring();
        assert_eq!(
            parse_polynomial(&r, "uw - tv").unwrap(),
            parse_polynomial(&r, "u*w - t*v").unwrap()
        );
        // power binds to the last juxtaposed variable
        assert_eq!(
            parse_polynomial(&r, "ut^2").unwrap(),
            parse_polynomial(&r, "u*t^2").unwrap()
        );
        assert_eq!(
            parse_polynomial(&r, "2u").unwrap(),
            parse_polynomial(&r, "2*u").unwrap()
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let r = ring();
        match parse_polynomial(&r, "u + q") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
        assert!(parse_polynomial(&r, "u +").is_err());
        assert!(parse_polynomial(&r, "(u").is_err());
    }

    #[test]
    fn rational_coefficients() {
        let r = ring();
        let f = parse_polynomial(&r, "1/2*u + 3/4").unwrap();
        assert_eq!(format!("{}", f), "1/2*u + 3/4");
    }

    #[test]
    fn format_parse_round_trip() {
        let r = ring();
        for text in ["u*w - t*v", "u^2 - 2*v + 7", "-u + 1/3", "0", "u*v*t*w - 1"] {
            let f = parse_polynomial(&r, text).unwrap();
            let g = parse_polynomial(&r, &format!("{}", f)).unwrap();
            assert_eq!(f, g);
        }
    }
}
