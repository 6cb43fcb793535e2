//! Parser for the polynomial text grammar.
//!
//! Grammar: integer literals, variables x, y, k, operators + - * / ^ and
//! parentheses. Juxtaposition multiplies ("2kx^2"). Division is restricted
//! to monomial divisors (so "1/x", "1/y" Laurent terms and rational literals
//! like "3/2" work); the result is cleared to a polynomial by multiplying by
//! the minimal monomial, which leaves Mahler measures unchanged.

use super::parampoly::ParamPoly;
use super::unipoly::UniPoly;
use crate::{Error, Rat, Result};
use num_traits::One;
use std::collections::BTreeMap;

/// Laurent polynomial in x, y with Q[k] coefficients (intermediate value).
#[derive(Clone, Debug)]
struct Laurent {
    terms: BTreeMap<(i64, i64), UniPoly>,
}

impl Laurent {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
    fn constant(c: UniPoly) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert((0, 0), c);
        }
        Laurent { terms: t }
    }
    fn var_x() -> Self {
        let mut t = BTreeMap::new();
        t.insert((1, 0), UniPoly::one());
        Laurent { terms: t }
    }
    fn var_y() -> Self {
        let mut t = BTreeMap::new();
        t.insert((0, 1), UniPoly::one());
        Laurent { terms: t }
    }
    fn insert(&mut self, e: (i64, i64), c: UniPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(UniPoly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
    fn add(&self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.insert(e, c.clone());
        }
        out
    }
    fn neg(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
    fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                out.insert((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
    /// Some((exponents, coeff)) if this is a single monomial.
    fn as_monomial(&self) -> Option<((i64, i64), UniPoly)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        Some((e, c.clone()))
    }
    fn pow(&self, e: u32) -> Laurent {
        let mut acc = Laurent::constant(UniPoly::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>, // token, line, col
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer> {
    let mut toks = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, col);
        match ch {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
                col += 1;
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let n: num_bigint::BigInt = s.parse().map_err(|_| Error::SyntaxError {
                    line: l,
                    col: c,
                    msg: format!("bad integer literal '{s}'"),
                })?;
                toks.push((Tok::Num(Rat::from_integer(n)), l, c));
            }
            'x' | 'y' | 'k' => {
                toks.push((Tok::Var(ch), l, c));
                chars.next();
                col += 1;
            }
            '+' => {
                toks.push((Tok::Plus, l, c));
                chars.next();
                col += 1;
            }
            '-' | '\u{2212}' => {
                toks.push((Tok::Minus, l, c));
                chars.next();
                col += 1;
            }
            '*' => {
                toks.push((Tok::Star, l, c));
                chars.next();
                col += 1;
            }
            '/' => {
                toks.push((Tok::Slash, l, c));
                chars.next();
                col += 1;
            }
            '^' => {
                toks.push((Tok::Caret, l, c));
                chars.next();
                col += 1;
            }
            '(' => {
                toks.push((Tok::LParen, l, c));
                chars.next();
                col += 1;
            }
            ')' => {
                toks.push((Tok::RParen, l, c));
                chars.next();
                col += 1;
            }
            other => {
                return Err(Error::SyntaxError {
                    line: l,
                    col: c,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }
    fn loc(&self) -> (usize, usize) {
        self.toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((1, 1))
    }
    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }
    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.loc();
        Error::SyntaxError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

// expr := term (("+"|"-") term)*
fn parse_expr(lx: &mut Lexer) -> Result<Laurent> {
    let mut acc = parse_term(lx)?;
    loop {
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.next();
                acc = acc.add(&parse_term(lx)?);
            }
            Some(Tok::Minus) => {
                lx.next();
                acc = acc.add(&parse_term(lx)?.neg());
            }
            _ => return Ok(acc),
        }
    }
}

// term := factor (("*" factor) | ("/" factor) | factor)*   (juxtaposition)
fn parse_term(lx: &mut Lexer) -> Result<Laurent> {
    let mut acc = parse_factor(lx)?;
    loop {
        match lx.peek() {
            Some(Tok::Star) => {
                lx.next();
                acc = acc.mul(&parse_factor(lx)?);
            }
            Some(Tok::Slash) => {
                lx.next();
                let rhs = parse_factor(lx)?;
                let ((i, j), c) = rhs
                    .as_monomial()
                    .ok_or_else(|| lx.err("division only by monomials (e.g. 1/x, 3/2)"))?;
                if !c.is_constant() {
                    return Err(lx.err("division by k-dependent coefficient"));
                }
                let inv = Laurent {
                    terms: [((-i, -j), UniPoly::constant(Rat::one() / c.coeff(0)))]
                        .into_iter()
                        .collect(),
                };
                acc = acc.mul(&inv);
            }
            Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                acc = acc.mul(&parse_factor(lx)?);
            }
            _ => return Ok(acc),
        }
    }
}

// factor := ("-" factor) | primary ("^" ["-"] integer)?
fn parse_factor(lx: &mut Lexer) -> Result<Laurent> {
    if let Some(Tok::Minus) = lx.peek() {
        lx.next();
        return Ok(parse_factor(lx)?.neg());
    }
    let base = parse_primary(lx)?;
    if let Some(Tok::Caret) = lx.peek() {
        lx.next();
        let mut negative = false;
        if let Some(Tok::Minus) = lx.peek() {
            lx.next();
            negative = true;
        }
        let e = match lx.next() {
            Some(Tok::Num(n)) if n.is_integer() => n,
            _ => return Err(lx.err("exponent must be an integer")),
        };
        let e: u32 = e
            .to_integer()
            .try_into()
            .map_err(|_| lx.err("exponent too large"))?;
        if negative {
            let ((i, j), c) = base
                .as_monomial()
                .ok_or_else(|| lx.err("negative exponent only on monomials"))?;
            if !c.is_constant() {
                return Err(lx.err("negative exponent on k-dependent coefficient"));
            }
            let v = c.coeff(0);
            let mut inv_c = Rat::one();
            for _ in 0..e {
                inv_c = inv_c / &v;
            }
            return Ok(Laurent {
                terms: [
                    ((-(i * e as i64), -(j * e as i64)), UniPoly::constant(inv_c)),
                ]
                .into_iter()
                .collect(),
            });
        }
        return Ok(base.pow(e));
    }
    Ok(base)
}

fn parse_primary(lx: &mut Lexer) -> Result<Laurent> {
    match lx.next() {
        Some(Tok::Num(n)) => Ok(Laurent::constant(UniPoly::constant(n))),
        Some(Tok::Var('x')) => Ok(Laurent::var_x()),
        Some(Tok::Var('y')) => Ok(Laurent::var_y()),
        Some(Tok::Var('k')) => Ok(Laurent::constant(UniPoly::var())),
        Some(Tok::LParen) => {
            let e = parse_expr(lx)?;
            match lx.next() {
                Some(Tok::RParen) => Ok(e),
                _ => Err(lx.err("expected ')'")),
            }
        }
        Some(t) => Err(lx.err(format!("unexpected token {t:?}"))),
        None => Err(lx.err("unexpected end of input")),
    }
}

/// Parse polynomial text into a ParamPoly. Laurent terms are cleared by the
/// minimal monomial.
pub fn parse_poly(text: &str) -> Result<ParamPoly> {
    let mut lx = lex(text)?;
    if lx.toks.is_empty() {
        return Err(Error::SyntaxError {
            line: 1,
            col: 1,
            msg: "empty input".into(),
        });
    }
    let l = parse_expr(&mut lx)?;
    if lx.pos != lx.toks.len() {
        return Err(lx.err("trailing input"));
    }
    // clear Laurent terms
    let minx = l.terms.keys().map(|&(i, _)| i).min().unwrap_or(0).min(0);
    let miny = l.terms.keys().map(|&(_, j)| j).min().unwrap_or(0).min(0);
    Ok(ParamPoly::from_terms(l.terms.into_iter().map(
        |((i, j), c)| (((i - minx) as u32, (j - miny) as u32), c),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::print::format_parampoly;

    #[test]
    fn parse_boyd() {
        let p = parse_poly("y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4").unwrap();
        assert_eq!(p.y_degree(), 2);
        assert_eq!(p.x_degree(), 4);
        assert_eq!(p.terms().len(), 7);
        // implicit multiplication variant parses to the same polynomial
        let q = parse_poly("y^2 + (x^4 + kx^3 + 2kx^2 + kx + 1)y + x^4").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_deninger_laurent() {
        // x + 1/x + y + 1/y + (k-4), cleared by x*y
        let p = parse_poly("x + 1/x + y + 1/y + (k - 4)").unwrap();
        assert_eq!(p.x_degree(), 2);
        assert_eq!(p.y_degree(), 2);
        // x^2 y + y^2 x + y + x + (k-4) x y
        let q = parse_poly("x^2*y + x*y^2 + y + x + (k-4)*x*y").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn roundtrip_print_parse() {
        for text in [
            "y^2 + (x^4 + k*x^3 + 2*k*x^2 + k*x + 1)*y + x^4",
            "x + y + 1",
            "(x^2+x+1)^2*(y^2+1) + (2*x^4 + k*x^3 + (2*k - 2)*x^2 + k*x + 2)*y",
            "3/2*x^2*y - k*x + 7",
            "x + 1/x + y + 1/y + (k-4)",
        ] {
            let p = parse_poly(text).unwrap();
            let printed = format_parampoly(&p);
            let q = parse_poly(&printed).unwrap();
            assert_eq!(p, q, "roundtrip failed for {text} -> {printed}");
        }
    }

    #[test]
    fn error_positions() {
        match parse_poly("x + @") {
            Err(Error::SyntaxError { line: 1, col, .. }) => assert_eq!(col, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_poly("1/(x+1)").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x + ").is_err());
    }
}
