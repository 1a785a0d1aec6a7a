//! Text input for polynomials over `F_p` and `R = F_p + vF_p`.
//!
//! Two syntaxes are accepted:
//! - comma-separated coefficients, constant term first: `1,-1,1,-1,1`
//!   (entries may themselves be ring constants such as `2v-1`);
//! - expressions in `x` and `v` with `+ - * ^`, parentheses and implicit
//!   multiplication: `x^4-x^3+x^2-x+1`, `x^4+(2v-1)x^3+(1-v)x^2-x+1`,
//!   `v(x^4+x^3-x+1)+(1-v)(x^4-x^3+x^2-x+1)`.

use crate::error::{Error, Result};
use crate::fppoly::{Poly, PrimeField};

/// Parses a polynomial over `R`, returning its projections `(sigma, tau)`.
pub fn parse_rpoly(field: PrimeField, s: &str) -> Result<(Poly, Poly)> {
    let s = s.replace('\u{2212}', "-");
    if s.contains(',') {
        let mut sigma = Vec::new();
        let mut tau = Vec::new();
        for piece in s.split(',') {
            let (ps, pt) = Parser::new(field, piece)?.finish()?;
            if ps.degree().unwrap_or(0) > 0 || pt.degree().unwrap_or(0) > 0 {
                return Err(Error::Parse(format!(
                    "coefficient {piece:?} must be a constant"
                )));
            }
            sigma.push(ps.coeff(0));
            tau.push(pt.coeff(0));
        }
        return Ok((Poly::new(field, sigma), Poly::new(field, tau)));
    }
    Parser::new(field, &s)?.finish()
}

/// Parses a polynomial over `F_p`; rejects input that involves `v`.
pub fn parse_poly(field: PrimeField, s: &str) -> Result<Poly> {
    let (sigma, tau) = parse_rpoly(field, s)?;
    if sigma != tau {
        return Err(Error::Parse(format!(
            "{s:?} has coefficients outside F_{}",
            field.p()
        )));
    }
    Ok(sigma)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(u64),
    X,
    V,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse(format!("number too large in {s:?}")))?;
                    chars.next();
                }
                out.push(Token::Num(n));
            }
            _ => {
                chars.next();
                out.push(match c {
                    'x' | 'X' => Token::X,
                    'v' | 'V' => Token::V,
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    ')' => Token::Close,
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} in {s:?}"
                        )))
                    }
                });
            }
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(out)
}

type Value = (Poly, Poly);

struct Parser {
    field: PrimeField,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(field: PrimeField, s: &str) -> Result<Self> {
        Ok(Self {
            field,
            tokens: tokenize(s)?,
            pos: 0,
        })
    }

    fn finish(mut self) -> Result<Value> {
        let v = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err(Error::Parse(format!(
                "trailing input at token {}",
                self.pos
            )));
        }
        Ok(v)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Value> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                negate = true;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = (-&acc.0, -&acc.1);
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = (&acc.0 + &t.0, &acc.1 + &t.1);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = (&acc.0 - &t.0, &acc.1 - &t.1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                }
                Some(Token::Num(_) | Token::X | Token::V | Token::Open) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = (&acc.0 * &f.0, &acc.1 * &f.1);
        }
    }

    fn factor(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let Some(Token::Num(e)) = self.next() else {
                return Err(Error::Parse("expected integer exponent after '^'".into()));
            };
            let mut acc = (Poly::one(self.field), Poly::one(self.field));
            for _ in 0..e {
                acc = (&acc.0 * &base.0, &acc.1 * &base.1);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value> {
        let f = self.field;
        match self.next() {
            Some(Token::Num(n)) => {
                let c = Poly::constant(f, n % f.p());
                Ok((c.clone(), c))
            }
            Some(Token::X) => Ok((Poly::x(f), Poly::x(f))),
            Some(Token::V) => Ok((Poly::one(f), Poly::zero(f))),
            Some(Token::Open) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(v),
                    _ => Err(Error::Parse("unbalanced parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn coefficient_list_and_expression_agree() {
        let a = parse_poly(f3(), "1,-1,1,-1,1").unwrap();
        let b = parse_poly(f3(), "x^4-x^3+x^2-x+1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "x^4-x^3+x^2-x+1");
    }

    #[test]
    fn ring_expression_forms_agree() {
        let expanded = parse_rpoly(f3(), "x^4+(2v-1)x^3+(1-v)x^2-x+1").unwrap();
        let split = parse_rpoly(f3(), "v(x^4+x^3-x+1)+(1-v)(x^4-x^3+x^2-x+1)").unwrap();
        assert_eq!(expanded, split);
        assert_eq!(expanded.0, parse_poly(f3(), "x^4+x^3-x+1").unwrap());
        assert_eq!(expanded.1, parse_poly(f3(), "x^4-x^3+x^2-x+1").unwrap());
        let listed = parse_rpoly(f3(), "1,-1,1-v,2v-1,1").unwrap();
        assert_eq!(listed, expanded);
    }

    #[test]
    fn unicode_minus_and_stars() {
        let a = parse_poly(f3(), "2*x^2 \u{2212} 1").unwrap();
        assert_eq!(a, Poly::from_i64(f3(), &[-1, 0, 2]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly(f3(), "").is_err());
        assert!(parse_poly(f3(), "x^").is_err());
        assert!(parse_poly(f3(), "(x+1").is_err());
        assert!(parse_poly(f3(), "y+1").is_err());
        assert!(parse_poly(f3(), "v+1").is_err());
        assert!(parse_rpoly(f3(), "x,1").is_err());
    }
}
