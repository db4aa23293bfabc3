//! Text format for integer Laurent polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*'? factor)*          juxtaposition multiplies
//! factor := atom ('^' exponent)?
//! atom   := integer | variable | '(' expr ')'
//! exponent := sign? integer | '(' sign? integer ')'
//! ```
//!
//! Negative exponents are allowed on units only (`t^-1`, `(-x)^-2`).

use num_bigint::BigInt;

use super::laurent::{LaurentPoly1, LaurentPoly2};
use crate::error::{Error, Result};

/// Parse a polynomial in `x` and `y`.
pub fn parse_poly2(text: &str) -> Result<LaurentPoly2> {
    Parser::new(text, &['x', 'y']).parse()
}

/// Parse a polynomial in the single variable `var`.
pub fn parse_poly1_in(text: &str, var: char) -> Result<LaurentPoly1> {
    let p = Parser::new(text, &[var]).parse()?;
    Ok(p.map_exponents(|(a, _): (i64, i64)| a))
}

/// Parse a polynomial in `t`.
pub fn parse_poly1(text: &str) -> Result<LaurentPoly1> {
    parse_poly1_in(text, 't')
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [char],
}

impl<'a> Parser<'a> {
    fn new(text: &str, vars: &'a [char]) -> Self {
        Parser {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            vars,
        }
    }

    fn err(&self, what: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        Error::Parse(format!("{what} at position {} (near {rest:?})", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn parse(mut self) -> Result<LaurentPoly2> {
        if self.chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let p = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<LaurentPoly2> {
        let mut acc = LaurentPoly2::zero();
        let mut negate = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(c) => c.is_ascii_digit() || c == '(' || self.vars.contains(&c),
            None => false,
        }
    }

    fn term(&mut self) -> Result<LaurentPoly2> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly2> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        if e >= 0 {
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            let inv = base
                .unit_inverse()
                .ok_or_else(|| self.err("negative exponent on a non-unit"))?;
            let e = u32::try_from(-e).map_err(|_| self.err("exponent too large"))?;
            Ok(inv.pow(e))
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected exponent"));
        }
        let v: i64 = digits.parse().map_err(|_| self.err("exponent too large"))?;
        if paren && self.bump() != Some(')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<LaurentPoly2> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let v: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(LaurentPoly2::constant(v))
            }
            Some(c) => match self.vars.iter().position(|v| *v == c) {
                Some(0) => {
                    self.pos += 1;
                    Ok(LaurentPoly2::x())
                }
                Some(_) => {
                    self.pos += 1;
                    Ok(LaurentPoly2::y())
                }
                None => Err(self.err("unknown symbol")),
            },
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_juxtaposition_and_explicit_products() {
        let a = parse_poly2("x^5y - 2x^5 + x^3y^2").unwrap();
        let b = parse_poly2("x^5*y-2*x^5+x^3*y^2").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff((5, 1)), 1.into());
        assert_eq!(a.coeff((5, 0)), (-2).into());
    }

    #[test]
    fn negative_exponents() {
        let p = parse_poly1("t^-1 - 1 + t").unwrap();
        assert_eq!(p, LaurentPoly1::from_terms([(-1, 1), (0, -1), (1, 1)]));
        assert_eq!(parse_poly1("t^(-2)").unwrap(), LaurentPoly1::monomial(-2, 1));
        assert!(parse_poly1("(t+1)^-1").is_err());
    }

    #[test]
    fn parentheses_expand() {
        let p = parse_poly2("x^5 (y-2) - x^4(y+2)").unwrap();
        let q = parse_poly2("x^5y - 2x^5 - x^4y - 2x^4").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn display_round_trips() {
        let p = parse_poly2("x^6+x^5y-2x^5-x^4y+x^3y^2-2x^4+y^2 - 7").unwrap();
        assert_eq!(parse_poly2(&p.to_string()).unwrap(), p);
        let q = parse_poly1("-t^-3 + 12t^4 - 1").unwrap();
        assert_eq!(parse_poly1(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly2("").is_err());
        assert!(parse_poly2("x^").is_err());
        assert!(parse_poly2("x + z").is_err());
        assert!(parse_poly1("t*x").is_err());
        assert!(parse_poly2("(x+1").is_err());
    }
}
