//! Text grammar for polynomials: parsing and canonical formatting.
//!
//! Variables are `x y z w r t u s` (at most eight coordinates). A term is an
//! optional sign, an optional rational coefficient and `*`-separated factors
//! `v` or `v^e`, where `e` is an integer or a parenthesised fraction `(a/b)`.

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, GenPolynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coordinate names, in order.
pub const VARIABLES: [char; 8] = ['x', 'y', 'z', 'w', 'r', 't', 'u', 's'];

/// Largest dimension the text grammar can name.
pub const MAX_TEXT_DIM: usize = VARIABLES.len();

fn var_index(c: char) -> Option<usize> {
    VARIABLES.iter().position(|&v| v == c)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("valid digits"))
    }

    fn unsigned_rational(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.eat(b'/') {
            let den = self.digits()?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    fn exponent(&mut self) -> Result<Rational> {
        if self.eat(b'(') {
            let num = self.signed_integer()?;
            let value = if self.eat(b'/') {
                let den = self.digits()?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Rational::new(num, den)
            } else {
                Rational::from_integer(num)
            };
            if !self.eat(b')') {
                return self.err("expected `)`");
            }
            Ok(value)
        } else {
            Ok(Rational::from_integer(self.signed_integer()?))
        }
    }

    fn factor(&mut self, exps: &mut ExponentVector) -> Result<()> {
        let c = match self.peek() {
            Some(b) => b as char,
            None => return self.err("expected a variable"),
        };
        let i = match var_index(c) {
            Some(i) => i,
            None => return self.err(format!("unexpected `{c}`")),
        };
        if i >= self.dim {
            return Err(Error::VariableOutOfRange { var: c, dim: self.dim });
        }
        self.pos += 1;
        let e = if self.eat(b'^') { self.exponent()? } else { Rational::one() };
        let mut entries = exps.entries().to_vec();
        entries[i] += e;
        *exps = ExponentVector::new(entries);
        Ok(())
    }

    fn term(&mut self, sign: Rational) -> Result<(ExponentVector, Rational)> {
        let mut coeff = sign;
        if self.eat(b'-') {
            coeff = -coeff;
        } else {
            self.eat(b'+');
        }
        let mut exps = ExponentVector::zero(self.dim);
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coeff *= self.unsigned_rational()?;
                if !self.eat(b'*') {
                    return Ok((exps, coeff));
                }
            }
            Some(_) => {}
            None => return self.err("expected a term"),
        }
        self.factor(&mut exps)?;
        while self.eat(b'*') {
            self.factor(&mut exps)?;
        }
        Ok((exps, coeff))
    }

    fn poly(&mut self) -> Result<GenPolynomial> {
        let mut out = GenPolynomial::zero(self.dim);
        let (e, c) = self.term(Rational::one())?;
        out.add_term(e, c);
        loop {
            let sign = if self.eat(b'+') {
                Rational::one()
            } else if self.eat(b'-') {
                -Rational::one()
            } else {
                break;
            };
            let (e, c) = self.term(sign)?;
            out.add_term(e, c);
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(out)
    }
}

/// Parse a polynomial in `dim` coordinates.
pub fn parse_poly(text: &str, dim: usize) -> Result<GenPolynomial> {
    if dim == 0 || dim > MAX_TEXT_DIM {
        return Err(Error::Domain(format!(
            "text grammar supports 1 to {MAX_TEXT_DIM} coordinates, got {dim}"
        )));
    }
    Parser { src: text.as_bytes(), pos: 0, dim }.poly()
}

fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text of a single exponent vector, `1` for the zero vector.
pub fn format_monomial(e: &ExponentVector) -> String {
    let factors: Vec<String> = e
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| {
            let v = VARIABLES.get(i).copied().unwrap_or('?');
            if a.is_one() {
                v.to_string()
            } else if a.is_integer() {
                format!("{v}^{}", a.numer())
            } else {
                format!("{v}^({}/{})", a.numer(), a.denom())
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Canonical text: terms in descending graded order, `1*` elided, `0` for zero.
pub fn format_poly(p: &GenPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if e.is_zero() {
            out.push_str(&format_rational(&a));
        } else {
            if !a.is_one() {
                out.push_str(&format_rational(&a));
                out.push('*');
            }
            out.push_str(&format_monomial(e));
        }
    }
    out
}

/// Canonical text of a rational number.
pub fn format_number(q: &Rational) -> String {
    format_rational(q)
}

/// Parse a rational literal such as `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, dim: 1 };
    let neg = p.eat(b'-');
    let q = p.unsigned_rational()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(if neg { -q } else { q })
}
