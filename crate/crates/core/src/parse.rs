//! Text syntax for field elements, polynomials and register states.
//!
//! ```text
//! elem  := decimal | "[" decimal ("," decimal)* "]"
//! poly  := "coeffs:" elem ("," elem)*
//!        | term ("+" term)*
//! term  := elem ["*"] "x" ["^" decimal] | elem | "x" ["^" decimal]
//! state := "(" elem ("," elem)* ")"
//! ```
//!
//! Whitespace is allowed between tokens. Bracketed tuples list coefficients
//! constant term first and must have exactly `m` entries. A bare decimal
//! denotes an element of the prime subfield.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::Poly;

/// Largest exponent accepted by the polynomial parser.
pub const MAX_PARSED_DEGREE: usize = 1 << 16;

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn decimal(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a decimal number"));
        }
        self.text[start..self.pos]
            .parse::<u64>()
            .map_err(|_| Error::Parse { pos: start, msg: "number too large".into() })
    }

    fn elem(&mut self, f: &Field) -> Result<Elem> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let mut coeffs = vec![self.decimal()?];
                while self.eat(b',') {
                    coeffs.push(self.decimal()?);
                }
                self.expect(b']')?;
                f.from_coeffs(&coeffs)
            }
            Some(b) if b.is_ascii_digit() => {
                let v = self.decimal()?;
                if v >= f.p() {
                    return Err(Error::Domain(format!(
                        "coefficient {v} out of range for p = {}",
                        f.p()
                    )));
                }
                Ok(f.from_int(v as i64))
            }
            _ => Err(self.error("expected a field element")),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let start = self.pos;
        let k = self.decimal()?;
        if k > MAX_PARSED_DEGREE as u64 {
            return Err(Error::Parse {
                pos: start,
                msg: format!("exponent {k} exceeds {MAX_PARSED_DEGREE}"),
            });
        }
        Ok(k as usize)
    }

    fn term(&mut self, f: &Field) -> Result<(Elem, usize)> {
        if self.peek() == Some(b'x') {
            self.pos += 1;
            return Ok((f.one(), self.exponent()?));
        }
        let c = self.elem(f)?;
        let starred = self.eat(b'*');
        if self.peek() == Some(b'x') {
            self.pos += 1;
            Ok((c, self.exponent()?))
        } else if starred {
            Err(self.error("expected 'x' after '*'"))
        } else {
            Ok((c, 0))
        }
    }
}

pub fn parse_elem(text: &str, f: &Field) -> Result<Elem> {
    let mut cur = Cursor::new(text);
    let e = cur.elem(f)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(e)
}

pub fn parse_poly(text: &str, f: &Field) -> Result<Poly> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.text[cur.pos..].starts_with("coeffs:") {
        cur.pos += "coeffs:".len();
        let mut coeffs = vec![cur.elem(f)?];
        while cur.eat(b',') {
            if coeffs.len() > MAX_PARSED_DEGREE {
                return Err(cur.error("too many coefficients"));
            }
            coeffs.push(cur.elem(f)?);
        }
        if !cur.at_end() {
            return Err(cur.error("trailing input"));
        }
        return Ok(Poly::new(coeffs));
    }
    let mut coeffs: Vec<Elem> = Vec::new();
    loop {
        let (c, k) = cur.term(f)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Elem::ZERO);
        }
        coeffs[k] = f.add(coeffs[k], c);
        if cur.at_end() {
            break;
        }
        cur.expect(b'+')?;
    }
    Ok(Poly::new(coeffs))
}

/// Parses `(e0,e1,...)`.
pub fn parse_state(text: &str, f: &Field) -> Result<Vec<Elem>> {
    let mut cur = Cursor::new(text);
    cur.expect(b'(')?;
    let mut out = vec![cur.elem(f)?];
    while cur.eat(b',') {
        out.push(cur.elem(f)?);
    }
    cur.expect(b')')?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(out)
}

/// Renders entries as `(e0,e1,...)`.
pub fn render_state(entries: &[Elem], f: &Field) -> String {
    let parts: Vec<String> = entries.iter().map(|&e| f.render(e)).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn polynomials() {
        let f = gf3();
        let g = parse_poly("x^3+2x+2", &f).unwrap();
        assert_eq!(g, Poly::from_ints(&f, &[2, 2, 0, 1]));
        assert_eq!(parse_poly("1", &f).unwrap(), Poly::one(&f));
        assert_eq!(parse_poly(" x ^ 3 + 2 * x + 2 ", &f).unwrap(), g);
        assert_eq!(parse_poly("2 x + x^3 + 2", &f).unwrap(), g);
        assert_eq!(parse_poly("coeffs:2,2,0,1", &f).unwrap(), g);
        let big = parse_poly(
            "x^16+2x^15+x^14+2x^13+x^12+x^11+x^9+x^8+x^7+x^5+x^4+2x^3+x^2+2x+1",
            &f,
        )
        .unwrap();
        let expected = Poly::from_ints(&f, &[1, 0, 1])
            .mul(&Poly::from_ints(&f, &[2, 2, 0, 1]), &f)
            .mul(&Poly::from_ints(&f, &[2, 0, 1, 1]), &f)
            .pow(2, &f);
        assert_eq!(big, expected);
        // like terms combine
        assert_eq!(parse_poly("x+x+x", &f).unwrap(), Poly::zero());
    }

    #[test]
    fn polynomial_errors() {
        let f = gf3();
        assert!(matches!(parse_poly("", &f), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x^", &f), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x+", &f), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("2*", &f), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("y", &f), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("x^99999999", &f), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("3x", &f), Err(Error::Domain(_))));
        assert!(matches!(parse_poly("x 2", &f), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn extension_elements() {
        let f = Field::new(2, 2, None).unwrap();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(parse_elem("[0,1]", &f).unwrap(), t);
        assert_eq!(parse_elem("1", &f).unwrap(), f.one());
        assert!(matches!(parse_elem("[0,1,1]", &f), Err(Error::Domain(_))));
        assert!(matches!(parse_elem("[0,2]", &f), Err(Error::Domain(_))));
        let g = parse_poly("[0,1]x^2+x+1", &f).unwrap();
        assert_eq!(g, Poly::new(vec![f.one(), f.one(), t]));
        assert_eq!(parse_poly(&g.render(&f), &f).unwrap(), g);
    }

    #[test]
    fn states() {
        let f = gf3();
        let s = parse_state("(1,0, 0)", &f).unwrap();
        assert_eq!(s, vec![f.one(), f.zero(), f.zero()]);
        assert_eq!(render_state(&s, &f), "(1,0,0)");
        assert!(parse_state("()", &f).is_err());
        assert!(parse_state("(1,0", &f).is_err());
        assert!(parse_state("(1,0))", &f).is_err());
    }
}
