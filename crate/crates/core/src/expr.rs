//! Text syntax for polynomials and Ore elements.
//!
//! Grammar: sums and differences of products of powers of atoms, where an
//! atom is an integer, `x`, `y`, `t` (the field generator), an element
//! literal `[c0,c1,…]`, or a parenthesised expression. A whole input of the
//! form `[a0,a1,…]` whose entries are integers or element literals is read
//! as a coefficient vector, low degree first.

use crate::error::{Error, Result};
use crate::gf::{FieldRef, Fq};
use crate::ore::{OreAlgebra, OreElement};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Var(char),
    Elt(Vec<u64>),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s.parse().map_err(|_| Error::parse(start, "number too large"))?;
                out.push((start, Tok::Num(v)));
            }
            'x' | 'y' | 't' => {
                out.push((i, Tok::Var(c)));
                i += 1;
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                out.push((i, Tok::Op(c)));
                i += 1;
            }
            '[' => {
                let start = i;
                let close = chars[i..]
                    .iter()
                    .position(|&ch| ch == ']')
                    .ok_or_else(|| Error::parse(start, "unclosed '['"))?;
                let inner: String = chars[i + 1..i + close].iter().collect();
                let mut coords = Vec::new();
                let mut offset = i + 1;
                for part in inner.split(',') {
                    let v = part
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(offset, format!("invalid coordinate '{}'", part.trim())))?;
                    coords.push(v);
                    offset += part.chars().count() + 1;
                }
                out.push((start, Tok::Elt(coords)));
                i += close + 1;
            }
            _ => return Err(Error::parse(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    alg: &'a OreAlgebra,
    allow_y: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn constant(&self, c: Fq) -> OreElement {
        OreElement::from_poly(&Poly::constant(self.alg.field(), c))
    }

    fn expr(&mut self) -> Result<OreElement> {
        let mut acc = if self.peek() == Some(&Tok::Op('-')) {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<OreElement> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Tok::Op('*')) {
            self.pos += 1;
            let rhs = self.power()?;
            acc = self.alg.mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<OreElement> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            let at = self.here();
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    if e > 1 << 16 {
                        return Err(Error::parse(at, "exponent too large"));
                    }
                    Ok(self.alg.pow(&base, e))
                }
                _ => Err(Error::parse(at, "expected an integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<OreElement> {
        let at = self.here();
        let field = self.alg.field().clone();
        let tok = self.peek().cloned().ok_or_else(|| Error::parse(at, "unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(self.constant(field.from_int((v % field.characteristic() as u64) as i64))),
            Tok::Var('x') => Ok(self.alg.x()),
            Tok::Var('y') if self.allow_y => Ok(self.alg.y()),
            Tok::Var('y') => Err(Error::parse(at, "'y' is not allowed in a polynomial")),
            Tok::Var(_) => Ok(self.constant(field.generator())),
            Tok::Elt(coords) => Ok(self.constant(element(&field, &coords, at)?)),
            Tok::Op('(') => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(Error::parse(self.here(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => Err(Error::parse(at, format!("unexpected '{c}'"))),
        }
    }
}

fn element(field: &FieldRef, coords: &[u64], at: usize) -> Result<Fq> {
    if coords.len() > field.degree() as usize {
        return Err(Error::parse(at, format!("element has more coordinates than {} allows", field.spec())));
    }
    let p = field.characteristic() as u64;
    let reduced: Vec<u32> = coords.iter().map(|&c| (c % p) as u32).collect();
    field.from_coords(&reduced)
}

fn parse_with(alg: &OreAlgebra, text: &str, allow_y: bool) -> Result<OreElement> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut parser = Parser { toks, pos: 0, end: text.chars().count(), alg, allow_y };
    let value = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(Error::parse(parser.here(), "unexpected trailing input"));
    }
    Ok(value)
}

/// Parses an Ore element of `alg`.
pub fn parse_ore(alg: &OreAlgebra, text: &str) -> Result<OreElement> {
    parse_with(alg, text, true)
}

/// Parses a polynomial in `x` (expression or coefficient vector).
pub fn parse_poly(field: &FieldRef, text: &str) -> Result<Poly> {
    if let Some(coeffs) = parse_vector(field, text)? {
        return Ok(Poly::from_coeffs(field, coeffs));
    }
    let alg = OreAlgebra::new(Poly::zero(field))?;
    Ok(parse_with(&alg, text, false)?.coeff(0))
}

fn parse_vector(field: &FieldRef, text: &str) -> Result<Option<Vec<Fq>>> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    if !trimmed.starts_with('[') || !trimmed.ends_with(']') {
        return Ok(None);
    }
    let inner = &trimmed[1..trimmed.len() - 1];
    if inner.trim().is_empty() {
        return Ok(Some(Vec::new()));
    }
    let mut entries = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                entries.push((start, &inner[start..i]));
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Ok(None);
        }
    }
    entries.push((start, &inner[start..]));
    let mut coeffs = Vec::new();
    for (offset, entry) in entries {
        let pos = lead + 1 + offset;
        let e = entry.trim();
        if let Some(body) = e.strip_prefix('[') {
            let body = body.strip_suffix(']').ok_or_else(|| Error::parse(pos, "unclosed '['"))?;
            let coords = body
                .split(',')
                .map(|c| c.trim().parse::<u64>().map_err(|_| Error::parse(pos, format!("invalid coordinate '{}'", c.trim()))))
                .collect::<Result<Vec<_>>>()?;
            coeffs.push(element(field, &coords, pos)?);
        } else {
            let v: i64 = e.parse().map_err(|_| Error::parse(pos, format!("invalid coefficient '{e}'")))?;
            coeffs.push(field.from_int(v));
        }
    }
    Ok(Some(coeffs))
}

impl Poly {
    pub fn parse(field: &FieldRef, text: &str) -> Result<Poly> {
        parse_poly(field, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn polynomial_forms() {
        let k = Field::new(5, 1).unwrap();
        let a = parse_poly(&k, "x^3 + 2*x + 1").unwrap();
        assert_eq!(a, Poly::from_ints(&k, &[1, 2, 0, 1]));
        assert_eq!(parse_poly(&k, "[1,2,0,1]").unwrap(), a);
        assert_eq!(a.to_string(), "x^3 + 2*x + 1");
        let b = parse_poly(&k, "x*(x+1)^2").unwrap();
        assert_eq!(b, Poly::from_ints(&k, &[0, 1, 2, 1]));
        assert_eq!(parse_poly(&k, "-x").unwrap(), Poly::from_ints(&k, &[0, 4]));
    }

    #[test]
    fn extension_coefficients() {
        let k = Field::new(3, 2).unwrap();
        let a = parse_poly(&k, "[1,2]*x^2 + t").unwrap();
        assert_eq!(a.coeff(2), k.from_coords(&[1, 2]).unwrap());
        assert_eq!(a.coeff(0), k.generator());
        assert_eq!(parse_poly(&k, &a.to_string()).unwrap(), a);
        assert_eq!(parse_poly(&k, &a.format_vector()).unwrap(), a);
    }

    #[test]
    fn errors_carry_positions() {
        let k = Field::new(5, 1).unwrap();
        assert_eq!(parse_poly(&k, "x + ?"), Err(Error::parse(4, "unexpected character '?'")));
        assert!(matches!(parse_poly(&k, "x*y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly(&k, "(x+1"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly(&k, "x^"), Err(Error::Parse { pos: 2, .. })));
    }
}
