//! Text grammar: terms joined by `+`/`-`; a term is an optional coefficient (integer or
//! fraction), an optional `*`, and variable powers `x3^2` or divided powers `x3^[2]`.
//! Variables `x0..xN` and `y1..yN` are primal, `a0..aN` dual.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Flavor, Monomial, Poly, Ring};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line, _src: src }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: self.line, column: self.pos + 1, message: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }
}

fn reduce_decimal(f: &PrimeField, s: &str) -> Scalar {
    s.bytes().fold(0, |acc, b| f.add(f.mul(acc, 10), (b - b'0') as u32 % f.p()))
}

fn small_number(c: &Cursor, s: &str) -> Result<u32> {
    match s.parse::<u32>() {
        Ok(v) if v < 256 => Ok(v),
        _ => c.err(alloc::format!("number {s} too large here")),
    }
}

struct Factor {
    flavor: Flavor,
    index: u32,
    exp: u32,
    divided: bool,
}

fn parse_factor(c: &mut Cursor) -> Result<Option<Factor>> {
    let flavor = match c.peek() {
        Some('x') | Some('y') => Flavor::Primal,
        Some('a') => Flavor::Dual,
        _ => return Ok(None),
    };
    c.pos += 1;
    let Some(idx) = c.digits() else {
        return c.err("expected a variable index");
    };
    let index = small_number(c, &idx)?;
    let (mut exp, mut divided) = (1, false);
    c.skip_ws();
    if c.eat('^') {
        c.skip_ws();
        if c.eat('[') {
            c.skip_ws();
            let Some(e) = c.digits() else {
                return c.err("expected a divided-power exponent");
            };
            exp = small_number(c, &e)?;
            c.skip_ws();
            if !c.eat(']') {
                return c.err("expected `]`");
            }
            divided = true;
        } else {
            let Some(e) = c.digits() else {
                return c.err("expected an exponent");
            };
            exp = small_number(c, &e)?;
        }
    }
    Ok(Some(Factor { flavor, index, exp, divided }))
}

fn parse_line(text: &str, line: usize, ring: &Ring) -> Result<Poly> {
    let f = *ring.field();
    let mut c = Cursor::new(text, line);
    let mut out = Poly::zero(*ring);
    c.skip_ws();
    let mut negative = c.sign().unwrap_or(false);
    loop {
        c.skip_ws();
        let mut coeff: Scalar = 1;
        let mut saw_anything = false;
        if let Some(num) = c.digits() {
            coeff = reduce_decimal(&f, &num);
            saw_anything = true;
            c.skip_ws();
            if c.eat('/') {
                c.skip_ws();
                let Some(den) = c.digits() else {
                    return c.err("expected a denominator");
                };
                let d = reduce_decimal(&f, &den);
                if d == 0 {
                    return c.err("denominator vanishes modulo p");
                }
                coeff = f.mul(coeff, f.inv(d));
            }
        }
        let mut mono = Monomial::ONE;
        loop {
            c.skip_ws();
            let star = c.eat('*');
            if star && !saw_anything {
                c.pos -= 1;
                return c.err("`*` without a left operand");
            }
            c.skip_ws();
            let start = c.pos;
            match parse_factor(&mut c)? {
                Some(fac) => {
                    if fac.flavor != ring.flavor() {
                        c.pos = start;
                        return c.err("variable flavor does not match the ring");
                    }
                    let first = ring.first_index() as u32;
                    if fac.index < first || fac.index >= first + ring.nvars() as u32 {
                        c.pos = start;
                        return c.err(alloc::format!(
                            "variable index {} outside {}..{}",
                            fac.index,
                            first,
                            first + ring.nvars() as u32 - 1
                        ));
                    }
                    let slot = (fac.index - first) as usize;
                    let e = mono.get(slot) + fac.exp;
                    if e > 255 {
                        return c.err("exponent too large");
                    }
                    mono.set(slot, e);
                    if fac.divided {
                        coeff = f.mul(coeff, f.inv(f.factorial(fac.exp)));
                    }
                    saw_anything = true;
                }
                None => {
                    if star {
                        return c.err("expected a variable after `*`");
                    }
                    break;
                }
            }
        }
        if !saw_anything {
            return c.err("expected a term");
        }
        if mono.degree() > f.budget() {
            return c.err(alloc::format!(
                "term degree {} exceeds the degree budget {}",
                mono.degree(),
                f.budget()
            ));
        }
        out.add_term(mono, if negative { f.neg(coeff) } else { coeff });
        c.skip_ws();
        match c.sign() {
            Some(neg) => negative = neg,
            None if c.peek().is_none() => break,
            None => return c.err(alloc::format!("unexpected character `{}`", c.peek().unwrap())),
        }
    }
    Ok(out)
}

/// Parse a single polynomial; the text may not contain line breaks.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    if text.trim().is_empty() {
        return Err(Error::Parse { line: 1, column: 1, message: "empty input".to_string() });
    }
    parse_line(text, 1, ring)
}

/// One polynomial per nonblank line; `#` starts a comment.
pub fn parse_lines(text: &str, ring: &Ring) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_line(line, i + 1, ring)?);
    }
    if out.is_empty() {
        return Err(Error::Parse { line: 1, column: 1, message: "no polynomial found".to_string() });
    }
    Ok(out)
}

/// Variable indices seen in a text, used to size rings before parsing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VariableScan {
    pub primal: Option<(u32, u32)>,
    pub dual: Option<(u32, u32)>,
}

pub fn scan_variables(text: &str) -> VariableScan {
    let mut scan = VariableScan::default();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut in_comment = false;
    while i < chars.len() {
        let ch = chars[i];
        if ch == '\n' {
            in_comment = false;
        }
        if ch == '#' {
            in_comment = true;
        }
        let prev_alnum = i > 0 && chars[i - 1].is_ascii_alphanumeric();
        if !in_comment && !prev_alnum && matches!(ch, 'x' | 'y' | 'a') {
            let mut j = i + 1;
            let mut v: u32 = 0;
            while j < chars.len() && chars[j].is_ascii_digit() {
                v = v.saturating_mul(10).saturating_add(chars[j] as u32 - '0' as u32);
                j += 1;
            }
            if j > i + 1 {
                let slot = if ch == 'a' { &mut scan.dual } else { &mut scan.primal };
                *slot = Some(match *slot {
                    Some((lo, hi)) => (lo.min(v), hi.max(v)),
                    None => (v, v),
                });
                i = j;
                continue;
            }
        }
        i += 1;
    }
    scan
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Ring {
        Ring::affine(PrimeField::default(), 2).unwrap()
    }

    #[test]
    fn divided_powers_scale_by_inverse_factorial() {
        let r = s2();
        let f = r.field();
        let a = parse_poly("x1^[2] + x1*x2", &r).unwrap();
        let b = parse_poly("x1^2 * 1/2 + x1*x2", &r);
        assert!(b.is_err());
        let c = Poly::from_terms(
            r,
            [(Monomial::from_exps(&[2, 0]), f.inv(2)), (Monomial::from_exps(&[1, 1]), 1)],
        );
        assert_eq!(a, c);
        let d = parse_poly("1/2 x1^2 + x1 x2", &r).unwrap();
        assert_eq!(a, d);
    }

    #[test]
    fn errors_carry_positions() {
        let r = s2();
        match parse_poly("x1 + x3", &r) {
            Err(Error::Parse { line: 1, column: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_lines("\n  \n", &r).is_err());
        assert!(parse_poly("a1 + x1", &r).is_err());
        assert!(parse_poly("x1 +", &r).is_err());
        match parse_lines("x1\nx2 ^", &r) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dangling_star() {
        let r = Ring::affine(PrimeField::default(), 2).unwrap();
        assert!(parse_poly("x1^2 + * x2", &r).unwrap_err().is_parse());
        assert!(parse_poly("*x1", &r).unwrap_err().is_parse());
        assert_eq!(parse_poly("3 * x1", &r).unwrap(), parse_poly("3x1", &r).unwrap());
    }

    #[test]
    fn budget_enforced() {
        let f = PrimeField::new(7919, 5).unwrap();
        let r = Ring::affine(f, 2).unwrap();
        assert!(parse_poly("x1^6", &r).is_err());
        assert!(parse_poly("x1^5", &r).is_ok());
    }

    #[test]
    fn y_variables_alias_primal() {
        let r = s2();
        assert_eq!(parse_poly("y1*y2 - 3", &r).unwrap(), parse_poly("x1*x2 - 3", &r).unwrap());
        assert_eq!(parse_poly("-x1 \u{2212} x2", &r).unwrap(), parse_poly("-x1 - x2", &r).unwrap());
    }

    #[test]
    fn scan_finds_index_ranges() {
        let s = scan_variables("x0^6 + x1^2*x6 # a9\n a2*y3");
        assert_eq!(s.primal, Some((0, 6)));
        assert_eq!(s.dual, Some((2, 2)));
    }
}
