//! Polynomials in the free algebra over a generator list, with coefficients
//! `c h^k`, and a small parser for their text form.

use std::collections::BTreeMap;

use crate::scalar::{RadicalSum, Rational};

use super::Slh2Error;

pub type Word = Vec<u8>;

/// `sum c h^k w` with `w` a word in generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreePoly {
    terms: BTreeMap<(Word, usize), RadicalSum>,
}

impl FreePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: RadicalSum) -> Self {
        Self::term(Vec::new(), 0, c)
    }

    pub fn term(w: Word, k: usize, c: RadicalSum) -> Self {
        let mut p = Self::zero();
        p.add_term(w, k, c);
        p
    }

    pub fn generator(g: u8) -> Self {
        Self::term(vec![g], 0, RadicalSum::one())
    }

    pub fn add_term(&mut self, w: Word, k: usize, c: RadicalSum) {
        if c.is_zero() {
            return;
        }
        let key = (w, k);
        let sum = match self.terms.remove(&key) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// Terms as `(word, h power, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, usize, &RadicalSum)> {
        self.terms.iter().map(|((w, k), c)| (w, *k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((w, k), c) in &rhs.terms {
            out.add_term(w.clone(), *k, c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &RadicalSum) -> Self {
        let mut out = Self::zero();
        for ((w, k), d) in &self.terms {
            out.add_term(w.clone(), *k, d * c);
        }
        out
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.scaled(&RadicalSum::from_int(-1)))
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((w1, k1), c1) in &self.terms {
            for ((w2, k2), c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, k1 + k2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(RadicalSum::one()), |acc, _| acc.times(self))
    }

    /// Parses expressions such as `x*v + h*v^2`, `u^2 + h*u*(x + y + h*v)` or
    /// `sqrt(2)*(u*x + h*u*v)`. Products are noncommutative; `h` and numbers
    /// are central.
    pub fn parse(text: &str, gens: &[&str]) -> Result<Self, Slh2Error> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            gens,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [&'a str],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Slh2Error {
        Slh2Error::Parse {
            text: String::from_utf8_lossy(self.src).into_owned(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<FreePoly, Slh2Error> {
        let mut acc = FreePoly::zero();
        let mut sign = 1;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let t = self.term()?;
            acc = acc.plus(&t.scaled(&RadicalSum::from_int(sign)));
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<FreePoly, Slh2Error> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.times(&self.factor()?);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32, Slh2Error> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let digits = self.digits();
        digits
            .parse()
            .map_err(|_| self.error("expected an exponent"))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn factor(&mut self) -> Result<FreePoly, Slh2Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e.pow(self.exponent()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: i64 = self
                    .digits()
                    .parse()
                    .map_err(|_| self.error("bad integer"))?;
                let mut q = Rational::from_integer(n.into());
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d: i64 = self
                        .digits()
                        .parse()
                        .map_err(|_| self.error("bad denominator"))?;
                    if d == 0 {
                        return Err(self.error("zero denominator"));
                    }
                    q /= Rational::from_integer(d.into());
                }
                Ok(FreePoly::constant(RadicalSum::from_rational(q)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                if name == "sqrt" {
                    if self.peek() != Some(b'(') {
                        return Err(self.error("expected '(' after sqrt"));
                    }
                    self.pos += 1;
                    self.skip_ws();
                    let n: u64 = self
                        .digits()
                        .parse()
                        .map_err(|_| self.error("expected integer radicand"))?;
                    if self.peek() != Some(b')') {
                        return Err(self.error("expected ')'"));
                    }
                    self.pos += 1;
                    return Ok(FreePoly::constant(RadicalSum::sqrt_int(n)));
                }
                let base = if name == "h" {
                    FreePoly::term(Vec::new(), 1, RadicalSum::one())
                } else {
                    let g = self
                        .gens
                        .iter()
                        .position(|g| *g == name)
                        .ok_or_else(|| self.error("unknown generator"))?;
                    FreePoly::generator(g as u8)
                };
                Ok(base.pow(self.exponent()?))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: [&str; 4] = ["x", "y", "v", "u"];

    #[test]
    fn parses_products_in_order() {
        let p = FreePoly::parse("u*(x + h*v) - 2", &G).unwrap();
        let mut e = FreePoly::term(vec![3, 0], 0, RadicalSum::one());
        e.add_term(vec![3, 2], 1, RadicalSum::one());
        e.add_term(vec![], 0, RadicalSum::from_int(-2));
        assert_eq!(p, e);
    }

    #[test]
    fn powers_and_radicals() {
        let p = FreePoly::parse("sqrt(2)*h^2*v^2", &G).unwrap();
        assert_eq!(p, FreePoly::term(vec![2, 2], 2, RadicalSum::sqrt_int(2)));
        assert_eq!(FreePoly::parse("1/2*x", &G).unwrap().terms().count(), 1);
    }

    #[test]
    fn rejects_unknown_names() {
        assert!(FreePoly::parse("x*w", &G).is_err());
        assert!(FreePoly::parse("x +", &G).is_err());
    }
}
