//! Text parsing and the JSON wire encoding of polynomials.

use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use super::{AlgebraError, Monomial, Polynomial, Ring};

/// `{"terms":[{"c":<int>,"e":[<int>,...]}]}`, terms in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: u64,
    pub e: Vec<u16>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms()
                .iter()
                .map(|t| TermJson {
                    c: t.coeff,
                    e: t.mono.exponents().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(ring: &Arc<Ring>, json: &PolyJson) -> Result<Self, AlgebraError> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.e.len() != ring.nvars() {
                return Err(AlgebraError::DimensionMismatch(t.e.len(), ring.nvars()));
            }
            let c = (t.c % ring.field().modulus()) as i64;
            terms.push((c, Monomial::from_exponents(&t.e)?));
        }
        Polynomial::from_terms(ring, terms)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl Ring {
    /// Parses expressions such as `x1*x6 - 2*x2^2*x3 + 1` using this ring's
    /// variable names.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial, AlgebraError> {
        Parser {
            ring: self,
            src: text.as_bytes(),
            pos: 0,
        }
        .polynomial()
    }
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{what} at offset {}", self.pos))
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

    fn number(&mut self) -> Result<i64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn polynomial(mut self) -> Result<Polynomial, AlgebraError> {
        let mut terms = Vec::new();
        let mut sign = 1i64;
        if self.peek() == Some(b'-') {
            sign = -1;
            self.pos += 1;
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((sign * c, m));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Polynomial::from_terms(self.ring, terms)
    }

    fn term(&mut self) -> Result<(i64, Monomial), AlgebraError> {
        let k = self.ring.field();
        let mut coeff = 1u64;
        let mut mono = Monomial::one(self.ring.nvars())?;
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let c = self.number()?;
                    coeff = k.mul(coeff, k.from_i64(c));
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_'
                            || self.src[self.pos] == b'\'')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let idx = self
                        .ring
                        .var_index(name)
                        .ok_or_else(|| AlgebraError::Parse(format!("unknown variable {name}")))?;
                    let mut exp = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        exp = self.number()?;
                    }
                    let exp = u16::try_from(exp).map_err(|_| self.err("exponent too large"))?;
                    mono = mono.product(&Monomial::var(self.ring.nvars(), idx)?.pow(exp));
                }
                _ => return Err(self.err("expected factor")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff as i64, mono))
    }
}
