//! Polynomials over GF(p) as term lists sorted strictly decreasing under a
//! term order, plus the canonical text syntax `c*x<i>^<e>` used for output.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::fp::{FieldContext, FpElement};
use crate::monomial::{Monomial, TermOrder};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    /// Strictly decreasing monomials, nonzero coefficients.
    terms: Vec<(Monomial, FpElement)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: FpElement) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: FpElement) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial { nvars, terms }
    }

    /// Terms already strictly decreasing with nonzero coefficients; checked
    /// in debug builds only.
    pub(crate) fn from_sorted_terms(
        nvars: usize,
        terms: Vec<(Monomial, FpElement)>,
        order: TermOrder,
    ) -> Self {
        debug_assert!(terms
            .iter()
            .all(|(m, c)| m.nvars() == nvars && !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { nvars, terms }
    }

    /// Sorts under `order`, merges repeated monomials and drops zeros.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, FpElement)>,
        order: TermOrder,
        field: &FieldContext,
    ) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        for (m, _) in &terms {
            assert_eq!(m.nvars(), nvars, "monomial from a different ring");
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, FpElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Polynomial {
            nvars,
            terms: merged,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, FpElement)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<FpElement> {
        self.terms.first().map(|&(_, c)| c)
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> &[(Monomial, FpElement)] {
        self.terms.get(1..).unwrap_or(&[])
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn eval(&self, point: &[FpElement], field: &FieldContext) -> FpElement {
        self.terms.iter().fold(FpElement::ZERO, |acc, (m, c)| {
            field.add(acc, field.mul(*c, m.eval(point, field)))
        })
    }

    pub fn try_eval(&self, point: &[FpElement], field: &FieldContext) -> Result<FpElement> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        Ok(self.eval(point, field))
    }

    /// Whether the stored term list is strictly decreasing under `order`.
    pub fn is_sorted_by(&self, order: TermOrder) -> bool {
        self.terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    /// Parses the canonical syntax, e.g. `x1^2+4*x1` or `3*x1*x2^4+1`.
    ///
    /// Coefficients are reduced mod p and may be omitted; `-` is accepted
    /// between terms. Variables are 1-based and must not exceed `nvars`.
    pub fn parse(s: &str, nvars: usize, order: TermOrder, field: &FieldContext) -> Result<Self> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            nvars,
            field,
        }
        .polynomial()
        .map(|terms| Polynomial::from_terms(nvars, terms, order, field))
    }
}

/// Canonical form: terms in stored order joined by `+`, coefficient 1 and
/// exponent 1 elided, `0` for the zero polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            match (m.is_one(), c.value()) {
                (true, _) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{m}")?,
                (false, _) => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
    field: &'a FieldContext,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: message.into(),
        }
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

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.err("number too large")
            })
    }

    fn polynomial(&mut self) -> Result<Vec<(Monomial, FpElement)>> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            negate = true;
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { self.field.neg(c) } else { c }));
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return Err(self.err("expected `+`, `-` or end of input")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, FpElement)> {
        let mut coeff = FpElement::ONE;
        let mut pairs = Vec::new();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let at = self.pos;
                    let idx = self.number()?;
                    if idx == 0 || idx > self.nvars as u64 {
                        self.pos = at;
                        return Err(
                            self.err(format!("variable x{idx} outside x1..x{}", self.nvars))
                        );
                    }
                    let mut exp = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        exp = self.number()?;
                        if exp > u32::MAX as u64 {
                            return Err(self.err("exponent too large"));
                        }
                    }
                    pairs.push((idx as usize - 1, exp as u32));
                }
                Some(d) if d.is_ascii_digit() => {
                    let v = self.number()?;
                    coeff = self.field.mul(coeff, self.field.element(v));
                }
                _ => return Err(self.err("expected a coefficient or a variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((Monomial::from_sparse(self.nvars, pairs), coeff));
            }
        }
    }
}
