//! Monomials over `n` variables and the two supported term orders.
//!
//! Variables are numbered `0..n` internally and rendered `x1..xn`. Both
//! orders rank them `x1 < x2 < ... < xn`.
//!
//! A monomial stores only its nonzero exponents, sorted by variable. The
//! point sets this crate targets have thousands of variables but the
//! monomials in play have support of at most `m`, so every operation here
//! costs O(support) rather than O(n).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::fp::{FieldContext, FpElement};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum TermOrder {
    /// Compare exponents at the largest variable index where they differ.
    #[default]
    Lex,
    /// Total degree first; ties go to the monomial with the smaller exponent
    /// at the smallest variable index where they differ.
    GRevLex,
}

impl TermOrder {
    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::GRevLex => "grevlex",
        }
    }

    /// Checked comparison; fails if the monomials live in different rings.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_len(a, b)?;
        Ok(self.cmp(a, b))
    }

    /// Comparison for monomials known to share a ring.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars, b.nvars);
        match self {
            TermOrder::Lex => lex_cmp(&a.exps, &b.exps),
            TermOrder::GRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tiebreak(&a.exps, &b.exps)),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(TermOrder::Lex),
            "grevlex" | "degrevlex" => Ok(TermOrder::GRevLex),
            other => Err(Error::Config(format!("unknown term order `{other}`"))),
        }
    }
}

fn lex_cmp(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let mut ia = a.iter().rev();
    let mut ib = b.iter().rev();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                // the larger variable index is present only on one side
                if va != vb {
                    return va.cmp(&vb);
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
        }
    }
}

fn revlex_tiebreak(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                // the smaller variable index is present only on one side
                if va != vb {
                    return va.cmp(&vb);
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
            }
        }
    }
}

fn check_len(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.nvars != b.nvars {
        return Err(Error::LengthMismatch {
            left: a.nvars,
            right: b.nvars,
        });
    }
    Ok(())
}

/// Sparse exponents; supports of up to four variables stay inline.
type Exps = SmallVec<[(u32, u32); 4]>;

/// `x1^a1 * ... * xn^an`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    nvars: usize,
    /// (variable, exponent) with exponent > 0, strictly increasing variable.
    exps: Exps,
}

impl Monomial {
    /// The monomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            nvars,
            exps: Exps::new(),
        }
    }

    /// The variable with 0-based index `var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::var_pow(nvars, var, 1)
    }

    pub fn var_pow(nvars: usize, var: usize, exp: u32) -> Self {
        assert!(
            var < nvars,
            "variable index {var} out of range for {nvars} variables"
        );
        let exps = if exp == 0 {
            Exps::new()
        } else {
            smallvec![(var as u32, exp)]
        };
        Monomial { nvars, exps }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let exps = exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i as u32, e))
            .collect();
        Monomial {
            nvars: exponents.len(),
            exps,
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    /// Repeated variables have their exponents added.
    pub fn from_sparse(nvars: usize, pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps = Exps::new();
        for (v, e) in pairs {
            assert!(
                v < nvars,
                "variable index {v} out of range for {nvars} variables"
            );
            if e > 0 {
                exps.push((v as u32, e));
            }
        }
        exps.sort_unstable_by_key(|&(v, _)| v);
        exps.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Monomial { nvars, exps }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps
            .binary_search_by_key(&(var as u32), |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Dense exponent vector of length `nvars`.
    pub fn exponents(&self) -> Vec<u32> {
        let mut dense = vec![0; self.nvars];
        for &(v, e) in &self.exps {
            dense[v as usize] = e;
        }
        dense
    }

    /// Nonzero `(variable, exponent)` pairs in increasing variable order.
    pub fn sparse(&self) -> &[(u32, u32)] {
        &self.exps
    }

    /// Indices of the variables that divide this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(v, _)| v as usize)
    }

    /// Whether `self` divides `other`. Panics on a ring mismatch.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        if self.exps.len() > other.exps.len() {
            return false;
        }
        let mut it = other.exps.iter();
        'outer: for &(v, e) in &self.exps {
            for &(w, f) in it.by_ref() {
                if w == v {
                    if f < e {
                        return false;
                    }
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        check_len(self, other)?;
        Ok(self.divides(other))
    }

    /// Product. Panics on a ring mismatch.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars, other.nvars, "monomials from different rings");
        let mut exps = Exps::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    exps.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial {
            nvars: self.nvars,
            exps,
        }
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_len(self, other)?;
        Ok(self.mul(other))
    }

    /// `x_var^k * self`.
    pub fn mul_var_pow(&self, var: usize, k: u32) -> Monomial {
        assert!(var < self.nvars, "variable index {var} out of range");
        if k == 0 {
            return self.clone();
        }
        let v = var as u32;
        let mut exps = Exps::with_capacity(self.exps.len() + 1);
        let at = self.exps.partition_point(|&(w, _)| w < v);
        exps.extend_from_slice(&self.exps[..at]);
        match self.exps.get(at) {
            Some(&(w, e)) if w == v => {
                exps.push((v, e + k));
                exps.extend_from_slice(&self.exps[at + 1..]);
            }
            _ => {
                exps.push((v, k));
                exps.extend_from_slice(&self.exps[at..]);
            }
        }
        Monomial {
            nvars: self.nvars,
            exps,
        }
    }

    /// `self / x_var`, or `None` if `x_var` does not divide `self`.
    pub fn div_var(&self, var: usize) -> Option<Monomial> {
        let pos = self
            .exps
            .binary_search_by_key(&(var as u32), |&(v, _)| v)
            .ok()?;
        let mut exps = self.exps.clone();
        if exps[pos].1 == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 -= 1;
        }
        Some(Monomial {
            nvars: self.nvars,
            exps,
        })
    }

    /// Value at a point given by its coordinates. Panics on a length mismatch.
    pub fn eval(&self, point: &[FpElement], field: &FieldContext) -> FpElement {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        self.exps.iter().fold(FpElement::ONE, |acc, &(v, e)| {
            field.mul(acc, field.pow(point[v as usize], e as u64))
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
}

/// Canonical rendering: `1`, `x3`, `x1^2*x3`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
