//! Buchberger–Möller: enumerate monomials in increasing order and reduce
//! their evaluation vectors against those of the standard monomials found so
//! far.
//!
//! Every new standard monomial enqueues its product with each of the `n`
//! variables, and every candidate is tested against all leading terms found
//! so far, so the work grows quadratically with `n`. This is the baseline
//! that [`crate::ess_gb`] is measured against, and its output is used as an
//! independent oracle in tests.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::essgb::{build_eval_matrix, sp_a};
use crate::fp::{FieldContext, FpElement};
use crate::linalg::plu_decompose;
use crate::monomial::{Monomial, TermOrder};
use crate::points::PointSet;
use crate::polynomial::Polynomial;
use crate::result::GbResult;

/// Queue entry ordered by the active term order.
#[derive(Debug)]
struct Candidate {
    mono: Monomial,
    order: TermOrder,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.mono == other.mono
    }
}

impl Eq for Candidate {}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.mono, &other.mono)
    }
}

/// Echelonized evaluation vectors of the standard monomials.
///
/// Row `k` has a 1 at column `pivots[k]`, zeros at the other pivot columns,
/// and equals `sum combos[k][j] * eval(sm[j])`.
struct Reducer {
    field: FieldContext,
    rows: Vec<Vec<FpElement>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<FpElement>>,
}

enum Reduced {
    /// `eval(x) + sum c_j eval(sm[j]) = 0`.
    Dependent(Vec<FpElement>),
    Independent,
}

impl Reducer {
    fn new(field: FieldContext) -> Self {
        Reducer {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
        }
    }

    /// Reduces `v`; if it is independent it is added as a new row whose
    /// combination includes the new standard monomial at index `rank`.
    fn reduce(&mut self, mut v: Vec<FpElement>) -> Result<Reduced> {
        let f = self.field;
        let rank = self.rows.len();
        let mut combo = vec![FpElement::ZERO; rank + 1];
        for k in 0..rank {
            let factor = v[self.pivots[k]];
            if factor.is_zero() {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(&self.rows[k]) {
                *x = f.sub_mul(*x, factor, r);
            }
            for (c, &r) in combo.iter_mut().zip(&self.combos[k]) {
                *c = f.sub_mul(*c, factor, r);
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            combo.truncate(rank);
            return Ok(Reduced::Dependent(combo));
        };
        combo[rank] = FpElement::ONE;
        let inv = f.inv(v[pivot])?;
        for x in v.iter_mut().chain(combo.iter_mut()) {
            *x = f.mul(*x, inv);
        }
        // clear the new pivot column from the existing rows
        for k in 0..rank {
            let factor = self.rows[k][pivot];
            if factor.is_zero() {
                continue;
            }
            for (x, &r) in self.rows[k].iter_mut().zip(&v) {
                *x = f.sub_mul(*x, factor, r);
            }
            self.combos[k].push(FpElement::ZERO);
            for (c, &r) in self.combos[k].iter_mut().zip(&combo) {
                *c = f.sub_mul(*c, factor, r);
            }
        }
        for c in &mut self.combos {
            c.resize(rank + 1, FpElement::ZERO);
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        self.combos.push(combo);
        Ok(Reduced::Independent)
    }
}

/// Reduced Gröbner basis, standard monomials and reduced separators by
/// Buchberger–Möller enumeration.
pub fn bm_gb(points: &PointSet, order: TermOrder) -> Result<GbResult> {
    let field = *points.field();
    let nvars = points.nvars();
    let mut sm: Vec<Monomial> = Vec::new();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leading: Vec<Monomial> = Vec::new();
    let mut reducer = Reducer::new(field);
    let mut queue = BTreeSet::new();
    queue.insert(Candidate {
        mono: Monomial::one(nvars),
        order,
    });

    while let Some(Candidate { mono, .. }) = queue.pop_first() {
        if leading.iter().any(|l| l.divides(&mono)) {
            continue;
        }
        let v: Vec<FpElement> = points.iter().map(|pt| mono.eval(pt, &field)).collect();
        match reducer.reduce(v)? {
            Reduced::Dependent(c) => {
                let mut terms = Vec::with_capacity(sm.len() + 1);
                terms.push((mono.clone(), FpElement::ONE));
                terms.extend(
                    sm.iter()
                        .zip(c)
                        .rev()
                        .filter(|(_, cj)| !cj.is_zero())
                        .map(|(s, cj)| (s.clone(), cj)),
                );
                basis.push(Polynomial::from_sorted_terms(nvars, terms, order));
                leading.push(mono);
            }
            Reduced::Independent => {
                for var in 0..nvars {
                    queue.insert(Candidate {
                        mono: mono.mul_var_pow(var, 1),
                        order,
                    });
                }
                sm.push(mono);
            }
        }
    }

    if sm.len() != points.len() {
        return Err(Error::Internal(format!(
            "{} standard monomials for {} points",
            sm.len(),
            points.len()
        )));
    }
    let plu = plu_decompose(&build_eval_matrix(&sm, points), &field)?;
    let separators = sp_a(&sm, &plu, points, order)?;
    Ok(GbResult::new(order, basis, sm, separators))
}
