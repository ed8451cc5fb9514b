//! Reduced Gröbner bases of vanishing ideals via essential variables.
//!
//! Variables are visited from smallest to largest. Each one is tested
//! against the PLU factors of the current evaluation matrix (an `O(m^2)`
//! solve); only when the variable turns out to be essential are the
//! standard monomials, the evaluation matrix and its factorization rebuilt.
//! That happens at most `m - 1` times, so the total cost is
//! `O(n m^2 + m^4)` for a fixed field.
//!
//! The basis itself is produced last: every minimal leading-term generator
//! is evaluated at the points and expressed over the final standard
//! monomials with one more solve.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::fp::FpElement;
use crate::linalg::{plu_decompose, row_echelon_pivots, FpMatrix, PluFactors};
use crate::monomial::{Monomial, TermOrder};
use crate::points::PointSet;
use crate::polynomial::Polynomial;
use crate::result::GbResult;

/// Outcome of trying to write a variable over the current standard monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expressibility {
    Essential,
    /// Coefficients over the standard monomials; none sits on a monomial
    /// larger than the variable.
    Inessential(Vec<FpElement>),
}

/// Loop state after processing a prefix of the variables.
#[derive(Clone, Debug)]
pub struct EssGbState {
    /// Essential variables found so far, increasing.
    pub essential: Vec<usize>,
    /// Standard monomials of the ideal restricted to `essential`, increasing.
    pub sm: Vec<Monomial>,
    /// `eval[(t, j)] = sm[j](point t)`; full column rank.
    pub eval: FpMatrix,
    pub plu: PluFactors,
}

impl EssGbState {
    /// No essential variables; the only standard monomial is 1.
    pub fn initial(points: &PointSet) -> Result<Self> {
        let sm = vec![Monomial::one(points.nvars())];
        Self::with_monomials(Vec::new(), sm, points)
    }

    fn with_monomials(essential: Vec<usize>, sm: Vec<Monomial>, points: &PointSet) -> Result<Self> {
        let eval = build_eval_matrix(&sm, points);
        let plu = plu_decompose(&eval, points.field())
            .map_err(|e| Error::Internal(format!("standard monomials are dependent: {e}")))?;
        Ok(EssGbState {
            essential,
            sm,
            eval,
            plu,
        })
    }
}

/// Counters recorded while running [`ess_gb_traced`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EssGbTrace {
    /// Essential variables in the order they were found (0-based).
    pub essential_vars: Vec<usize>,
    /// Number of times the main loop took the essential branch.
    pub essential_events: usize,
    /// Number of minimal leading-term generators.
    pub leading_terms: usize,
}

/// `m x |monos|` matrix of monomial values at the points.
pub fn build_eval_matrix(monos: &[Monomial], points: &PointSet) -> FpMatrix {
    let field = points.field();
    FpMatrix::from_fn(points.len(), monos.len(), |t, j| {
        monos[j].eval(points.point(t), field)
    })
}

/// Decides whether `var` is essential given the current state.
///
/// `column` holds the values of `var` at the points. The system over the
/// current standard monomials has at most one solution because their
/// evaluation matrix has full column rank.
pub fn try_express(
    var: usize,
    state: &EssGbState,
    column: &[FpElement],
    order: TermOrder,
) -> Result<Expressibility> {
    let Some(c) = state.plu.solve(column)? else {
        return Ok(Expressibility::Essential);
    };
    let x = Monomial::var(state.sm[0].nvars(), var);
    let uses_larger = state
        .sm
        .iter()
        .zip(&c)
        .any(|(s, cj)| !cj.is_zero() && order.cmp(&x, s).is_lt());
    Ok(if uses_larger {
        Expressibility::Essential
    } else {
        Expressibility::Inessential(c)
    })
}

/// Standard monomials after adding the essential variable `var`.
///
/// Candidates are `var^q * s` for `s` in `sm_prev` and `0 <= q < p`, sorted
/// increasing; the ones at pivot columns of their evaluation matrix are kept.
pub fn sm_a(
    var: usize,
    sm_prev: &[Monomial],
    points: &PointSet,
    order: TermOrder,
) -> Vec<Monomial> {
    let p = points.field().modulus();
    let mut candidates: Vec<Monomial> = sm_prev
        .iter()
        .flat_map(|s| (0..p).map(move |q| s.mul_var_pow(var, q)))
        .collect();
    candidates.sort_by(|a, b| order.cmp(a, b));
    candidates.dedup();
    let eval = build_eval_matrix(&candidates, points);
    let (_, pivots) = row_echelon_pivots(&eval, points.field());
    pivots.into_iter().map(|j| candidates[j].clone()).collect()
}

/// Minimal generators of the leading-term ideal.
///
/// For each essential variable `x` (increasing) and each standard monomial
/// `s` (increasing), `x*s` is a generator unless it is standard or is a
/// multiple of an earlier generator `x*s'` with `s' | s`. Duplicates across
/// variables are dropped; every inessential variable is appended.
pub fn lt_a(sm: &[Monomial], essential: &[usize], nvars: usize) -> Vec<Monomial> {
    let standard: HashSet<&Monomial> = sm.iter().collect();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut out = Vec::new();
    let mut flags = vec![false; sm.len()];
    for &x in essential {
        for j in 0..sm.len() {
            let prod = sm[j].mul_var_pow(x, 1);
            flags[j] =
                !standard.contains(&prod) && !(0..j).any(|k| flags[k] && sm[k].divides(&sm[j]));
        }
        for (j, &keep) in flags.iter().enumerate() {
            if keep {
                let prod = sm[j].mul_var_pow(x, 1);
                if seen.insert(prod.clone()) {
                    out.push(prod);
                }
            }
        }
    }
    let mut is_essential = vec![false; nvars];
    for &x in essential {
        is_essential[x] = true;
    }
    out.extend(
        (0..nvars)
            .filter(|&i| !is_essential[i])
            .map(|i| Monomial::var(nvars, i)),
    );
    out
}

/// For each generator `d`, the monic `d - sum c_l s_l` vanishing on the points.
pub fn gb_from_lt(
    leading: &[Monomial],
    sm: &[Monomial],
    plu: &PluFactors,
    points: &PointSet,
    order: TermOrder,
) -> Result<Vec<Polynomial>> {
    let field = points.field();
    let nvars = points.nvars();
    leading
        .iter()
        .map(|d| {
            let b: Vec<FpElement> = points.iter().map(|pt| d.eval(pt, field)).collect();
            let c = plu.solve(&b)?.ok_or_else(|| {
                Error::Internal(format!(
                    "{d} is not a combination of the standard monomials"
                ))
            })?;
            let tail = sm
                .iter()
                .zip(c)
                .filter(|(_, cl)| !cl.is_zero())
                .map(|(s, cl)| (s.clone(), field.neg(cl)));
            let g = Polynomial::from_terms(
                nvars,
                std::iter::once((d.clone(), FpElement::ONE)).chain(tail),
                order,
                field,
            );
            if g.leading_monomial() != Some(d) {
                return Err(Error::Internal(format!(
                    "{d} is not the leading term of {g}"
                )));
            }
            Ok(g)
        })
        .collect()
}

/// Reduced separators: `separators[t] = sum c_j s_j` with `A c = e_t`.
pub fn sp_a(
    sm: &[Monomial],
    plu: &PluFactors,
    points: &PointSet,
    order: TermOrder,
) -> Result<Vec<Polynomial>> {
    let field = points.field();
    let m = points.len();
    (0..m)
        .map(|t| {
            let mut e = vec![FpElement::ZERO; m];
            e[t] = FpElement::ONE;
            let c = plu
                .solve(&e)?
                .ok_or_else(|| Error::Internal(format!("no separator for point {}", t + 1)))?;
            Ok(Polynomial::from_terms(
                points.nvars(),
                sm.iter().cloned().zip(c),
                order,
                field,
            ))
        })
        .collect()
}

/// Reduced Gröbner basis, standard monomials and reduced separators of the
/// vanishing ideal of `points`.
pub fn ess_gb(points: &PointSet, order: TermOrder) -> Result<GbResult> {
    ess_gb_traced(points, order).map(|(r, _)| r)
}

pub fn ess_gb_traced(points: &PointSet, order: TermOrder) -> Result<(GbResult, EssGbTrace)> {
    let mut trace = EssGbTrace::default();
    let mut state = EssGbState::initial(points)?;

    for var in 0..points.nvars() {
        let column = points.column(var);
        if try_express(var, &state, &column, order)? == Expressibility::Essential {
            trace.essential_events += 1;
            trace.essential_vars.push(var);
            let sm = sm_a(var, &state.sm, points, order);
            let mut essential = std::mem::take(&mut state.essential);
            essential.push(var);
            state = EssGbState::with_monomials(essential, sm, points)?;
        }
    }

    if state.sm.len() != points.len() {
        return Err(Error::Internal(format!(
            "{} standard monomials for {} points",
            state.sm.len(),
            points.len()
        )));
    }

    let leading = lt_a(&state.sm, &state.essential, points.nvars());
    trace.leading_terms = leading.len();
    let basis = gb_from_lt(&leading, &state.sm, &state.plu, points, order)?;
    let separators = sp_a(&state.sm, &state.plu, points, order)?;
    Ok((GbResult::new(order, basis, state.sm, separators), trace))
}
