//! Independent checks of every output contract, decided by evaluation and
//! divisibility alone.
//!
//! Checks collect every failure instead of stopping at the first one.

use std::collections::HashSet;
use std::fmt;

use crate::bm::bm_gb;
use crate::error::Result;
use crate::essgb::ess_gb;
use crate::fp::FpElement;
use crate::monomial::{Monomial, TermOrder};
use crate::points::PointSet;
use crate::result::GbResult;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checks.extend(other.checks);
        self
    }

    fn record(&mut self, name: &str, problems: Vec<String>, ok_detail: impl Into<String>) {
        let passed = problems.is_empty();
        let detail = if passed {
            ok_detail.into()
        } else {
            let shown: Vec<_> = problems.iter().take(5).cloned().collect();
            let more = problems.len().saturating_sub(5);
            if more > 0 {
                format!("{}; and {more} more", shown.join("; "))
            } else {
                shown.join("; ")
            }
        };
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    /// One `CHECK <name> PASS|FAIL <detail>` line per check.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "CHECK {} {} {}\n",
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                c.detail
            ));
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAILED" };
            writeln!(f, "{:<width$}  {:<6}  {}", c.name, status, c.detail)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} of {} checks passed",
            self.checks.len() - failed,
            self.checks.len()
        )
    }
}

/// Conditions characterizing the reduced Gröbner basis of `I(points)`:
/// monic elements, pairwise non-divisible leading terms, tails inside the
/// standard monomials, vanishing on every point, `m` divisor-closed standard
/// monomials, and leading terms that are exactly the minimal generators of
/// the complement of the standard monomials.
pub fn check_reduced_gb(
    result: &GbResult,
    points: &PointSet,
    order: TermOrder,
) -> VerificationReport {
    let field = points.field();
    let mut report = VerificationReport::default();
    let sm: HashSet<&Monomial> = result.standard_monomials.iter().collect();

    let mut problems = Vec::new();
    for g in &result.basis {
        match g.leading_coefficient() {
            None => problems.push("zero polynomial in basis".to_string()),
            Some(c) if c != FpElement::ONE => {
                problems.push(format!("{g} has leading coefficient {c}"))
            }
            Some(_) => {}
        }
    }
    report.record(
        "monic",
        problems,
        format!("{} elements", result.basis.len()),
    );

    let mut problems = Vec::new();
    for g in &result.basis {
        if !g.is_sorted_by(order) {
            problems.push(format!("{g} is not sorted under {order}"));
        }
    }
    report.record("term_order", problems, order.name());

    let lts: Vec<&Monomial> = result.leading_monomials().collect();
    let mut problems = Vec::new();
    for (a, la) in lts.iter().enumerate() {
        for (b, lb) in lts.iter().enumerate() {
            if a != b && la.divides(lb) {
                problems.push(format!("{la} divides {lb}"));
            }
        }
    }
    report.record(
        "leading_terms_minimal",
        problems,
        format!("{} leading terms", lts.len()),
    );

    let mut problems = Vec::new();
    for g in &result.basis {
        for (mono, _) in g.tail() {
            if !sm.contains(mono) {
                problems.push(format!("{mono} in tail of {g} is not standard"));
            }
        }
    }
    report.record(
        "tails_standard",
        problems,
        "all tails supported on standard monomials",
    );

    let mut problems = Vec::new();
    for g in &result.basis {
        for (t, pt) in points.iter().enumerate() {
            let v = g.eval(pt, field);
            if !v.is_zero() {
                problems.push(format!("{g} is {v} at point {}", t + 1));
            }
        }
    }
    report.record("vanishing", problems, format!("{} points", points.len()));

    let mut problems = Vec::new();
    if result.standard_monomials.len() != points.len() {
        problems.push(format!(
            "{} standard monomials for {} points",
            result.standard_monomials.len(),
            points.len()
        ));
    }
    if sm.len() != result.standard_monomials.len() {
        problems.push("repeated standard monomials".to_string());
    }
    for s in &result.standard_monomials {
        for v in s.support() {
            let d = s.div_var(v).expect("v is in the support");
            if !sm.contains(&d) {
                problems.push(format!("{s} is standard but its divisor {d} is not"));
            }
        }
    }
    report.record(
        "staircase",
        problems,
        format!("{} standard monomials", sm.len()),
    );

    let mut problems = Vec::new();
    for s in &result.standard_monomials {
        for l in &lts {
            if l.divides(s) {
                problems.push(format!(
                    "standard monomial {s} is a multiple of leading term {l}"
                ));
            }
        }
    }
    for s in &result.standard_monomials {
        for v in 0..points.nvars() {
            let border = s.mul_var_pow(v, 1);
            if !sm.contains(&border) && !lts.iter().any(|l| l.divides(&border)) {
                problems.push(format!(
                    "{border} is neither standard nor a multiple of a leading term"
                ));
            }
        }
    }
    report.record(
        "leading_term_ideal",
        problems,
        "leading terms generate the complement",
    );

    report
}

/// `separators[t](point l) = [t == l]`, each supported on the standard monomials.
pub fn check_separators(result: &GbResult, points: &PointSet) -> VerificationReport {
    let field = points.field();
    let mut report = VerificationReport::default();
    let sm: HashSet<&Monomial> = result.standard_monomials.iter().collect();

    let mut problems = Vec::new();
    if result.separators.len() != points.len() {
        problems.push(format!(
            "{} separators for {} points",
            result.separators.len(),
            points.len()
        ));
    }
    for (t, s) in result.separators.iter().enumerate() {
        for (l, pt) in points.iter().enumerate() {
            let want = if t == l {
                FpElement::ONE
            } else {
                FpElement::ZERO
            };
            let got = s.eval(pt, field);
            if got != want {
                problems.push(format!("separator {} is {got} at point {}", t + 1, l + 1));
            }
        }
    }
    report.record(
        "separator_values",
        problems,
        "kronecker delta on all points",
    );

    let mut problems = Vec::new();
    for (t, s) in result.separators.iter().enumerate() {
        for mono in s.monomials() {
            if !sm.contains(mono) {
                problems.push(format!("separator {} uses non-standard {mono}", t + 1));
            }
        }
    }
    report.record(
        "separators_reduced",
        problems,
        "supported on standard monomials",
    );
    report
}

/// Both checks above.
pub fn verify_result(result: &GbResult, points: &PointSet, order: TermOrder) -> VerificationReport {
    check_reduced_gb(result, points, order).merge(check_separators(result, points))
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

/// Runs both algorithms and compares their outputs in canonical text form.
/// The reduced Gröbner basis is unique, so they must agree exactly.
pub fn cross_check(points: &PointSet, order: TermOrder) -> Result<VerificationReport> {
    let ess = ess_gb(points, order)?;
    let bm = bm_gb(points, order)?;
    Ok(compare_results(&ess, &bm))
}

pub fn compare_results(ess: &GbResult, bm: &GbResult) -> VerificationReport {
    let mut report = VerificationReport::default();

    let mut a = strings(&ess.basis);
    let mut b = strings(&bm.basis);
    a.sort();
    b.sort();
    let problems = diff("basis", &a, &b);
    report.record("same_basis", problems, format!("{} polynomials", a.len()));

    let problems = diff(
        "standard monomials",
        &strings(&ess.standard_monomials),
        &strings(&bm.standard_monomials),
    );
    report.record(
        "same_standard_monomials",
        problems,
        format!("{} monomials", ess.standard_monomials.len()),
    );

    let problems = diff(
        "separators",
        &strings(&ess.separators),
        &strings(&bm.separators),
    );
    report.record(
        "same_separators",
        problems,
        format!("{} separators", ess.separators.len()),
    );
    report
}

fn diff(what: &str, a: &[String], b: &[String]) -> Vec<String> {
    if a == b {
        return Vec::new();
    }
    let sa: HashSet<&String> = a.iter().collect();
    let sb: HashSet<&String> = b.iter().collect();
    let mut out = vec![format!("{what}: essgb has {}, bm has {}", a.len(), b.len())];
    out.extend(sa.difference(&sb).map(|s| format!("only essgb: {s}")));
    out.extend(sb.difference(&sa).map(|s| format!("only bm: {s}")));
    if out.len() == 1 {
        out.push("same elements in a different order".into());
    }
    out
}
