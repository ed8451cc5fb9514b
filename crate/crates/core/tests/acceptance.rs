//! Acceptance criteria, one `ACCEPT <name> PASS|FAIL` line each.
//!
//! Runs without the libtest harness: criteria execute one after another, so
//! timing measurements never overlap, and every line is printed whether or
//! not it passes. The process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Duration;

use essgb::bench::{median, time_algorithm, Algorithm};
use essgb::essgb::lt_a;
use essgb::verify::{compare_results, cross_check, verify_result};
use essgb::{
    ess_gb, ess_gb_traced, gen_variety, FieldContext, GbResult, GenSpec, Monomial, PointSet,
    Polynomial, TermOrder,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORDERS: [TermOrder; 2] = [TermOrder::Lex, TermOrder::GRevLex];

/// Pass flag and a one-line detail.
type Verdict = (bool, String);

type Criterion = (&'static str, fn() -> Verdict);

fn random_points(rng: &mut ChaCha8Rng, p: u32, n: usize, m: usize) -> PointSet {
    let field = FieldContext::new(p as u64).unwrap();
    let mut seen = BTreeSet::new();
    while seen.len() < m {
        let row: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        seen.insert(row);
    }
    let mut rows: Vec<Vec<u32>> = seen.into_iter().collect();
    rows.shuffle(rng);
    PointSet::from_rows(field, &rows).unwrap()
}

/// Small instances: half uniform, half with linear dependencies from the
/// generator.
fn corpus() -> Vec<PointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let primes = [2u32, 3, 5, 7, 11];
    let mut out = Vec::new();
    for k in 0..240 {
        let p = primes[k % primes.len()];
        let n = rng.gen_range(1..=10usize);
        let cap = (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX).min(10) as usize;
        let m = rng.gen_range(1..=cap);
        let dependent = k % 2 == 1;
        let generated = dependent.then(|| {
            let spec = GenSpec {
                p,
                n,
                m,
                index: rng.gen_range(1..=10),
                reps: 10,
                seed: k as u64,
            };
            gen_variety(&spec).ok()
        });
        out.push(match generated.flatten() {
            Some(v) => v,
            None => random_points(&mut rng, p, n, m),
        });
    }
    out
}

fn poly(s: &str, n: usize, order: TermOrder, p: u64) -> Polynomial {
    Polynomial::parse(s, n, order, &FieldContext::new(p).unwrap()).unwrap()
}

fn mono_set(monos: impl IntoIterator<Item = Monomial>) -> BTreeSet<Vec<u32>> {
    monos.into_iter().map(|m| m.exponents()).collect()
}

fn oracle_equivalence() -> Verdict {
    let mut runs = 0;
    let mut failures = Vec::new();
    for (k, points) in corpus().iter().enumerate() {
        for order in ORDERS {
            let report = cross_check(points, order).unwrap();
            runs += 1;
            if !report.passed() {
                failures.push(format!("instance {k} {order}: {}", report.to_lines()));
            }
        }
    }
    let detail = format!("{} of {runs} runs agree", runs - failures.len());
    if !failures.is_empty() {
        eprintln!("{}", failures.join("\n"));
    }
    (runs >= 200 && failures.is_empty(), detail)
}

fn worked_instances() -> Verdict {
    let f5 = FieldContext::new(5).unwrap();
    let mut problems = Vec::new();

    let v = PointSet::from_rows(f5, &[vec![0, 0, 0], vec![1, 2, 0]]).unwrap();
    let lex = TermOrder::Lex;
    let r = ess_gb(&v, lex).unwrap();
    let basis: Vec<String> = r.basis.iter().map(|g| g.to_string()).collect();
    if basis != ["x3", "x2+3*x1", "x1^2+4*x1"] {
        problems.push(format!("basis {basis:?}"));
    }
    if r.standard_monomials
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        != ["1", "x1"]
    {
        problems.push("standard monomials".to_string());
    }
    let expected = [poly("1+4*x1", 3, lex, 5), poly("x1", 3, lex, 5)];
    if r.separators != expected {
        problems.push(format!(
            "separators {:?}",
            r.separators
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
        ));
    }

    let parabola = PointSet::from_rows(f5, &[vec![0, 0], vec![1, 1], vec![2, 4]]).unwrap();
    let sm = |order| {
        ess_gb(&parabola, order)
            .unwrap()
            .standard_monomials
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
    };
    if sm(TermOrder::GRevLex) != ["1", "x1", "x2"] {
        problems.push(format!("grevlex SM {:?}", sm(TermOrder::GRevLex)));
    }
    if sm(TermOrder::Lex) != ["1", "x1", "x1^2"] {
        problems.push(format!("lex SM {:?}", sm(TermOrder::Lex)));
    }
    let detail = if problems.is_empty() {
        "both instances exact".to_string()
    } else {
        problems.join("; ")
    };
    (problems.is_empty(), detail)
}

/// Corpus plus a few benchmark-sized varieties.
fn invariant_corpus() -> Vec<PointSet> {
    let mut all = corpus();
    for (p, n, m, i) in [
        (5u32, 300usize, 10usize, 1usize),
        (5, 300, 15, 7),
        (101, 200, 15, 10),
        (5, 100, 5, 4),
    ] {
        all.push(
            gen_variety(&GenSpec {
                p,
                n,
                m,
                index: i,
                reps: 10,
                seed: 11,
            })
            .unwrap(),
        );
    }
    all
}

fn invariant_failures(points: &PointSet, order: TermOrder, rng: &mut ChaCha8Rng) -> Vec<String> {
    let mut out = Vec::new();
    let (r, trace) = ess_gb_traced(points, order).unwrap();
    let rep = verify_result(&r, points, order);
    if !rep.passed() {
        out.push(rep.to_lines());
    }
    let lt = lt_a(&r.standard_monomials, &trace.essential_vars, points.nvars());
    if mono_set(lt) != mono_set(r.leading_monomials().cloned()) {
        out.push("leading terms differ from LT-A".into());
    }
    let ev = r.essential_vars().len();
    if ev + 1 > points.len() {
        out.push(format!(
            "{ev} essential variables for {} points",
            points.len()
        ));
    }
    let mut perm: Vec<usize> = (0..points.len()).collect();
    perm.shuffle(rng);
    let shuffled = ess_gb(&points.permuted(&perm).unwrap(), order).unwrap();
    let expected = GbResult {
        separators: perm.iter().map(|&t| r.separators[t].clone()).collect(),
        ..r.clone()
    };
    let cmp = compare_results(&shuffled, &expected);
    if !cmp.passed() {
        out.push(format!("permutation: {}", cmp.to_lines()));
    }
    out
}

fn invariant_suite() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut runs = 0;
    let mut failures = Vec::new();
    for (k, points) in invariant_corpus().iter().enumerate() {
        for order in ORDERS {
            runs += 1;
            for f in invariant_failures(points, order, &mut rng) {
                failures.push(format!("instance {k} {order}: {f}"));
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("{}", failures.join("\n"));
    }
    (
        failures.is_empty(),
        format!("{runs} runs, {} violations", failures.len()).to_string(),
    )
}

fn essential_count_bound() -> Verdict {
    let mut worst = 0usize;
    let mut bad = 0;
    let mut runs = 0;
    for points in invariant_corpus() {
        for order in ORDERS {
            let (_, trace) = ess_gb_traced(&points, order).unwrap();
            runs += 1;
            worst = worst.max(trace.essential_events);
            if trace.essential_events + 1 > points.len() {
                bad += 1;
            }
        }
    }
    (
        bad == 0,
        format!("{runs} runs, {bad} over m-1, max events {worst}").to_string(),
    )
}

const MIN_SAMPLE: Duration = Duration::from_millis(100);

fn median_time(alg: Algorithm, varieties: &[PointSet], order: TermOrder) -> f64 {
    alg.run(&varieties[0], order).unwrap();
    let times: Vec<f64> = varieties
        .iter()
        .map(|v| time_algorithm(alg, v, order, MIN_SAMPLE).unwrap().1)
        .collect();
    median(&times).unwrap()
}

fn linear_scaling_in_n() -> Verdict {
    let varieties = |n| -> Vec<PointSet> {
        (0..5)
            .map(|seed| {
                gen_variety(&GenSpec {
                    p: 5,
                    n,
                    m: 5,
                    index: 1,
                    reps: 10,
                    seed,
                })
                .unwrap()
            })
            .collect()
    };
    let (small, large) = (varieties(100), varieties(800));
    let ratio =
        |alg| median_time(alg, &large, TermOrder::Lex) / median_time(alg, &small, TermOrder::Lex);
    let ess = ratio(Algorithm::EssGb);
    let bm = ratio(Algorithm::Bm);
    (
        ess <= 24.0 && bm >= 24.0,
        format!("t(800)/t(100): essgb {ess:.2} (<= 24), bm {bm:.2} (>= 24)").to_string(),
    )
}

fn head_to_head_n300() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    for m in [5usize, 10] {
        let varieties: Vec<PointSet> = (1..=5)
            .map(|i| {
                gen_variety(&GenSpec {
                    p: 5,
                    n: 300,
                    m,
                    index: i,
                    reps: 5,
                    seed: 0,
                })
                .unwrap()
            })
            .collect();
        for order in ORDERS {
            let ess = median_time(Algorithm::EssGb, &varieties, order);
            let bm = median_time(Algorithm::Bm, &varieties, order);
            ok &= ess <= bm;
            lines.push(format!("m={m} {order}: essgb {ess:.2e}s bm {bm:.2e}s"));
        }
    }
    (ok, lines.join(", "))
}

fn generator_rank() -> Verdict {
    let mut over = 0;
    let mut grid = 0;
    for p in [5u32, 101] {
        for n in [100usize, 200, 300] {
            for m in [5usize, 10, 15] {
                for i in 1..=10 {
                    let spec = GenSpec {
                        p,
                        n,
                        m,
                        index: i,
                        reps: 10,
                        seed: 0,
                    };
                    grid += 1;
                    if gen_variety(&spec).unwrap().rank() > spec.nr() {
                        over += 1;
                    }
                }
            }
        }
    }
    let mut weakest = (100, String::new());
    for p in [5u32, 101] {
        for n in [100usize, 200, 300] {
            for m in [5usize, 10, 15] {
                for i in [1, 2] {
                    let full = (0..100)
                        .filter(|&seed| {
                            let spec = GenSpec {
                                p,
                                n,
                                m,
                                index: i,
                                reps: 10,
                                seed,
                            };
                            gen_variety(&spec).unwrap().rank() == m
                        })
                        .count();
                    if full < weakest.0 {
                        weakest = (full, format!("p={p} n={n} m={m} i={i}"));
                    }
                }
            }
        }
    }
    (
        over == 0 && weakest.0 >= 95,
        format!(
            "{over} of {grid} grid varieties exceed nr(i); fewest full-rank draws {}/100 ({})",
            weakest.0, weakest.1
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("oracle_equivalence", oracle_equivalence),
        ("worked_instances", worked_instances),
        ("invariant_suite", invariant_suite),
        ("essential_count_bound", essential_count_bound),
        ("linear_scaling_in_n", linear_scaling_in_n),
        ("head_to_head_n300", head_to_head_n300),
        ("generator_rank", generator_rank),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (name, criterion) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let (passed, detail) = criterion();
        println!(
            "ACCEPT {name} {} {detail}",
            if passed { "PASS" } else { "FAIL" }
        );
        failed += usize::from(!passed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
