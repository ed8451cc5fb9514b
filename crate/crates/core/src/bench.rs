//! Benchmark harness: generate the experiment grid, time both algorithms on
//! every variety, cross-check their bases by checksum, and summarize
//! per-cell medians.
//!
//! Timing covers the algorithm body only. Each cell starts with one untimed
//! warm-up run per algorithm. A timed sample repeats the computation in
//! several batches and reports the fastest batch mean, so very fast
//! instances are not at the mercy of timer resolution or stray load.

use std::fmt::{self, Write as _};
use std::fs::OpenOptions;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bm::bm_gb;
use crate::error::{Error, Result};
use crate::essgb::ess_gb;
use crate::gen::{gen_variety, GenSpec};
use crate::monomial::TermOrder;
use crate::points::PointSet;
use crate::result::GbResult;

pub const CSV_HEADER: &str = "p,n,m,order,i,alg,seconds,ess_vars,gb_size,checksum";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    EssGb,
    Bm,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::EssGb => "essgb",
            Algorithm::Bm => "bm",
        }
    }

    pub fn run(self, points: &PointSet, order: TermOrder) -> Result<GbResult> {
        match self {
            Algorithm::EssGb => ess_gb(points, order),
            Algorithm::Bm => bm_gb(points, order),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "essgb" => Ok(Algorithm::EssGb),
            "bm" => Ok(Algorithm::Bm),
            other => Err(Error::Config(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub primes: Vec<u32>,
    pub ns: Vec<usize>,
    pub ms: Vec<usize>,
    pub orders: Vec<TermOrder>,
    /// Varieties per cell, `r`.
    pub reps: usize,
    pub algorithms: Vec<Algorithm>,
    pub seed: u64,
    pub min_sample: Duration,
    /// Run cells on worker threads. Off by default since concurrent cells
    /// disturb each other's timings.
    pub parallel: bool,
}

impl BenchConfig {
    /// p ∈ {5, 101}, n ∈ {100, 200, 300}, m ∈ {5, 10, 15}, both orders, r = 10.
    pub fn default_grid() -> Self {
        BenchConfig {
            primes: vec![5, 101],
            ns: vec![100, 200, 300],
            ms: vec![5, 10, 15],
            orders: vec![TermOrder::Lex, TermOrder::GRevLex],
            reps: 10,
            algorithms: vec![Algorithm::EssGb, Algorithm::Bm],
            seed: 0,
            min_sample: Duration::from_millis(5),
            parallel: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let empty = [
            ("primes", self.primes.is_empty()),
            ("n values", self.ns.is_empty()),
            ("m values", self.ms.is_empty()),
            ("orders", self.orders.is_empty()),
            ("algorithms", self.algorithms.is_empty()),
        ];
        if let Some((what, _)) = empty.iter().find(|(_, e)| *e) {
            return Err(Error::Config(format!("no {what} given")));
        }
        if self.reps == 0 {
            return Err(Error::Config("reps must be at least 1".into()));
        }
        for &p in &self.primes {
            crate::fp::FieldContext::new(p as u64)?;
        }
        if self.ns.contains(&0) || self.ms.contains(&0) {
            return Err(Error::Config("n and m must be at least 1".into()));
        }
        Ok(())
    }

    /// Grid cells in row-major order over (p, n, m, order).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for &p in &self.primes {
            for &n in &self.ns {
                for &m in &self.ms {
                    for &order in &self.orders {
                        out.push(Cell { p, n, m, order });
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    pub order: TermOrder,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={} m={} {}", self.p, self.n, self.m, self.order)
    }
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    pub order: String,
    pub i: usize,
    pub alg: String,
    pub seconds: f64,
    pub ess_vars: usize,
    pub gb_size: usize,
    /// FNV-1a of the canonical basis, 16 hex digits.
    pub checksum: String,
}

/// Batches per timed sample; the fastest batch mean is reported.
pub const BATCHES: u32 = 5;

/// Seconds per run: the computation is repeated in [`BATCHES`] batches of
/// at least `min_sample / BATCHES` each, and the smallest batch mean is
/// returned. Interference from other processes only ever adds time, so the
/// fastest batch is the least disturbed estimate.
pub fn time_algorithm(
    alg: Algorithm,
    points: &PointSet,
    order: TermOrder,
    min_sample: Duration,
) -> Result<(GbResult, f64)> {
    let per_batch = min_sample / BATCHES;
    let mut best = f64::INFINITY;
    let mut last = None;
    for _ in 0..BATCHES {
        let start = Instant::now();
        let mut runs = 0u32;
        loop {
            last = Some(alg.run(points, order)?);
            runs += 1;
            let elapsed = start.elapsed();
            if elapsed >= per_batch {
                best = best.min(elapsed.as_secs_f64() / runs as f64);
                break;
            }
        }
    }
    Ok((last.expect("at least one run"), best))
}

fn gen_spec(config: &BenchConfig, cell: &Cell, index: usize) -> GenSpec {
    GenSpec {
        p: cell.p,
        n: cell.n,
        m: cell.m,
        index,
        reps: config.reps,
        seed: config.seed,
    }
}

/// Benchmarks one cell: `r` varieties, every configured algorithm on each.
pub fn run_cell(config: &BenchConfig, cell: &Cell) -> Result<Vec<BenchRecord>> {
    let varieties = (1..=config.reps)
        .map(|i| gen_variety(&gen_spec(config, cell, i)))
        .collect::<Result<Vec<_>>>()?;
    for &alg in &config.algorithms {
        alg.run(&varieties[0], cell.order)?;
    }
    let mut records = Vec::with_capacity(config.reps * config.algorithms.len());
    for (idx, points) in varieties.iter().enumerate() {
        let mut reference: Option<(Algorithm, u64)> = None;
        for &alg in &config.algorithms {
            let (result, seconds) = time_algorithm(alg, points, cell.order, config.min_sample)?;
            let checksum = result.checksum();
            match reference {
                None => reference = Some((alg, checksum)),
                Some((first, sum)) if sum != checksum => {
                    let (essgb, bm) = if first == Algorithm::EssGb {
                        (sum, checksum)
                    } else {
                        (checksum, sum)
                    };
                    return Err(Error::ChecksumMismatch {
                        instance: format!("{cell} i={}", idx + 1),
                        essgb,
                        bm,
                    });
                }
                Some(_) => {}
            }
            records.push(BenchRecord {
                p: cell.p,
                n: cell.n,
                m: cell.m,
                order: cell.order.name().to_string(),
                i: idx + 1,
                alg: alg.name().to_string(),
                seconds,
                ess_vars: result.essential_vars().len(),
                gb_size: result.basis.len(),
                checksum: format!("{checksum:016x}"),
            });
        }
    }
    Ok(records)
}

/// Runs every cell; `on_cell` sees each cell's records as they complete
/// (in grid order when sequential).
pub fn run_bench(
    config: &BenchConfig,
    mut on_cell: impl FnMut(&Cell, &[BenchRecord]),
) -> Result<Vec<BenchRecord>> {
    config.validate()?;
    let cells = config.cells();
    let mut all = Vec::new();
    if config.parallel {
        let per_cell: Vec<Result<Vec<BenchRecord>>> = cells
            .par_iter()
            .map(|cell| run_cell(config, cell))
            .collect();
        for (cell, records) in cells.iter().zip(per_cell) {
            let records = records?;
            on_cell(cell, &records);
            all.extend(records);
        }
    } else {
        for cell in &cells {
            let records = run_cell(config, cell)?;
            on_cell(cell, &records);
            all.extend(records);
        }
    }
    Ok(all)
}

/// Appends records to a CSV file, writing the header only if the file is
/// new or empty.
pub fn append_csv(path: &Path, records: &[BenchRecord]) -> Result<()> {
    let fresh = std::fs::metadata(path)
        .map(|m| m.len() == 0)
        .unwrap_or(true);
    let file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(file);
    if fresh {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    Some(if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    pub order: String,
    /// Median seconds per algorithm name, in first-seen order.
    pub medians: Vec<(String, f64)>,
}

impl CellSummary {
    pub fn median_of(&self, alg: Algorithm) -> Option<f64> {
        self.medians
            .iter()
            .find(|(a, _)| a == alg.name())
            .map(|&(_, t)| t)
    }

    /// `median(bm) / median(essgb)`.
    pub fn speedup(&self) -> Option<f64> {
        Some(self.median_of(Algorithm::Bm)? / self.median_of(Algorithm::EssGb)?)
    }
}

/// Per-cell medians, cells in first-seen order.
pub fn summarize(records: &[BenchRecord]) -> Vec<CellSummary> {
    let mut cells: Vec<CellSummary> = Vec::new();
    let mut samples: Vec<Vec<(String, Vec<f64>)>> = Vec::new();
    for r in records {
        let pos = cells
            .iter()
            .position(|c| c.p == r.p && c.n == r.n && c.m == r.m && c.order == r.order)
            .unwrap_or_else(|| {
                cells.push(CellSummary {
                    p: r.p,
                    n: r.n,
                    m: r.m,
                    order: r.order.clone(),
                    medians: Vec::new(),
                });
                samples.push(Vec::new());
                cells.len() - 1
            });
        let algs = &mut samples[pos];
        match algs.iter_mut().find(|(a, _)| *a == r.alg) {
            Some((_, v)) => v.push(r.seconds),
            None => algs.push((r.alg.clone(), vec![r.seconds])),
        }
    }
    for (cell, algs) in cells.iter_mut().zip(samples) {
        cell.medians = algs
            .into_iter()
            .map(|(a, v)| (a, median(&v).expect("at least one sample")))
            .collect();
    }
    cells
}

pub fn render_summary(summaries: &[CellSummary]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>5} {:>6} {:>4} {:>8} {:>14} {:>14} {:>9}",
        "p", "n", "m", "order", "essgb median", "bm median", "bm/essgb"
    )
    .unwrap();
    let fmt_t = |t: Option<f64>| t.map_or("-".to_string(), |t| format!("{:.6}s", t));
    for s in summaries {
        writeln!(
            out,
            "{:>5} {:>6} {:>4} {:>8} {:>14} {:>14} {:>9}",
            s.p,
            s.n,
            s.m,
            s.order,
            fmt_t(s.median_of(Algorithm::EssGb)),
            fmt_t(s.median_of(Algorithm::Bm)),
            s.speedup().map_or("-".to_string(), |r| format!("{r:.2}")),
        )
        .unwrap();
    }
    out
}
