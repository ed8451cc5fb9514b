use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use essgb::bench::{self, Algorithm, BenchConfig};
use essgb::gen::RNG_ALGORITHM;
use essgb::verify::verify_result;
use essgb::{gen_variety, FieldContext, GbResult, GenSpec, PointSet, TermOrder};

/// Reduced Gröbner bases of vanishing ideals of points over GF(p).
#[derive(Parser)]
#[command(name = "essgb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the basis, standard monomials and separators of a point file.
    Compute(ComputeArgs),
    /// Generate a random variety and write it as a point file.
    Gen(GenArgs),
    /// Time both algorithms over a grid of random varieties.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

impl From<OrderArg> for TermOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => TermOrder::Lex,
            OrderArg::Grevlex => TermOrder::GRevLex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Essgb,
    Bm,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Essgb => Algorithm::EssGb,
            AlgorithmArg::Bm => Algorithm::Bm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Point file: one point per line, coordinates separated by whitespace or commas.
    points: PathBuf,
    #[arg(long)]
    prime: u64,
    #[arg(long, value_enum, default_value = "lex")]
    order: OrderArg,
    #[arg(long, value_enum, default_value = "essgb")]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Check every output property; exit with status 2 if any fails.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    prime: u32,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Variety index i in 1..=reps.
    #[arg(long)]
    index: usize,
    #[arg(long, default_value_t = 10)]
    reps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; the points go to stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [5u32, 101])]
    primes: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_values_t = [100usize, 200, 300])]
    ns: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values_t = [5usize, 10, 15])]
    ms: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_enum, default_values = ["lex", "grevlex"])]
    orders: Vec<OrderArg>,
    /// Varieties per grid cell.
    #[arg(long, default_value_t = 10)]
    reps: usize,
    #[arg(long, value_delimiter = ',', value_enum, default_values = ["essgb", "bm"])]
    algorithms: Vec<AlgorithmArg>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV file to append records to.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Minimum measured time per sample, in milliseconds.
    #[arg(long, default_value_t = 5)]
    min_sample_ms: u64,
    /// Benchmark grid cells concurrently (timings become less reliable).
    #[arg(long)]
    parallel: bool,
}

#[derive(Serialize)]
struct JsonOutput {
    prime: u64,
    order: String,
    groebner_basis: Vec<String>,
    standard_monomials: Vec<String>,
    separators: Vec<String>,
}

impl JsonOutput {
    fn new(prime: u64, result: &GbResult) -> Self {
        JsonOutput {
            prime,
            order: result.order.name().to_string(),
            groebner_basis: result.basis.iter().map(|g| g.to_string()).collect(),
            standard_monomials: result
                .standard_monomials
                .iter()
                .map(|s| s.to_string())
                .collect(),
            separators: result.separators.iter().map(|s| s.to_string()).collect(),
        }
    }
}

fn render_text(result: &GbResult) -> String {
    let mut out = format!("order: {}\ngroebner basis:\n", result.order);
    for g in &result.basis {
        out.push_str(&format!("  {g}\n"));
    }
    let sm: Vec<String> = result
        .standard_monomials
        .iter()
        .map(|s| s.to_string())
        .collect();
    out.push_str(&format!(
        "standard monomials: {}\nseparators:\n",
        sm.join(", ")
    ));
    for s in &result.separators {
        out.push_str(&format!("  {s}\n"));
    }
    out
}

fn compute(args: ComputeArgs) -> Result<ExitCode> {
    let field = FieldContext::new(args.prime)?;
    let text = fs::read_to_string(&args.points)
        .with_context(|| format!("reading {}", args.points.display()))?;
    let points =
        PointSet::parse(&text, field).with_context(|| format!("{}", args.points.display()))?;
    let order = TermOrder::from(args.order);
    let result = Algorithm::from(args.algorithm).run(&points, order)?;

    let mut stdout = io::stdout().lock();
    match args.format {
        Format::Text => write!(stdout, "{}", render_text(&result))?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut stdout, &JsonOutput::new(args.prime, &result))?;
            writeln!(stdout)?;
        }
    }
    if args.verify {
        let report = verify_result(&result, &points, order);
        eprint!("{}", report.to_lines());
        if !report.passed() {
            eprintln!("verification failed");
            return Ok(ExitCode::from(2));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn gen(args: GenArgs) -> Result<ExitCode> {
    let spec = GenSpec {
        p: args.prime,
        n: args.n,
        m: args.m,
        index: args.index,
        reps: args.reps,
        seed: args.seed,
    };
    let points = gen_variety(&spec)?;
    let body = format!(
        "# p={} n={} m={} i={} r={} seed={} rng={RNG_ALGORITHM}\n{}",
        spec.p,
        spec.n,
        spec.m,
        spec.index,
        spec.reps,
        spec.seed,
        points.to_file_string()
    );
    let summary = format!("nr(i) = {}, rank = {}", spec.nr(), points.rank());
    match &args.out {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
            println!("{summary}");
        }
        None => {
            print!("{body}");
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_bench(args: BenchArgs) -> Result<ExitCode> {
    let config = BenchConfig {
        primes: args.primes,
        ns: args.ns,
        ms: args.ms,
        orders: args.orders.into_iter().map(TermOrder::from).collect(),
        reps: args.reps,
        algorithms: args.algorithms.into_iter().map(Algorithm::from).collect(),
        seed: args.seed,
        min_sample: Duration::from_millis(args.min_sample_ms),
        parallel: args.parallel,
    };
    let mut write_error = None;
    let records = bench::run_bench(&config, |cell, records| {
        eprintln!("done {cell}");
        if let Some(path) = &args.out {
            if let Err(e) = bench::append_csv(path, records) {
                write_error.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = write_error {
        return Err(e).context("writing CSV");
    }
    println!("rng: {RNG_ALGORITHM}, seed: {}", config.seed);
    print!("{}", bench::render_summary(&bench::summarize(&records)));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Gen(args) => gen(args),
        Command::Bench(args) => run_bench(args),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(1)
    })
}
