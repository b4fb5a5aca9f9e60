mod cache;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use altperm::equivalence::{self, Budget, ConjectureId};
use altperm::tables::{self, TableId};
use altperm::verify::{self, Report};
use altperm::young::{AdYoung, Transversal};
use altperm::{jf, EnumError, Parallelism, PermClass, Permutation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use cache::Cache;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "altperm",
    version,
    about = "Exact enumeration of pattern avoidance in alternating and descent-type permutations"
)]
struct Cli {
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Cache directory (defaults to $ALTPERM_CACHE, then ./.altperm-cache).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count members of a class of length n that avoid a pattern.
    Count(CountArgs),
    /// Recompute a reference table as CSV.
    Tables(TablesArgs),
    /// Run a property suite and report pass/fail per invariant.
    Verify(VerifyArgs),
    /// Check an open conjecture within a budget.
    Conjecture(ConjectureArgs),
    /// Print every replacement step of the F3/J3 bijection on one transversal.
    Trace(TraceArgs),
    /// Recompute a random sample of cached counts.
    CheckCache(CheckCacheArgs),
}

#[derive(Args)]
struct CountArgs {
    /// Pattern, e.g. 2134 or 10,1,2,... for lengths above 9.
    #[arg(long)]
    pattern: String,
    /// all | alt | ralt | dk:K | dset:I,J,.. | aset:I,J,..
    #[arg(long, default_value = "all")]
    class: String,
    /// Permutation length.
    #[arg(long)]
    n: usize,
    /// Print a JSON object instead of the bare count.
    #[arg(long)]
    json: bool,
    /// Recompute even on a cache hit and fail if the cached value differs.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct TablesArgs {
    /// 6even | 6odd | 4rep
    which: String,
    /// Largest length column to compute (default: 10 for 6even, 9 for 6odd and 4rep).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Bijection,
    Extension,
    Doubling,
    Injections,
    Shape2,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Largest diagram row count (bijection, extension, shape2).
    #[arg(long)]
    rows: Option<usize>,
    /// Largest pattern length (doubling) or descent type (injections).
    #[arg(long)]
    k: Option<usize>,
    /// Largest permutation length (injections).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct ConjectureArgs {
    /// sesa | decreasing | dk-2134 | dk-unique
    id: String,
    /// Largest pattern length or descent type (default 4).
    #[arg(long)]
    k: Option<usize>,
    /// Largest diagram row count (default 6).
    #[arg(long)]
    rows: Option<usize>,
    /// Largest permutation length (default 10).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct TraceArgs {
    /// AD-Young diagram, e.g. "4,4,2,2;A=;D=3".
    #[arg(long)]
    diagram: String,
    /// Column word ("3,4,6,5,2,1") or cell set ("{(1,3),(2,4),...}").
    #[arg(long)]
    transversal: String,
    /// Run the inverse direction (213-avoiders from 321-avoiders).
    #[arg(long)]
    inverse: bool,
}

#[derive(Args)]
struct CheckCacheArgs {
    /// Number of entries to recompute.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Seed for choosing the sample.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Failure of a command: the message and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn failed(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_FAILURE,
        message: message.to_string(),
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        failed(format!("budget exceeded: {e}"))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        failed(format!("i/o error: {e}"))
    }
}

struct Ctx {
    mode: Parallelism,
    cache: Option<Cache>,
}

#[derive(Serialize)]
struct CountResult {
    query: String,
    count: u64,
    elapsed_ms: f64,
    cached: bool,
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self, Failure> {
        let mode = if cli.sequential {
            Parallelism::Sequential
        } else {
            Parallelism::Parallel
        };
        let cache = if cli.no_cache {
            None
        } else {
            Some(Cache::open(
                &cli.cache_dir.clone().unwrap_or_else(Cache::default_dir),
            )?)
        };
        Ok(Ctx { mode, cache })
    }

    /// Count through the cache; returns the count and whether it was a hit.
    fn count(
        &mut self,
        pattern: &Permutation,
        class: &PermClass,
        n: usize,
        verify: bool,
    ) -> Result<(u64, bool), Failure> {
        let key = cache::query_key(pattern, class, n);
        let hit = self
            .cache
            .as_ref()
            .and_then(|c| c.get(&key))
            .map(|e| e.count);
        if let Some(count) = hit {
            if verify {
                let fresh = altperm::count_avoiders_with(pattern, class, n, self.mode)?;
                if fresh != count {
                    return Err(failed(format!(
                        "cache entry {key} holds {count}, recomputed {fresh}"
                    )));
                }
            }
            return Ok((count, true));
        }
        let count = altperm::count_avoiders_with(pattern, class, n, self.mode)?;
        if let Some(c) = self.cache.as_mut() {
            c.insert(pattern, class, n, count)?;
        }
        Ok((count, false))
    }
}

fn cmd_count(ctx: &mut Ctx, args: &CountArgs) -> Result<(), Failure> {
    let pattern: Permutation = args
        .pattern
        .parse()
        .map_err(|e| usage(format!("--pattern: {e}")))?;
    let class: PermClass = args
        .class
        .parse()
        .map_err(|e| usage(format!("--class: {e}")))?;
    let start = Instant::now();
    let (count, cached) = ctx.count(&pattern, &class, args.n, args.verify)?;
    if args.json {
        let out = CountResult {
            query: cache::query_key(&pattern, &class, args.n),
            count,
            elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
            cached,
        };
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("{count}");
    }
    Ok(())
}

fn cmd_tables(ctx: &mut Ctx, args: &TablesArgs) -> Result<(), Failure> {
    let id: TableId = args.which.parse().map_err(usage)?;
    let t = tables::table(id);
    let max_n = args.max_n.unwrap_or(match id {
        TableId::SixEven => 10,
        TableId::SixOdd | TableId::FourRep => 9,
    });
    let lengths = t.lengths_up_to(max_n);
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    let mut header = vec!["patterns".to_string()];
    header.extend(lengths.iter().map(|n| n.to_string()));
    w.write_record(&header).map_err(|e| failed(e.to_string()))?;
    for row in t.rows {
        let rep = row.pattern_list().remove(0);
        let mut record = vec![row.patterns.to_string()];
        for &n in &lengths {
            record.push(ctx.count(&rep, &t.class, n, false)?.0.to_string());
        }
        w.write_record(&record).map_err(|e| failed(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

fn print_reports(reports: &[Report]) -> Result<(), Failure> {
    let mut ok = true;
    for r in reports {
        println!("{} {r}", if r.passed() { "PASS" } else { "FAIL" });
        ok &= r.passed();
    }
    if ok {
        Ok(())
    } else {
        Err(failed("some invariants failed"))
    }
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs) -> Result<(), Failure> {
    let mode = ctx.mode;
    let reports = match args.suite {
        Suite::Bijection => {
            let rows = args.rows.unwrap_or(5);
            vec![verify::bijection_sweep(rows, rows.saturating_sub(1), mode)]
        }
        Suite::Extension => vec![verify::extension_sweep(args.rows.unwrap_or(4), mode)],
        Suite::Shape2 => vec![verify::shape2_sweep(args.rows.unwrap_or(6), mode)],
        Suite::Doubling => vec![verify::doubling_sweep(args.k.unwrap_or(5), mode)],
        Suite::Injections => {
            let k_max = args.k.unwrap_or(4);
            let n_max = args.n.unwrap_or(8);
            let ks: Vec<usize> = (2..=k_max).collect();
            vec![
                verify::child_map_sweep(&ks, n_max, mode),
                verify::monotonicity_sweep(&ks, n_max, mode),
                verify::secondary_injection_sweep(&ks[..ks.len().min(2)], n_max.min(9), mode),
                verify::block_321_sweep(&ks, 3),
                verify::plateau_sweep(k_max.max(3), 2, mode),
                verify::inductive_step_sweep(&ks, n_max),
            ]
        }
    };
    print_reports(&reports)
}

fn cmd_conjecture(ctx: &Ctx, args: &ConjectureArgs) -> Result<(), Failure> {
    let id: ConjectureId = args.id.parse().map_err(usage)?;
    let d = Budget::default();
    let budget = Budget {
        k: args.k.unwrap_or(d.k),
        rows: args.rows.unwrap_or(d.rows),
        n: args.n.unwrap_or(d.n),
    };
    let verdict = equivalence::check_conjecture(id, budget, ctx.mode);
    println!("{verdict}");
    if verdict.holds() {
        Ok(())
    } else {
        Err(failed("counterexample found"))
    }
}

fn cmd_trace(args: &TraceArgs) -> Result<(), Failure> {
    let ady: AdYoung = args
        .diagram
        .parse()
        .map_err(|e| usage(format!("--diagram: {e}")))?;
    let t: Transversal = args
        .transversal
        .parse()
        .map_err(|e| usage(format!("--transversal: {e}")))?;
    let run = match (ady.is_alternating(1), args.inverse) {
        (true, false) => jf::big_phi,
        (true, true) => jf::big_psi,
        (false, false) => jf::big_phi_semialternating,
        (false, true) => jf::big_psi_semialternating,
    };
    let (out, steps) = run(&ady, &t).map_err(|e| usage(e.to_string()))?;
    let mut stdout = io::stdout().lock();
    for s in &steps {
        writeln!(stdout, "{s}")?;
    }
    writeln!(stdout, "result {out} after {} steps", steps.len())?;
    Ok(())
}

fn cmd_check_cache(ctx: &Ctx, args: &CheckCacheArgs) -> Result<(), Failure> {
    let Some(cache) = &ctx.cache else {
        return Err(usage("cache disabled"));
    };
    let mut entries: Vec<_> = cache.entries().collect();
    entries.sort_by(|a, b| a.key.cmp(&b.key));
    let mut rng = rand::rngs::StdRng::seed_from_u64(args.seed);
    let sample: Vec<_> = entries.choose_multiple(&mut rng, args.samples).collect();
    let mut bad = 0;
    for e in &sample {
        let pattern: Permutation = e
            .pattern
            .parse()
            .map_err(|err| failed(format!("{}: {err}", e.key)))?;
        let class: PermClass = e
            .class
            .parse()
            .map_err(|err| failed(format!("{}: {err}", e.key)))?;
        let fresh = altperm::count_avoiders_with(&pattern, &class, e.n, ctx.mode)?;
        if fresh != e.count {
            bad += 1;
            println!("MISMATCH {} cached {} recomputed {fresh}", e.key, e.count);
        }
    }
    println!(
        "checked {} of {} cached entries, {bad} mismatches",
        sample.len(),
        cache.len()
    );
    if bad == 0 {
        Ok(())
    } else {
        Err(failed("cache mismatch"))
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut ctx = Ctx::new(cli)?;
    match &cli.command {
        Command::Count(a) => cmd_count(&mut ctx, a),
        Command::Tables(a) => cmd_tables(&mut ctx, a),
        Command::Verify(a) => cmd_verify(&ctx, a),
        Command::Conjecture(a) => cmd_conjecture(&ctx, a),
        Command::Trace(a) => cmd_trace(a),
        Command::CheckCache(a) => cmd_check_cache(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
