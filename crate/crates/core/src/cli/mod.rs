//! Command-line front end. Exit codes: 0 success, 1 counterexample or
//! failed self-check, 2 bad input or misuse.

mod bench;

pub use bench::{parse_sweep, run_sweep, BenchRecord, SweepLine, CSV_HEADER};

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounded::bounded_realizer_with;
use crate::dimension::{
    antichain_lower_bound, dimension_oracle_capped, exact_dimension_with, greedy_realizer, is_strongly_independent,
    verify_realizer, Budget, DimensionResult, IndependenceCheck, Verdict, DEFAULT_ORACLE_CAP, DEFAULT_SI_CAP,
};
use crate::error::{Error, Result};
use crate::extension::Realizer;
use crate::format::{parse_poset, parse_realizer, write_poset, write_realizer};
use crate::gallery;
use crate::poset::Poset;
use crate::rank::rank_function;
use crate::subsets::{construct_subset_realizer, subsets_parameters};

#[derive(Parser, Debug)]
#[command(name = "posetdim", version, about = "Order dimension of finite posets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated poset.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Extra parameters as `key=value,...`.
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact dimension or bounds with certificates.
    Dim {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Search)]
        method: Method,
        #[arg(long, env = "POSETDIM_BUDGET_MS")]
        budget_ms: Option<u64>,
        /// Element cap for the oracle, antichain-size cap for bounds.
        #[arg(long)]
        cap: Option<usize>,
        /// Prefix for certificate files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a realizer with one of the explicit constructions.
    Realize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        strategy: Strategy,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a realizer file against a poset file.
    Verify {
        #[arg(long)]
        input: PathBuf,
        realizer: PathBuf,
    },
    /// Run a sweep file and write CSV.
    Bench {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed used where a sweep line gives none.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write 0 in the `ms` column so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the (block, position) rank of every element.
    Rank {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Chain,
    Antichain,
    Boolean,
    Standard,
    Crown,
    Higuchi,
    Interval,
    Subsets,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Search,
    Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    SubsetCode,
    Bounded,
    Greedy,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::SubsetCode => "subset-code",
            Strategy::Bounded => "bounded",
            Strategy::Greedy => "greedy",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        <Strategy as ValueEnum>::from_str(s, true).ok()
    }
}

/// What a command produced: text for stdout and stderr, and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn out(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), CliError> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn load_poset(path: &Path) -> std::result::Result<Poset, CliError> {
    parse_poset(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn budget(ms: Option<u64>) -> Budget {
    ms.map_or_else(Budget::unlimited, Budget::millis)
}

/// Parses `key=value,...`.
pub fn parse_params(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("parameter `{item}` is not key=value")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn param<T: std::str::FromStr>(params: &BTreeMap<String, String>, key: &str) -> Result<Option<T>> {
    params
        .get(key)
        .map(|v| v.parse::<T>().map_err(|_| Error::Domain(format!("bad value `{v}` for `{key}`"))))
        .transpose()
}

fn required<T: std::str::FromStr>(params: &BTreeMap<String, String>, key: &str) -> Result<T> {
    param(params, key)?.ok_or_else(|| Error::Domain(format!("missing parameter `{key}`")))
}

/// Builds a gallery poset from string parameters. Recognized keys: `n`,
/// `k`, `grid`, `m`, `u`, `cap`, `density`, `seed`.
pub fn generate(family: Family, params: &BTreeMap<String, String>) -> Result<Poset> {
    match family {
        Family::Chain => Ok(gallery::chain(required(params, "n")?)),
        Family::Antichain => Ok(gallery::antichain(required(params, "n")?)),
        Family::Boolean => gallery::boolean_lattice(required(params, "n")?),
        Family::Standard => gallery::standard_example(required(params, "n")?),
        Family::Crown => gallery::crown(required(params, "n")?),
        Family::Higuchi => gallery::higuchi_poset(required(params, "n")?),
        Family::Interval => gallery::interval_union_poset(
            required(params, "grid")?,
            required(params, "m")?,
            required(params, "u")?,
            param(params, "cap")?.unwrap_or(gallery::DEFAULT_GENERATOR_CAP),
        ),
        Family::Subsets => gallery::generate_subsets_poset(required(params, "n")?, required(params, "k")?),
        Family::Random => {
            let density: f64 = param(params, "density")?.unwrap_or(0.1);
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::Domain(format!("density {density} outside [0,1]")));
            }
            Ok(gallery::random_poset(
                required(params, "n")?,
                density,
                param(params, "cap")?,
                param(params, "seed")?.unwrap_or(0),
            ))
        }
    }
}

/// A verified realizer and its audit sidecar.
pub fn realize(p: &Poset, strategy: Strategy, c: Option<usize>, seed: u64) -> Result<(Realizer, String)> {
    match strategy {
        Strategy::SubsetCode => {
            let (n, k) = subsets_parameters(p)
                .ok_or_else(|| Error::TypeMismatch("subset-code needs a poset written by `gen --family subsets`".into()))?;
            let r = construct_subset_realizer(n, k)?;
            let text = r.provenance();
            Ok((r.realizer, text))
        }
        Strategy::Bounded => {
            let r = bounded_realizer_with(p, c, seed)?;
            let text = r.provenance();
            Ok((r.realizer, text))
        }
        Strategy::Greedy => Ok((greedy_realizer(p), "strategy greedy\n".to_string())),
    }
}

fn cmd_gen(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    params: Option<String>,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> std::result::Result<Outcome, CliError> {
    let mut map = params.as_deref().map(parse_params).transpose()?.unwrap_or_default();
    if let Some(n) = n {
        map.insert("n".into(), n.to_string());
    }
    if let Some(k) = k {
        map.insert("k".into(), k.to_string());
    }
    if let Some(s) = seed {
        map.insert("seed".into(), s.to_string());
    }
    let text = write_poset(&generate(family, &map)?);
    match out {
        Some(path) => {
            write(&path, &text)?;
            Ok(Outcome::default())
        }
        None => Ok(Outcome::out(text, 0)),
    }
}

fn cmd_dim(
    input: &Path,
    method: Method,
    budget_ms: Option<u64>,
    cap: Option<usize>,
    out: Option<PathBuf>,
) -> std::result::Result<Outcome, CliError> {
    let p = load_poset(input)?;
    let mut text = String::new();
    match method {
        Method::Oracle => {
            let d = dimension_oracle_capped(&p, cap.unwrap_or(DEFAULT_ORACLE_CAP))?;
            let _ = writeln!(text, "dimension {d}");
        }
        Method::Search => match exact_dimension_with(&p, &budget(budget_ms)) {
            DimensionResult::Exact { dimension, realizer } => {
                let _ = writeln!(text, "dimension {dimension}");
                if let Some(prefix) = &out {
                    let path = with_suffix(prefix, ".realizer");
                    write(&path, &write_realizer(&realizer))?;
                    let _ = writeln!(text, "certificate upper {}", path.display());
                }
            }
            DimensionResult::Timeout { lower, upper, realizer } => {
                let _ = writeln!(text, "dimension in [{lower},{upper}]");
                let _ = writeln!(text, "timeout");
                if let Some(prefix) = &out {
                    let path = with_suffix(prefix, ".realizer");
                    write(&path, &write_realizer(&realizer))?;
                    let _ = writeln!(text, "certificate upper {}", path.display());
                }
            }
        },
        Method::Bounds => {
            let lb = antichain_lower_bound(&p, cap.unwrap_or(DEFAULT_SI_CAP), &budget(budget_ms));
            let upper = greedy_realizer(&p);
            let _ = writeln!(text, "dimension in [{},{}]", lb.value, upper.size());
            if lb.timed_out {
                let _ = writeln!(text, "timeout");
            }
            if let Some(prefix) = &out {
                if lb.antichain.len() >= 2 {
                    if let IndependenceCheck::Independent(cert) = is_strongly_independent(&p, &lb.antichain)? {
                        let path = with_suffix(prefix, ".antichain");
                        write(&path, &cert.to_text())?;
                        let _ = writeln!(text, "certificate lower {}", path.display());
                    }
                }
                let path = with_suffix(prefix, ".realizer");
                write(&path, &write_realizer(&upper))?;
                let _ = writeln!(text, "certificate upper {}", path.display());
            }
        }
    }
    Ok(Outcome::out(text, 0))
}

fn cmd_realize(
    input: &Path,
    strategy: Strategy,
    c: Option<usize>,
    seed: u64,
    out: Option<PathBuf>,
) -> std::result::Result<Outcome, CliError> {
    let p = load_poset(input)?;
    let (r, sidecar) = realize(&p, strategy, c, seed)?;
    let verdict = verify_realizer(&p, &r)?;
    if !verdict.is_ok() {
        return Err(CliError::Failed(format!("constructed realizer failed verification: {verdict}")));
    }
    let text = write_realizer(&r);
    match out {
        Some(path) => {
            write(&path, &text)?;
            write(&with_suffix(&path, ".provenance"), &sidecar)?;
            Ok(Outcome::out(format!("size {}\nverified\n", r.size()), 0))
        }
        None => Ok(Outcome::out(text, 0)),
    }
}

fn cmd_verify(input: &Path, realizer: &Path) -> std::result::Result<Outcome, CliError> {
    let p = load_poset(input)?;
    let r = parse_realizer(&read(realizer)?).map_err(|e| CliError::Input(format!("{}: {e}", realizer.display())))?;
    match verify_realizer(&p, &r)? {
        Verdict::Ok => Ok(Outcome::out("ok\n".into(), 0)),
        v => Ok(Outcome::out(format!("{v}\n"), 1)),
    }
}

fn cmd_bench(input: &Path, out: Option<PathBuf>, seed: u64, no_timing: bool) -> std::result::Result<Outcome, CliError> {
    let lines = parse_sweep(&read(input)?)?;
    let records = run_sweep(&lines, seed, !no_timing).map_err(|e| match e {
        Error::InvalidRealizer(msg) => CliError::Failed(msg),
        other => CliError::Input(other.to_string()),
    })?;
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in &records {
        csv.push_str(&r.to_csv_row());
        csv.push('\n');
    }
    match out {
        Some(path) => {
            write(&path, &csv)?;
            Ok(Outcome::out(format!("{} rows\n", records.len()), 0))
        }
        None => Ok(Outcome::out(csv, 0)),
    }
}

fn cmd_rank(input: &Path) -> std::result::Result<Outcome, CliError> {
    let p = load_poset(input)?;
    let r = rank_function(&p);
    let mut text = String::new();
    for (x, rank) in r.ranks().iter().enumerate() {
        let _ = writeln!(text, "{x} {rank}");
    }
    Ok(Outcome::out(text, 0))
}

/// Runs a parsed command.
pub fn execute(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Gen {
            family,
            n,
            k,
            params,
            seed,
            out,
        } => cmd_gen(family, n, k, params, seed, out),
        Command::Dim {
            input,
            method,
            budget_ms,
            cap,
            out,
        } => cmd_dim(&input, method, budget_ms, cap, out),
        Command::Realize {
            input,
            strategy,
            c,
            seed,
            out,
        } => cmd_realize(&input, strategy, c, seed, out),
        Command::Verify { input, realizer } => cmd_verify(&input, &realizer),
        Command::Bench {
            input,
            out,
            seed,
            no_timing,
        } => cmd_bench(&input, out, seed, no_timing),
        Command::Rank { input } => cmd_rank(&input),
    };
    match result {
        Ok(o) => o,
        Err(CliError::Input(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        },
        Err(CliError::Failed(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 1,
        },
    }
}

/// Parses arguments and runs; usage errors exit with code 2.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) if e.exit_code() == 0 => Outcome::out(e.to_string(), 0),
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: e.to_string(),
            code: e.exit_code(),
        },
    }
}
