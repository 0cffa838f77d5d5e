//! Command-line front end: `gen | stats | count | estimate | sweep | verify`.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 capacity or node-cap
//! exhaustion, 3 I/O failure, 4 a failed `verify` check.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gallai::estimate::{estimate_knuth, estimate_naive, Outcome};
use gallai::gallai::DEFAULT_NODE_CAP;
use gallai::graph::expected_triangle_count;
use gallai::harness::{emit_csv, run_sweep, run_verify, thread_pool_from_env, SweepConfig};
use gallai::{
    construction_count, count_exact, generate_gnp, load_edge_list, save_edge_list, triangle_stats, Error, Graph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "gallai", version, about = "Count and estimate Gallai 3-colourings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EstimatorArg {
    Naive,
    Knuth,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample G(n, p) and write it as an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print edge and triangle statistics of an edge list.
    Stats {
        /// Edge-list file, or `-` for stdin.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Count Gallai 3-colourings exactly.
    Count {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: u64,
    },
    /// Estimate the number of Gallai 3-colourings by Monte Carlo.
    Estimate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        method: EstimatorArg,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a parameter sweep and write CSV.
    Sweep {
        /// Sweep configuration file.
        #[arg(long)]
        config: PathBuf,
        /// CSV destination (stdout if omitted). A `.meta` file with the
        /// generator identity is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant suite.
    Verify,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) => EXIT_IO,
        Error::Capacity(_) => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

fn io_context(path: &Path, err: io::Error) -> Error {
    Error::Io(io::Error::new(err.kind(), format!("{}: {err}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| io_context(path, e))?
    };
    load_edge_list(&text)
}

fn write_output(path: Option<&Path>, bytes: &[u8], stdout: &mut (dyn Write + Send)) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| io_context(p, e)),
        None => Ok(stdout.write_all(bytes)?),
    }
}

fn execute(cmd: Command, stdout: &mut (dyn Write + Send)) -> Result<i32, Error> {
    match cmd {
        Command::Gen { n, p, seed, out } => {
            let g = generate_gnp(n, p, seed)?;
            write_output(out.as_deref(), save_edge_list(&g).as_bytes(), stdout)?;
        }
        Command::Stats { input } => {
            let g = read_graph(&input)?;
            let s = triangle_stats(&g);
            writeln!(stdout, "n: {}", g.n())?;
            writeln!(stdout, "e: {}", g.edge_count())?;
            writeln!(stdout, "T: {}", s.triangle_count)?;
            writeln!(stdout, "t: {}", s.triangle_edge_count)?;
            let pairs = g.n() * g.n().saturating_sub(1) / 2;
            if pairs > 0 {
                let density = g.edge_count() as f64 / pairs as f64;
                writeln!(stdout, "density: {density}")?;
                writeln!(stdout, "expected_T_at_density: {}", expected_triangle_count(g.n(), density))?;
            }
        }
        Command::Count { input, node_cap } => {
            let g = read_graph(&input)?;
            let r = count_exact(&g, node_cap);
            writeln!(stdout, "e: {}", g.edge_count())?;
            writeln!(stdout, "free_edges: {}", r.free_edge_count)?;
            writeln!(stdout, "components: {}", r.component_count)?;
            writeln!(stdout, "nodes_explored: {}", r.nodes_explored)?;
            writeln!(stdout, "capped: {}", r.capped)?;
            let lower = construction_count(&g);
            writeln!(stdout, "construction_count: {lower}")?;
            match (&r.count, r.log3_count()) {
                (Some(count), Some(log3)) => {
                    writeln!(stdout, "count: {count}")?;
                    writeln!(stdout, "log3_count: {log3}")?;
                    let gap = count.as_biguint() - lower.as_biguint();
                    writeln!(stdout, "gap_over_construction: {gap}")?;
                }
                _ => {
                    writeln!(stdout, "count: none (node cap {node_cap} reached)")?;
                    return Ok(EXIT_CAPACITY);
                }
            }
        }
        Command::Estimate {
            input,
            method,
            samples,
            seed,
        } => {
            let g = read_graph(&input)?;
            let est = match method {
                EstimatorArg::Naive => estimate_naive(&g, samples, seed)?,
                EstimatorArg::Knuth => estimate_knuth(&g, samples, seed)?,
            };
            writeln!(stdout, "method: {}", est.method)?;
            writeln!(stdout, "samples: {}", est.samples)?;
            writeln!(stdout, "seed: {}", est.seed)?;
            writeln!(stdout, "e: {}", g.edge_count())?;
            match est.outcome() {
                Outcome::Estimate { log3, log3_stderr } => {
                    writeln!(stdout, "log3_estimate: {log3}")?;
                    writeln!(stdout, "log3_stderr: {log3_stderr}")?;
                }
                Outcome::ZeroHit { log3_upper_bound } => {
                    writeln!(stdout, "zero_hit: true")?;
                    writeln!(stdout, "log3_upper_bound: {log3_upper_bound}")?;
                }
            }
            if let Some(max) = est.log3_max_weight() {
                writeln!(stdout, "log3_max_weight: {max}")?;
            }
        }
        Command::Sweep { config, out } => {
            let text = fs::read_to_string(&config).map_err(|e| io_context(&config, e))?;
            let cfg = SweepConfig::parse(&text)?;
            let records = run_sweep(&cfg)?;
            let mut csv = Vec::new();
            emit_csv(&records, &mut csv)?;
            write_output(out.as_deref(), &csv, stdout)?;
            if let Some(path) = out {
                let mut meta = path.into_os_string();
                meta.push(".meta");
                let info = format!(
                    "gallai {}\nrng: {}\n",
                    env!("CARGO_PKG_VERSION"),
                    gallai::RNG_IDENTITY
                );
                write_output(Some(Path::new(&meta)), info.as_bytes(), stdout)?;
            }
        }
        Command::Verify => {
            let mut all = true;
            for check in run_verify() {
                all &= check.passed;
                let mark = if check.passed { "PASS" } else { "FAIL" };
                writeln!(stdout, "{mark} {}: {}", check.name, check.detail)?;
            }
            if !all {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command, writing
/// reports to `stdout` and diagnostics to stderr. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return code;
        }
    };
    let pool = match thread_pool_from_env() {
        Ok(pool) => pool,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| execute(cli.command, stdout)) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

/// Entry point used by the binary.
pub fn main_with_stdout() -> i32 {
    let mut out = BufWriter::new(io::stdout());
    let code = run(std::env::args_os(), &mut out);
    if out.flush().is_err() {
        return EXIT_IO;
    }
    code
}
