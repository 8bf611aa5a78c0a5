//! Command-line front end. [`run`] does all the work so the binary is a
//! thin shim and tests can drive the commands in-process.
//!
//! Exit codes: 0 success, 1 operational error or exceeded budget,
//! 2 a conjecture failed, 3 a proved statement failed (a defect).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};

use crate::family::{Element, SetFamily};
use crate::format::{parse_family, to_hex, to_text, ParseOptions};
use crate::report::{sweep_records, write_jsonl, ReportRecord};
use crate::solvers::{
    berge_pairing, beta, has_star_property, max_cross_product, max_cross_sum, SolveError,
};
use crate::verify::{revalidate, run_sweep, Budgets, Revalidation, SweepConfig, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_DEFECT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "herfam", version, about = "Exact tools for hereditary set families")]
pub struct Cli {
    /// Reject duplicate sets in input files.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Print families as hex words instead of `{..}` sets.
    #[arg(long, global = true)]
    pub hex: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest hereditary family containing the input.
    Closure { input: PathBuf },
    /// Maximal members of the input.
    Bases { input: PathBuf },
    /// Apply the (x, y) compression to every member.
    Compress {
        input: PathBuf,
        #[arg(long)]
        x: Element,
        #[arg(long)]
        y: Element,
    },
    /// Members meeting every member, then `---`, then the rest.
    Kernel { input: PathBuf },
    /// Compute one extremal quantity and print it as a JSON record.
    Solve {
        metric: Metric,
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Run a sweep described by a config file and write JSONL results.
    Verify {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        budget_subsets: Option<String>,
        #[arg(long)]
        budget_tuples: Option<String>,
        #[arg(long)]
        seed: Option<String>,
        /// Record wall-clock time in every line (breaks byte-identical reruns).
        #[arg(long)]
        stamp: bool,
    },
    /// Re-check every record of a JSONL report.
    Revalidate { report: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    Lstar,
    Beta,
    CrossSum,
    CrossProduct,
    Pairing,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also arrive here, on stdout with status 0.
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_ERROR;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let mut io = Io { out, err };
    match execute(&cli, &mut io) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn read_input(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load_family(cli: &Cli, path: &Path) -> Result<SetFamily, String> {
    let text = read_input(path)?;
    parse_family(&text, ParseOptions { strict: cli.strict })
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn render(cli: &Cli, f: &SetFamily) -> String {
    if cli.hex {
        to_hex(f)
    } else {
        to_text(f)
    }
}

fn emit(io: &mut Io<'_>, text: &str) -> Result<(), String> {
    io.out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<i32, String> {
    match &cli.command {
        Command::Closure { input } => {
            let f = load_family(cli, input)?;
            emit(io, &render(cli, &f.hereditary_closure()))?;
        }
        Command::Bases { input } => {
            let f = load_family(cli, input)?;
            emit(io, &render(cli, &f.bases()))?;
        }
        Command::Compress { input, x, y } => {
            let f = load_family(cli, input)?;
            let c = f.compress(*x, *y).map_err(|e| e.to_string())?;
            emit(io, &render(cli, &c))?;
        }
        Command::Kernel { input } => {
            let split = load_family(cli, input)?.split_kernel();
            emit(io, &render(cli, &split.kernel))?;
            emit(io, "---\n")?;
            emit(io, &render(cli, &split.residue))?;
        }
        Command::Solve { metric, input, k } => {
            let f = load_family(cli, input)?;
            let (record, code) = solve(*metric, &f, *k);
            emit(io, &(record.to_json_line() + "\n"))?;
            return Ok(code);
        }
        Command::Verify { config, out, n, k, filter, budget_subsets, budget_tuples, seed, stamp } => {
            let text = fs::read_to_string(config).map_err(|e| format!("{}: {e}", config.display()))?;
            let mut cfg = SweepConfig::parse_partial(&text).map_err(|e| e.to_string())?;
            let overrides = [
                ("n", n),
                ("k", k),
                ("filter", filter),
                ("budget_subsets", budget_subsets),
                ("budget_tuples", budget_tuples),
                ("seed", seed),
            ];
            for (key, value) in overrides {
                if let Some(v) = value {
                    cfg.set(key, v).map_err(|e| format!("--{}: {e}", key.replace('_', "-")))?;
                }
            }
            cfg.validate().map_err(|e| format!("config: {e}"))?;
            let outcome = run_sweep(&cfg).map_err(|e| e.to_string())?;
            let records = sweep_records(&outcome.results, &outcome.summary);
            let timestamp = stamp.then(now_stamp);
            let mut buf = Vec::new();
            write_jsonl(&mut buf, &records, timestamp.as_deref()).map_err(|e| e.to_string())?;
            fs::write(out, buf).map_err(|e| format!("{}: {e}", out.display()))?;
            let s = outcome.summary;
            let _ = writeln!(
                io.err,
                "{} results: {} pass, {} fail, {} defect, {} skipped",
                s.total(),
                s.pass,
                s.fail,
                s.defect,
                s.skipped
            );
            return Ok(if s.defect > 0 {
                EXIT_DEFECT
            } else if s.fail > 0 {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            });
        }
        Command::Revalidate { report } => {
            let text = read_input(report)?;
            let records = crate::report::read_jsonl(&text).map_err(|e| e.to_string())?;
            let mut bad = 0usize;
            for (idx, rec) in records.iter().enumerate() {
                if rec.check_name == "summary" {
                    continue;
                }
                let result = rec.to_result().map_err(|e| format!("line {}: {e}", idx + 1))?;
                match revalidate(&result, &Budgets::default()).map_err(|e: VerifyError| e.to_string())? {
                    Revalidation::Consistent => {}
                    Revalidation::Inconsistent(why) => {
                        bad += 1;
                        let _ = writeln!(io.out, "line {}: {why}", idx + 1);
                    }
                }
            }
            let _ = writeln!(io.err, "{} records, {bad} inconsistent", records.len());
            return Ok(if bad == 0 { EXIT_OK } else { EXIT_DEFECT });
        }
    }
    Ok(EXIT_OK)
}

fn now_stamp() -> String {
    let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    secs.to_string()
}

fn metric_name(m: Metric) -> &'static str {
    match m {
        Metric::Lstar => "lstar",
        Metric::Beta => "beta",
        Metric::CrossSum => "cross-sum",
        Metric::CrossProduct => "cross-product",
        Metric::Pairing => "pairing",
    }
}

/// One record for a solver call, with the exit code to report.
pub fn solve(metric: Metric, f: &SetFamily, k: u32) -> (ReportRecord, i32) {
    let name = metric_name(metric);
    let base = ReportRecord::new(name, Some(f), "ok");
    let with_k = |mut r: ReportRecord| {
        r.params.k = Some(k);
        r
    };
    let result: Result<ReportRecord, SolveError> = match metric {
        Metric::Lstar => {
            let sp = has_star_property(f);
            let mut r = base.value("value", sp.largest_intersecting).value("best_star", sp.best_star.size);
            if let Some(x) = sp.center {
                r = r.value("center", x);
            }
            Ok(r.with_witness("largest_intersecting", &[("L".to_string(), sp.witness)]))
        }
        Metric::Beta => beta(f).map(|b| base.value("value", b)),
        Metric::CrossSum => max_cross_sum(f, k).map(|opt| {
            let tuple: Vec<(String, SetFamily)> = opt
                .assignment()
                .into_iter()
                .enumerate()
                .map(|(i, a)| (format!("A{}", i + 1), a))
                .collect();
            with_k(base).value("value", opt.value).with_witness("sum_tuple", &tuple)
        }),
        Metric::CrossProduct => max_cross_product(f, k).map(|p| {
            let tuple: Vec<(String, SetFamily)> = p
                .witness()
                .iter()
                .enumerate()
                .map(|(i, a)| (format!("A{}", i + 1), a.clone()))
                .collect();
            let mut r = with_k(base).value("exact", p.is_exact());
            r = if p.is_exact() {
                r.value("value", p.lower())
            } else {
                r.value("lower", p.lower()).value("upper", p.upper())
            };
            r.with_witness("product_tuple", &tuple)
        }),
        Metric::Pairing => berge_pairing(f).map(|p| {
            let pairs: Vec<String> = p.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
            base.value("pairs", pairs.join(" ")).value("leftover_empty", p.leftover_empty)
        }),
    };
    match result {
        Ok(r) => (r, EXIT_OK),
        Err(e) => {
            let verdict = match e {
                SolveError::TooManyMembers { .. } | SolveError::TupleBudget { .. } => "skipped",
                SolveError::PairingFailed { .. } => "defect",
                _ => "error",
            };
            let mut r = ReportRecord::new(name, Some(f), verdict);
            r.reason = Some(e.to_string());
            let code = if verdict == "defect" { EXIT_DEFECT } else { EXIT_ERROR };
            (r, code)
        }
    }
}
