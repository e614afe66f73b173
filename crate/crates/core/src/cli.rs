//! The `revtier` command line.
//!
//! Output is written to the supplied writers so commands can be driven
//! in-process. Exit codes: 0 on success, 1 when `verify` finds a failure, 2
//! for usage errors and rejected inputs.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::basis::{compute_basis_with_progress, enumerate_av, Strategy};
use crate::entringer::{bijection_f, bijection_f_inverse, entringer_table, maximal_tier_family};
use crate::error::{Error, Result};
use crate::pairs::SeparatedPairProfile;
use crate::perm::{parse_permutation, Permutation};
use crate::series::{mu_u_series, tier_series, wilf_series, TruncatedSeries, DEFAULT_ORDER};
use crate::sorter::{rev_tier_by_simulation, series_machine_sort, SeriesMove};
use crate::sweep::with_workers;
use crate::tables::{
    exact_tier_table_with_progress, refined_counts_bruteforce, refined_counts_recurrence,
    DEFAULT_SWEEP_N, MAX_REFINED_N,
};
use crate::verify::{self, Suite, DEFAULT_VERIFY_N};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Lengths above which sweeps need `--allow-large`.
const LARGE_TABLE_N: usize = 10;
const LARGE_BASIS_LEN: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "revtier", version, about = "Reverse-pass stack sorting of permutations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for exhaustive sweeps (default: available parallelism).
    #[arg(long, global = true, env = "REVTIER_WORKERS")]
    pub workers: Option<usize>,
    /// Print progress to stderr during long sweeps.
    #[arg(long, global = true)]
    pub progress: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rev-tier of a permutation.
    Tier { perm: String },
    /// Step-by-step reverse-pass trace.
    Trace { perm: String },
    /// Run the stacks-in-series machine.
    Machine {
        perm: String,
        #[arg(long, default_value_t = 1)]
        stacks: usize,
    },
    /// Count tables by rev-tier.
    Table {
        #[arg(value_enum)]
        kind: TableArg,
        #[arg(long, default_value_t = DEFAULT_SWEEP_N)]
        max_n: usize,
        /// How refined counts are produced.
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[arg(long)]
        allow_large: bool,
    },
    /// Basis of the permutations with rev-tier at most `--tier`.
    Basis {
        #[arg(long)]
        tier: usize,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Count permutations avoiding every given pattern.
    AvCount {
        #[arg(required = true)]
        patterns: Vec<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Entringer numbers E(n, k).
    Entringer {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Permutations of length n with maximal rev-tier n - 2, by the position of 1.
    Family {
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// The bijection from alternating permutations to maximal-tier permutations.
    Bijection {
        #[arg(value_enum)]
        direction: Direction,
        perm: String,
    },
    /// Generating function coefficients.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_VERIFY_N)]
        max_n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    Exact,
    Cumulative,
    Refined,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Brute,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Exhaustive,
    Extension,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    F,
    Finv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    Mu0,
    Mu1,
    Mu2,
    Tier0,
    Tier1,
    Tier2,
    Wilf,
}

enum Failure {
    Usage(String),
    Verify,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let workers = cli.global.workers;
    let result = with_workers(workers, move || {
        let mut buf = Vec::new();
        let r = dispatch(&cli, &mut buf);
        (r, buf)
    });
    let (r, buf) = result;
    let _ = out.write_all(&buf);
    match r {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VERIFY_FAILED
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn perm_arg(s: &str) -> Result<Permutation> {
    parse_permutation(s)
}

fn no_csv(fmt: Format, what: &str) -> CmdResult {
    if fmt == Format::Csv {
        return Err(Failure::Usage(format!("{what} has no csv output")));
    }
    Ok(())
}

fn json_line(out: &mut Vec<u8>, v: &serde_json::Value) -> CmdResult {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))?;
    Ok(())
}

/// Progress lines go straight to stderr; results are buffered in `out`.
fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> CmdResult {
    let fmt = cli.global.format;
    let progress = cli.global.progress;
    match &cli.command {
        Command::Tier { perm } => {
            no_csv(fmt, "tier")?;
            let p = perm_arg(perm)?;
            let profile = SeparatedPairProfile::of(&p);
            match fmt {
                Format::Json => json_line(
                    out,
                    &serde_json::json!({
                        "permutation": p.to_string(),
                        "tier": profile.tier,
                        "class": profile.class_label,
                        "orientations": profile.signature(),
                        "witness_sequence": profile.witness_sequence,
                    }),
                )?,
                _ => writeln!(out, "{}", profile.tier)?,
            }
        }
        Command::Trace { perm } => {
            no_csv(fmt, "trace")?;
            let p = perm_arg(perm)?;
            let (_, trace) = rev_tier_by_simulation(&p);
            match fmt {
                Format::Json => json_line(out, &trace.to_json(&p))?,
                _ => write!(out, "{}", trace.render_text(p.values()))?,
            }
        }
        Command::Machine { perm, stacks } => {
            no_csv(fmt, "machine")?;
            if *stacks == 0 {
                return Err(Failure::Usage("--stacks must be at least 1".into()));
            }
            let p = perm_arg(perm)?;
            let run = series_machine_sort(&p, *stacks);
            match fmt {
                Format::Json => json_line(
                    out,
                    &serde_json::json!({
                        "permutation": p.to_string(),
                        "stacks": stacks,
                        "sorted": run.sorted,
                        "moves": run.moves,
                    }),
                )?,
                _ => {
                    for m in &run.moves {
                        match m {
                            SeriesMove::Output { value } => writeln!(out, "output {value}")?,
                            SeriesMove::Push { value } => writeln!(out, "push {value}")?,
                            SeriesMove::Transfer { value, from } => {
                                writeln!(out, "move {value} from stack {} to {}", from + 1, from + 2)?
                            }
                        }
                    }
                    let verdict = if run.sorted { "sorted" } else { "stuck" };
                    writeln!(out, "{verdict} with {stacks} stack(s)")?;
                }
            }
        }
        Command::Table {
            kind,
            max_n,
            method,
            allow_large,
        } => {
            if *max_n > LARGE_TABLE_N && !allow_large {
                return Err(Failure::Usage(format!(
                    "--max-n {max_n} sweeps {max_n}! permutations; pass --allow-large"
                )));
            }
            match kind {
                TableArg::Exact | TableArg::Cumulative => {
                    let mut table = exact_tier_table_with_progress(*max_n, |n| {
                        if progress {
                            eprintln!("n = {n} done");
                        }
                    })?;
                    if *kind == TableArg::Cumulative {
                        table = table.cumulative();
                    }
                    match fmt {
                        Format::Text => write!(out, "{}", table.to_text())?,
                        Format::Csv => write!(out, "{}", table.to_csv())?,
                        Format::Json => json_line(out, &table.to_json())?,
                    }
                }
                TableArg::Refined => {
                    let counts = match method {
                        Method::Recurrence => refined_counts_recurrence(*max_n)?,
                        Method::Brute => {
                            if *max_n > MAX_REFINED_N {
                                return Err(Failure::Usage(format!(
                                    "brute-force refined counts stop at n = {MAX_REFINED_N}"
                                )));
                            }
                            refined_counts_bruteforce(*max_n)?
                        }
                    };
                    match fmt {
                        Format::Json => json_line(out, &counts.to_json())?,
                        _ => write!(out, "{}", counts.to_csv())?,
                    }
                }
            }
        }
        Command::Basis {
            tier,
            max_len,
            strategy,
            allow_large,
        } => {
            no_csv(fmt, "basis")?;
            let max_len = max_len.unwrap_or_else(|| (3 * (tier + 1)).min(LARGE_BASIS_LEN - 1));
            if max_len > LARGE_BASIS_LEN && !allow_large {
                return Err(Failure::Usage(format!(
                    "--max-len {max_len} is a long search; pass --allow-large"
                )));
            }
            let strategy = match strategy {
                Some(StrategyArg::Exhaustive) => Strategy::Exhaustive,
                Some(StrategyArg::Extension) => Strategy::Extension,
                None => Strategy::default_for(*tier),
            };
            let report = compute_basis_with_progress(*tier, max_len, strategy, |n, c| {
                if progress {
                    eprintln!("length {n}: {c} elements");
                }
            })?;
            match fmt {
                Format::Json => json_line(out, &report.to_json())?,
                _ => write!(out, "{}", report.to_text())?,
            }
        }
        Command::AvCount { patterns, max_n } => {
            let basis = patterns
                .iter()
                .map(|s| perm_arg(s))
                .collect::<Result<Vec<_>>>()?;
            let counts = enumerate_av(&basis, *max_n)?;
            match fmt {
                Format::Json => json_line(out, &serde_json::json!(counts[1..]))?,
                Format::Csv => {
                    writeln!(out, "n,count")?;
                    for (n, c) in counts.iter().enumerate().skip(1) {
                        writeln!(out, "{n},{c}")?;
                    }
                }
                Format::Text => {
                    for (n, c) in counts.iter().enumerate().skip(1) {
                        writeln!(out, "{n}: {c}")?;
                    }
                }
            }
        }
        Command::Entringer { max_n } => {
            let table = entringer_table(*max_n)?;
            match fmt {
                Format::Text => write!(out, "{}", table.to_text())?,
                Format::Csv => write!(out, "{}", table.to_csv())?,
                Format::Json => json_line(out, &table.to_json())?,
            }
        }
        Command::Family { n, k } => {
            no_csv(fmt, "family")?;
            let mut fam = maximal_tier_family(*n)?;
            if let Some(k) = k {
                fam.members_by_k.retain(|key, _| key == k);
            }
            match fmt {
                Format::Json => json_line(out, &fam.to_json())?,
                _ => {
                    for members in fam.members_by_k.values() {
                        for p in members {
                            writeln!(out, "{p}")?;
                        }
                    }
                }
            }
        }
        Command::Bijection { direction, perm } => {
            no_csv(fmt, "bijection")?;
            let p = perm_arg(perm)?;
            let image = match direction {
                Direction::F => bijection_f(&p)?,
                Direction::Finv => bijection_f_inverse(&p)?,
            };
            match fmt {
                Format::Json => json_line(
                    out,
                    &serde_json::json!({ "input": p.to_string(), "output": image.to_string() }),
                )?,
                _ => writeln!(out, "{image}")?,
            }
        }
        Command::Series { name, order } => {
            let s = match name {
                SeriesName::Mu0 => mu_u_series(0, *order)?,
                SeriesName::Mu1 => mu_u_series(1, *order)?,
                SeriesName::Mu2 => mu_u_series(2, *order)?,
                SeriesName::Tier0 => tier_series(0, *order)?,
                SeriesName::Tier1 => tier_series(1, *order)?,
                SeriesName::Tier2 => tier_series(2, *order)?,
                SeriesName::Wilf => wilf_series(*order)?,
            };
            write_series(out, &s, fmt)?;
        }
        Command::Verify { suite, max_n } => {
            no_csv(fmt, "verify")?;
            let suite: Suite = suite.parse()?;
            let report = verify::run_with_progress(suite, *max_n, |c| {
                if progress {
                    let mark = if c.passed { "ok" } else { "FAIL" };
                    eprintln!("{mark} {}::{}", c.suite, c.name);
                }
            })?;
            match fmt {
                Format::Json => json_line(out, &report.to_json())?,
                _ => write!(out, "{}", report.to_text())?,
            }
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn write_series(out: &mut Vec<u8>, s: &TruncatedSeries, fmt: Format) -> CmdResult {
    let coeffs = s.to_integers()?;
    match fmt {
        Format::Json => {
            let arr: Vec<serde_json::Value> = coeffs
                .iter()
                .map(|c| match i64::try_from(c) {
                    Ok(v) => serde_json::Value::from(v),
                    Err(_) => serde_json::Value::String(c.to_string()),
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::from(arr))?;
        }
        Format::Csv => {
            writeln!(out, "n,coefficient")?;
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Text => {
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n}: {c}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("revtier").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn tier_and_bijection() {
        assert_eq!(call(&["tier", "2413"]), (0, "2\n".into(), String::new()));
        assert_eq!(call(&["bijection", "f", "21534"]).1, "241653\n");
        assert_eq!(call(&["bijection", "finv", "6247153"]).1, "426351\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["tier", "2414"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["bijection", "f", "123"]).0, EXIT_USAGE);
        assert_eq!(call(&["table", "exact", "--max-n", "11"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn table_csv() {
        let (code, out, _) = call(&["table", "exact", "--max-n", "5", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "5,42,47,26,5"), "{out}");
    }

    #[test]
    fn series_output() {
        let (_, out, _) = call(&["series", "wilf", "--order", "5", "--format", "json"]);
        assert_eq!(out.trim(), "[1,1,2,6,22,89]");
        let (_, out, _) = call(&["series", "tier2", "--order", "6"]);
        assert!(out.contains("4: 2\n5: 26\n"));
    }
}
