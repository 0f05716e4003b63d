//! `kron`: command-line front end for kron-core.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage error,
//! 3 I/O or cache integrity error.

mod args;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kron_core::cache_file::{self, LoadStatus};
use kron_core::closed_forms::{product_hook, product_two_row};
use kron_core::series::{g_k, l_kr};
use kron_core::symmetric::{global_cache, kron_oracle};
use kron_core::verify::{self, Bounds, Target};
use kron_core::{KronError, Partition};

use args::{Cli, Command, Format, GfKind};

/// Largest degree the character oracle handles without `--force`.
const ORACLE_DEGREE_LIMIT: usize = 26;

enum Failure {
    Usage(String),
    Io(String),
}

impl From<KronError> for Failure {
    fn from(e: KronError) -> Self {
        match e {
            KronError::Format { .. } | KronError::Integrity { .. } | KronError::Io(_) => {
                Failure::Io(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a successful dispatch produced: stdout text and whether every
/// verification check passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn guard_degree(n: usize, force: bool) -> Result<(), Failure> {
    if n > ORACLE_DEGREE_LIMIT && !force {
        return Err(Failure::Usage(format!(
            "oracle work at degree {n} exceeds {ORACLE_DEGREE_LIMIT}; pass --force to run it anyway"
        )));
    }
    Ok(())
}

/// Largest degree at which a sweep calls the character oracle.
fn oracle_degree(target: Target, bounds: &Bounds) -> usize {
    match target {
        Target::Cleanest | Target::Hook | Target::Rosas | Target::Recurrence => 2 * bounds.max_d,
        Target::Bounded => bounds.max_n,
        Target::Magic | Target::Stability | Target::Gf => 0,
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::TwoRow(a) => {
            let f = product_two_row(a.d, a.k)?;
            Ok(Outcome::ok(match format {
                Format::Json => output::expansion_json(
                    &Partition::two_row(a.d, a.d),
                    &Partition::two_row(a.d + a.k, a.d - a.k),
                    &f,
                ),
                Format::Csv => output::expansions_csv([(a.d, a.k, &f)]),
            }))
        }
        Command::Hook(a) => {
            let f = product_hook(a.d, a.k)?;
            Ok(Outcome::ok(match format {
                Format::Json => output::expansion_json(
                    &Partition::two_row(a.d, a.d),
                    &Partition::hook(2 * a.d - a.k, a.k),
                    &f,
                ),
                Format::Csv => output::expansions_csv([(a.d, a.k, &f)]),
            }))
        }
        Command::Oracle(a) => {
            guard_degree(a.mu.degree().max(a.nu.degree()), cli.force)?;
            let f = kron_oracle(&a.mu, &a.nu)?;
            Ok(Outcome::ok(match format {
                Format::Json => output::expansion_json(&a.mu, &a.nu, &f),
                Format::Csv => output::oracle_csv(&a.mu, &a.nu, &f),
            }))
        }
        Command::Verify(a) => {
            let bounds = Bounds {
                max_d: a.max_d,
                max_k: a.max_k,
                max_n: a.max_n,
            };
            guard_degree(oracle_degree(a.target, &bounds), cli.force)?;
            let report = verify::run(a.target, &bounds)?;
            eprint!("{report}");
            Ok(Outcome {
                text: match format {
                    Format::Json => output::report_json(&report),
                    Format::Csv => output::report_csv(&report),
                },
                passed: report.passed(),
            })
        }
        Command::Gf(a) => {
            let (name, gf) = match (a.kind, a.r) {
                (GfKind::G, None) => ("g", g_k(a.k)),
                (GfKind::G, Some(_)) => {
                    return Err(Failure::Usage("--r applies only to `gf l`".into()))
                }
                (GfKind::L, Some(r)) => ("l", l_kr(a.k, r)?),
                (GfKind::L, None) => return Err(Failure::Usage("`gf l` needs --r".into())),
            };
            let series = gf.series(a.order)?;
            Ok(Outcome::ok(match format {
                Format::Json => output::gf_json(name, a.k, a.r, &gf, &series),
                Format::Csv => output::gf_csv(&series),
            }))
        }
        Command::Table(a) => {
            let mut items = Vec::new();
            for d in 0..=a.max_d {
                for k in 0..=a.max_k.map_or(d, |m| m.min(d)) {
                    items.push((d, k, product_two_row(d, k)?));
                }
            }
            Ok(Outcome::ok(match format {
                Format::Json => output::table_json(&items),
                Format::Csv => output::expansions_csv(items.iter().map(|(d, k, f)| (*d, *k, f))),
            }))
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    if let Some(path) = &cli.cache {
        if cache_file::load_into(path, global_cache())? == LoadStatus::Missing {
            eprintln!(
                "warning: cache file {} not found; starting with an empty cache",
                path.display()
            );
        }
    }
    let outcome = dispatch(cli)?;
    if let Some(path) = &cli.cache {
        cache_file::save(path, global_cache())?;
    }
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(outcome.text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| Failure::Io(e.to_string()))?;
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
