//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch or oracle overflow,
//! 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{
    admissible_tuples, census, check_boundary_free_corollary, check_even_genus_corollary,
    class_count, CorollaryVerdict,
};
use crate::error::Error;
use crate::labeling::Labeling;
use crate::orbits::{normal_form, Oracle, TupleVerdict, DEFAULT_MAX_STATES};
use crate::report::{build_sequence_file, render, render_census, render_verdicts, Format};
use crate::tuple::QuotientTuple;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "z4-census", version)]
#[command(about = "Census and brute-force verification of Z4-actions on handlebodies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write output to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct GenusRange {
    /// A single genus
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..), conflicts_with_all = ["from", "to"])]
    pub genus: Option<i64>,

    /// First genus of a range
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..), requires = "to")]
    pub from: Option<i64>,

    /// Last genus of a range
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..), requires = "from")]
    pub to: Option<i64>,
}

impl GenusRange {
    fn bounds(&self) -> Result<(i64, i64), String> {
        match (self.genus, self.from, self.to) {
            (Some(g), None, None) => Ok((g, g)),
            (None, Some(a), Some(b)) if a <= b => Ok((a, b)),
            (None, Some(a), Some(b)) => Err(format!("empty range --from {a} --to {b}")),
            _ => Err("give either --genus or --from/--to".to_string()),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the quotient tuples of a genus with their class counts
    Tuples {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        genus: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Hide tuples that carry no equivalence class
        #[arg(long)]
        nonzero_only: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Total number of equivalence classes per genus
    Count {
        #[command(flatten)]
        range: GenusRange,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Per-genus sequence file, optionally oracle-verified
    Sequence {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        from: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        to: i64,
        /// Run the orbit oracle on genera up to this bound
        #[arg(long, default_value_t = 0)]
        verify_up_to: i64,
        #[arg(long, env = "CENSUS_MAX_STATES", default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Compare brute-force orbit counts against the closed form
    Verify {
        #[command(flatten)]
        range: GenusRange,
        #[arg(long, env = "CENSUS_MAX_STATES", default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
        /// Report oversize tuples as skipped instead of failing
        #[arg(long)]
        skip_oversize: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Classify a labeling read from a JSON file
    Classify {
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Check the even-genus and boundary-free corollaries
    Corollaries {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_genus: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Serialize)]
struct Classification {
    admissible: bool,
    k: Option<u32>,
    class_count_of_tuple: u32,
}

#[derive(Serialize)]
struct GenusTotal {
    genus: i64,
    total: u64,
}

#[derive(Serialize)]
struct UncheckedTuple<'a> {
    tuple: QuotientTuple,
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    states: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cap: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<&'a str>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

/// Rendered output plus exit code, before it is written anywhere.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses arguments and runs the command, writing to the process streams.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let destination = cli.command.output().cloned();
    let outcome = execute(&cli.command);
    eprint!("{}", outcome.stderr);
    if outcome.code == EXIT_USAGE && outcome.stdout.is_empty() {
        return outcome.code;
    }
    if let Err(e) = emit(&outcome.stdout, destination.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn emit(text: &str, destination: Option<&Path>) -> std::io::Result<()> {
    match destination {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

impl Command {
    fn output(&self) -> Option<&PathBuf> {
        match self {
            Command::Tuples { output, .. }
            | Command::Count { output, .. }
            | Command::Sequence { output, .. }
            | Command::Verify { output, .. }
            | Command::Classify { output, .. }
            | Command::Corollaries { output, .. } => output.output.as_ref(),
        }
    }
}

/// Runs a parsed command without touching the process streams.
pub fn execute(command: &Command) -> Outcome {
    match command {
        Command::Tuples {
            genus,
            format,
            nonzero_only,
            ..
        } => match census(*genus) {
            Ok(report) => Outcome::ok(render_census(&report, *format, *nonzero_only)),
            Err(e) => Outcome::usage(format!("error: {e}")),
        },
        Command::Count { range, format, .. } => cmd_count(range, *format),
        Command::Sequence {
            from,
            to,
            verify_up_to,
            max_states,
            format,
            ..
        } => {
            if verify_up_to > to {
                return Outcome::usage(format!(
                    "error: --verify-up-to {verify_up_to} exceeds --to {to}"
                ));
            }
            match build_sequence_file(
                *from,
                *to,
                *verify_up_to,
                Oracle::with_max_states(*max_states),
            ) {
                Ok(records) => Outcome::ok(render(&records, *format)),
                Err(e) => Outcome::usage(format!("error: {e}")),
            }
        }
        Command::Verify {
            range,
            max_states,
            skip_oversize,
            format,
            ..
        } => cmd_verify(range, *max_states, *skip_oversize, *format),
        Command::Classify { input, .. } => cmd_classify(input),
        Command::Corollaries {
            max_genus, format, ..
        } => cmd_corollaries(*max_genus, *format),
    }
}

fn cmd_count(range: &GenusRange, format: Format) -> Outcome {
    let (from, to) = match range.bounds() {
        Ok(b) => b,
        Err(msg) => return Outcome::usage(format!("error: {msg}")),
    };
    let totals: Vec<(i64, u64)> = match (from..=to)
        .map(|g| census(g).map(|r| (g, r.total)))
        .collect::<Result<_, _>>()
    {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("error: {e}")),
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            let rows: Vec<GenusTotal> = totals
                .iter()
                .map(|&(genus, total)| GenusTotal { genus, total })
                .collect();
            let _ = writeln!(out, "{}", to_json(&rows));
        }
        Format::Csv => {
            out.push_str("genus,total\n");
            for (g, t) in &totals {
                let _ = writeln!(out, "{g},{t}");
            }
        }
        Format::Table => {
            let width = totals
                .iter()
                .map(|(g, _)| g.to_string().len())
                .max()
                .unwrap_or(1)
                .max(5);
            let _ = writeln!(out, "{:>width$}  total", "genus");
            for (g, t) in &totals {
                let _ = writeln!(out, "{g:>width$}  {t:>5}");
            }
        }
    }
    Outcome::ok(out)
}

enum TupleResult {
    Checked(TupleVerdict),
    Oversize {
        tuple: QuotientTuple,
        states: u128,
        cap: u64,
    },
    Errored {
        tuple: QuotientTuple,
        message: String,
    },
}

fn cmd_verify(range: &GenusRange, max_states: u64, skip_oversize: bool, format: Format) -> Outcome {
    if format == Format::Csv {
        return Outcome::usage("error: verify supports --format table or json");
    }
    let (from, to) = match range.bounds() {
        Ok(b) => b,
        Err(msg) => return Outcome::usage(format!("error: {msg}")),
    };
    let oracle = Oracle::with_max_states(max_states);
    let mut work = Vec::new();
    for g in from..=to {
        match admissible_tuples(g) {
            Ok(tuples) => work.extend(tuples.into_iter().map(|v| (g, v))),
            Err(e) => return Outcome::usage(format!("error: {e}")),
        }
    }
    let results: Vec<TupleResult> = work
        .par_iter()
        .map(|&(_, v)| match oracle.verify_tuple(v) {
            Ok(verdict) => TupleResult::Checked(verdict),
            Err(Error::StateSpaceOverflow { tuple, states, cap }) => {
                TupleResult::Oversize { tuple, states, cap }
            }
            Err(e) => TupleResult::Errored {
                tuple: v,
                message: e.to_string(),
            },
        })
        .collect();

    let mut outcome = Outcome::ok(String::new());
    let (mut passed, mut failed, mut skipped) = (0usize, 0usize, 0usize);
    for result in &results {
        match result {
            TupleResult::Checked(verdict) => {
                if verdict.passed() {
                    passed += 1;
                } else {
                    failed += 1;
                    let _ = writeln!(
                        outcome.stderr,
                        "mismatch: {} has {} orbits, closed form gives {}",
                        verdict.tuple, verdict.orbits, verdict.expected
                    );
                }
                outcome
                    .stdout
                    .push_str(&render_verdicts(std::slice::from_ref(verdict), format));
            }
            TupleResult::Oversize { tuple, states, cap } => {
                let status = if skip_oversize {
                    skipped += 1;
                    "skipped"
                } else {
                    failed += 1;
                    let _ = writeln!(
                        outcome.stderr,
                        "overflow: {tuple} has {states} torsion-faithful labelings, cap is {cap}"
                    );
                    "overflow"
                };
                match format {
                    Format::Json => {
                        let line = UncheckedTuple {
                            tuple: *tuple,
                            status,
                            states: Some(states.to_string()),
                            cap: Some(*cap),
                            message: None,
                        };
                        let _ = writeln!(outcome.stdout, "{}", to_json(&line));
                    }
                    _ => {
                        let _ =
                            writeln!(outcome.stdout, "{tuple} states={states} cap={cap} {status}");
                    }
                }
            }
            TupleResult::Errored { tuple, message } => {
                failed += 1;
                let _ = writeln!(outcome.stderr, "error: {tuple}: {message}");
                match format {
                    Format::Json => {
                        let line = UncheckedTuple {
                            tuple: *tuple,
                            status: "error",
                            states: None,
                            cap: None,
                            message: Some(message),
                        };
                        let _ = writeln!(outcome.stdout, "{}", to_json(&line));
                    }
                    _ => {
                        let _ = writeln!(outcome.stdout, "{tuple} error: {message}");
                    }
                }
            }
        }
    }
    if format == Format::Table {
        let _ = writeln!(
            outcome.stdout,
            "genus {from}..={to}: {passed} pass, {failed} fail, {skipped} skipped"
        );
    }
    if failed > 0 {
        outcome.code = EXIT_MISMATCH;
    }
    outcome
}

fn cmd_classify(input: &Path) -> Outcome {
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("error: cannot read {}: {e}", input.display())),
    };
    let labeling: Labeling = match serde_json::from_str(&text) {
        Ok(l) => l,
        Err(e) => return Outcome::usage(format!("error: {}: {e}", input.display())),
    };
    let line = Classification {
        admissible: labeling.is_admissible(),
        k: normal_form(&labeling).ok().map(|nf| nf.k),
        class_count_of_tuple: class_count(labeling.tuple()),
    };
    Outcome::ok(format!("{}\n", to_json(&line)))
}

fn cmd_corollaries(max_genus: u32, format: Format) -> Outcome {
    let verdicts = [
        check_even_genus_corollary(max_genus),
        check_boundary_free_corollary(max_genus),
    ];
    let mut out = String::new();
    for v in &verdicts {
        match format {
            Format::Json => {
                let _ = writeln!(out, "{}", to_json(v));
            }
            Format::Csv | Format::Table => {
                let _ = writeln!(
                    out,
                    "{} max_genus={} tuples={} {}",
                    v.name,
                    v.max_genus,
                    v.tuples_checked,
                    if v.passed { "pass" } else { "fail" }
                );
                for (g, tuple) in &v.witnesses {
                    let _ = writeln!(out, "  witness genus={g} tuple={tuple}");
                }
            }
        }
    }
    let mut outcome = Outcome::ok(out);
    if !verdicts.iter().all(|v: &CorollaryVerdict| v.passed) {
        outcome.code = EXIT_MISMATCH;
    }
    outcome
}
