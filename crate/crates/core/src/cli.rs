//! The `stableset` command line.
//!
//! Exit status: 0 success, 1 check rejected (or a self-test/witness
//! failure), 2 usage or parse error, 3 problem too large.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::io::dot::export_dot;
use crate::io::format::{parse_problem, write_problem};
use crate::io::generate::{generate, GeneratorKind};
use crate::io::report::{parse_items, solve, SolveOptions};
use crate::relation::{DecisionProblem, DEFAULT_DENSE_THRESHOLD};
use crate::selftest::{self, SelftestConfig, DEFAULT_RANDOM_INSTANCES, DEFAULT_RANDOM_N_MAX};
use crate::solutions::{Analysis, Concept, SolutionSet, DEFAULT_ENUMERATION_CEILING, DEFAULT_LIMIT};
use crate::witness::verify_theorem1_forward;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "stableset", version, about = "Stable-set solution concepts for finite decision problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute solution concepts and print (or write) a JSON report.
    Solve {
        file: PathBuf,
        /// Comma-separated: core, schwartz, vnm_stable, generalized_stable,
        /// m_stable, w_stable, w_stable_count, condensation, witness,
        /// choice_sets. Defaults to all of them.
        #[arg(long)]
        concepts: Option<String>,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Leave timing out of the report.
        #[arg(long)]
        no_timing: bool,
        /// Skip re-checking emitted sets (avoids computing the closure).
        #[arg(long)]
        no_verify: bool,
        #[arg(long, default_value_t = DEFAULT_DENSE_THRESHOLD)]
        dense_threshold: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CEILING)]
        ceiling: usize,
    },
    /// Exit 0 if SET belongs to CONCEPT, 1 otherwise.
    Check {
        file: PathBuf,
        /// Comma-separated alternative ids, e.g. "0,2".
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, default_value = "w_stable")]
        concept: String,
    },
    /// Print the number of w-stable sets.
    Count { file: PathBuf },
    /// Build and check an excluded-set topology witness for every w-stable set.
    Witness {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a random problem file.
    Gen {
        /// erdos_digraph, tournament, k_cycle or layered_dag.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, env = "STABLESET_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render the problem and its contraction as Graphviz DOT.
    ExportDot {
        file: PathBuf,
        /// Alternatives to mark, e.g. "0,2".
        #[arg(long)]
        highlight: Option<String>,
        #[arg(long, default_value = "w_stable")]
        highlight_concept: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the structural paths with the brute-force oracle.
    Selftest {
        /// Exhaustive corpora for n = 1..=K (K <= 4).
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_RANDOM_INSTANCES)]
        random: usize,
        #[arg(long, default_value_t = DEFAULT_RANDOM_N_MAX)]
        random_n_max: usize,
        #[arg(long, env = "STABLESET_SEED", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_problem(path: &Path) -> Result<DecisionProblem, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_problem(&text)?)
}

fn write_out(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn parse_set(text: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let mut set = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let id: usize = tok.parse().map_err(|_| Failure::Usage(format!("invalid alternative id `{tok}`")))?;
        if id >= n {
            return Err(Failure::Lib(Error::IdOutOfRange { id, n }));
        }
        set.push(id);
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::TooLarge { .. } => EXIT_TOO_LARGE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Solve { file, concepts, limit, json, no_timing, no_verify, dense_threshold, ceiling } => {
            let p = read_problem(&file)?;
            let items = concepts.as_deref().map(parse_items).transpose()?;
            let options = SolveOptions {
                items,
                limit,
                dense_threshold,
                ceiling,
                verify: !no_verify,
                timing: !no_timing,
                seed: std::env::var("STABLESET_SEED").ok().and_then(|s| s.parse().ok()),
            };
            let report = solve(&p, &options)?;
            write_out(json.as_deref(), &report.to_json(), stdout)?;
            if json.is_some() {
                let _ = writeln!(stdout, "n = {}, digest {}", p.n(), report.digest);
                for c in &report.concepts {
                    let _ = writeln!(stdout, "{}: {} set(s){}", c.concept, c.total, if c.truncated { " (truncated)" } else { "" });
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check { file, set, concept } => {
            let p = read_problem(&file)?;
            let concept: Concept = concept.parse()?;
            let set = parse_set(&set, p.n())?;
            let accepted = Analysis::new(&p).check(concept, &set);
            let _ = writeln!(stdout, "{}", if accepted { "accepted" } else { "rejected" });
            Ok(if accepted { EXIT_OK } else { EXIT_REJECTED })
        }
        Command::Count { file } => {
            let p = read_problem(&file)?;
            let _ = writeln!(stdout, "{}", Analysis::new(&p).count_w_stable());
            Ok(EXIT_OK)
        }
        Command::Witness { file, limit, json } => {
            let p = read_problem(&file)?;
            let report = verify_theorem1_forward(&Analysis::new(&p), limit);
            if let Some(path) = json.as_deref() {
                let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
                text.push('\n');
                write_out(Some(path), &text, stdout)?;
            }
            let _ = writeln!(
                stdout,
                "witnesses checked: {}, passed: {}, w-stable sets: {}{}",
                report.checked,
                report.passed,
                report.total_w_stable,
                if report.truncated { " (truncated)" } else { "" }
            );
            for f in &report.failures {
                let _ = writeln!(stderr, "witness failed for {:?}: {}", f.excluded_set, f.reason);
            }
            Ok(if report.passes() { EXIT_OK } else { EXIT_REJECTED })
        }
        Command::Gen { kind, n, density, seed, output } => {
            let kind: GeneratorKind = kind.parse()?;
            let p = generate(kind, n, density, seed)?;
            write_out(output.as_deref(), &write_problem(&p), stdout)?;
            Ok(EXIT_OK)
        }
        Command::ExportDot { file, highlight, highlight_concept, output } => {
            let p = read_problem(&file)?;
            let highlight = match highlight {
                Some(text) => Some(SolutionSet {
                    concept: highlight_concept.parse()?,
                    members: parse_set(&text, p.n())?,
                    verified: false,
                }),
                None => None,
            };
            let a = Analysis::new(&p);
            let dot = export_dot(&p, a.condensation(), highlight.as_ref());
            write_out(output.as_deref(), &dot, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Selftest { n_max, random, random_n_max, seed } => {
            if n_max > 4 {
                return Err(Failure::Usage("--n-max must be at most 4".into()));
            }
            if random_n_max > crate::oracle::ORACLE_CEILING {
                return Err(Failure::Lib(Error::TooLarge { n: random_n_max, ceiling: crate::oracle::ORACLE_CEILING }));
            }
            let config = SelftestConfig { exhaustive_n_max: n_max, random_instances: random, random_n_max, seed };
            let report = selftest::run(&config);
            let _ = writeln!(
                stdout,
                "instances: {}, mismatches: {}, choice-set divergences: {}",
                report.instances,
                report.mismatches.len(),
                report.choice_set_divergences
            );
            for m in report.mismatches.iter().take(20) {
                let _ = writeln!(stderr, "[{}] {}\n{}", m.check, m.detail, m.problem);
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_REJECTED })
        }
    }
}
