//! `kmatch`: invariants and k-matching counts for edge-list graphs.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 girth precondition,
//! 3 verification failure or disagreement between methods.

mod report;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kmatch::families::{family_count, FamilyCountQuery, FamilyError};
use kmatch::graph::{generate, parse_edge_list, FamilySpec};
use kmatch::matching::count_matchings_oracle;
use kmatch::verify;
use kmatch::Count;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "kmatch", version, about = "Exact k-matching counts and degree-based graph invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants and p(G, k) for k = 0..=k-max of an edge-list file.
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Evaluate closed forms even when their girth hypothesis fails.
        #[arg(long)]
        force: bool,
    },
    /// Closed-form count for a named family: `family <kind> <params...> <k>`.
    Family {
        /// path, cycle, star, caterpillar or sunlet
        kind: String,
        /// Family parameters followed by the matching size.
        #[arg(num_args = 2.., required = true)]
        values: Vec<usize>,
        /// Also count on the generated graph with the oracle.
        #[arg(long)]
        check: bool,
    },
    /// Seeded randomized cross-checks; prints a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Graphs per girth pool.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Print a family member in edge-list format: `generate <kind> <params...>`.
    Generate {
        kind: String,
        #[arg(required = true)]
        params: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Recurrence,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Formulas,
    All,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Precondition(String),
    /// Output already produced, but the run found a mismatch.
    Failed { output: String, reason: String },
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Failed { .. } => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Precondition(m) => f.write_str(m),
            CliError::Failed { reason, .. } => f.write_str(reason),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Failed { output, .. } = &e {
                println!("{output}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Report { file, k_max, method, force } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            let g = parse_edge_list(&text).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            report::build(&g, k_max, method, force)
        }
        Command::Family { kind, mut values, check } => {
            let k = values.pop().expect("clap enforces two values");
            family(&kind, &values, k, check)
        }
        Command::Verify { suite, trials, seed, n_max } => {
            if trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            if n_max > verify::FORMULA_N_MAX {
                return Err(CliError::Usage(format!("--n-max must be at most {}", verify::FORMULA_N_MAX)));
            }
            let r = match suite {
                Suite::Identities => verify::run_identity_suite(trials, seed),
                Suite::Formulas => verify::run_formula_vs_oracle(trials, seed, n_max),
                Suite::All => verify::run_all(trials, seed, n_max),
            };
            let output = r.to_json();
            if r.passed() {
                Ok(output)
            } else {
                Err(CliError::Failed { output, reason: format!("{} check(s) failed", r.failures.len()) })
            }
        }
        Command::Generate { kind, params } => {
            let spec = FamilySpec::from_parts(&kind, &params).map_err(|e| CliError::Usage(e.to_string()))?;
            let g = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(g.to_edge_list().trim_end().to_string())
        }
    }
}

fn family(kind: &str, params: &[usize], k: usize, check: bool) -> Result<String, CliError> {
    let spec = FamilySpec::from_parts(kind, params).map_err(|e| CliError::Usage(e.to_string()))?;
    let count: Count = family_count(&FamilyCountQuery { spec, k }).map_err(|e| match e {
        FamilyError::BelowThreshold { .. } => CliError::Precondition(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    })?;
    let mut out = json!({
        "family": spec.name(),
        "graph": spec.to_string(),
        "params": params.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "k": k.to_string(),
        "value": count.value.to_string(),
    });
    if check {
        let g = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
        let oracle: Count = count_matchings_oracle(&g, k);
        out["oracle"] = json!(oracle.value.to_string());
        let output = pretty(&out);
        if oracle.value != count.value {
            return Err(CliError::Failed {
                output,
                reason: format!("closed form {} disagrees with oracle {}", count.value, oracle.value),
            });
        }
        return Ok(output);
    }
    Ok(pretty(&out))
}

pub fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize")
}
