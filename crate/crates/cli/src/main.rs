use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{Failure, Outcome};

/// Verify, translate and search finite right near-domains, phi-systems and
/// sharply 2-transitive groups.
#[derive(Debug, Parser)]
#[command(name = "neardomain", version)]
struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Print interpretation notes along with the report.
    #[arg(long, short, global = true)]
    verbose: bool,

    /// Print wall-clock timings to standard error.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Scaling,
    Inverse,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check F1..F4 and the derived identities of a phi-system.
    CheckPhi { input: PathBuf },
    /// Check A1..A7 of a right near-domain and report its witnesses.
    CheckNd { input: PathBuf },
    /// Check the closed forms of h, r, v and related identities.
    Lemma { input: PathBuf },
    /// Classify a right near-domain against the classical axioms.
    Classify { input: PathBuf },
    /// Translate a right near-domain into its phi-system.
    AMap {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Translate a phi-system into a right near-domain for a bijection L.
    FMap {
        input: PathBuf,
        /// Images L(1), .., L(n-1), comma separated.
        #[arg(long = "l", value_delimiter = ',', required = true)]
        l: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the pair group of a phi-system.
    BuildGroup {
        input: PathBuf,
        /// Include each element's permutation of B in the export.
        #[arg(long)]
        perms: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover a phi-system from a sharply 2-transitive permutation group.
    FromGroup {
        input: PathBuf,
        /// Base pair e1,e2 (overrides the file's base).
        #[arg(long, value_parser = parse_base)]
        base: Option<(usize, usize)>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Round trips between near-domains and phi-systems.
    Roundtrip1 { input: PathBuf },
    /// Round trips between phi-systems and sharply 2-transitive groups.
    Roundtrip2 {
        input: PathBuf,
        /// Base pair e1,e2 for the group side.
        #[arg(long, value_parser = parse_base)]
        base: Option<(usize, usize)>,
    },
    /// Build an example family member over GF(q).
    Example {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        a: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare an example family's witnesses with its closed formulas.
    VerifyExample {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        a: Option<usize>,
    },
    /// Enumerate phi-systems over a group and classify the near-domains they induce.
    Search {
        /// Group table JSON; alternatively use --q.
        #[arg(long, conflicts_with = "q", required_unless_present = "q")]
        group: Option<PathBuf>,
        /// Use the multiplicative group of GF(q).
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, default_value_t = neardomain::search::DEFAULT_CAP)]
        cap: usize,
        /// Write the phi-system records here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the classification table here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_base(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected e1,e2, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = commands::run(&cli.command, cli.verbose);
    if cli.timings {
        eprintln!("elapsed: {:.3?}", start.elapsed());
    }
    match result {
        Ok(outcome) => {
            print_outcome(&outcome, cli.json);
            if outcome.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            if cli.json {
                let v = serde_json::json!({ "error": failure.message(), "exit": failure.code() });
                println!("{v}");
            } else {
                eprintln!("error: {}", failure.message());
            }
            ExitCode::from(failure.code())
        }
    }
}

fn print_outcome(outcome: &Outcome, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcome.to_json()).expect("serializable")
        );
        return;
    }
    println!("{}", outcome.headline);
    for note in &outcome.notes {
        println!("note: {note}");
    }
    for report in &outcome.reports {
        print!("{report}");
    }
    if let Some(doc) = &outcome.inline_output {
        println!("{}", serde_json::to_string(doc).expect("serializable"));
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckPhi { .. } => "check-phi",
            Command::CheckNd { .. } => "check-nd",
            Command::Lemma { .. } => "lemma",
            Command::Classify { .. } => "classify",
            Command::AMap { .. } => "a-map",
            Command::FMap { .. } => "f-map",
            Command::BuildGroup { .. } => "build-group",
            Command::FromGroup { .. } => "from-group",
            Command::Roundtrip1 { .. } => "roundtrip1",
            Command::Roundtrip2 { .. } => "roundtrip2",
            Command::Example { .. } => "example",
            Command::VerifyExample { .. } => "verify-example",
            Command::Search { .. } => "search",
        }
    }
}

impl From<neardomain::Error> for Failure {
    fn from(e: neardomain::Error) -> Self {
        match e {
            neardomain::Error::Invalid(msg) => Failure::Axioms(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn base_pairs() {
        assert_eq!(parse_base("2,4"), Ok((2, 4)));
        assert_eq!(parse_base(" 0 , 1"), Ok((0, 1)));
        assert!(parse_base("2").is_err());
        assert!(parse_base("a,1").is_err());
    }

    #[test]
    fn l_list_parses() {
        let cli = Cli::try_parse_from(["neardomain", "f-map", "x.json", "--l", "2,1"]).unwrap();
        match cli.command {
            Command::FMap { l, .. } => assert_eq!(l, vec![2, 1]),
            other => panic!("parsed as {}", other.name()),
        }
    }
}
