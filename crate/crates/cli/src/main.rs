use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use platjones::verify::Suite;

mod commands;

/// Colored Jones polynomials of plat closures at roots of unity.
#[derive(Debug, Parser)]
#[command(name = "platjones", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one plat closure at q = exp(-2πi/k).
    Eval {
        #[command(flatten)]
        plat: PlatArgs,
        /// Deformation index k.
        #[arg(long)]
        level: Option<u32>,
        /// Accept the singlet with permuted decorations, e.g. "1,0,2,3".
        #[arg(long)]
        acceptor: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate one plat closure for every k in a range.
    Sweep {
        #[command(flatten)]
        plat: PlatArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        k_min: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run built-in verification suites.
    Verify {
        /// One of identities, yangbaxter, oracle, trefoil, graph, eigenbasis, ledger, axioms, all.
        #[arg(long, default_value = "all", value_parser = parse_suites)]
        suite: SuiteChoice,
        /// Longest word in the exhaustive oracle comparison.
        #[arg(long, default_value_t = 6)]
        max_crossings: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Size and diameter of the coupling-scheme graph on n + 1 leaves.
    Graph {
        #[arg(long)]
        n: usize,
        /// Include twist edges (labeled family).
        #[arg(long)]
        twists: bool,
        /// Emit the diameter growth table for 2..=n instead.
        #[arg(long)]
        growth: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct PlatArgs {
    /// Number of strands (even).
    #[arg(long)]
    strands: Option<usize>,
    /// Cap colors, comma separated ("1/2,1").
    #[arg(long)]
    colors: Option<String>,
    /// Bottom orientations as a +/- string.
    #[arg(long)]
    orientations: Option<String>,
    /// Braid word, e.g. "s2 s1^-1".
    #[arg(long, default_value = "")]
    word: String,
    /// Take strands and word from the link catalog.
    #[arg(long, conflicts_with_all = ["strands", "word", "spec"])]
    link: Option<String>,
    /// Catalog file replacing the built-in one.
    #[arg(long, env = "PLATJONES_CATALOG")]
    catalog: Option<PathBuf>,
    /// Plat specification as a JSON file.
    #[arg(long, conflicts_with_all = ["strands", "colors", "orientations", "word"])]
    spec: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug)]
enum SuiteChoice {
    All,
    One(Suite),
}

fn parse_suites(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    s.parse::<Suite>().map(SuiteChoice::One).map_err(|_| format!("unknown suite `{s}`"))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("PLATJONES_LOG")).init();
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
