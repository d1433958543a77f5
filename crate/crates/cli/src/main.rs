use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use roughlab::{AccuracyVariant, Family, NeighborhoodKind};

mod run;

/// Rough-set neighborhoods, approximations and topologies over finite relations.
#[derive(Debug, Parser)]
#[command(name = "roughlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Space {
    /// Relation JSON: {"universe": [...], "pairs": [[s, t], ...]}
    #[arg(long)]
    relation: PathBuf,

    /// Ideal JSON: {"basis": [[...], ...]} or {"carrier": [...]}
    #[arg(long)]
    ideal: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one neighborhood, or the whole system when no element is given.
    Nbhd {
        #[command(flatten)]
        space: Space,
        /// omega, rho, i or ik
        #[arg(long)]
        family: Family,
        /// a, b, <a>, <b>, i, u, <i> or <u>
        #[arg(long)]
        kind: NeighborhoodKind,
        #[arg(long)]
        element: Option<String>,
    },

    /// Lower/upper approximations, boundary and accuracy of a set, or of every subset.
    Approx {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        kind: NeighborhoodKind,
        /// Comma-separated element names; "" or "∅" for the empty set
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        set: Option<String>,
        /// Tabulate every subset (universes of at most 5 elements)
        #[arg(long)]
        all: bool,
        /// iou (|lower ∩ F| / |upper ∪ F|) or plain (|lower| / |upper|); plain is the ρ default
        #[arg(long)]
        variant: Option<AccuracyVariant>,
        /// csv, markdown or json
        #[arg(long, default_value = "markdown")]
        format: roughlab::report::OutputFormat,
    },

    /// Generate the topology of a neighborhood system and check its axioms.
    Topology {
        #[command(flatten)]
        space: Space,
        /// Defaults to ik with an ideal, omega without
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        kind: NeighborhoodKind,
        /// Also report interior, closure and accuracy of this set
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        json: bool,
    },

    /// Evaluate one registered claim on a relation and ideal.
    Check {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        claim: String,
    },

    /// Search every small relation and ideal for a counterexample.
    Search {
        #[arg(long, conflicts_with_all = ["all", "list"], required_unless_present_any = ["all", "list"])]
        claim: Option<String>,
        /// Search every registered claim
        #[arg(long)]
        all: bool,
        /// List registered claims and exit
        #[arg(long)]
        list: bool,
        /// Largest universe size; above 4 requires ROUGHLAB_MAX_N
        #[arg(long, default_value_t = roughlab::lab::DEFAULT_SEARCH_N)]
        max_n: usize,
    },

    /// Derive a relation from an information table by attribute agreement.
    Ingest {
        /// CSV with a header row; the first column names the objects
        #[arg(long)]
        table: PathBuf,
        /// Minimum fraction of agreeing attributes, e.g. 2/3 or 0.5
        #[arg(long, default_value = "1")]
        threshold: String,
        /// Write the relation JSON here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Recompute every stated value of the worked examples.
    Examples,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let rendered = e.render().to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("{}", line.trim());
            return ExitCode::from(2);
        }
    };
    match run::dispatch(cli.command) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
