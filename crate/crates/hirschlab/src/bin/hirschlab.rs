//! Command-line front end. Exit codes: 0 success, 1 input error, 2 cap
//! exceeded, 3 internal invariant violation.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hirschlab::commands::{self, Options, WeightsRequest};
use hirschlab::dual_graph::{self, AnalyzerConfig};
use hirschlab::error::Error;
use hirschlab::input::{parse_document, InputDocument};
use hirschlab::monomial_ideal::DEFAULT_PRIME_CAP;
use hirschlab::report;
use hirschlab::TermOrder;

#[derive(Parser)]
#[command(name = "hirschlab", version, about = "Dual graphs of ideals: diameters, Hirsch verdicts, connectivity bounds")]
struct Cli {
    /// Override the term order from the input file (lex | deglex | degrevlex)
    #[arg(long, global = true)]
    order: Option<String>,

    /// Emit a human-readable summary instead of JSON
    #[arg(long, global = true)]
    text: bool,

    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Cap on enumerated minimal primes
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_CAP)]
    prime_cap: usize,

    /// Cap on the number of primes fed to subset checks (2^s subsets)
    #[arg(long, global = true, default_value_t = dual_graph::DEFAULT_SUBSET_CAP)]
    subset_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightsFlag {
    Unit,
    Multiplicity,
    File,
}

impl From<WeightsFlag> for WeightsRequest {
    fn from(w: WeightsFlag) -> Self {
        match w {
            WeightsFlag::Unit => WeightsRequest::Unit,
            WeightsFlag::Multiplicity => WeightsRequest::Multiplicity,
            WeightsFlag::File => WeightsRequest::File,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of the ideal in FILE
    Gb { file: String },
    /// Initial ideal of the ideal in FILE
    Initial { file: String },
    /// Minimal primes of a monomial ideal
    Minprimes { file: String },
    /// Hilbert numerator, dimension, and multiplicity
    Hilbert { file: String },
    /// Full dual-graph report
    Dualgraph {
        file: String,
        /// Vertex weights for the bound table
        #[arg(long, value_enum, default_value_t = WeightsFlag::Unit)]
        weights: WeightsFlag,
    },
    /// Hirsch verdict only
    Hirsch { file: String },
    /// Bound table from weights and connectivity data
    Bounds {
        /// Comma-separated vertex weights
        #[arg(long, value_delimiter = ',')]
        weights: Vec<u64>,
        /// Weighted connectivity r
        #[arg(long)]
        r: u64,
        /// Vertex connectivity l
        #[arg(long)]
        l: u64,
        /// Vertex count (defaults to the number of weights)
        #[arg(long)]
        s: Option<u64>,
        /// Also evaluate the h-vector bound
        #[arg(long, value_delimiter = ',')]
        hvec: Option<Vec<u64>>,
    },
    /// Connectivity profile of a graph file
    Connectivity { graphfile: String },
    /// Square-freeness of subset intersections and the diameter comparison
    #[command(name = "compare-initial")]
    CompareInitial { file: String },
    /// Square-free complete intersection certificate
    #[command(name = "certify-ci")]
    CertifyCi { file: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match catch_unwind(AssertUnwindSafe(|| run(&cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            match err {
                Error::MinimalPrimeCap { .. } | Error::SubsetCapExceeded { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("internal invariant violation: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_document(path: &str) -> Result<InputDocument, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
    parse_document(&text)
}

fn emit<T: serde::Serialize>(
    text_mode: bool,
    doc: &T,
    text_render: impl FnOnce(&T) -> String,
) -> ExitCode {
    if text_mode {
        print!("{}", text_render(doc));
    } else {
        println!("{}", serde_json::to_string_pretty(doc).expect("reports serialize"));
    }
    ExitCode::SUCCESS
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let order = cli.order.as_deref().map(TermOrder::parse).transpose()?;
    let opts = Options {
        order,
        config: AnalyzerConfig { prime_cap: cli.prime_cap, subset_cap: cli.subset_cap },
    };
    let text = cli.text;
    match &cli.command {
        Command::Gb { file } => {
            let doc = commands::gb_report(&read_document(file)?, &opts)?;
            Ok(emit(text, &doc, report::text::gb))
        }
        Command::Initial { file } => {
            let doc = commands::initial_report(&read_document(file)?, &opts)?;
            Ok(emit(text, &doc, report::text::initial))
        }
        Command::Minprimes { file } => {
            let doc = commands::minprimes_report(&read_document(file)?, &opts)?;
            Ok(emit(text, &doc, report::text::minprimes))
        }
        Command::Hilbert { file } => {
            let doc = commands::hilbert_report(&read_document(file)?, &opts)?;
            Ok(emit(text, &doc, report::text::hilbert))
        }
        Command::Dualgraph { file, weights } => {
            let doc =
                commands::dualgraph_report(&read_document(file)?, (*weights).into(), &opts)?;
            Ok(emit(text, &doc, report::text::dual_graph))
        }
        Command::Hirsch { file } => {
            let doc = commands::hirsch_report(&read_document(file)?, &opts)?;
            Ok(emit(text, &doc, report::text::hirsch))
        }
        Command::Bounds { weights, r, l, s, hvec } => {
            let doc = commands::bounds_report(weights, *r, *l, *s, hvec.as_deref())?;
            Ok(emit(text, &doc, report::text::bounds))
        }
        Command::Connectivity { graphfile } => {
            let raw = std::fs::read_to_string(graphfile)
                .map_err(|e| Error::invalid(format!("cannot read {graphfile}: {e}")))?;
            let doc = commands::connectivity_report_from_json(&raw)?;
            Ok(emit(text, &doc, report::text::connectivity))
        }
        Command::CompareInitial { file } => {
            let doc = commands::compare_report(&read_document(file)?, &opts)?;
            let violated = doc.theorem_violated;
            emit(text, &doc, report::text::compare);
            if violated {
                eprintln!(
                    "internal invariant violation: the diameter comparison contradicts the theorem"
                );
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CertifyCi { file } => {
            let doc = commands::certify_report(&read_document(file)?, &opts)?;
            Ok(emit(text, &doc, report::text::certify))
        }
    }
}
