//! Command-line front end for the distbal graph-invariant library.
//!
//! Subcommands are pipeable: `generate` and `product` write bare graph
//! lines, `classify` / `index` / `verify` wrap their payloads in a JSON
//! envelope with stable key order, and `enumerate` streams one JSON object
//! per catalog line.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use distbal::atlas::{search, write_catalog};
use distbal::balance::Convention;
use distbal::classify::ClassificationReport;
use distbal::error::Error;
use distbal::graph::Graph;
use distbal::product::{cartesian_product_with_budget, lexicographic_product_with_budget};
use distbal::verify::{run_checks, CheckId, VerifyConfig};
use distbal::{
    edge_szeged_index, parse_edge_list_text, parse_graph6, szeged_index, to_edge_list_text,
    to_graph6,
};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "distbal",
    version,
    about = "Distance-balance invariants for small graphs: classify, index, build products, \
             enumerate, and audit claims"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Strict,
    Augmented,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Strict => Convention::Strict,
            ConventionArg::Augmented => Convention::Augmented,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or '-' for standard input.
    #[arg(long = "in", default_value = "-", value_name = "FILE")]
    input: String,

    /// Input graph format.
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a standard graph family and print it.
    Generate {
        /// Family name: complete_bipartite, cycle, path, complete, hypercube, empty.
        family: String,
        /// Family parameters, e.g. `complete_bipartite 2 4` or `cycle 6`.
        params: Vec<usize>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        out: GraphFormat,
    },
    /// Classify a graph and print the full report as JSON.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Counting convention (classification defaults to augmented).
        #[arg(long, value_enum, default_value_t = ConventionArg::Augmented)]
        convention: ConventionArg,
    },
    /// Compute the Szeged-type indices of a graph.
    Index {
        #[command(flatten)]
        input: InputArgs,
        /// Report the Szeged index.
        #[arg(long)]
        szeged: bool,
        /// Report the edge-Szeged index.
        #[arg(long = "edge-szeged")]
        edge_szeged: bool,
        /// Counting convention (indices default to strict).
        #[arg(long, value_enum, default_value_t = ConventionArg::Strict)]
        convention: ConventionArg,
    },
    /// Build a graph product of two inputs and print it in graph6.
    Product {
        /// First factor: file path or '-'.
        a: String,
        /// Second factor: file path or '-'.
        b: String,
        /// Build the Cartesian product (default).
        #[arg(long, conflicts_with = "lexicographic")]
        cartesian: bool,
        /// Build the lexicographic product A[B].
        #[arg(long)]
        lexicographic: bool,
        /// Input format for both factors.
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        /// Vertex budget for the product.
        #[arg(long, default_value_t = distbal::DEFAULT_VERTEX_BUDGET)]
        vertex_budget: usize,
    },
    /// Enumerate connected graphs up to isomorphism and emit a JSON-lines catalog.
    Enumerate {
        /// Largest vertex count to enumerate (1..=8).
        #[arg(long)]
        n: usize,
        /// Comma-separated filter terms: bipartite, diameter=K, gt_edb=T,
        /// gt_sedb=T, gt_nedb.
        #[arg(long)]
        predicate: Option<String>,
        /// Counting convention used for classification.
        #[arg(long, value_enum, default_value_t = ConventionArg::Augmented)]
        convention: ConventionArg,
        /// Output file (standard output when omitted).
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
    },
    /// Run the claim-audit suite and emit its report.
    Verify {
        /// Comma-separated check ids, e.g. C1,C4. Default: all.
        #[arg(long, value_name = "IDS")]
        checks: Option<String>,
        /// Atlas scan budget in vertices (1..=7).
        #[arg(long, default_value_t = 7)]
        budget: usize,
        /// Output file (standard output when omitted).
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
        /// Report rendering.
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

/// Report wrapper shared by the JSON-emitting subcommands.
#[derive(Serialize)]
struct Envelope<T: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    parameters: BTreeMap<&'static str, serde_json::Value>,
    convention: Option<Convention>,
    payload: T,
}

impl<T: Serialize> Envelope<T> {
    fn new(command: &'static str, convention: Option<Convention>, payload: T) -> Envelope<T> {
        Envelope {
            tool: "distbal",
            version: env!("CARGO_PKG_VERSION"),
            command,
            parameters: BTreeMap::new(),
            convention,
            payload,
        }
    }

    fn with(mut self, key: &'static str, value: impl Serialize) -> Envelope<T> {
        self.parameters.insert(key, serde_json::to_value(value).expect("parameter serializes"));
        self
    }

    fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("envelope serializes"));
    }
}

#[derive(Serialize)]
struct IndexPayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    szeged: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_szeged: Option<u64>,
}

/// CLI failure with the exit code mandated for its class.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn parse(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_PARSE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::MalformedHeader { .. }
            | Error::TruncatedBits { .. }
            | Error::TrailingGarbage { .. }
            | Error::EdgeListSyntax { .. }
            | Error::LoopEdge { .. }
            | Error::VertexOutOfRange { .. }
            | Error::DuplicateEdge { .. } => EXIT_PARSE,
            Error::ProductTooLarge { .. }
            | Error::BudgetExceeded { .. }
            | Error::TooLargeForExactIso { .. } => EXIT_BUDGET,
            Error::ParameterOutOfRange { .. } | Error::DisconnectedGraph => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::parse(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::parse(format!("reading {path}: {e}")))?;
    }
    Ok(text)
}

fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, Failure> {
    match format {
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Failure::parse("empty graph input"))?;
            Ok(parse_graph6(line)?)
        }
        GraphFormat::Edgelist => Ok(parse_edge_list_text(text)?),
    }
}

fn emit_graph(g: &Graph, format: GraphFormat) {
    match format {
        GraphFormat::Graph6 => println!("{}", to_graph6(g)),
        GraphFormat::Edgelist => print!("{}", to_edge_list_text(g)),
    }
}

fn generate_family(family: &str, params: &[usize]) -> Result<Graph, Failure> {
    use distbal::generate;
    let need = |count: usize| -> Result<(), Failure> {
        if params.len() == count {
            Ok(())
        } else {
            Err(Failure::usage(format!(
                "family {family} takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let g = match family {
        "complete_bipartite" => {
            need(2)?;
            generate::complete_bipartite(params[0], params[1])?
        }
        "cycle" => {
            need(1)?;
            generate::cycle(params[0])?
        }
        "path" => {
            need(1)?;
            generate::path(params[0])?
        }
        "complete" => {
            need(1)?;
            generate::complete(params[0])?
        }
        "hypercube" => {
            need(1)?;
            generate::hypercube(params[0])?
        }
        "empty" => {
            need(1)?;
            generate::empty(params[0])?
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown family {other:?} (use complete_bipartite, cycle, path, complete, \
                 hypercube, empty)"
            )))
        }
    };
    Ok(g)
}

/// Conjunction of the fixed predicate keywords over a classification report.
struct Predicate {
    bipartite: bool,
    diameter: Option<usize>,
    gt_edb: Option<u64>,
    gt_sedb: Option<u64>,
    gt_nedb: bool,
}

impl Predicate {
    fn parse(text: &str) -> Result<Predicate, Failure> {
        let mut p = Predicate {
            bipartite: false,
            diameter: None,
            gt_edb: None,
            gt_sedb: None,
            gt_nedb: false,
        };
        for term in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = match term.split_once('=') {
                Some((k, v)) => (k.trim(), Some(v.trim())),
                None => (term, None),
            };
            let int = |v: Option<&str>| -> Result<u64, Failure> {
                v.ok_or_else(|| Failure::usage(format!("term {key:?} needs a value")))?
                    .parse()
                    .map_err(|_| Failure::usage(format!("term {key:?} needs an integer value")))
            };
            match key {
                "bipartite" => p.bipartite = true,
                "diameter" => p.diameter = Some(int(value)? as usize),
                "gt_edb" => p.gt_edb = Some(int(value)?),
                "gt_sedb" => p.gt_sedb = Some(int(value)?),
                "gt_nedb" => p.gt_nedb = true,
                other => {
                    return Err(Failure::usage(format!(
                        "unknown predicate term {other:?} (use bipartite, diameter=K, gt_edb=T, \
                         gt_sedb=T, gt_nedb)"
                    )))
                }
            }
        }
        Ok(p)
    }

    fn matches(&self, r: &ClassificationReport) -> bool {
        (!self.bipartite || r.bipartite)
            && self.diameter.is_none_or(|d| r.diameter == d)
            && self.gt_edb.is_none_or(|t| r.gt_edb_values.contains(t))
            && self.gt_sedb.is_none_or(|t| r.gt_sedb_values.contains(t))
            && (!self.gt_nedb || r.gt_nedb.is_some())
    }
}

fn write_out(path: &Option<String>, content: &str) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::parse(format!("writing {path}: {e}"))),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Generate { family, params, out } => {
            let g = generate_family(&family, &params)?;
            emit_graph(&g, out);
            Ok(())
        }
        Command::Classify { input, convention } => {
            let g = parse_graph(&read_input(&input.input)?, input.format)?;
            let conv = Convention::from(convention);
            let report = distbal::full_report(&g, conv)?;
            Envelope::new("classify", Some(conv), report).with("graph6", to_graph6(&g)).print();
            Ok(())
        }
        Command::Index { input, szeged, edge_szeged, convention } => {
            let g = parse_graph(&read_input(&input.input)?, input.format)?;
            let conv = Convention::from(convention);
            // Neither flag means both indices.
            let both = !szeged && !edge_szeged;
            let payload = IndexPayload {
                szeged: (szeged || both).then(|| szeged_index(&g)).transpose()?,
                edge_szeged: (edge_szeged || both)
                    .then(|| edge_szeged_index(&g, conv))
                    .transpose()?,
            };
            Envelope::new("index", Some(conv), payload).with("graph6", to_graph6(&g)).print();
            Ok(())
        }
        Command::Product { a, b, cartesian, lexicographic, format, vertex_budget } => {
            if a == "-" && b == "-" {
                return Err(Failure::usage(
                    "at most one product factor can come from standard input",
                ));
            }
            let ga = parse_graph(&read_input(&a)?, format)?;
            let gb = parse_graph(&read_input(&b)?, format)?;
            let _ = cartesian;
            let p = if lexicographic {
                lexicographic_product_with_budget(&ga, &gb, vertex_budget)?
            } else {
                cartesian_product_with_budget(&ga, &gb, vertex_budget)?
            };
            println!("{}", to_graph6(&p));
            Ok(())
        }
        Command::Enumerate { n, predicate, convention, out } => {
            let conv = Convention::from(convention);
            let pred = match &predicate {
                Some(text) => Predicate::parse(text)?,
                None => Predicate::parse("")?,
            };
            let entries = search(n, conv, |r| pred.matches(r))?;
            let mut buf = Vec::new();
            write_catalog(&entries, &mut buf)
                .map_err(|e| Failure::parse(format!("writing catalog: {e}")))?;
            write_out(&out, &String::from_utf8(buf).expect("catalog lines are UTF-8"))
        }
        Command::Verify { checks, budget, out, format } => {
            let ids: Vec<CheckId> = match &checks {
                Some(list) => list
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(CheckId::from_str)
                    .collect::<Result<_, _>>()
                    .map_err(Failure::usage)?,
                None => CheckId::all().to_vec(),
            };
            let report = run_checks(&ids, &VerifyConfig { atlas_max: budget })?;
            let rendered = match format {
                ReportFormat::Json => {
                    let envelope = Envelope::new("verify", None, &report)
                        .with("budget", budget)
                        .with("checks", ids.iter().map(CheckId::as_str).collect::<Vec<_>>());
                    format!("{}\n", serde_json::to_string_pretty(&envelope).expect("serializes"))
                }
                ReportFormat::Text => report.to_text_table(),
            };
            write_out(&out, &rendered)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("distbal: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
