//! cyl5: build, search, lift and certify Hamiltonian cycles of the
//! cylindrical 5-puzzle state graph.
//!
//! Exit codes: 0 verified/pass, 1 checked and failed, 2 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyl5_core::certify::{self, CertReport, CertifyOptions, Claim};
use cyl5_core::hamilton::{
    canonicalize, find_ham_cycles, hamiltonian_starts, lift_cycle, splice_to_path, Certificate, CertificateKind,
    HamCycleWord, SearchOptions,
};
use cyl5_core::{
    build_quotient, build_state_graph, cayley_g, cayley_s5, project, GroupElem, LabeledDigraph, MoveWord, Perm,
    Position, QuotientGraph, Subgroup,
};

#[derive(Parser)]
#[command(
    name = "cyl5",
    version,
    about = "Hamiltonian cycles of the cylindrical 5-puzzle",
    after_help = "EXAMPLES:\n\
                  \n  cyl5 certify all\
                  \n  cyl5 certify lemma1 --format json\
                  \n  cyl5 search quotient-k0\
                  \n  cyl5 lift quotient-k0 VRVLVRVLVLVRVRVLVRVLVLVL --splice\
                  \n  cyl5 trace RVLVRVLVRRRVLVRVRVLVLVRVLVLLVRVRVLLLVLVRRRVRVRVR --repeat 15\
                  \n  cyl5 export quotient-k0 --format dot"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for the Hamiltonian search (output does not depend on it)
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,

    /// Print progress and timings to stderr
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Run a certification report
    Certify {
        #[arg(value_enum)]
        claim: ClaimArg,
    },
    /// List the Hamiltonian cycles of a graph, one canonical word per line
    ///
    /// Exhaustive on the quotient graphs; use --limit on the larger graphs.
    Search {
        #[arg(value_enum)]
        graph: GraphSel,
        /// Stop after this many directed cycles
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Lift a Hamiltonian cycle of a quotient graph to a cycle cover of the state graph
    Lift {
        #[arg(value_enum)]
        graph: QuotientSel,
        /// Cycle word over L, R, V (case-insensitive)
        word: String,
        /// Splice a 2-cycle cover into a Hamiltonian path
        #[arg(long)]
        splice: bool,
    },
    /// Follow a word through a graph and summarise the walk
    Trace {
        /// Word over L, R, V (case-insensitive, may be empty)
        word: String,
        /// Start vertex: a position like 012/345 on the state graph, a
        /// permutation like 12345 on cayley-s5, or (σ,x,y) on a quotient
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphSel::State)]
        graph: GraphSel,
        /// Repeat the word this many times
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        /// Print every visited vertex
        #[arg(long)]
        positions: bool,
        /// Exit 1 unless the walk is of this kind
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Write a graph as DOT or JSON
    Export {
        #[arg(value_enum)]
        graph: GraphSel,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimArg {
    Lemma1,
    Theorem1,
    Theorem2,
    Table1,
    Table2,
    QuotientCounts,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphSel {
    State,
    CayleyS5,
    QuotientK0,
    QuotientK1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuotientSel {
    QuotientK0,
    QuotientK1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    HamiltonianCycle,
    HamiltonianPath,
}

impl GraphSel {
    fn name(self) -> &'static str {
        match self {
            GraphSel::State => "state",
            GraphSel::CayleyS5 => "cayley-s5",
            GraphSel::QuotientK0 => "quotient-k0",
            GraphSel::QuotientK1 => "quotient-k1",
        }
    }
}

impl QuotientSel {
    fn graph(self) -> GraphSel {
        match self {
            QuotientSel::QuotientK0 => GraphSel::QuotientK0,
            QuotientSel::QuotientK1 => GraphSel::QuotientK1,
        }
    }

    fn build(self) -> QuotientGraph {
        let k = match self {
            QuotientSel::QuotientK0 => Subgroup::k0(),
            QuotientSel::QuotientK1 => Subgroup::k1(),
        };
        build_quotient(&cayley_g(), &k)
    }
}

/// A built-in graph with its vertex notation.
enum Built {
    State(LabeledDigraph<Position>),
    S5(LabeledDigraph<Perm>),
    Quotient(Box<QuotientGraph>),
}

impl Built {
    fn new(sel: GraphSel) -> Built {
        match sel {
            GraphSel::State => Built::State(build_state_graph()),
            GraphSel::CayleyS5 => Built::S5(cayley_s5()),
            GraphSel::QuotientK0 => Built::Quotient(Box::new(QuotientSel::QuotientK0.build())),
            GraphSel::QuotientK1 => Built::Quotient(Box::new(QuotientSel::QuotientK1.build())),
        }
    }

    fn vertex_count(&self) -> usize {
        match self {
            Built::State(g) => g.vertex_count(),
            Built::S5(g) => g.vertex_count(),
            Built::Quotient(q) => q.graph.vertex_count(),
        }
    }

    fn label(&self, v: usize) -> String {
        match self {
            Built::State(g) => g.vertex(v).to_string(),
            Built::S5(g) => g.vertex(v).to_string(),
            Built::Quotient(q) => q.representative(v).to_string(),
        }
    }

    /// Parses a start vertex in the graph's own notation.
    fn parse_vertex(&self, text: &str) -> Result<usize, String> {
        match self {
            Built::State(g) => {
                let p: Position = text.parse().map_err(|e| format!("{e}"))?;
                g.index_of(&p).ok_or_else(|| format!("position {p} is not in the state graph"))
            }
            Built::S5(g) => {
                let p: Perm = text.parse().map_err(|e| format!("{e}"))?;
                Ok(g.index_of(&p).expect("every permutation is a vertex"))
            }
            Built::Quotient(q) => {
                let e: GroupElem = text.parse().map_err(|e| format!("{e}"))?;
                Ok(project(q, q.base.index_of(&e).expect("every element is a vertex")))
            }
        }
    }

    fn trace(&self, start: usize, word: &MoveWord) -> cyl5_core::WalkTrace {
        match self {
            Built::State(g) => g.trace(start, word),
            Built::S5(g) => g.trace(start, word),
            Built::Quotient(q) => q.graph.trace(start, word),
        }
    }

    fn search(&self, name: &str, opts: &SearchOptions) -> Vec<HamCycleWord> {
        match self {
            Built::State(g) => find_ham_cycles(g, name, opts),
            Built::S5(g) => find_ham_cycles(g, name, opts),
            Built::Quotient(q) => find_ham_cycles(&q.graph, name, opts),
        }
    }

    fn export(&self, name: &str, format: Format) -> String {
        match (self, format) {
            (Built::State(g), Format::Dot) => g.to_dot(name, false),
            (Built::S5(g), Format::Dot) => g.to_dot(name, false),
            (Built::Quotient(q), Format::Dot) => q.graph.to_dot(name, true),
            (Built::State(g), _) => pretty(&g.to_json()),
            (Built::S5(g), _) => pretty(&g.to_json()),
            (Built::Quotient(q), _) => pretty(&q.to_json()),
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serialises");
    s.push('\n');
    s
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    eprintln!("error: {msg}");
    Outcome { text: String::new(), code: 2 }
}

fn parse_word(text: &str) -> Result<MoveWord, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).context("writing to stdout")?;
            stdout.flush().context("writing to stdout")
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let started = Instant::now();
    let outcome = match &cli.command {
        Command::Certify { claim } => cmd_certify(cli, *claim),
        Command::Search { graph, limit } => cmd_search(cli, *graph, *limit),
        Command::Lift { graph, word, splice } => cmd_lift(cli, *graph, word, *splice),
        Command::Trace { word, start, graph, repeat, positions, expect } => {
            cmd_trace(cli, word, start.as_deref(), *graph, *repeat, *positions, *expect)
        }
        Command::Export { graph } => cmd_export(cli, *graph),
    };
    if cli.verbose > 0 {
        eprintln!("finished in {:.3?}", started.elapsed());
    }
    Ok(outcome)
}

fn cmd_certify(cli: &Cli, claim: ClaimArg) -> Outcome {
    let opts = CertifyOptions { threads: cli.threads as usize };
    let claims: Vec<Claim> = match claim {
        ClaimArg::Lemma1 => vec![Claim::Lemma1],
        ClaimArg::Theorem1 => vec![Claim::Theorem1],
        ClaimArg::Theorem2 => vec![Claim::Theorem2],
        ClaimArg::Table1 => vec![Claim::Table1],
        ClaimArg::Table2 => vec![Claim::Table2],
        ClaimArg::QuotientCounts => vec![Claim::QuotientCounts],
        ClaimArg::All => certify::HEADLINE.to_vec(),
    };
    let reports: Vec<CertReport> = claims
        .iter()
        .map(|&c| {
            if cli.verbose > 0 {
                eprintln!("certifying {c}");
            }
            certify::certify(c, &opts)
        })
        .collect();
    let passed = reports.iter().all(CertReport::passed);
    let text = match cli.format {
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialise") + "\n",
        Format::Text => reports.iter().map(CertReport::to_text).collect::<Vec<_>>().join("\n"),
        Format::Dot => return usage("certify supports --format text or json"),
    };
    Outcome { text, code: if passed { 0 } else { 1 } }
}

fn cmd_search(cli: &Cli, sel: GraphSel, limit: Option<usize>) -> Outcome {
    if cli.format == Format::Dot {
        return usage("search supports --format text or json");
    }
    let built = Built::new(sel);
    let opts = SearchOptions { limit, threads: cli.threads as usize, ..Default::default() };
    let cycles = built.search(sel.name(), &opts);
    if cli.verbose > 0 {
        eprintln!("{} directed cycles on {}", cycles.len(), sel.name());
    }
    // First cycle found for each canonical class, ordered by class.
    let mut classes: std::collections::BTreeMap<MoveWord, &HamCycleWord> = Default::default();
    for c in &cycles {
        classes.entry(canonicalize(&c.word)).or_insert(c);
    }
    let text = match cli.format {
        Format::Json => {
            let certs: Vec<_> = classes
                .iter()
                .map(|(canonical, c)| {
                    let cert = Certificate {
                        graph: sel.name().to_string(),
                        start: built.label(c.start),
                        word: c.word.clone(),
                        kind: CertificateKind::Cycle,
                        cycle_lengths: vec![c.word.len()],
                    };
                    let mut v = serde_json::to_value(cert).expect("certificate serialises");
                    v["canonical"] = json!(canonical.to_string());
                    v
                })
                .collect();
            pretty(&json!(certs))
        }
        _ => classes.keys().map(|w| format!("{w}\n")).collect(),
    };
    Outcome::ok(text)
}

fn cmd_lift(cli: &Cli, sel: QuotientSel, word: &str, splice: bool) -> Outcome {
    if cli.format == Format::Dot {
        return usage("lift supports --format text or json");
    }
    let word = match parse_word(word) {
        Ok(w) => w,
        Err(e) => return usage(e),
    };
    let q = sel.build();
    let name = sel.graph().name();
    let start = hamiltonian_starts(&q.graph, &word).first().copied().unwrap_or(0);
    let cycle = HamCycleWord { word, start, graph_id: name.to_string() };
    let cover = match lift_cycle(&q, &cycle) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: not a Hamiltonian cycle of {name}: {e}");
            return Outcome { text: String::new(), code: 1 };
        }
    };
    let state_label = |v: usize| Position::decode(q.base.vertex(v)).to_string();
    let lengths = cover.cycle_lengths();
    let cover_cert = Certificate {
        graph: "state".into(),
        start: state_label(cover.cycles[0].start),
        word: cycle.word.clone(),
        kind: CertificateKind::Cover,
        cycle_lengths: lengths.clone(),
    };
    let mut text = format!("{}-cycle cover, lengths {:?}\n", cover.len(), lengths);
    let mut json_out =
        json!({ "cover": cover_cert, "starts": cover.cycles.iter().map(|c| state_label(c.start)).collect::<Vec<_>>() });
    let mut code = 0;
    if splice {
        match splice_to_path(&cover, &q.base) {
            Ok(path) => {
                let verified = path.trace.is_hamiltonian_path(q.base.vertex_count());
                let cert = Certificate {
                    graph: "state".into(),
                    start: state_label(path.trace.start),
                    word: path.trace.word.clone(),
                    kind: CertificateKind::Path,
                    cycle_lengths: Vec::new(),
                };
                text.push_str(&format!(
                    "spliced path: {} moves from {}, {}\n{}\n",
                    path.trace.word.len(),
                    cert.start,
                    if verified { "verified Hamiltonian path" } else { "NOT a Hamiltonian path" },
                    path.trace.word
                ));
                json_out["path"] = serde_json::to_value(cert).expect("certificate serialises");
                if !verified {
                    code = 1;
                }
            }
            Err(e) => {
                text.push_str(&format!("splice failed: {e}\n"));
                json_out["splice_error"] = json!(e.to_string());
                code = 1;
            }
        }
    }
    if cli.format == Format::Json {
        text = pretty(&json_out);
    }
    Outcome { text, code }
}

fn cmd_trace(
    cli: &Cli,
    word: &str,
    start: Option<&str>,
    sel: GraphSel,
    repeat: usize,
    positions: bool,
    expect: Option<Expect>,
) -> Outcome {
    if cli.format == Format::Dot {
        return usage("trace supports --format text or json");
    }
    let word = match parse_word(word) {
        Ok(w) => w.repeat(repeat),
        Err(e) => return usage(e),
    };
    let built = Built::new(sel);
    let start = match start.map(|s| built.parse_vertex(s)).transpose() {
        Ok(s) => s.unwrap_or(0),
        Err(e) => return usage(e),
    };
    let trace = built.trace(start, &word);
    let n = built.vertex_count();
    let kind = if trace.is_hamiltonian_cycle(n) {
        "Hamiltonian cycle"
    } else if trace.is_hamiltonian_path(n) {
        "Hamiltonian path"
    } else if trace.is_simple_cycle() {
        "simple cycle"
    } else if trace.is_simple_path() {
        "simple path"
    } else {
        "not simple"
    };
    let distinct = trace.distinct_count();
    let code = match expect {
        Some(Expect::HamiltonianCycle) if !trace.is_hamiltonian_cycle(n) => 1,
        Some(Expect::HamiltonianPath) if !trace.is_hamiltonian_path(n) => 1,
        _ => 0,
    };
    let text = if cli.format == Format::Json {
        pretty(&json!({
            "graph": sel.name(),
            "start": built.label(trace.start),
            "end": built.label(trace.end()),
            "moves": word.len(),
            "distinct": distinct,
            "closed": trace.is_closed(),
            "kind": kind,
            "visited": if positions { json!(trace.visited.iter().map(|&v| built.label(v)).collect::<Vec<_>>()) } else { json!(null) },
        }))
    } else {
        let mut text = String::new();
        if positions {
            for &v in &trace.visited {
                text.push_str(&built.label(v));
                text.push('\n');
            }
        }
        text.push_str(&format!(
            "{} moves from {} to {}\n",
            word.len(),
            built.label(trace.start),
            built.label(trace.end())
        ));
        let count = if distinct == 1 { "1 vertex".to_string() } else { format!("{distinct} distinct") };
        text.push_str(&format!("{count}, {}, {kind}\n", if trace.is_closed() { "closed" } else { "open" }));
        text
    };
    Outcome { text, code }
}

fn cmd_export(cli: &Cli, sel: GraphSel) -> Outcome {
    if cli.format == Format::Text {
        return usage("export needs --format dot or --format json");
    }
    Outcome::ok(Built::new(sel).export(sel.name(), cli.format))
}
