//! `packdom` — construct-and-certify independent dominating sets from
//! maximal packings in subcubic graphs, query the exact oracles, verify
//! externally supplied sets, orient multigraphs without sources, and run
//! the desk-scale searches.
//!
//! Exit codes: 0 ok, 1 claimed property is false, 2 invalid input,
//! 3 internal consistency failure (trace dumped to stderr), 4 search guard
//! exceeded.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use packdom::certificate::{
    graph_digest, multigraph_digest, text_digest, Certificate, CertificateKind,
};
use packdom::construct::construct;
use packdom::domination::{dom_number_bruteforce_with_cap, idom_number_bruteforce_with_cap};
use packdom::error::Error;
use packdom::generators;
use packdom::graph::{Graph, VertexSet};
use packdom::io;
use packdom::orient::orient_no_sources;
use packdom::packing::{
    greedy_maximal_packing, packing_number_bruteforce_with_cap, DEFAULT_ORACLE_CAP,
};
use packdom::search;

use report::{OutputOpts, RunReport};

#[derive(Parser)]
#[command(name = "packdom", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an independent dominating set of size at most 3|S| from a
    /// maximal packing S, with a full trace.
    Construct(ConstructArgs),
    /// Exact packing / domination / independent domination numbers.
    Oracle(OracleArgs),
    /// Check a claimed property of a vertex set.
    Verify(VerifyArgs),
    /// Desk-scale searches over small graphs.
    Search(SearchArgs),
    /// Orient a multigraph so that no vertex is a source.
    Orient(OrientArgs),
    /// Write named or generated graphs.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Input graph (DIMACS-like or graph6).
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    /// Packing from a vertex-set file (0-based indices).
    #[arg(long, value_name = "FILE", conflicts_with = "greedy")]
    set: Option<PathBuf>,
    /// Use a seeded greedy maximal packing instead of --set.
    #[arg(long, required_unless_present = "set")]
    greedy: bool,
    /// Seed for --greedy.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, ValueEnum)]
enum Stat {
    /// Independent domination number i(G).
    I,
    /// Domination number gamma(G).
    Gamma,
    /// Packing number rho(G).
    Rho,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    #[arg(long, value_enum)]
    stat: Stat,
    /// Vertex cap for the exhaustive search.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    cap: usize,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    /// Vertex-set file (plain 0-based indices) or a certificate JSON.
    #[arg(long, value_name = "FILE")]
    set: PathBuf,
    /// Property to check: packing, maximal-packing, idom, dom.
    #[arg(long)]
    kind: String,
    /// Write a certificate for the verified set.
    #[arg(long, value_name = "FILE")]
    cert_out: Option<PathBuf>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, ValueEnum)]
enum SearchMode {
    /// Connected subcubic graphs with i = 3·rho.
    Tight3,
    /// Connected subcubic graphs with gamma > 2·rho.
    Conj2rho,
    /// Random probes at maximum degree 4 for i > Delta·rho.
    Delta4,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    mode: SearchMode,
    /// Largest vertex count to enumerate or sample.
    #[arg(long, value_name = "N")]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample count for delta4.
    #[arg(long, default_value_t = 1000)]
    budget: usize,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct OrientArgs {
    /// Input multigraph (DIMACS-like; duplicate edges and loops allowed).
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    /// Write the arc-format orientation here (default: stdout).
    #[arg(long, value_name = "FILE")]
    arcs_out: Option<PathBuf>,
    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Copy, Clone, ValueEnum)]
enum GraphFormat {
    Dimacs,
    Graph6,
}

#[derive(Args)]
struct CatalogArgs {
    /// Named graph: h1, wagner, petersen, k33, cycle(n), path(n).
    #[arg(long, value_name = "NAME")]
    name: Option<String>,
    /// Random connected subcubic graph on N vertices.
    #[arg(long, value_name = "N", conflicts_with = "name")]
    random_subcubic: Option<usize>,
    /// Random connected multigraph with min degree 2: N vertices, M edges.
    #[arg(long, value_names = ["N", "M"], num_args = 2,
          conflicts_with_all = ["name", "random_subcubic"])]
    random_multigraph: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dimacs)]
    format: GraphFormat,
    #[command(flatten)]
    output: OutputOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
        Command::Orient(args) => cmd_orient(args),
        Command::Catalog(args) => cmd_catalog(args),
    };
    eprintln!("elapsed: {:?}", started.elapsed());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            if let Error::Inconsistency { context, .. } = &err {
                eprintln!(
                    "trace dump:\n{}",
                    serde_json::to_string_pretty(context).unwrap_or_default()
                );
            }
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::GuardExceeded { .. } => 4,
        Error::Inconsistency { .. } => 3,
        _ => 2,
    }
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    io::read_graph(&std::fs::read_to_string(path)?)
}

/// A `--set` file is either plain indices or a certificate JSON; either
/// way it yields the members.
fn load_set(path: &Path, universe: usize) -> Result<VertexSet, Error> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let cert: Certificate = serde_json::from_str(&text)
            .map_err(|e| Error::parse(0, format!("bad certificate JSON: {e}")))?;
        VertexSet::from_members(universe, cert.members)
    } else {
        io::read_vertex_set(&text, universe)
    }
}

fn cmd_construct(args: ConstructArgs) -> Result<u8, Error> {
    let g = load_graph(&args.graph)?;
    let (s, source, seed) = match &args.set {
        Some(path) => (load_set(path, g.n())?, "file", None),
        None => (
            greedy_maximal_packing(&g, args.seed),
            "greedy",
            Some(args.seed),
        ),
    };
    let out = construct(&g, &s)?;
    let results = json!({
        "packing": s.as_slice(),
        "packing_source": source,
        "a_hat": out.a_hat.as_slice(),
        "size": out.a_hat.len(),
        "bound": out.bound,
        "trace": serde_json::to_value(&out).expect("trace serializes"),
    });
    let report = RunReport::new("construct", graph_digest(&g), seed, results);
    let human = format!(
        "independent dominating set of size {} (bound 3|S| = {}): {:?}",
        out.a_hat.len(),
        out.bound,
        out.a_hat.as_slice()
    );
    args.output.emit(&report, &human)?;
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Error> {
    let g = load_graph(&args.graph)?;
    let (name, value) = match args.stat {
        Stat::I => ("i", idom_number_bruteforce_with_cap(&g, args.cap)?),
        Stat::Gamma => ("gamma", dom_number_bruteforce_with_cap(&g, args.cap)?),
        Stat::Rho => ("rho", packing_number_bruteforce_with_cap(&g, args.cap)?),
    };
    let results = json!({ "stat": name, "value": value, "n": g.n() });
    let report = RunReport::new("oracle", graph_digest(&g), None, results);
    args.output.emit(&report, &format!("{name} = {value}"))?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    let g = load_graph(&args.graph)?;
    let kind = CertificateKind::parse(&args.kind)?;
    let set = load_set(&args.set, g.n())?;
    let holds = packdom::certificate::verify_kind(&g, kind, &set)?;
    if let Some(path) = &args.cert_out {
        let cert = Certificate::new(&g, kind, &set, Some(set.len()));
        std::fs::write(
            path,
            serde_json::to_string_pretty(&cert).expect("cert serializes"),
        )?;
    }
    let results = json!({
        "kind": kind.as_str(),
        "set": set.as_slice(),
        "holds": holds,
    });
    let report = RunReport::new("verify", graph_digest(&g), None, results);
    let human = format!(
        "{} {} on this graph",
        args.kind,
        if holds { "holds" } else { "does NOT hold" }
    );
    args.output.emit(&report, &human)?;
    Ok(if holds { 0 } else { 1 })
}

fn cmd_search(args: SearchArgs) -> Result<u8, Error> {
    let (mode, results, human) = match args.mode {
        SearchMode::Tight3 => {
            let r = search::search_tight3(args.max_n)?;
            let human = format!(
                "tight3: {} of {} graphs have i = 3*rho",
                r.tight.len(),
                r.graphs_checked
            );
            ("tight3", serde_json::to_value(&r).unwrap(), human)
        }
        SearchMode::Conj2rho => {
            let r = search::search_conj2rho(args.max_n)?;
            let human = format!(
                "conj2rho: {} violations, {} known exceptions over {} graphs",
                r.violations.len(),
                r.known_exceptions.len(),
                r.graphs_checked
            );
            ("conj2rho", serde_json::to_value(&r).unwrap(), human)
        }
        SearchMode::Delta4 => {
            let r = search::search_delta4(args.max_n, args.seed, args.budget)?;
            let human = format!(
                "delta4: {} counterexamples in {} samples",
                r.counterexamples.len(),
                r.samples
            );
            ("delta4", serde_json::to_value(&r).unwrap(), human)
        }
    };
    let params = format!(
        "search mode={mode} max_n={} seed={} budget={}",
        args.max_n, args.seed, args.budget
    );
    let report = RunReport::new("search", text_digest(&params), Some(args.seed), results);
    args.output.emit(&report, &human)?;
    Ok(0)
}

fn cmd_orient(args: OrientArgs) -> Result<u8, Error> {
    let text = std::fs::read_to_string(&args.graph)?;
    let m = io::read_multigraph(&text)?;
    let (d, steps) = orient_no_sources(&m)?;
    let arc_text = io::write_orientation(&d);
    let sources = d.sources();
    if let Some(path) = &args.arcs_out {
        std::fs::write(path, &arc_text)?;
    }
    let results = json!({
        "n": m.n(),
        "m": m.edge_count(),
        "arc_format": arc_text,
        "sources": sources.as_slice(),
        "elimination_steps": steps.len(),
    });
    let report = RunReport::new("orient", multigraph_digest(&m), None, results);
    if args.output.json || args.output.out.is_some() {
        args.output.emit(
            &report,
            &format!("source-free orientation found in {} steps", steps.len()),
        )?;
    } else if args.arcs_out.is_none() {
        print!("{arc_text}");
    } else {
        println!("source-free orientation found in {} steps", steps.len());
    }
    Ok(if sources.is_empty() { 0 } else { 1 })
}

fn cmd_catalog(args: CatalogArgs) -> Result<u8, Error> {
    enum Made {
        Simple(Graph),
        Multi(packdom::Multigraph),
    }
    let (made, what) = if let Some(name) = &args.name {
        (Made::Simple(generators::named(name)?), name.clone())
    } else if let Some(n) = args.random_subcubic {
        (
            Made::Simple(generators::random_subcubic(n, args.seed)),
            format!("random-subcubic n={n} seed={}", args.seed),
        )
    } else if let Some(nm) = &args.random_multigraph {
        (
            Made::Multi(generators::random_multigraph_min2(nm[0], nm[1], args.seed)?),
            format!(
                "random-multigraph n={} m={} seed={}",
                nm[0], nm[1], args.seed
            ),
        )
    } else {
        return Err(Error::InfeasibleParameters(
            "catalog needs --name, --random-subcubic or --random-multigraph".into(),
        ));
    };

    let (text, digest, shape) = match &made {
        Made::Simple(g) => {
            let text = match args.format {
                GraphFormat::Dimacs => io::write_graph_dimacs(g),
                GraphFormat::Graph6 => {
                    let mut t = io::encode_graph6(g)?;
                    t.push('\n');
                    t
                }
            };
            (
                text,
                graph_digest(g),
                json!({ "n": g.n(), "m": g.edge_count() }),
            )
        }
        Made::Multi(m) => {
            if matches!(args.format, GraphFormat::Graph6) {
                return Err(Error::InfeasibleParameters(
                    "graph6 cannot carry multigraphs; use dimacs".into(),
                ));
            }
            (
                io::write_multigraph_dimacs(m),
                multigraph_digest(m),
                json!({ "n": m.n(), "m": m.edge_count() }),
            )
        }
    };

    if args.output.json || args.output.out.is_some() {
        let results = json!({ "what": what, "shape": shape, "text": text });
        let report = RunReport::new("catalog", digest, Some(args.seed), results);
        args.output.emit(&report, &format!("{what}: written"))?;
    } else {
        print!("{text}");
    }
    Ok(0)
}
