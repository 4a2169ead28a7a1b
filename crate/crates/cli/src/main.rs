//! `circle`: command-line front end for the circle-graph toolkit.
//!
//! Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
//! `verify` exits 0 only when the report has no counterexamples.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use circle_core::graph::{standard_graph, Graph, StandardGraph};
use circle_core::lab::{
    self, enumerate_cubic, survey_cubic, to_graph6, verify_cycle_word_uniqueness, SweepOptions, VerificationReport,
    MAX_CYCLE,
};
use circle_core::recognition::{certify, local_equivalence_orbit, DEFAULT_ORBIT_CAP};
use circle_core::splits::{find_split, simple_splits};
use circle_core::words::{cycle_word, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Environment variable holding the worker count for parallel sweeps.
const WORKERS_ENV: &str = "CIRCLE_WORKERS";

#[derive(Parser)]
#[command(name = "circle", version, about = "Circle graphs, double occurrence words and cubic-graph sweeps")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file (order on the first line, then `u v` per line); `-` reads stdin.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Named graph: Kn, Km,n, Cn, Pn, Wn or BW3.
    #[arg(long)]
    standard: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Interlacement graph of a double occurrence word.
    Interlace {
        /// Word, one character per letter or whitespace-separated tokens.
        word: String,
    },
    /// Find a realizing word, or an obstruction witness.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Local complement at a vertex.
    Lc {
        #[command(flatten)]
        input: GraphInput,
        /// Vertex index or label.
        #[arg(long)]
        vertex: String,
    },
    /// Twin pairs and the number of disjoint couples.
    Twins {
        #[command(flatten)]
        input: GraphInput,
    },
    /// First split in the deterministic order, or report the graph prime.
    Split {
        #[command(flatten)]
        input: GraphInput,
        /// List the twin, component and cutpoint splits instead.
        #[arg(long)]
        simple: bool,
    },
    /// Isomorphism classes reachable by local complementation.
    Orbit {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// The word realizing the cycle v1 ... vc.
    CycleWord { c: usize },
    /// Run an exhaustive verification sweep.
    Verify {
        property: Property,
        /// Largest order swept (cubic properties).
        #[arg(long, default_value_t = lab::DEFAULT_N_MAX)]
        n_max: usize,
        /// Allow n_max = 14, which takes minutes.
        #[arg(long)]
        long: bool,
        /// Cycle length for cycle-words; all of 3..=6 when omitted.
        #[arg(long)]
        c: Option<usize>,
        /// Per-graph verdicts as CSV (cubic properties).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Cubic graphs on n vertices up to isomorphism, as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    TwinTheorem,
    NoPrime,
    ThreeConnected,
    CycleWords,
}

/// A domain failure: library error name plus message.
struct Failure {
    name: String,
    message: String,
}

impl Failure {
    fn new(name: &str, message: impl Into<String>) -> Self {
        Failure { name: name.to_owned(), message: message.into() }
    }
}

/// Variant name of the innermost library error, read off its debug form.
fn error_name(debug: &str) -> String {
    let mut s = debug;
    for wrapper in ["Recognition(", "Split(", "Graph(", "Word(", "Lab("] {
        if let Some(rest) = s.strip_prefix(wrapper) {
            s = rest;
        }
    }
    s.chars().take_while(|c| c.is_alphanumeric()).collect()
}

macro_rules! impl_failure {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure { name: error_name(&format!("{e:?}")), message: e.to_string() }
            }
        }
    )*};
}

impl_failure!(
    circle_core::GraphError,
    circle_core::WordError,
    circle_core::SplitError,
    circle_core::RecognitionError,
    lab::LabError
);

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new("Io", e.to_string())
    }
}

/// Rendered output plus whether the run counts as a success.
struct Outcome {
    text: String,
    ok: bool,
}

fn done(text: String) -> Result<Outcome, Failure> {
    Ok(Outcome { text, ok: true })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn load(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(text) = &input.graph6 {
        return Ok(lab::parse_graph6(text)?);
    }
    if let Some(path) = &input.edges {
        let mut text = String::new();
        if path.as_os_str() == "-" {
            io::stdin().read_to_string(&mut text)?;
        } else {
            text = fs::read_to_string(path)?;
        }
        return Ok(Graph::parse_edge_list(&text)?);
    }
    let name = input.standard.as_deref().expect("clap enforces one input");
    let which: StandardGraph = name.parse()?;
    Ok(standard_graph(which)?)
}

#[derive(Serialize)]
struct GraphJson {
    order: usize,
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    graph6: String,
}

fn graph_json(g: &Graph) -> GraphJson {
    GraphJson { order: g.order(), labels: g.labels(), edges: g.edges(), graph6: to_graph6(g) }
}

fn render_graph(g: &Graph, json: bool) -> String {
    if json {
        to_json(&graph_json(g))
    } else {
        g.to_edge_list()
    }
}

fn find_vertex(g: &Graph, spec: &str) -> Result<usize, Failure> {
    if let Some(v) = g.index_of(spec) {
        return Ok(v);
    }
    match spec.parse::<usize>() {
        Ok(v) if v < g.order() => Ok(v),
        _ => Err(Failure::new("UnknownVertex", format!("no vertex {spec:?}"))),
    }
}

fn verify(
    property: Property,
    n_max: usize,
    long: bool,
    c: Option<usize>,
    csv_path: Option<&PathBuf>,
    json: bool,
) -> Result<Outcome, Failure> {
    let reports: Vec<VerificationReport> = match property {
        Property::CycleWords => {
            let lengths: Vec<usize> = match c {
                Some(c) => vec![c],
                None => (3..=MAX_CYCLE).collect(),
            };
            lengths.into_iter().map(verify_cycle_word_uniqueness).collect::<Result<_, _>>()?
        }
        _ => {
            if n_max > lab::DEFAULT_N_MAX && !long {
                return Err(Failure::new("BadOrder", format!("n_max {n_max} needs --long")));
            }
            let survey = survey_cubic(SweepOptions::new(n_max))?;
            if let Some(path) = csv_path {
                let mut w = csv::Writer::from_path(path).map_err(|e| Failure::new("Io", e.to_string()))?;
                for r in &survey.records {
                    w.serialize(r).map_err(|e| Failure::new("Io", e.to_string()))?;
                }
                w.flush()?;
            }
            vec![match property {
                Property::TwinTheorem => survey.twin_report(),
                Property::NoPrime => survey.no_prime_report(),
                Property::ThreeConnected => survey.three_connected_report(),
                Property::CycleWords => unreachable!(),
            }]
        }
    };
    let ok = reports.iter().all(VerificationReport::passed);
    let text = if json {
        if reports.len() == 1 {
            to_json(&reports[0])
        } else {
            to_json(&reports)
        }
    } else {
        let mut s = String::new();
        for r in &reports {
            let _ = writeln!(
                s,
                "{} n={}..{}: {} examined, {} circle, {} counterexamples, {} ms",
                r.property,
                r.n_min,
                r.n_max,
                r.graphs_examined,
                r.circle_graphs,
                r.counterexamples.len(),
                r.wall_time_ms
            );
            for (k, v) in &r.verdicts {
                let _ = writeln!(s, "  {k}: {v}");
            }
            for cx in &r.counterexamples {
                let _ = writeln!(s, "  counterexample {} {}: {}", cx.graph6, cx.property, cx.detail);
            }
        }
        s
    };
    Ok(Outcome { text, ok })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Interlace { word } => {
            let w = Word::parse(word)?;
            done(render_graph(&w.interlacement()?, json))
        }
        Command::Recognize { input, cap } => {
            let g = load(input)?;
            let cert = certify(&g, *cap)?;
            if json {
                return done(to_json(&cert));
            }
            match (&cert.word, &cert.witness) {
                (Some(w), _) => done(format!("{}\n", w.render())),
                (None, Some(wit)) => {
                    let embedding: Vec<String> = wit.embedding.iter().map(|&v| wit.member.label(v)).collect();
                    done(format!(
                        "not a circle graph: orbit member {} contains {} on [{}]\n",
                        to_graph6(&wit.member),
                        wit.obstruction,
                        embedding.join(" ")
                    ))
                }
                (None, None) => done("not a circle graph\n".into()),
            }
        }
        Command::Lc { input, vertex } => {
            let g = load(input)?;
            let v = find_vertex(&g, vertex)?;
            done(render_graph(&g.local_complement(v)?, json))
        }
        Command::Twins { input } => {
            let g = load(input)?;
            let pairs = g.twin_pairs();
            let couples = g.disjoint_twin_pair_couples();
            if json {
                #[derive(Serialize)]
                struct Twins<'a> {
                    pairs: &'a [circle_core::TwinPair],
                    disjoint_couples: usize,
                    two_disjoint_pairs: bool,
                }
                return done(to_json(&Twins { pairs: &pairs, disjoint_couples: couples, two_disjoint_pairs: couples > 0 }));
            }
            let mut s = String::new();
            for t in &pairs {
                let kind = if t.adjacent { "adjacent" } else { "non-adjacent" };
                let _ = writeln!(s, "{} {} {kind}", g.label(t.u), g.label(t.v));
            }
            let _ = writeln!(s, "disjoint couples: {couples}");
            done(s)
        }
        Command::Split { input, simple } => {
            let g = load(input)?;
            let splits = if *simple { simple_splits(&g)? } else { find_split(&g)?.into_iter().collect() };
            if json {
                return done(to_json(&splits));
            }
            if splits.is_empty() {
                return done(if *simple { "no simple splits\n".into() } else { "prime\n".into() });
            }
            let list = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
            let mut s = String::new();
            for sp in &splits {
                let _ = writeln!(
                    s,
                    "V1: {} | X1: {} | V2: {} | X2: {}",
                    list(&sp.v1),
                    list(&sp.x1),
                    list(&sp.v2),
                    list(&sp.x2)
                );
            }
            done(s)
        }
        Command::Orbit { input, cap } => {
            let g = load(input)?;
            let orbit = local_equivalence_orbit(&g, *cap)?;
            let members: Vec<String> = orbit.keys().iter().map(|k| to_graph6(&k.to_graph())).collect();
            if json {
                #[derive(Serialize)]
                struct Orbit {
                    size: usize,
                    members: Vec<String>,
                }
                return done(to_json(&Orbit { size: orbit.size(), members }));
            }
            let mut s = format!("{} classes\n", orbit.size());
            for m in members {
                s.push_str(&m);
                s.push('\n');
            }
            done(s)
        }
        Command::CycleWord { c } => {
            let w = cycle_word(*c)?;
            if json {
                return done(to_json(&w));
            }
            done(format!("{}\n", w.render()))
        }
        Command::Verify { property, n_max, long, c, csv } => verify(*property, *n_max, *long, *c, csv.as_ref(), json),
        Command::Enumerate { n, connected } => {
            let graphs = enumerate_cubic(*n, *connected)?;
            let lines: Vec<String> = graphs.iter().map(to_graph6).collect();
            if json {
                return done(to_json(&lines));
            }
            done(lines.iter().map(|l| format!("{l}\n")).collect())
        }
    }
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(value) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::new("BadWorkers", format!("{WORKERS_ENV}={value:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::new("BadWorkers", e.to_string()))
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = configure_workers().and_then(|_| run(&cli));
    match result {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome.text) {
                eprintln!("error: Io: {e}");
                return ExitCode::from(1);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}: {}", f.name, f.message);
            ExitCode::from(1)
        }
    }
}
