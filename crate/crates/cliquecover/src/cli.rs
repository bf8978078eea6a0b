//! The `cliquecover` command line.
//!
//! Exit codes: 0 when the property holds or the construction succeeded, 1
//! when it is refuted (the counterexample is printed), 2 for usage and input
//! errors, 3 when a cap or budget would be exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliquecover_core::construct::{self, CheckMode, LayeredGraph, Verdict};
use cliquecover_core::covers::{
    self, CoveringSystem, Engine, PipelineOptions, RealizationKind, RealizationMode, SmallSearch,
    SplitCertificate,
};
use cliquecover_core::{Error, Graph, Limits, VertexSet};
use serde_json::{json, Value};

use crate::formats::{self, DagJson, FormatError, GraphJson, LayeredJson, SystemJson};
use crate::parallel;

#[derive(Debug, Parser)]
#[command(name = "cliquecover", version, about = "Partition-robust graphs, residue-class covers and longest-path partitions")]
pub struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Direct,
    Ie,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Direct => Engine::Direct,
            EngineArg::Ie => Engine::InclusionExclusion,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RealizationArg {
    Search,
    Tower,
}

#[derive(Debug, Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "CLIQUECOVER_FORMAT")]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for parallel checks (default: one per core).
    #[arg(long, global = true, env = "CLIQUECOVER_THREADS", value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[command(flatten)]
    caps: Caps,
}

fn defaults() -> Limits {
    Limits::default()
}

#[derive(Debug, Args)]
struct Caps {
    /// Vertex cap for the exact chromatic-number solver.
    #[arg(long, global = true, env = "CLIQUECOVER_CHROMATIC_CAP", default_value_t = defaults().chromatic_cap as u64, value_parser = clap::value_parser!(u64).range(1..))]
    chromatic_cap: u64,
    /// Vertex cap for longest-path enumeration.
    #[arg(long, global = true, env = "CLIQUECOVER_PATH_CAP", default_value_t = defaults().path_cap as u64, value_parser = clap::value_parser!(u64).range(1..))]
    path_cap: u64,
    /// Most partitions an exhaustive check may visit.
    #[arg(long, global = true, env = "CLIQUECOVER_EXHAUSTIVE_CAP", default_value_t = defaults().exhaustive_cap, value_parser = clap::value_parser!(u64).range(1..))]
    exhaustive_cap: u64,
    /// Most vertices `build` may produce.
    #[arg(long, global = true, env = "CLIQUECOVER_BUDGET", default_value_t = defaults().build_budget, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Class cap for inclusion-exclusion profiles.
    #[arg(long, global = true, env = "CLIQUECOVER_SUBSET_CAP", default_value_t = defaults().subset_cap as u64, value_parser = clap::value_parser!(u64).range(1..))]
    subset_cap: u64,
    /// Period cap for direct enumeration and completion.
    #[arg(long, global = true, env = "CLIQUECOVER_PERIOD_CAP", default_value_t = defaults().period_cap, value_parser = clap::value_parser!(u64).range(1..))]
    period_cap: u64,
    /// Placement budget for direct split searches.
    #[arg(long, global = true, env = "CLIQUECOVER_SPLIT_NODE_BUDGET", default_value_t = defaults().split_node_budget, value_parser = clap::value_parser!(u64).range(1..))]
    split_node_budget: u64,
    /// Class cap for inclusion-exclusion split searches.
    #[arg(long, global = true, env = "CLIQUECOVER_SPLIT_IE_CAP", default_value_t = defaults().split_ie_cap as u64, value_parser = clap::value_parser!(u64).range(1..))]
    split_ie_cap: u64,
    /// Vertex cap for the small-modulus realization search.
    #[arg(long, global = true, env = "CLIQUECOVER_SEARCH_VERTEX_CAP", default_value_t = defaults().search_vertex_cap as u64, value_parser = clap::value_parser!(u64).range(1..))]
    search_vertex_cap: u64,
    /// Vertex cap for the prime-tower realization inside the pipeline.
    #[arg(long, global = true, env = "CLIQUECOVER_TOWER_VERTEX_CAP", default_value_t = defaults().tower_vertex_cap as u64, value_parser = clap::value_parser!(u64).range(1..))]
    tower_vertex_cap: u64,
}

impl Caps {
    fn limits(&self) -> Limits {
        let us = |v: u64| usize::try_from(v).unwrap_or(usize::MAX);
        Limits {
            chromatic_cap: us(self.chromatic_cap),
            path_cap: us(self.path_cap),
            exhaustive_cap: self.exhaustive_cap,
            build_budget: self.budget,
            subset_cap: us(self.subset_cap),
            period_cap: self.period_cap,
            split_node_budget: self.split_node_budget,
            split_ie_cap: us(self.split_ie_cap),
            search_vertex_cap: us(self.search_vertex_cap),
            tower_vertex_cap: us(self.tower_vertex_cap),
        }
    }
}

/// Random sampling in place of exhaustive enumeration.
#[derive(Debug, Args)]
struct Sampling {
    /// Number of sampled cases; selects sampled mode.
    #[arg(long, requires = "seed")]
    trials: Option<u64>,
    /// Seed for sampled mode.
    #[arg(long)]
    seed: Option<u64>,
}

impl Sampling {
    fn mode(&self) -> CheckMode {
        match (self.trials, self.seed) {
            (Some(trials), Some(seed)) => CheckMode::Sampled { seed, trials },
            _ => CheckMode::Exhaustive,
        }
    }
}

/// Where a graph under test comes from: a file (graph or layered JSON) or a
/// fresh `build`.
#[derive(Debug, Args)]
struct Source {
    /// Graph file (text or JSON) or a layered-graph JSON file.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Build `G^(m)` instead of reading a file.
    #[arg(long)]
    m: Option<usize>,
    /// Number of parts.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Iterated Mycielskian of K2 or of an input graph.
    Mycielski {
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// How many times to apply the operator.
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Depth-first rooted acyclic orientation with longest-path layers.
    Orient {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Build the partition-robust graph G^(m) for k-partitions.
    Build {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Orientation JSON to use as the skeleton instead of the default.
        #[arg(long)]
        skeleton: Option<PathBuf>,
    },
    /// Check that every k-partition keeps a part with clique number `target`.
    CheckRobust {
        #[command(flatten)]
        source: Source,
        /// Clique size a part must reach (default: m).
        #[arg(long)]
        target: Option<usize>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Check omega(V1) + omega(V2) > omega(G) over 2-splits into nonempty parts.
    CheckZhang {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Find a monochromatic m-clique for given or sampled partitions.
    Witness {
        #[command(flatten)]
        source: Source,
        /// JSON file: the part of every vertex, or a list of parts.
        #[arg(long, conflicts_with_all = ["trials", "seed"])]
        partition: Option<PathBuf>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Prime-tower system whose intersection graph is the input graph.
    Realize {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Backtracking search for a small-modulus realization.
    SearchRealization {
        #[arg(short, long)]
        input: PathBuf,
        /// Moduli are divisors of this number.
        #[arg(long, default_value_t = SmallSearch::default().smooth)]
        smooth: u64,
        #[arg(long, default_value_t = SmallSearch::default().node_budget)]
        node_budget: u64,
    },
    /// Coverage profile: how many x in one period are covered j times.
    Profile {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
    },
    /// Append classes modulo the period to reach an exact m-cover.
    Complete {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Decide whether an exact m-cover is a union of two 1-covers.
    Irreducible {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Search for a split into an exact n-cover and an exact (m-n)-cover.
    SplitExact {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
    },
    /// Build an exact m-cover that is not a union of two 1-covers.
    Pipeline {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = RealizationArg::Search)]
        realization: RealizationArg,
        #[arg(long, default_value_t = SmallSearch::default().smooth)]
        smooth: u64,
        #[arg(long, default_value_t = SmallSearch::default().node_budget)]
        node_budget: u64,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Seed for any stage that falls back to sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Split off an independent set meeting every longest path.
    LpPartition {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Write(std::io::Error),
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Core(#[from] Error),
}

fn core_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Core(e) | Failure::Format(FormatError::Invalid(e)) => core_code(e),
            _ => 2,
        }
    }
}

struct Outcome {
    code: i32,
    json: Value,
    /// Text-mode rendering; `None` falls back to `key: value` lines.
    text: Option<String>,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { code: 0, json, text: None }
    }

    fn verdict(holds: bool, json: Value) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            json,
            text: None,
        }
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match cli.global.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Failure::Usage(format!("cannot start {t} threads: {e}"))),
        },
        None => dispatch(&cli),
    };
    let outcome = outcome.and_then(|o| emit(&cli.global, &o, stdout).map(|()| o.code));
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {f}");
            f.code()
        }
    }
}

fn emit(global: &Global, o: &Outcome, stdout: &mut dyn Write) -> Result<(), Failure> {
    let body = match (global.format, &o.text) {
        (Format::Json, _) => {
            let mut s = serde_json::to_string_pretty(&o.json).expect("values serialize");
            s.push('\n');
            s
        }
        (Format::Text, Some(t)) => t.clone(),
        (Format::Text, None) => key_values(&o.json),
    };
    match &global.output {
        Some(path) => std::fs::write(path, body).map_err(Failure::Write),
        None => stdout.write_all(body.as_bytes()).map_err(Failure::Write),
    }
}

fn key_values(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        other => format!("{other}\n"),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|source| Failure::Read {
            path: path.to_owned(),
            source,
        })?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|source| Failure::Read {
        path: path.to_owned(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(formats::parse_graph(&read(path)?)?)
}

fn read_system(path: &Path) -> Result<CoveringSystem, Failure> {
    Ok(formats::parse_system(&read(path)?)?)
}

enum Loaded {
    Layered(Box<LayeredGraph>),
    Plain(Graph),
}

impl Loaded {
    fn graph(&self) -> &Graph {
        match self {
            Loaded::Layered(lg) => lg.graph(),
            Loaded::Plain(g) => g,
        }
    }
}

fn load(source: &Source, limits: &Limits) -> Result<Loaded, Failure> {
    match (&source.input, source.m, source.k) {
        (Some(path), _, _) => {
            let text = read(path)?;
            let is_layered = serde_json::from_str::<Value>(&text)
                .ok()
                .is_some_and(|v| v.get("labels").is_some());
            if is_layered {
                Ok(Loaded::Layered(Box::new(formats::parse_layered(&text, limits)?)))
            } else {
                Ok(Loaded::Plain(formats::parse_graph(&text)?))
            }
        }
        (None, Some(m), Some(k)) => Ok(Loaded::Layered(Box::new(construct::build(m, k, limits)?))),
        _ => Err(Failure::Usage("give --input, or both --m and --k".into())),
    }
}

fn mode_json(mode: CheckMode) -> Value {
    match mode {
        CheckMode::Exhaustive => json!({ "mode": "exhaustive" }),
        CheckMode::Sampled { seed, trials } => json!({ "mode": "sampled", "seed": seed, "trials": trials }),
    }
}

fn verdict_json(mode: CheckMode, fields: Value, v: &Verdict) -> Value {
    let mut out = mode_json(mode);
    let map = out.as_object_mut().expect("object");
    if let Value::Object(f) = fields {
        map.extend(f);
    }
    map.insert("checked".into(), json!(v.checked));
    map.insert("holds".into(), json!(v.holds()));
    map.insert(
        "counterexample".into(),
        match &v.counterexample {
            None => Value::Null,
            Some(ce) => json!({
                "index": ce.index,
                "assignment": ce.assignment,
                "part_omegas": ce.part_omegas,
            }),
        },
    );
    out
}

fn split_json(s: &covers::Split) -> Value {
    json!({ "first": s.first, "second": s.second })
}

fn system_value(sys: &CoveringSystem) -> Value {
    serde_json::to_value(SystemJson::from(sys)).expect("serializable")
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let limits = cli.global.caps.limits();
    let limits = &limits;
    match &cli.command {
        Command::Mycielski { input, times } => {
            let mut g = match input {
                Some(p) => read_graph(p)?,
                None => Graph::complete(2),
            };
            for _ in 0..*times {
                g = g.mycielskian();
            }
            Ok(Outcome::ok(serde_json::to_value(GraphJson::from(&g)).expect("serializable"))
                .with_text(formats::graph_to_text(&g)))
        }
        Command::Orient { input, root } => {
            let g = read_graph(input)?;
            let d = cliquecover_core::orientation::orient_from_root(&g, *root)?;
            Ok(Outcome::ok(serde_json::to_value(DagJson::from(&d)).expect("serializable")))
        }
        Command::Build { m, k, skeleton } => {
            let lg = match skeleton {
                Some(p) => construct::build_with_skeleton(*m, *k, formats::parse_dag(&read(p)?)?, limits)?,
                None => construct::build(*m, *k, limits)?,
            };
            Ok(Outcome::ok(serde_json::to_value(LayeredJson::from(&lg)).expect("serializable"))
                .with_text(formats::graph_to_text(lg.graph())))
        }
        Command::CheckRobust { source, target, sampling } => {
            let loaded = load(source, limits)?;
            let (target, k) = match &loaded {
                Loaded::Layered(lg) => (target.unwrap_or(lg.m()), source.k.unwrap_or(lg.k())),
                Loaded::Plain(_) => match (target, source.k) {
                    (Some(t), Some(k)) => (*t, k),
                    _ => return Err(Failure::Usage("a plain graph needs --target and --k".into())),
                },
            };
            let mode = sampling.mode();
            let v = parallel::check_robustness(loaded.graph(), target, k, mode, limits)?;
            let fields = json!({ "n": loaded.graph().n(), "k": k, "target": target });
            Ok(Outcome::verdict(v.holds(), verdict_json(mode, fields, &v)))
        }
        Command::CheckZhang { source, sampling } => {
            let loaded = load(source, limits)?;
            let mode = sampling.mode();
            let v = construct::check_zhang_inequality(loaded.graph(), mode, limits)?;
            let omega = cliquecover_core::clique::clique_number(loaded.graph()).0;
            let fields = json!({ "n": loaded.graph().n(), "omega": omega });
            Ok(Outcome::verdict(v.holds(), verdict_json(mode, fields, &v)))
        }
        Command::Witness { source, partition, sampling } => {
            let Loaded::Layered(lg) = load(source, limits)? else {
                return Err(Failure::Usage("witness needs a layered graph (--m/--k or build output)".into()));
            };
            if let Some(path) = partition {
                let parsed: Value = serde_json::from_str(&read(path)?).map_err(FormatError::from)?;
                let w = match parsed {
                    Value::Array(items) if items.iter().all(Value::is_array) => {
                        let parts: Vec<Vec<usize>> = serde_json::from_value(Value::Array(items)).map_err(FormatError::from)?;
                        let sets = parts
                            .into_iter()
                            .map(|p| VertexSet::from_vertices(lg.graph().n(), p))
                            .collect::<Result<Vec<_>, _>>()?;
                        lg.extract_witness(&sets)?
                    }
                    other => {
                        let a: Vec<usize> = serde_json::from_value(other).map_err(FormatError::from)?;
                        lg.extract_witness_assignment(&a)?
                    }
                };
                return Ok(Outcome::ok(json!({ "part": w.part, "clique": w.clique })));
            }
            let (Some(seed), Some(trials)) = (sampling.seed, sampling.trials) else {
                return Err(Failure::Usage("give --partition, or --seed with --trials".into()));
            };
            let ws = parallel::sampled_witnesses(&lg, seed, trials)?;
            let list: Vec<Value> = ws
                .iter()
                .enumerate()
                .map(|(t, w)| json!({ "trial": t, "part": w.part, "clique": w.clique }))
                .collect();
            Ok(Outcome::ok(json!({ "mode": "sampled", "seed": seed, "trials": trials, "witnesses": list })))
        }
        Command::Realize { input } => {
            let sys = covers::realize(&read_graph(input)?)?;
            Ok(Outcome::ok(system_value(&sys)).with_text(formats::system_to_text(&sys)))
        }
        Command::SearchRealization { input, smooth, node_budget } => {
            let g = read_graph(input)?;
            let params = SmallSearch {
                smooth: *smooth,
                node_budget: *node_budget,
            };
            match covers::search_small_realization(&g, params, limits)? {
                Some(sys) => Ok(Outcome::ok(system_value(&sys)).with_text(formats::system_to_text(&sys))),
                None => Ok(Outcome::verdict(
                    false,
                    json!({ "found": false, "smooth": smooth, "node_budget": node_budget }),
                )),
            }
        }
        Command::Profile { input, engine } => {
            let sys = read_system(input)?;
            let p = covers::coverage_profile(&sys, (*engine).into(), limits)?;
            Ok(Outcome::ok(json!({
                "N": p.period.to_string(),
                "exact": p.exact_multiplicity(),
                "min_w": p.min_w,
                "max_w": p.max_w,
                "counts": p.counts.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })))
        }
        Command::Complete { input, m } => {
            let sys = read_system(input)?;
            let added = covers::completion_count(&sys, *m)?;
            match covers::complete_to_exact(&sys, *m, limits) {
                Ok(c) => {
                    let mut out = json!({ "N": sys.period().to_string(), "added": added.to_string() });
                    out.as_object_mut()
                        .expect("object")
                        .extend(system_value(&c.system).as_object().expect("object").clone());
                    Ok(Outcome::ok(out).with_text(formats::system_to_text(&c.system)))
                }
                Err(e) if e.is_budget() => Ok(Outcome {
                    code: 3,
                    json: json!({
                        "N": sys.period().to_string(),
                        "added": added.to_string(),
                        "materialized": false,
                        "reason": e.to_string(),
                    }),
                    text: None,
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Irreducible { input, m, engine, sampling } => {
            let sys = read_system(input)?;
            let engine: Engine = (*engine).into();
            let profile = covers::coverage_profile(&sys, engine, limits)?;
            if !profile.is_exact(*m) {
                return Err(Error::Precondition(format!(
                    "not an exact {m}-cover (w ranges over {}..={})",
                    profile.min_w, profile.max_w
                ))
                .into());
            }
            let mode = sampling.mode();
            let (head, split) = match mode {
                CheckMode::Exhaustive => {
                    let split = covers::union_of_two_1covers(&sys, engine, limits)?;
                    let total = (num_bigint::BigUint::from(1u8) << (sys.len() - 1)) - 1u8;
                    (json!({ "mode": "exhaustive", "splits": total.to_string() }), split)
                }
                CheckMode::Sampled { seed, trials } => {
                    let found = covers::sample_two_1cover_splits(&sys, seed, trials, engine, limits)?;
                    (mode_json(mode), found.map(|(_, s)| s))
                }
            };
            let mut out = json!({ "N": profile.period.to_string(), "m": m });
            let map = out.as_object_mut().expect("object");
            map.extend(head.as_object().expect("object").clone());
            map.insert("split".into(), split.as_ref().map_or(Value::Null, split_json));
            Ok(Outcome::verdict(split.is_none(), out))
        }
        Command::SplitExact { input, m, engine } => {
            let sys = read_system(input)?;
            let found = covers::split_into_exact_covers(&sys, *m, (*engine).into(), limits)?;
            let split = found.as_ref().map_or(Value::Null, |e| {
                json!({ "n": e.n, "first": e.split.first, "second": e.split.second })
            });
            Ok(Outcome::verdict(found.is_none(), json!({ "m": m, "split": split })))
        }
        Command::Pipeline {
            m,
            realization,
            smooth,
            node_budget,
            engine,
            seed,
            trials,
        } => {
            let opts = PipelineOptions {
                m: *m,
                realization: match realization {
                    RealizationArg::Search => RealizationMode::Search,
                    RealizationArg::Tower => RealizationMode::Tower,
                },
                search: SmallSearch {
                    smooth: *smooth,
                    node_budget: *node_budget,
                },
                engine: (*engine).into(),
                seed: *seed,
                trials: *trials,
            };
            let r = covers::irreducible_cover_pipeline(&opts, limits)?;
            let split_search = match &r.split_search {
                None => Value::Null,
                Some(SplitCertificate::Exhaustive { splits }) => {
                    json!({ "mode": "exhaustive", "splits": splits.to_string() })
                }
                Some(SplitCertificate::Sampled { seed, trials, reason }) => {
                    json!({ "mode": "sampled", "seed": seed, "trials": trials, "reason": reason })
                }
            };
            let mut clique_side = json!({
                "mode": if r.clique_side_exhaustive { "exhaustive" } else { "sampled" },
                "checked": r.clique_side.checked,
            });
            if !r.clique_side_exhaustive {
                clique_side["seed"] = json!(seed);
            }
            Ok(Outcome::ok(json!({
                "m": r.m,
                "graph_vertices": r.graph.graph().n(),
                "realization": match r.realization {
                    RealizationKind::SmallModulus => "small-modulus",
                    RealizationKind::Tower => "tower",
                },
                "system": system_value(&r.system)["classes"],
                "N": r.period.to_string(),
                "omega": r.omega,
                "max_w": r.max_w,
                "added": r.added.to_string(),
                "completion": r.completion.as_ref().map_or(Value::Null, |b| system_value(b)["classes"].clone()),
                "split_search": split_search,
                "clique_side": clique_side,
                "notes": r.notes,
            })))
        }
        Command::LpPartition { input } => {
            let g = read_graph(input)?;
            let r = cliquecover_core::lp_partition::lp_partition(&g, limits.path_cap)?;
            Ok(Outcome::ok(json!({
                "v1": r.v1.to_vec(),
                "v2": r.v2.to_vec(),
                "l_before": r.l_before,
                "l_after": r.l_after,
                "paths": r.paths,
            })))
        }
    }
}
