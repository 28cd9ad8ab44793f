//! Command-line front end: connectivity reports, exact and certified Frank
//! numbers, deletability queries, well-balanced orientations, the NAE-3SAT
//! reduction and a verifier for every artifact it writes.
//!
//! Exit codes: 0 success, 1 usage, input or precondition error, 2 undecided
//! within the search limits.

mod input;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frankcert_core::exact::{
    deletability_decide, frank_lower_bound, frank_number_exact, verify_certificate, CertificateJson, DecideOutcome,
    ExactError, FrankCertificate, SolveLimits,
};
use frankcert_core::multigraph::io::{GraphCap, GraphJson};
use frankcert_core::multigraph::{EdgeId, GraphError, Multigraph, VertexId, CORPUS};
use frankcert_core::orientation::{is_well_balanced, well_balanced_orientation, BalanceLimits, Orientation, OrientationError};
use frankcert_core::pipelines::{certify_bf5, certify_color3, certify_esse4, certify_upper7, PipelineError, PipelineReport};
use frankcert_core::reduction::{
    assignment_to_orientation, build_gadget, decompose_connected, orientation_to_assignment, parse_formula, preprocess,
    ReductionError,
};
use input::{load_graph, parse_assignment, parse_edge_set, read_text, Loaded};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::sync::Arc;
use std::time::Duration;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("undecided within limits: {0}")]
    Indeterminate(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error(transparent)]
    Exact(ExactError),
    #[error(transparent)]
    Pipeline(PipelineError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::TooLarge { .. } | ExactError::TooManyVertices(_) => CliError::Indeterminate(e.to_string()),
            ExactError::NotThreeEdgeConnected(_) | ExactError::NotConnected => CliError::Precondition(e.to_string()),
            other => CliError::Exact(other),
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Indeterminate(why) => CliError::Indeterminate(why),
            PipelineError::Precondition(_) | PipelineError::NotColorable | PipelineError::NoDoubleCover => {
                CliError::Precondition(e.to_string())
            }
            other => CliError::Pipeline(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Indeterminate(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "frankcert", version, about = "Certified orientations of 3-edge-connected multigraphs")]
pub struct Cli {
    /// Standard output format: a readable summary or the JSON artifact.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: Format,
    /// Also write the JSON artifact to this file.
    #[arg(short, long, global = true)]
    pub output: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Search nodes the backtracking solver may visit.
    #[arg(long)]
    pub node_budget: Option<u64>,
    /// Wall-clock limit in milliseconds; results may then depend on timing.
    #[arg(long)]
    pub time_budget_ms: Option<u64>,
    /// Largest number of edges enumerated exhaustively.
    #[arg(long)]
    pub max_enum_edges: Option<usize>,
}

impl LimitArgs {
    fn limits(&self) -> SolveLimits {
        let mut l = SolveLimits::default();
        if let Some(n) = self.node_budget {
            l.node_budget = n;
        }
        if let Some(ms) = self.time_budget_ms {
            l.time_budget = Some(Duration::from_millis(ms));
        }
        if let Some(m) = self.max_enum_edges {
            l.max_enum_edges = m;
        }
        l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    /// At most 7 orientations, any 3-edge-connected graph.
    #[value(alias = "upper7")]
    Seven,
    /// At most 3, cubic 3-edge-colorable graphs.
    Color3,
    /// At most 5, cubic graphs with a Berge-Fulkerson cover.
    Bf5,
    /// At most 3, essentially 4-edge-connected graphs.
    Esse4,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Edge-connectivity and essential 4-edge-connectivity report.
    Connectivity { graph: String },
    /// Frank number: exact search or a certified upper-bound construction.
    Frank {
        graph: String,
        #[arg(long, conflicts_with = "pipeline", required_unless_present = "pipeline")]
        exact: bool,
        #[arg(long, value_enum)]
        pipeline: Option<Pipeline>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Whether some orientation makes every edge of a set deletable.
    Deletable {
        graph: String,
        /// Edge ids like `0,4,e7`, or `S` for the set of a gadget file.
        #[arg(long)]
        set: String,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// A well-balanced orientation.
    Orient {
        graph: String,
        #[arg(long, required = true)]
        well_balanced: bool,
    },
    /// Builds the deletability gadget of a formula.
    Reduce {
        #[command(subcommand)]
        problem: ReduceProblem,
    },
    /// Carries an assignment to an orientation of a gadget, or back.
    Map {
        gadget: String,
        /// Truth values as `1100` or `x1=1,x2=0,...`.
        #[arg(long, conflicts_with = "to_assignment", required_unless_present = "to_assignment")]
        to_orientation: Option<String>,
        /// Orientation JSON file of the gadget graph.
        #[arg(long)]
        to_assignment: Option<String>,
    },
    /// Re-checks a certificate, pipeline report or orientation file.
    Verify {
        file: String,
        /// Graph to check against when the file does not embed one.
        #[arg(long)]
        graph: Option<String>,
        /// For an orientation: edges that must be deletable.
        #[arg(long)]
        set: Option<String>,
    },
    /// Lists the named graphs, or prints one.
    Corpus { name: Option<String> },
}

#[derive(Debug, Subcommand)]
pub enum ReduceProblem {
    /// Monotone not-all-equal 3-SAT, one clause of three variables per line.
    Nae3sat {
        formula: String,
        /// Which connected part to build after preprocessing.
        #[arg(long, default_value_t = 0)]
        part: usize,
    },
}

/// An artifact plus its one-paragraph summary.
struct Outcome {
    artifact: Value,
    summary: String,
}

#[derive(Serialize)]
struct OrientationFile {
    graph: GraphJson,
    tails: BTreeMap<EdgeId, VertexId>,
}

fn orientation_json(d: &Orientation) -> Value {
    serde_json::to_value(OrientationFile {
        graph: GraphJson::from(d.graph()),
        tails: d.tails(),
    })
    .expect("orientation serializes")
}

fn ids<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Runs one invocation, writing to the given streams; returns the exit code.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let pretty = serde_json::to_string_pretty(&o.artifact).expect("artifact serializes") + "\n";
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &pretty) {
                    let _ = writeln!(err, "error: {path}: {e}");
                    return 1;
                }
            }
            let shown = match cli.format {
                Format::Json => pretty,
                Format::Text => o.summary,
            };
            let _ = out.write_all(shown.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs one invocation against the process streams.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cap = GraphCap::default();
    match &cli.command {
        Command::Connectivity { graph } => connectivity(&load_graph(graph, cap)?.graph),
        Command::Frank {
            graph,
            exact,
            pipeline,
            limits,
        } => {
            let g = load_graph(graph, cap)?.graph;
            if *exact {
                frank_exact(&g, &limits.limits())
            } else {
                frank_pipeline(&g, pipeline.expect("clap requires one of the two"), &limits.limits())
            }
        }
        Command::Deletable { graph, set, limits } => {
            let loaded = load_graph(graph, cap)?;
            let s = parse_edge_set(set, &loaded)?;
            deletable(&loaded.graph, &s, &limits.limits())
        }
        Command::Orient { graph, .. } => orient(&load_graph(graph, cap)?.graph),
        Command::Reduce {
            problem: ReduceProblem::Nae3sat { formula, part },
        } => reduce(&read_text(formula)?, *part),
        Command::Map {
            gadget,
            to_orientation,
            to_assignment,
        } => {
            let loaded = load_graph(gadget, cap)?;
            let inst = loaded
                .gadget
                .ok_or_else(|| CliError::Usage("map needs a gadget file written by `reduce`".into()))?;
            match (to_orientation, to_assignment) {
                (Some(a), _) => {
                    let a = parse_assignment(a, &inst.formula)?;
                    let d = assignment_to_orientation(&inst, &a)?;
                    if !d.is_deletable_set(inst.s()) {
                        return Err(CliError::Verification("S is not deletable".into()));
                    }
                    Ok(Outcome {
                        summary: format!(
                            "orientation of the {}-edge gadget with all {} edges of S deletable (verified)\n",
                            inst.graph.edge_count(),
                            inst.s().len()
                        ),
                        artifact: orientation_json(&d),
                    })
                }
                (None, Some(path)) => {
                    let d = load_orientation(&read_text(path)?, &inst.graph)?;
                    let a = orientation_to_assignment(&inst, &d)?;
                    let named: BTreeMap<&str, bool> =
                        inst.formula.variables.iter().map(String::as_str).zip(a.iter().copied()).collect();
                    let listing: Vec<String> = inst
                        .formula
                        .variables
                        .iter()
                        .zip(&a)
                        .map(|(v, &b)| format!("{v}={}", u8::from(b)))
                        .collect();
                    Ok(Outcome {
                        summary: format!("feasible assignment (verified): {}\n", listing.join(" ")),
                        artifact: json!({ "assignment": named, "feasible": true }),
                    })
                }
                (None, None) => unreachable!("clap requires one of the two"),
            }
        }
        Command::Verify { file, graph, set } => verify(file, graph.as_deref(), set.as_deref(), cap),
        Command::Corpus { name } => corpus(name.as_deref()),
    }
}

fn connectivity(g: &Multigraph) -> Result<Outcome, CliError> {
    let lambda = if g.vertex_count() < 2 { 0 } else { g.edge_connectivity()? };
    let three = lambda >= 3;
    let essential = three && g.is_essentially_4ec();
    let cut = if three && !essential { g.find_nontrivial_3_cut() } else { None };
    let bridges = g.bridges();
    let mut summary = format!(
        "{} vertices, {} edges\nedge-connectivity: {lambda}\ncubic: {}\n",
        g.vertex_count(),
        g.edge_count(),
        g.is_cubic()
    );
    if three {
        summary += &format!("essentially 4-edge-connected: {essential}\n");
    } else {
        summary += "not 3-edge-connected\n";
    }
    if let Some(x) = &cut {
        summary += &format!("3-edge-cut isolating more than one vertex on each side: {{{}}}\n", ids(x));
    }
    Ok(Outcome {
        artifact: json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "edge_connectivity": lambda,
            "cubic": g.is_cubic(),
            "three_edge_connected": three,
            "essentially_4_edge_connected": essential,
            "nontrivial_3_cut_side": cut,
            "bridges": bridges,
        }),
        summary,
    })
}

fn checked_certificate(g: &Multigraph, cert: &FrankCertificate) -> Result<(), CliError> {
    let check = verify_certificate(g, cert)?;
    if !check.ok {
        return Err(CliError::Verification(format!("uncovered edges {{{}}}", ids(&check.uncovered))));
    }
    Ok(())
}

fn frank_exact(g: &Arc<Multigraph>, limits: &SolveLimits) -> Result<Outcome, CliError> {
    let lower = frank_lower_bound(g)?;
    let r = frank_number_exact(g, limits)?;
    checked_certificate(g, &r.certificate)?;
    let summary = format!(
        "f = {}\nlower bound from 3-edge-cuts: {lower}\n{} strongly connected orientations up to reversal, {} distinct deletable sets, {} maximal\ncertificate verified: {} orientations cover all {} edges\n",
        r.value,
        r.strong_orientations,
        r.distinct_sets,
        r.maximal_sets,
        r.certificate.len(),
        g.edge_count()
    );
    Ok(Outcome {
        artifact: json!({
            "graph": GraphJson::from(&**g),
            "frank_number": r.value,
            "lower_bound": lower,
            "strong_orientations": r.strong_orientations,
            "distinct_sets": r.distinct_sets,
            "maximal_sets": r.maximal_sets,
            "certificate": r.certificate.to_json(),
            "verified": true,
        }),
        summary,
    })
}

fn frank_pipeline(g: &Arc<Multigraph>, which: Pipeline, limits: &SolveLimits) -> Result<Outcome, CliError> {
    let (report, bound, class): (PipelineReport, usize, &str) = match which {
        Pipeline::Seven => (certify_upper7(g)?, 7, "3-edge-connected graphs"),
        Pipeline::Color3 => (certify_color3(g)?, 3, "cubic 3-edge-colorable 3-edge-connected graphs"),
        Pipeline::Bf5 => (certify_bf5(g, limits)?, 5, "cubic graphs with a Berge-Fulkerson cover"),
        Pipeline::Esse4 => (certify_esse4(g)?, 3, "essentially 4-edge-connected graphs"),
    };
    checked_certificate(g, &report.certificate)?;
    let mut summary = format!(
        "f <= {} via the {} construction (bound {bound} for {class})\ncertificate verified: {} orientations cover all {} edges\n",
        report.len(),
        report.pipeline,
        report.len(),
        g.edge_count()
    );
    for (i, p) in report.provenance.iter().enumerate() {
        summary += &format!("  [{i}] {p}\n");
    }
    let mut artifact = serde_json::to_value(report.to_json()).expect("report serializes");
    artifact["graph"] = serde_json::to_value(GraphJson::from(&**g)).expect("graph serializes");
    artifact["verified"] = json!(true);
    Ok(Outcome { artifact, summary })
}

fn deletable(g: &Arc<Multigraph>, s: &BTreeSet<EdgeId>, limits: &SolveLimits) -> Result<Outcome, CliError> {
    match deletability_decide(g, s, limits)? {
        DecideOutcome::Yes(d) => {
            if !d.is_deletable_set(s) {
                return Err(CliError::Verification("returned orientation does not make the set deletable".into()));
            }
            let mut artifact = orientation_json(&d);
            artifact["deletable"] = json!(true);
            artifact["set"] = json!(s);
            Ok(Outcome {
                summary: format!("deletable: yes; orientation found and verified for {} edges\n", s.len()),
                artifact,
            })
        }
        DecideOutcome::No => Ok(Outcome {
            summary: format!("deletable: no orientation makes these {} edges deletable\n", s.len()),
            artifact: json!({ "graph": GraphJson::from(&**g), "deletable": false, "set": s }),
        }),
        DecideOutcome::Indeterminate(why) => Err(CliError::Indeterminate(why)),
    }
}

fn orient(g: &Arc<Multigraph>) -> Result<Outcome, CliError> {
    let d = well_balanced_orientation(g.clone(), BalanceLimits::default())?;
    if !is_well_balanced(&d) {
        return Err(CliError::Verification("orientation is not well-balanced".into()));
    }
    Ok(Outcome {
        summary: format!(
            "well-balanced orientation of {} edges (verified over all vertex pairs)\n",
            g.edge_count()
        ),
        artifact: orientation_json(&d),
    })
}

fn reduce(text: &str, part: usize) -> Result<Outcome, CliError> {
    let f = parse_formula(text)?;
    let pre = preprocess(&f);
    let parts = decompose_connected(&pre);
    if parts.is_empty() {
        return Err(CliError::Precondition(
            "preprocessing removed every clause; the formula is feasible and has no gadget".into(),
        ));
    }
    let chosen = parts.get(part).ok_or_else(|| {
        CliError::Usage(format!("--part {part} out of range; the formula has {} connected parts", parts.len()))
    })?;
    let inst = build_gadget(chosen)?;
    inst.check_structure()?;
    let l = &inst.labels;
    let summary = format!(
        "{} clauses, {} variables read; {} clauses in {} connected part(s) after preprocessing\ngadget for part {part}: {} vertices, {} edges, cubic, 3-edge-connected\nvariable cycle lengths: {}\nclause cycle length: {}\n|S| = {}\n",
        f.clause_count(),
        f.variable_count(),
        pre.clause_count(),
        parts.len(),
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        ids(l.variable_cycles.iter().map(|c| format!("{}:{}", c.variable, c.edges.len()))),
        l.clause_cycle.edges.len(),
        inst.s().len()
    );
    Ok(Outcome {
        artifact: serde_json::to_value(inst.to_json()).expect("gadget serializes"),
        summary,
    })
}

/// An orientation file `{graph?, tails}` read against `g`.
fn load_orientation(text: &str, g: &Arc<Multigraph>) -> Result<Orientation, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    orientation_from_value(&value, g)
}

fn orientation_from_value(value: &Value, g: &Arc<Multigraph>) -> Result<Orientation, CliError> {
    if let Some(embedded) = value.get("graph") {
        let j: GraphJson = serde_json::from_value(embedded.clone()).map_err(|e| CliError::Input(e.to_string()))?;
        if j != GraphJson::from(&**g) {
            return Err(CliError::Input("orientation belongs to a different graph".into()));
        }
    }
    let tails: BTreeMap<EdgeId, VertexId> = serde_json::from_value(
        value
            .get("tails")
            .cloned()
            .ok_or_else(|| CliError::Input("no tails field".into()))?,
    )
    .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(Orientation::from_tails(g.clone(), &tails)?)
}

fn verify(file: &str, graph: Option<&str>, set: Option<&str>, cap: GraphCap) -> Result<Outcome, CliError> {
    let text = read_text(file)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Input(e.to_string()))?;
    let loaded = match graph {
        Some(source) => load_graph(source, cap)?,
        None => {
            let embedded = value
                .get("graph")
                .ok_or_else(|| CliError::Usage("file embeds no graph; pass --graph".into()))?;
            input::parse_graph_text(&embedded.to_string(), cap)?
        }
    };
    let Loaded { graph: g, .. } = &loaded;
    let cert_value = value
        .get("certificate")
        .cloned()
        .or_else(|| value.get("cover").map(|_| value.clone()));
    if let Some(cv) = cert_value {
        let cj: CertificateJson = serde_json::from_value(cv).map_err(|e| CliError::Input(e.to_string()))?;
        let cert = FrankCertificate::from_json(g.clone(), &cj)?;
        checked_certificate(g, &cert)?;
        return Ok(Outcome {
            summary: format!(
                "certificate verified: {} orientations cover all {} edges, so f <= {}\n",
                cert.len(),
                g.edge_count(),
                cert.len()
            ),
            artifact: json!({ "kind": "certificate", "verified": true, "orientations": cert.len() }),
        });
    }
    let d = orientation_from_value(&value, g)?;
    if !d.is_strongly_connected() {
        return Err(CliError::Verification("orientation is not strongly connected".into()));
    }
    let deletable = d.deletable_arcs()?;
    if let Some(set) = set {
        let s = parse_edge_set(set, &loaded)?;
        if !d.is_deletable_set(&s) {
            let missing: Vec<EdgeId> = s.difference(&deletable).copied().collect();
            return Err(CliError::Verification(format!("edges {{{}}} are not deletable", ids(missing))));
        }
    }
    Ok(Outcome {
        summary: format!(
            "orientation verified: strongly connected, {} of {} edges deletable\n",
            deletable.len(),
            g.edge_count()
        ),
        artifact: json!({ "kind": "orientation", "verified": true, "deletable_arcs": deletable }),
    })
}

fn corpus(name: Option<&str>) -> Result<Outcome, CliError> {
    match name {
        None => {
            let summary = CORPUS.iter().map(|(n, d)| format!("{n:<22} {d}\n")).collect();
            let artifact = CORPUS.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect();
            Ok(Outcome {
                artifact: Value::Array(artifact),
                summary,
            })
        }
        Some(n) => {
            let g = frankcert_core::multigraph::named_graph(n.strip_prefix("corpus:").unwrap_or(n))?;
            Ok(Outcome {
                summary: frankcert_core::multigraph::io::to_edge_list(&g),
                artifact: serde_json::to_value(GraphJson::from(&g)).expect("graph serializes"),
            })
        }
    }
}
