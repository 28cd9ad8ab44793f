//! Reading graphs, gadgets, edge sets and assignments from the command line.

use crate::CliError;
use frankcert_core::multigraph::io::{parse_edge_list, parse_graph6, GraphCap, GraphJson};
use frankcert_core::multigraph::{named_graph, EdgeId, Multigraph};
use frankcert_core::reduction::{GadgetInstance, GadgetJson, NaeFormula};
use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

/// A loaded graph and, when the input was a gadget file, its labels.
pub struct Loaded {
    pub graph: Arc<Multigraph>,
    pub gadget: Option<GadgetInstance>,
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

/// `corpus:NAME`, or a file holding an edge list, graph6, graph JSON or
/// gadget JSON.
pub fn load_graph(source: &str, cap: GraphCap) -> Result<Loaded, CliError> {
    if let Some(name) = source.strip_prefix("corpus:") {
        return Ok(Loaded {
            graph: Arc::new(named_graph(name)?),
            gadget: None,
        });
    }
    let text = read_text(source)?;
    parse_graph_text(&text, cap)
}

pub fn parse_graph_text(text: &str, cap: GraphCap) -> Result<Loaded, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(trimmed).map_err(|e| CliError::Input(e.to_string()))?;
        if value.get("labels").is_some() {
            let j: GadgetJson = serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
            let inst = GadgetInstance::from_json(&j)?;
            return Ok(Loaded {
                graph: inst.graph.clone(),
                gadget: Some(inst),
            });
        }
        let inner = value.get("graph").cloned().unwrap_or(value);
        let j: GraphJson = serde_json::from_value(inner).map_err(|e| CliError::Input(e.to_string()))?;
        let g = Multigraph::try_from(j)?;
        cap.check(&g).map_err(|e| CliError::Input(e.to_string()))?;
        return Ok(Loaded {
            graph: Arc::new(g),
            gadget: None,
        });
    }
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let g = if lines.len() == 1 && !lines[0].contains(char::is_whitespace) {
        parse_graph6(lines[0], cap)
    } else {
        parse_edge_list(text, cap)
    }
    .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(Loaded {
        graph: Arc::new(g),
        gadget: None,
    })
}

/// Edge ids such as `0,3,e7`, or `S` for the labeled set of a gadget.
pub fn parse_edge_set(text: &str, loaded: &Loaded) -> Result<BTreeSet<EdgeId>, CliError> {
    if text.trim() == "S" {
        return loaded
            .gadget
            .as_ref()
            .map(|g| g.s().clone())
            .ok_or_else(|| CliError::Usage("--set S needs a gadget file as input".into()));
    }
    let mut out = BTreeSet::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let digits = tok.strip_prefix('e').unwrap_or(tok);
        let id: u32 = digits
            .parse()
            .map_err(|_| CliError::Usage(format!("{tok:?} is not an edge id")))?;
        let e = EdgeId(id);
        if !loaded.graph.contains_edge(e) {
            return Err(CliError::Usage(format!("graph has no edge {e}")));
        }
        out.insert(e);
    }
    Ok(out)
}

fn parse_bool(tok: &str) -> Option<bool> {
    match tok {
        "1" | "t" | "true" | "T" | "True" => Some(true),
        "0" | "f" | "false" | "F" | "False" => Some(false),
        _ => None,
    }
}

/// Either a string of `0`/`1` digits in variable order or `name=value`
/// pairs naming every variable.
pub fn parse_assignment(text: &str, f: &NaeFormula) -> Result<Vec<bool>, CliError> {
    let text = text.trim();
    let bad = |msg: String| CliError::Usage(msg);
    if !text.contains('=') {
        let a: Vec<bool> = text
            .chars()
            .map(|c| parse_bool(&c.to_string()).ok_or_else(|| bad(format!("{c:?} is not 0 or 1"))))
            .collect::<Result<_, _>>()?;
        if a.len() != f.variable_count() {
            return Err(bad(format!("{} values given for {} variables", a.len(), f.variable_count())));
        }
        return Ok(a);
    }
    let mut a: Vec<Option<bool>> = vec![None; f.variable_count()];
    for pair in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let (name, value) = pair.split_once('=').ok_or_else(|| bad(format!("{pair:?} is not name=value")))?;
        let x = f
            .variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| bad(format!("unknown variable {name}")))?;
        a[x] = Some(parse_bool(value).ok_or_else(|| bad(format!("{value:?} is not a truth value")))?);
    }
    a.into_iter()
        .enumerate()
        .map(|(x, v)| v.ok_or_else(|| bad(format!("no value for {}", f.variables[x]))))
        .collect()
}
