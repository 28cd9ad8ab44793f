use super::formula::{Assignment, NaeFormula};
use super::{ReductionError, Result};
use crate::multigraph::io::GraphJson;
use crate::multigraph::{Edge, EdgeId, Multigraph, VertexId};
use crate::orientation::Orientation;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// The even cycle of one variable. `vertices` and `edges` run around the
/// cycle, edge `k` joining vertex `k` to vertex `k + 1`; `a` holds the even
/// positions (including the lowest label) and `b` the odd ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableCycle {
    pub variable: String,
    pub occurrences: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GadgetLabels {
    pub variable_cycles: Vec<VariableCycle>,
    pub clause_vertices: Vec<VertexId>,
    pub clause_cycle: ClauseCycle,
    #[serde(rename = "S")]
    pub s: BTreeSet<EdgeId>,
}

/// A deletability instance `(g, S)` built from a connected formula.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub formula: NaeFormula,
    pub graph: Arc<Multigraph>,
    pub labels: GadgetLabels,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetJson {
    pub formula: NaeFormula,
    pub graph: GraphJson,
    pub labels: GadgetLabels,
}

/// Builds the cubic instance: an even cycle per variable with one side
/// matched to that variable's clause vertices, a single cycle `K` through
/// `3|C|` vertices matched to the other sides, and `S` the variable-cycle
/// edges. Needs a preprocessed, connected, nonempty formula.
pub fn build_gadget(f: &NaeFormula) -> Result<GadgetInstance> {
    if f.is_empty() {
        return Err(ReductionError::Precondition("formula has no clauses".into()));
    }
    let occ = f.occurrences();
    if let Some(x) = (0..occ.len()).find(|&x| occ[x].len() < 2) {
        return Err(ReductionError::Precondition(format!(
            "variable {} occurs in fewer than 2 clauses; preprocess first",
            f.variables[x]
        )));
    }
    if super::decompose_connected(f).len() != 1 {
        return Err(ReductionError::Precondition("formula is not connected".into()));
    }

    let mut next_v = 0u32;
    let mut next_e = 0u32;
    let mut edges = Vec::new();
    let mut add_edge = |edges: &mut Vec<Edge>, u: VertexId, v: VertexId| {
        let id = EdgeId(next_e);
        edges.push(Edge { id, u, v });
        next_e += 1;
        id
    };
    let mut fresh = |n: usize| -> Vec<VertexId> {
        let vs = (next_v..next_v + n as u32).map(VertexId).collect();
        next_v += n as u32;
        vs
    };

    let mut variable_cycles = Vec::with_capacity(f.variable_count());
    for (x, clauses) in occ.iter().enumerate() {
        let p = clauses.len();
        let vertices = fresh(2 * p);
        let cycle_edges = (0..2 * p)
            .map(|k| add_edge(&mut edges, vertices[k], vertices[(k + 1) % (2 * p)]))
            .collect();
        variable_cycles.push(VariableCycle {
            variable: f.variables[x].clone(),
            occurrences: p,
            a: vertices.iter().step_by(2).copied().collect(),
            b: vertices.iter().skip(1).step_by(2).copied().collect(),
            vertices,
            edges: cycle_edges,
        });
    }
    let clause_vertices = fresh(f.clause_count());
    let k_vertices = fresh(3 * f.clause_count());

    // Clause vertices in clause order against A_i in label order.
    for (x, clauses) in occ.iter().enumerate() {
        for (&c, &a) in clauses.iter().zip(&variable_cycles[x].a) {
            add_edge(&mut edges, clause_vertices[c], a);
        }
    }
    let n = k_vertices.len();
    let k_edges = (0..n)
        .map(|k| add_edge(&mut edges, k_vertices[k], k_vertices[(k + 1) % n]))
        .collect();
    let mut all_b: Vec<VertexId> = variable_cycles.iter().flat_map(|c| c.b.iter().copied()).collect();
    all_b.sort();
    for (&b, &k) in all_b.iter().zip(&k_vertices) {
        add_edge(&mut edges, b, k);
    }

    let graph = Multigraph::new((0..next_v).map(VertexId), edges)?;
    let s = variable_cycles.iter().flat_map(|c| c.edges.iter().copied()).collect();
    let inst = GadgetInstance {
        formula: f.clone(),
        graph: Arc::new(graph),
        labels: GadgetLabels {
            variable_cycles,
            clause_vertices,
            clause_cycle: ClauseCycle {
                vertices: k_vertices,
                edges: k_edges,
            },
            s,
        },
    };
    inst.check_structure()?;
    Ok(inst)
}

impl GadgetInstance {
    pub fn s(&self) -> &BTreeSet<EdgeId> {
        &self.labels.s
    }

    /// Vertex and edge counts, cubicity and 3-edge-connectivity.
    pub fn check_structure(&self) -> Result<()> {
        let c = self.formula.clause_count();
        let g = &self.graph;
        if g.vertex_count() != 10 * c || g.edge_count() != 15 * c {
            return Err(ReductionError::Internal(format!(
                "gadget has {} vertices and {} edges for {c} clauses",
                g.vertex_count(),
                g.edge_count()
            )));
        }
        if !g.is_cubic() {
            return Err(ReductionError::Internal("gadget is not cubic".into()));
        }
        if !g.is_k_edge_connected(3) {
            return Err(ReductionError::Internal("gadget is not 3-edge-connected".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> GadgetJson {
        GadgetJson {
            formula: self.formula.clone(),
            graph: GraphJson::from(&*self.graph),
            labels: self.labels.clone(),
        }
    }

    /// Rebuilds from the stored formula and insists the rest matches.
    pub fn from_json(j: &GadgetJson) -> Result<GadgetInstance> {
        let inst = build_gadget(&j.formula)?;
        if GraphJson::from(&*inst.graph) != j.graph || inst.labels != j.labels {
            return Err(ReductionError::Precondition(
                "graph or labels do not match the gadget of the stored formula".into(),
            ));
        }
        Ok(inst)
    }

    fn require_same_graph(&self, d: &Orientation) -> Result<()> {
        if d.graph() != &*self.graph {
            return Err(ReductionError::Precondition("orientation belongs to a different graph".into()));
        }
        Ok(())
    }
}

/// Orients every edge from one class to the next along the cyclic order
/// true-A, clause vertices, false-A, false-B, `K`, true-B, and `K` itself as
/// a circuit. `S` is then deletable whenever `a` is feasible.
pub fn assignment_to_orientation(inst: &GadgetInstance, a: &[bool]) -> Result<Orientation> {
    let f = &inst.formula;
    if a.len() != f.variable_count() {
        return Err(ReductionError::Precondition(format!(
            "assignment has {} values for {} variables",
            a.len(),
            f.variable_count()
        )));
    }
    if !f.is_feasible(a) {
        return Err(ReductionError::Infeasible(f.violated_clauses(a)));
    }
    const A1: usize = 0;
    const CLAUSE: usize = 1;
    const A2: usize = 2;
    const B2: usize = 3;
    const K: usize = 4;
    const B1: usize = 5;
    let l = &inst.labels;
    let mut class: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (x, cyc) in l.variable_cycles.iter().enumerate() {
        let (ca, cb) = if a[x] { (A1, B1) } else { (A2, B2) };
        class.extend(cyc.a.iter().map(|&v| (v, ca)));
        class.extend(cyc.b.iter().map(|&v| (v, cb)));
    }
    class.extend(l.clause_vertices.iter().map(|&v| (v, CLAUSE)));
    class.extend(l.clause_cycle.vertices.iter().map(|&v| (v, K)));

    let mut tails = BTreeMap::new();
    for (k, &e) in l.clause_cycle.edges.iter().enumerate() {
        tails.insert(e, l.clause_cycle.vertices[k]);
    }
    for e in inst.graph.edges() {
        if tails.contains_key(&e.id) {
            continue;
        }
        let (cu, cv) = (class[&e.u], class[&e.v]);
        let tail = if (cu + 1) % 6 == cv {
            e.u
        } else if (cv + 1) % 6 == cu {
            e.v
        } else {
            return Err(ReductionError::Internal(format!("{} joins non-consecutive classes", e.id)));
        };
        tails.insert(e.id, tail);
    }
    let d = Orientation::from_tails(inst.graph.clone(), &tails)?;

    for &vc in &l.clause_vertices {
        let mut from_a1 = false;
        let mut to_a2 = false;
        for e in inst.graph.incident_edges(vc)? {
            let other = e.other(vc).unwrap();
            from_a1 |= class[&other] == A1 && d.head(e.id) == Some(vc);
            to_a2 |= class[&other] == A2 && d.tail(e.id) == Some(vc);
        }
        if !(from_a1 && to_a2) {
            return Err(ReductionError::Internal(format!(
                "clause vertex {vc} lacks an arc from a true variable or to a false one"
            )));
        }
    }
    if !d.is_deletable_set(inst.s()) {
        return Err(ReductionError::Internal("constructed orientation does not make S deletable".into()));
    }
    Ok(d)
}

/// Reads a variable as true when the arcs of its cycle run from `B` to `A`.
/// Requires `d` to make `S` deletable; then every cycle is uniformly
/// oriented and the result is feasible, both of which are checked.
pub fn orientation_to_assignment(inst: &GadgetInstance, d: &Orientation) -> Result<Assignment> {
    inst.require_same_graph(d)?;
    if !d.is_deletable_set(inst.s()) {
        return Err(ReductionError::NotCertifying);
    }
    let mut a = Vec::with_capacity(inst.formula.variable_count());
    for (x, cyc) in inst.labels.variable_cycles.iter().enumerate() {
        let b: BTreeSet<VertexId> = cyc.b.iter().copied().collect();
        let mut values = cyc.edges.iter().map(|&e| b.contains(&d.tail(e).unwrap()));
        let first = values.next().unwrap();
        if values.any(|v| v != first) {
            return Err(ReductionError::NonUniformCycle(inst.formula.variables[x].clone()));
        }
        a.push(first);
    }
    if !inst.formula.is_feasible(&a) {
        return Err(ReductionError::Internal(format!(
            "extracted assignment violates clauses {:?}",
            inst.formula.violated_clauses(&a)
        )));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{deletability_decide, DecideOutcome, SolveLimits};
    use crate::reduction::{all_feasible_assignments, example_formula, fano_formula, parse_formula};

    #[test]
    fn example_structure() {
        let inst = build_gadget(&example_formula()).unwrap();
        assert_eq!(inst.graph.vertex_count(), 30);
        assert_eq!(inst.graph.edge_count(), 45);
        let lengths: Vec<usize> = inst.labels.variable_cycles.iter().map(|c| c.edges.len()).collect();
        assert_eq!(lengths, [6, 4, 4, 4]);
        assert_eq!(inst.labels.clause_cycle.edges.len(), 9);
        assert_eq!(inst.s().len(), 18);
        for c in &inst.labels.variable_cycles {
            assert_eq!(c.a[0], *c.vertices.iter().min().unwrap());
        }
    }

    #[test]
    fn json_round_trip() {
        let inst = build_gadget(&example_formula()).unwrap();
        let j = inst.to_json();
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"variableCycles\"") && text.contains("\"S\""));
        let back: GadgetJson = serde_json::from_str(&text).unwrap();
        let again = GadgetInstance::from_json(&back).unwrap();
        assert_eq!(again.graph, inst.graph);
        let mut tampered = back.clone();
        tampered.labels.s.remove(&EdgeId(0));
        assert!(GadgetInstance::from_json(&tampered).is_err());
    }

    #[test]
    fn rejects_bad_formulas() {
        assert!(build_gadget(&parse_formula("").unwrap()).is_err());
        assert!(build_gadget(&parse_formula("a b c").unwrap()).is_err());
        let two = parse_formula("a b c\na b d\na c d\ne f g\ne f h\ne g h").unwrap();
        assert!(matches!(build_gadget(&two), Err(ReductionError::Precondition(_))));
    }

    #[test]
    fn every_feasible_assignment_round_trips() {
        let f = example_formula();
        let inst = build_gadget(&f).unwrap();
        let all = all_feasible_assignments(&f).unwrap();
        assert!(!all.is_empty());
        for a in &all {
            let d = assignment_to_orientation(&inst, a).unwrap();
            assert!(d.is_deletable_set(inst.s()));
            assert_eq!(&orientation_to_assignment(&inst, &d).unwrap(), a);
        }
        assert!(matches!(
            assignment_to_orientation(&inst, &[true; 4]),
            Err(ReductionError::Infeasible(_))
        ));
    }

    #[test]
    fn solver_orientation_maps_to_feasible() {
        let inst = build_gadget(&example_formula()).unwrap();
        match deletability_decide(&inst.graph, inst.s(), &SolveLimits::default()).unwrap() {
            DecideOutcome::Yes(d) => {
                let a = orientation_to_assignment(&inst, &d).unwrap();
                assert!(inst.formula.is_feasible(&a));
            }
            DecideOutcome::No => panic!("the example is feasible"),
            DecideOutcome::Indeterminate(_) => {}
        }
    }

    #[test]
    fn non_certifying_orientation_is_rejected() {
        let inst = build_gadget(&example_formula()).unwrap();
        let d = Orientation::forward(inst.graph.clone());
        assert_eq!(orientation_to_assignment(&inst, &d).unwrap_err(), ReductionError::NotCertifying);
    }

    #[test]
    fn fano_gadget_builds() {
        let inst = build_gadget(&fano_formula()).unwrap();
        assert_eq!(inst.graph.vertex_count(), 70);
        assert_eq!(inst.graph.edge_count(), 105);
    }
}
