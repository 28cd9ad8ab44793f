//! Not-all-equal 3-SAT formulas and their translation into deletability
//! instances on cubic 3-edge-connected graphs, with maps between feasible
//! assignments and orientations in both directions.

mod formula;
mod gadget;

pub use formula::{
    all_feasible_assignments, decompose_connected, example_formula, fano_formula, nae_solve_bruteforce,
    parse_formula, preprocess, Assignment, NaeFormula, BRUTEFORCE_MAX_VARIABLES,
};
pub use gadget::{
    assignment_to_orientation, build_gadget, orientation_to_assignment, ClauseCycle, GadgetInstance, GadgetJson,
    GadgetLabels, VariableCycle,
};

use crate::multigraph::GraphError;
use crate::orientation::OrientationError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("line {line}: expected 3 variables, found {count}")]
    Arity { line: usize, count: usize },
    #[error("line {line}: variable {variable} repeats within the clause")]
    DuplicateVariable { line: usize, variable: String },
    #[error("line {line}: {token:?} is not a plain variable name")]
    BadToken { line: usize, token: String },
    #[error("{0} variables exceed the brute-force limit")]
    TooManyVariables(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("assignment is not feasible; violated clauses {0:?}")]
    Infeasible(Vec<usize>),
    #[error("orientation does not make S deletable")]
    NotCertifying,
    #[error("arcs of the cycle of {0} are not all directed the same way")]
    NonUniformCycle(String),
    #[error("construction failed its own check: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

pub type Result<T> = std::result::Result<T, ReductionError>;
