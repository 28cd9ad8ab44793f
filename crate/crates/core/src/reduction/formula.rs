use super::{ReductionError, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Largest variable count the brute-force solver accepts.
pub const BRUTEFORCE_MAX_VARIABLES: usize = 24;

/// A monotone not-all-equal 3-SAT formula. Every clause is three distinct,
/// unnegated variables, stored as sorted indices into `variables`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NaeFormula {
    pub variables: Vec<String>,
    pub clauses: Vec<[usize; 3]>,
}

/// One truth value per variable.
pub type Assignment = Vec<bool>;

impl NaeFormula {
    /// Builds a formula from clauses of variable names, numbering variables
    /// in order of first appearance.
    pub fn from_named<S: AsRef<str>>(clauses: &[[S; 3]]) -> Result<NaeFormula> {
        let mut f = NaeFormula::default();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        for (line, clause) in clauses.iter().enumerate() {
            let mut idx = [0usize; 3];
            for (k, name) in clause.iter().enumerate() {
                let name = name.as_ref();
                idx[k] = *index.entry(name.to_string()).or_insert_with(|| {
                    f.variables.push(name.to_string());
                    f.variables.len() - 1
                });
            }
            idx.sort_unstable();
            if idx[0] == idx[1] || idx[1] == idx[2] {
                let dup = if idx[0] == idx[1] { idx[0] } else { idx[1] };
                return Err(ReductionError::DuplicateVariable {
                    line: line + 1,
                    variable: f.variables[dup].clone(),
                });
            }
            f.clauses.push(idx);
        }
        Ok(f)
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Clause indices containing each variable.
    pub fn occurrences(&self) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); self.variables.len()];
        for (c, clause) in self.clauses.iter().enumerate() {
            for &x in clause {
                occ[x].push(c);
            }
        }
        occ
    }

    /// Whether every clause has a true and a false variable under `a`.
    pub fn is_feasible(&self, a: &[bool]) -> bool {
        a.len() == self.variables.len()
            && self.clauses.iter().all(|c| {
                let t = c.iter().filter(|&&x| a[x]).count();
                t == 1 || t == 2
            })
    }

    /// Clauses that `a` leaves all-true or all-false.
    pub fn violated_clauses(&self, a: &[bool]) -> Vec<usize> {
        (0..self.clauses.len())
            .filter(|&c| {
                let t = self.clauses[c].iter().filter(|&&x| a[x]).count();
                t == 0 || t == 3
            })
            .collect()
    }

    /// The formula on the given clauses, keeping only variables they use.
    fn restricted(&self, clauses: &[usize]) -> NaeFormula {
        let mut renumber = BTreeMap::new();
        let mut used: Vec<usize> = clauses.iter().flat_map(|&c| self.clauses[c]).collect();
        used.sort_unstable();
        used.dedup();
        let variables = used
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                renumber.insert(x, k);
                self.variables[x].clone()
            })
            .collect();
        let clauses = clauses
            .iter()
            .map(|&c| {
                let mut idx = self.clauses[c].map(|x| renumber[&x]);
                idx.sort_unstable();
                idx
            })
            .collect();
        NaeFormula { variables, clauses }
    }

    /// One clause per line as variable names.
    pub fn to_text(&self) -> String {
        self.clauses
            .iter()
            .map(|c| format!("{} {} {}\n", self.variables[c[0]], self.variables[c[1]], self.variables[c[2]]))
            .collect()
    }
}

fn valid_token(t: &str) -> bool {
    t.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && t.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Reads one clause per line, three variable names separated by whitespace.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_formula(text: &str) -> Result<NaeFormula> {
    let mut named: Vec<[&str; 3]> = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(ReductionError::Arity {
                line: i + 1,
                count: tokens.len(),
            });
        }
        if let Some(bad) = tokens.iter().find(|t| !valid_token(t)) {
            return Err(ReductionError::BadToken {
                line: i + 1,
                token: bad.to_string(),
            });
        }
        named.push([tokens[0], tokens[1], tokens[2]]);
        lines.push(i + 1);
    }
    NaeFormula::from_named(&named).map_err(|e| match e {
        ReductionError::DuplicateVariable { line, variable } => ReductionError::DuplicateVariable {
            line: lines[line - 1],
            variable,
        },
        other => other,
    })
}

/// Drops, until none is left, every clause holding a variable that occurs
/// nowhere else: such a variable can always be set to make its clause mixed.
pub fn preprocess(f: &NaeFormula) -> NaeFormula {
    let occ = f.occurrences();
    let mut count: Vec<usize> = occ.iter().map(Vec::len).collect();
    let mut alive = vec![true; f.clauses.len()];
    let mut queue: Vec<usize> = (0..count.len()).filter(|&x| count[x] == 1).collect();
    while let Some(x) = queue.pop() {
        if count[x] != 1 {
            continue;
        }
        let Some(&c) = occ[x].iter().find(|&&c| alive[c]) else {
            continue;
        };
        alive[c] = false;
        for &y in &f.clauses[c] {
            count[y] -= 1;
            if count[y] == 1 {
                queue.push(y);
            }
        }
    }
    let kept: Vec<usize> = (0..f.clauses.len()).filter(|&c| alive[c]).collect();
    f.restricted(&kept)
}

/// Splits the formula along the connected components of its
/// variable-clause incidence graph, in order of smallest clause index.
pub fn decompose_connected(f: &NaeFormula) -> Vec<NaeFormula> {
    let occ = f.occurrences();
    let mut seen = vec![false; f.clauses.len()];
    let mut parts = Vec::new();
    for start in 0..f.clauses.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut part = BTreeSet::new();
        while let Some(c) = stack.pop() {
            part.insert(c);
            for &x in &f.clauses[c] {
                for &d in &occ[x] {
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
        }
        parts.push(f.restricted(&part.into_iter().collect::<Vec<_>>()));
    }
    parts
}

/// First feasible assignment in binary counting order, with variable 0 as
/// the lowest bit.
pub fn nae_solve_bruteforce(f: &NaeFormula) -> Result<Option<Assignment>> {
    let m = f.variable_count();
    if m > BRUTEFORCE_MAX_VARIABLES {
        return Err(ReductionError::TooManyVariables(m));
    }
    let masks: Vec<u32> = f
        .clauses
        .iter()
        .map(|c| c.iter().fold(0u32, |acc, &x| acc | (1 << x)))
        .collect();
    for bits in 0u32..(1u32 << m) {
        if masks.iter().all(|&c| {
            let t = bits & c;
            t != 0 && t != c
        }) {
            return Ok(Some((0..m).map(|x| bits >> x & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// Every feasible assignment, in the same order as [`nae_solve_bruteforce`].
pub fn all_feasible_assignments(f: &NaeFormula) -> Result<Vec<Assignment>> {
    let m = f.variable_count();
    if m > BRUTEFORCE_MAX_VARIABLES {
        return Err(ReductionError::TooManyVariables(m));
    }
    Ok((0u32..(1u32 << m))
        .map(|bits| (0..m).map(|x| bits >> x & 1 == 1).collect::<Vec<bool>>())
        .filter(|a| f.is_feasible(a))
        .collect())
}

/// The running three-clause example: x1 occurs three times, the rest twice.
pub fn example_formula() -> NaeFormula {
    parse_formula("x1 x2 x3\nx1 x2 x4\nx1 x3 x4\n").expect("fixed text parses")
}

/// The lines of the Fano plane as clauses. No 2-coloring of the plane leaves
/// every line mixed, so the formula is infeasible.
pub fn fano_formula() -> NaeFormula {
    parse_formula("x1 x2 x3\nx1 x4 x5\nx1 x6 x7\nx2 x4 x6\nx2 x5 x7\nx3 x4 x7\nx3 x5 x6\n").expect("fixed text parses")
}
