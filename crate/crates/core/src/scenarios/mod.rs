//! Machine-checked replays of the symbolic computations behind the
//! classification results: each scenario builds the matrices with unknown
//! entries, extracts and solves the constraints, and records every
//! conclusion as a pass/fail step.

mod g6m4;
mod lemma51;
mod lemma83;
mod sec7;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{standard, IntMatrix, Matrix, Poly};
use crate::constraints::{
    extract, greedy_solve_with, ConstraintSystem, SolverOptions, SolverResult, Substitution,
};
use crate::error::{Error, Result};

pub type PolyMatrix = Matrix<Poly>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScenarioId {
    Lemma51,
    G6M4,
    Sec7Odd(usize),
    Sec7Even(usize),
    Lemma83,
}

impl ScenarioId {
    /// Every scenario with its default parameter.
    pub fn defaults() -> Vec<ScenarioId> {
        vec![
            ScenarioId::Lemma51,
            ScenarioId::G6M4,
            ScenarioId::Sec7Odd(3),
            ScenarioId::Sec7Even(4),
            ScenarioId::Lemma83,
        ]
    }

    fn check(self) -> Result<Self> {
        match self {
            ScenarioId::Sec7Odd(r) | ScenarioId::Sec7Even(r) if !(3..=5).contains(&r) => {
                Err(Error::InvalidArgument(format!("{self} needs r in 3..=5")))
            }
            _ => Ok(self),
        }
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioId::Lemma51 => f.write_str("lemma51"),
            ScenarioId::G6M4 => f.write_str("thm13_g6m4"),
            ScenarioId::Sec7Odd(r) => write!(f, "sec7_odd({r})"),
            ScenarioId::Sec7Even(r) => write!(f, "sec7_even({r})"),
            ScenarioId::Lemma83 => f.write_str("lemma83"),
        }
    }
}

impl FromStr for ScenarioId {
    type Err = Error;

    /// Accepts `sec7_odd`, `sec7_odd(4)` and `sec7_odd:4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.find(['(', ':']) {
            Some(at) => {
                let arg = s[at + 1..].trim_end_matches(')');
                let r = arg
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::UnknownScenario(s.to_string()))?;
                (&s[..at], Some(r))
            }
            None => (s, None),
        };
        let id = match (name, arg) {
            ("lemma51", None) => ScenarioId::Lemma51,
            ("thm13_g6m4", None) => ScenarioId::G6M4,
            ("lemma83", None) => ScenarioId::Lemma83,
            ("sec7_odd", r) => ScenarioId::Sec7Odd(r.unwrap_or(3)),
            ("sec7_even", r) => ScenarioId::Sec7Even(r.unwrap_or(4)),
            _ => return Err(Error::UnknownScenario(s.to_string())),
        };
        id.check()
    }
}

impl Serialize for ScenarioId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ScenarioId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationStep {
    pub id: String,
    pub description: String,
    pub expected: String,
    /// Constraint systems, solver branches or matrices backing the step.
    pub evidence: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationReport {
    pub scenario: ScenarioId,
    pub steps: Vec<DerivationStep>,
    pub conclusion: String,
    #[serde(skip)]
    matrices: BTreeMap<String, PolyMatrix>,
}

impl DerivationReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }

    pub fn step(&self, id: &str) -> Option<&DerivationStep> {
        self.steps.iter().find(|s| s.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DerivationStep> {
        self.steps.iter().filter(|s| !s.passed)
    }

    pub fn matrix(&self, name: &str) -> Option<&PolyMatrix> {
        self.matrices.get(name)
    }

    pub fn matrix_names(&self) -> impl Iterator<Item = &str> {
        self.matrices.keys().map(String::as_str)
    }
}

pub fn run_scenario(id: ScenarioId) -> Result<DerivationReport> {
    run_scenario_with(id, SolverOptions::default().branch_limit)
}

pub fn run_scenario_with(id: ScenarioId, branch_limit: usize) -> Result<DerivationReport> {
    let id = id.check()?;
    if branch_limit == 0 {
        return Err(Error::InvalidArgument(
            "branch limit must be at least 1".into(),
        ));
    }
    let mut b = Builder {
        branch_limit,
        steps: Vec::new(),
        matrices: BTreeMap::new(),
    };
    let conclusion = match id {
        ScenarioId::Lemma51 => lemma51::run(&mut b)?,
        ScenarioId::G6M4 => g6m4::run(&mut b)?,
        ScenarioId::Sec7Odd(r) => sec7::run_odd(&mut b, r)?,
        ScenarioId::Sec7Even(r) => sec7::run_even(&mut b, r)?,
        ScenarioId::Lemma83 => lemma83::run(&mut b)?,
    };
    Ok(DerivationReport {
        scenario: id,
        steps: b.steps,
        conclusion,
        matrices: b.matrices,
    })
}

/// A named intermediate matrix of a scenario.
pub fn scenario_matrix(id: ScenarioId, name: &str) -> Result<PolyMatrix> {
    let report = run_scenario(id)?;
    report.matrix(name).cloned().ok_or_else(|| {
        let known: Vec<&str> = report.matrix_names().collect();
        Error::InvalidArgument(format!(
            "{id} has no matrix `{name}`; known: {}",
            known.join(", ")
        ))
    })
}

pub(crate) struct Builder {
    branch_limit: usize,
    steps: Vec<DerivationStep>,
    matrices: BTreeMap<String, PolyMatrix>,
}

impl Builder {
    fn step(
        &mut self,
        id: impl Into<String>,
        description: impl Into<String>,
        expected: impl Into<String>,
        passed: bool,
        evidence: Vec<String>,
    ) {
        self.steps.push(DerivationStep {
            id: id.into(),
            description: description.into(),
            expected: expected.into(),
            evidence,
            passed,
        });
    }

    fn keep(&mut self, name: impl Into<String>, m: &PolyMatrix) {
        self.matrices.insert(name.into(), m.clone());
    }

    fn solve(&self, sys: &ConstraintSystem, units: &[&str]) -> Result<SolverResult> {
        let mut opts = SolverOptions::with_units(units.iter().copied());
        opts.branch_limit = self.branch_limit;
        greedy_solve_with(sys, &opts)
    }
}

fn evidence(sys: &ConstraintSystem, res: &SolverResult) -> Vec<String> {
    let mut out = vec![format!("system: {sys}")];
    out.extend(res.branches.iter().map(|b| format!("branch: {b}")));
    out.extend(res.rejected.iter().map(|b| format!("rejected: {b}")));
    if res.limit_exceeded {
        out.push("branch limit exceeded".into());
    }
    out
}

fn p(s: &str) -> Poly {
    Poly::parse(s).expect("polynomial literal")
}

fn pm(rows: &[&[&str]]) -> PolyMatrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect(),
    )
    .expect("rectangular literal")
}

fn ints(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_i64_rows(rows).expect("rectangular literal")
}

fn lift(m: &IntMatrix) -> PolyMatrix {
    Matrix::lift(m)
}

fn std_a(i: usize, m: usize) -> Result<PolyMatrix> {
    Ok(lift(&standard::a(i, m)?))
}

fn std_b(i: usize, m: usize) -> Result<PolyMatrix> {
    Ok(lift(&standard::b(i, m)?))
}

fn std_c(j: usize, m: usize) -> Result<PolyMatrix> {
    Ok(lift(&standard::c(j, m)?))
}

/// Identity of size `m` with `block` placed at `(offset, offset)`.
fn embed(block: &PolyMatrix, offset: usize, m: usize) -> PolyMatrix {
    let mut out = Matrix::identity(m);
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            out.set(offset + i, offset + j, block.get(i, j).clone());
        }
    }
    out
}

fn product(ms: &[&PolyMatrix]) -> PolyMatrix {
    let mut it = ms.iter();
    let first = (*it.next().expect("nonempty product")).clone();
    it.fold(first, |acc, m| &acc * *m)
}

fn subst_matrix(m: &PolyMatrix, values: &[(&str, Poly)]) -> PolyMatrix {
    let s: Substitution = values
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    m.map(|e| e.substitute(&s))
}

fn constant(n: i64) -> Poly {
    Poly::from_i64(n)
}

/// Constraints of the braid relation `XYX = YXY`.
fn braid_system(x: &PolyMatrix, y: &PolyMatrix) -> Result<ConstraintSystem> {
    extract(&product(&[x, y, x]), &product(&[y, x, y]))
}

fn commute_system(x: &PolyMatrix, y: &PolyMatrix) -> Result<ConstraintSystem> {
    extract(&(x * y), &(y * x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenario_ids_parse() {
        assert_eq!(
            "sec7_odd(4)".parse::<ScenarioId>().unwrap(),
            ScenarioId::Sec7Odd(4)
        );
        assert_eq!(
            "sec7_even".parse::<ScenarioId>().unwrap(),
            ScenarioId::Sec7Even(4)
        );
        assert_eq!(
            "sec7_odd:5".parse::<ScenarioId>().unwrap(),
            ScenarioId::Sec7Odd(5)
        );
        assert!("sec7_odd(9)".parse::<ScenarioId>().is_err());
        assert!(matches!(
            "lemma99".parse::<ScenarioId>(),
            Err(Error::UnknownScenario(_))
        ));
        for id in ScenarioId::defaults() {
            assert_eq!(id.to_string().parse::<ScenarioId>().unwrap(), id);
        }
    }
}
