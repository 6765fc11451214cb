//! Polynomial constraint systems coming from matrix identities `L = R` with
//! unknown entries, and a small elimination solver for them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{split_rational_roots, Matrix, Poly};
use crate::error::{Error, Result};

/// Values assigned to eliminated variables.
pub type Substitution = BTreeMap<String, Poly>;

/// A finite set of polynomials, each asserting `p = 0`.
///
/// Polynomials are stored monic, without duplicates, and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct ConstraintSystem {
    polys: Vec<Poly>,
}

fn canonical_key(p: &Poly) -> (usize, u32, String) {
    (p.variables().len(), p.total_degree(), p.to_string())
}

impl ConstraintSystem {
    pub fn new() -> Self {
        ConstraintSystem::default()
    }

    pub fn from_polys(polys: impl IntoIterator<Item = Poly>) -> Self {
        let mut sys = ConstraintSystem::new();
        for p in polys {
            sys.push(p);
        }
        sys
    }

    pub fn push(&mut self, p: Poly) {
        if p.is_zero() {
            return;
        }
        let p = p.monic();
        if let Err(at) = self
            .polys
            .binary_search_by(|q| canonical_key(q).cmp(&canonical_key(&p)))
        {
            self.polys.insert(at, p);
        }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.polys
            .iter()
            .flat_map(|p| p.variables())
            .map(|v| v.to_string())
            .collect()
    }

    pub fn extend(&mut self, other: &ConstraintSystem) {
        for p in &other.polys {
            self.push(p.clone());
        }
    }

    pub fn substitute(&self, subst: &Substitution) -> ConstraintSystem {
        ConstraintSystem::from_polys(self.polys.iter().map(|p| p.substitute(subst)))
    }

    /// Whether `p` vanishes after `subst`, modulo this system.
    pub fn implies(&self, p: &Poly, subst: &Substitution) -> bool {
        let q = p.substitute(subst);
        q.is_zero()
            || self.polys.iter().any(|r| q.div_exact(r).is_some())
            || q.reduce(&self.polys).is_zero()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.polys.iter().map(Poly::to_string).collect()
    }

    pub fn parse(items: &[&str]) -> Result<Self> {
        items
            .iter()
            .map(|s| Poly::parse(s))
            .collect::<Result<Vec<_>>>()
            .map(ConstraintSystem::from_polys)
    }
}

impl From<ConstraintSystem> for Vec<String> {
    fn from(sys: ConstraintSystem) -> Self {
        sys.to_strings()
    }
}

impl TryFrom<Vec<String>> for ConstraintSystem {
    type Error = Error;
    fn try_from(items: Vec<String>) -> Result<Self> {
        let refs: Vec<&str> = items.iter().map(String::as_str).collect();
        ConstraintSystem::parse(&refs)
    }
}

impl fmt::Display for ConstraintSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polys.is_empty() {
            return f.write_str("{}");
        }
        let items: Vec<String> = self.polys.iter().map(|p| format!("{p} = 0")).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// Nonzero entries of `L - R` with their 1-based positions, row-major.
pub fn differences(l: &Matrix<Poly>, r: &Matrix<Poly>) -> Result<Vec<((usize, usize), Poly)>> {
    let d = l.checked_sub(r)?;
    let mut out = Vec::new();
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            let p = d.get(i, j);
            if !p.is_zero() {
                out.push(((i + 1, j + 1), p.clone()));
            }
        }
    }
    Ok(out)
}

pub fn extract(l: &Matrix<Poly>, r: &Matrix<Poly>) -> Result<ConstraintSystem> {
    Ok(ConstraintSystem::from_polys(
        differences(l, r)?.into_iter().map(|(_, p)| p),
    ))
}

/// Every polynomial of `sys` becomes zero under `subst`.
pub fn verify_assignment(sys: &ConstraintSystem, subst: &Substitution) -> bool {
    sys.polys().iter().all(|p| p.substitute(subst).is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    FullySolved,
    PartiallySolved,
    Inconsistent,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStatus::FullySolved => "fully-solved",
            SolveStatus::PartiallySolved => "partially-solved",
            SolveStatus::Inconsistent => "inconsistent",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub substitution: Substitution,
    pub residual: ConstraintSystem,
    pub status: SolveStatus,
}

impl Branch {
    /// Value assigned to `v`, or `v` itself when it stayed free.
    pub fn value(&self, v: &str) -> Poly {
        self.substitution
            .get(v)
            .cloned()
            .unwrap_or_else(|| Poly::var(v))
    }

    /// Whether the constraint `p = 0` holds on this branch.
    pub fn implies(&self, p: &Poly) -> bool {
        self.residual.implies(p, &self.substitution)
    }

    pub fn apply(&self, m: &Matrix<Poly>) -> Matrix<Poly> {
        m.map(|p| p.substitute(&self.substitution))
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .substitution
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        write!(f, "[{}] {{{}}}", self.status, items.join(", "))?;
        if !self.residual.is_empty() {
            write!(f, " with {}", self.residual)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    /// Consistent branches, in exploration order.
    pub branches: Vec<Branch>,
    /// Branches that reduced to a nonzero constant.
    pub rejected: Vec<Branch>,
    pub status: SolveStatus,
    pub limit_exceeded: bool,
}

impl SolverResult {
    pub fn is_fully_solved(&self) -> bool {
        self.status == SolveStatus::FullySolved
    }

    /// Whether `p = 0` holds on every consistent branch.
    pub fn implies(&self, p: &Poly) -> bool {
        !self.branches.is_empty() && self.branches.iter().all(|b| b.implies(p))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOptions {
    /// Variables known to be nonzero.
    pub units: BTreeSet<String>,
    pub branch_limit: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            units: BTreeSet::new(),
            branch_limit: 16,
        }
    }
}

impl SolverOptions {
    pub fn with_units<'a>(units: impl IntoIterator<Item = &'a str>) -> Self {
        SolverOptions {
            units: units.into_iter().map(str::to_string).collect(),
            ..SolverOptions::default()
        }
    }
}

pub fn greedy_solve(sys: &ConstraintSystem, branch_limit: usize) -> Result<SolverResult> {
    greedy_solve_with(
        sys,
        &SolverOptions {
            branch_limit,
            ..SolverOptions::default()
        },
    )
}

/// Eliminates variables occurring linearly with a constant coefficient, and
/// branches on equations that split into rational roots or are monomials.
pub fn greedy_solve_with(sys: &ConstraintSystem, opts: &SolverOptions) -> Result<SolverResult> {
    if opts.branch_limit == 0 {
        return Err(Error::InvalidArgument(
            "branch limit must be at least 1".into(),
        ));
    }
    let mut solver = Solver {
        opts,
        consistent: Vec::new(),
        rejected: Vec::new(),
        exceeded: false,
    };
    solver.run(sys.polys().to_vec(), Substitution::new());
    let status = if solver.consistent.is_empty() {
        SolveStatus::Inconsistent
    } else if !solver.exceeded
        && solver
            .consistent
            .iter()
            .all(|b| b.status == SolveStatus::FullySolved)
    {
        SolveStatus::FullySolved
    } else {
        SolveStatus::PartiallySolved
    };
    Ok(SolverResult {
        branches: solver.consistent,
        rejected: solver.rejected,
        status,
        limit_exceeded: solver.exceeded,
    })
}

struct Solver<'a> {
    opts: &'a SolverOptions,
    consistent: Vec<Branch>,
    rejected: Vec<Branch>,
    exceeded: bool,
}

enum Step {
    Inconsistent(Poly),
    Eqs(Vec<Poly>),
}

impl Solver<'_> {
    fn is_unit(&self, v: &str) -> bool {
        self.opts.units.contains(v)
    }

    /// Drops the content in unit variables and makes the result monic.
    fn normalize(&self, p: &Poly) -> Poly {
        let content = p.monomial_content();
        let unit_part = crate::algebra::Monomial::from_powers(
            content
                .powers()
                .iter()
                .filter(|(v, _)| self.is_unit(v))
                .cloned(),
        );
        p.div_monomial(&unit_part)
            .unwrap_or_else(|| p.clone())
            .monic()
    }

    fn tidy(&self, eqs: &[Poly]) -> Step {
        let mut out: Vec<Poly> = Vec::new();
        for e in eqs {
            let n = self.normalize(e);
            if n.is_zero() {
                continue;
            }
            if n.is_constant() {
                return Step::Inconsistent(n);
            }
            if !out.contains(&n) {
                out.push(n);
            }
        }
        if let Some(c) = self.interreduced_constant(&out) {
            return Step::Inconsistent(c);
        }
        out.sort_by_cached_key(canonical_key);
        Step::Eqs(out)
    }

    /// Interreduces a copy of `eqs`; a nonzero constant proves inconsistency.
    fn interreduced_constant(&self, eqs: &[Poly]) -> Option<Poly> {
        let mut work = eqs.to_vec();
        let mut i = 0;
        while i < work.len() {
            let others: Vec<Poly> = work
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let r = self.normalize(&work[i].reduce(&others));
            if r == work[i] {
                i += 1;
                continue;
            }
            if r.is_constant() && !r.is_zero() {
                return Some(r);
            }
            if r.is_zero() || work.contains(&r) {
                work.remove(i);
            } else {
                work[i] = r;
            }
            i = 0;
        }
        None
    }

    fn linear_step(eqs: &[Poly]) -> Option<(String, Poly)> {
        for e in eqs {
            for v in e.variables().iter().rev() {
                if e.degree_in(v) != 1 {
                    continue;
                }
                let Some(c) = e.coeff_of(v, 1).as_constant() else {
                    continue;
                };
                let rest = e.coeff_of(v, 0);
                return Some((v.to_string(), rest.scale(&(-c.recip()))));
            }
        }
        None
    }

    fn leaf(&mut self, subst: Substitution, residual: Vec<Poly>, status: SolveStatus) {
        let branch = Branch {
            substitution: subst,
            residual: ConstraintSystem::from_polys(residual),
            status,
        };
        if status == SolveStatus::Inconsistent {
            self.rejected.push(branch);
        } else if self.consistent.len() >= self.opts.branch_limit {
            self.exceeded = true;
        } else {
            self.consistent.push(branch);
        }
    }

    fn run(&mut self, mut eqs: Vec<Poly>, mut subst: Substitution) {
        loop {
            if self.exceeded {
                return;
            }
            eqs = match self.tidy(&eqs) {
                Step::Inconsistent(p) => {
                    self.leaf(subst, vec![p], SolveStatus::Inconsistent);
                    return;
                }
                Step::Eqs(e) => e,
            };
            let Some((v, value)) = Self::linear_step(&eqs) else {
                break;
            };
            let one: Substitution = BTreeMap::from([(v.clone(), value.clone())]);
            for x in subst.values_mut() {
                *x = x.substitute(&one);
            }
            subst.insert(v, value);
            eqs = eqs.iter().map(|e| e.substitute(&one)).collect();
        }
        for e in &eqs {
            let vars = e.variables();
            if vars.len() == 1 {
                let v = vars.iter().next().expect("one variable").to_string();
                let coeffs = e.univariate_coeffs(&v).expect("univariate");
                if let Some(roots) = split_rational_roots(&coeffs) {
                    for (root, _) in roots {
                        if root.is_zero() && self.is_unit(&v) {
                            continue;
                        }
                        let mut next = eqs.clone();
                        next.push(&Poly::var(&v) - &Poly::constant(root));
                        self.run(next, subst.clone());
                    }
                    return;
                }
            }
            if e.num_terms() == 1 {
                let free: Vec<String> = vars
                    .iter()
                    .filter(|v| !self.is_unit(v))
                    .map(|v| v.to_string())
                    .collect();
                if free.is_empty() {
                    self.leaf(subst, vec![e.clone()], SolveStatus::Inconsistent);
                    return;
                }
                for v in free {
                    let mut next = eqs.clone();
                    next.push(Poly::var(&v));
                    self.run(next, subst.clone());
                }
                return;
            }
        }
        let status = if eqs.is_empty() {
            SolveStatus::FullySolved
        } else {
            SolveStatus::PartiallySolved
        };
        self.leaf(subst, eqs, status);
    }
}

/// A constant as a polynomial, for building substitutions.
pub fn rational(n: i64, d: i64) -> Poly {
    Poly::constant(BigRational::new(n.into(), d.into()))
}
