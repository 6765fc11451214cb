use std::fmt;

use crate::error::{Error, Result};

use super::generator::{Generator, Surface};
use super::word::Word;

use Generator::{TAlpha, TBeta, TDelta, TEps, TGamma, U};

/// Which relation family an instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationFamily {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    /// `t_{δ_{i+1}} u_? u_{i+1} = u_i u_{i+1} t_{δ_i}` for `i = 1, 2` (genus 4 only).
    N4Braid,
    /// `(t_{ε_2} u_3)^2 = 1` (genus 4 only).
    N4EpsU,
    /// `t_{δ_1} w t_{δ_1} = w` with `w = t_{δ_2} t_{δ_3} u_3 u_2` (genus 4 only).
    N4Conj,
    /// Twist braid relation on an orientable surface.
    Braid,
    /// Twists about disjoint curves on an orientable surface commute.
    Disjoint,
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationFamily::N4Braid => "N4a",
            RelationFamily::N4EpsU => "N4b",
            RelationFamily::N4Conj => "N4c",
            RelationFamily::Braid => "braid",
            RelationFamily::Disjoint => "disjoint",
            other => return write!(f, "{other:?}"),
        };
        f.write_str(s)
    }
}

/// How the first extra genus-4 family is read: literally with `u_1`, or with
/// `u_i` in its place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum N4Reading {
    Literal,
    #[default]
    Corrected,
}

/// An identity `lhs = rhs` between words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    fn new(
        family: RelationFamily,
        label: String,
        s: Surface,
        lhs: &[Generator],
        rhs: &[Generator],
    ) -> Result<Self> {
        Ok(Relation {
            family,
            label,
            lhs: Word::product(s, lhs)?,
            rhs: Word::product(s, rhs)?,
        })
    }

    /// `lhs * rhs^{-1}`.
    pub fn relator(&self) -> Word {
        self.lhs.concat(&self.rhs.inverse()).expect("same surface")
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.lhs
            .letters()
            .iter()
            .chain(self.rhs.letters())
            .map(|l| l.generator)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.label, self.lhs, self.rhs)
    }
}

fn commute(
    fam: RelationFamily,
    label: String,
    s: Surface,
    x: Generator,
    y: Generator,
) -> Result<Relation> {
    Relation::new(fam, label, s, &[x, y], &[y, x])
}

fn braid(
    fam: RelationFamily,
    label: String,
    s: Surface,
    x: Generator,
    y: Generator,
) -> Result<Relation> {
    Relation::new(fam, label, s, &[x, y, x], &[y, x, y])
}

/// Every instance of R1–R12 on `N_{g,n}`, plus the extra genus-4 relations.
pub fn relations_for(g: usize, n: usize) -> Result<Vec<Relation>> {
    relations_with_reading(g, n, N4Reading::default())
}

pub fn relations_with_reading(g: usize, n: usize, reading: N4Reading) -> Result<Vec<Relation>> {
    use RelationFamily::*;
    let s = Surface::Nonorientable {
        genus: g,
        boundary: n,
    }
    .check()?;
    let mut out = Vec::new();
    let eps_max = g / 2;
    for i in 1..g {
        for j in i + 2..g {
            out.push(commute(
                R1,
                format!("R1[i={i},j={j}]"),
                s,
                TDelta(i),
                TDelta(j),
            )?);
        }
    }
    for i in 1..=eps_max {
        for j in i + 1..=eps_max {
            out.push(commute(
                R2,
                format!("R2[i={i},j={j}]"),
                s,
                TEps(i),
                TEps(j),
            )?);
        }
    }
    for i in 1..=eps_max {
        for j in (1..g).filter(|&j| j != 2 * i) {
            out.push(commute(
                R3,
                format!("R3[i={i},j={j}]"),
                s,
                TEps(i),
                TDelta(j),
            )?);
        }
    }
    for i in 1..=g - 2 {
        out.push(braid(
            R4,
            format!("R4[i={i}]"),
            s,
            TDelta(i),
            TDelta(i + 1),
        )?);
    }
    for i in (1..=eps_max).filter(|&i| 2 * i < g) {
        out.push(braid(R5, format!("R5[i={i}]"), s, TEps(i), TDelta(2 * i))?);
    }
    for i in 1..g {
        for j in (1..g).filter(|&j| i.abs_diff(j) > 1) {
            out.push(commute(R6, format!("R6[i={i},j={j}]"), s, TDelta(i), U(j))?);
        }
    }
    for i in 1..g {
        for j in i + 2..g {
            out.push(commute(R7, format!("R7[i={i},j={j}]"), s, U(i), U(j))?);
        }
    }
    for i in 1..=eps_max {
        for j in 2 * i + 1..g {
            out.push(commute(R8, format!("R8[i={i},j={j}]"), s, TEps(i), U(j))?);
        }
    }
    for i in 1..=g - 2 {
        out.push(braid(R9, format!("R9[i={i}]"), s, U(i), U(i + 1))?);
    }
    for i in 1..=g - 2 {
        out.push(Relation::new(
            R10,
            format!("R10[i={i}]"),
            s,
            &[TDelta(i), U(i + 1), U(i)],
            &[U(i + 1), U(i), TDelta(i + 1)],
        )?);
    }
    for i in 1..=g - 2 {
        out.push(Relation::new(
            R11,
            format!("R11[i={i}]"),
            s,
            &[U(i + 1), TDelta(i), TDelta(i + 1), U(i)],
            &[TDelta(i), TDelta(i + 1)],
        )?);
    }
    for i in 1..g {
        out.push(Relation::new(
            R12,
            format!("R12[i={i}]"),
            s,
            &[TDelta(i), U(i), TDelta(i)],
            &[U(i)],
        )?);
    }
    if g == 4 {
        out.extend(genus_four_extras(s, reading)?);
    }
    Ok(out)
}

fn genus_four_extras(s: Surface, reading: N4Reading) -> Result<Vec<Relation>> {
    use RelationFamily::*;
    let mut out = Vec::new();
    for i in 1..=2 {
        let middle = match reading {
            N4Reading::Literal => U(1),
            N4Reading::Corrected => U(i),
        };
        out.push(Relation::new(
            N4Braid,
            format!("N4a[i={i}]"),
            s,
            &[TDelta(i + 1), middle, U(i + 1)],
            &[U(i), U(i + 1), TDelta(i)],
        )?);
    }
    out.push(Relation::new(
        N4EpsU,
        "N4b".into(),
        s,
        &[TEps(2), U(3), TEps(2), U(3)],
        &[],
    )?);
    let w = [TDelta(2), TDelta(3), U(3), U(2)];
    let mut lhs = vec![TDelta(1)];
    lhs.extend_from_slice(&w);
    lhs.push(TDelta(1));
    out.push(Relation::new(N4Conj, "N4c".into(), s, &lhs, &w)?);
    Ok(out)
}

/// Braid and disjointness relations among the twists about `α_i`, `β_i`,
/// `γ_j` on `S_h`. The chain is `α_1, β_1, γ_1, β_2, γ_2, …`, together
/// with the `α_i` each meeting `β_i` once.
pub fn orientable_relations(h: usize) -> Result<Vec<Relation>> {
    let s = Surface::Orientable { genus: h }.check()?;
    let gens = s.generators();
    let meets = |x: Generator, y: Generator| -> bool {
        match (x, y) {
            (TAlpha(i), TBeta(j)) | (TBeta(j), TAlpha(i)) => i == j,
            (TBeta(i), TGamma(j)) | (TGamma(j), TBeta(i)) => i == j || i == j + 1,
            _ => false,
        }
    };
    let mut out = Vec::new();
    for (k, &x) in gens.iter().enumerate() {
        for &y in &gens[k + 1..] {
            let rel = if meets(x, y) {
                braid(RelationFamily::Braid, format!("braid[{x},{y}]"), s, x, y)?
            } else {
                commute(
                    RelationFamily::Disjoint,
                    format!("disjoint[{x},{y}]"),
                    s,
                    x,
                    y,
                )?
            };
            out.push(rel);
        }
    }
    Ok(out)
}

/// The relations whose letters all lie in `gens`.
pub fn restricted_to(rels: Vec<Relation>, gens: &[Generator]) -> Vec<Relation> {
    rels.into_iter()
        .filter(|r| r.generators().all(|g| gens.contains(&g)))
        .collect()
}

pub(crate) fn check_genus_at_least(g: usize, min: usize) -> Result<()> {
    if g < min {
        Err(Error::genus(g, format!("needs g >= {min}")))
    } else {
        Ok(())
    }
}
