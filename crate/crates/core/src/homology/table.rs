use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{standard, AnyMatrix, IntMatrix, Matrix, MatrixDocument};
use crate::error::{Error, Result};
use crate::surface::{Generator, Surface, Word};

use super::symplectic::{genus_split, transvection, HomologyVector};
use super::theta::{liftable_twists, theta_word};

/// The named representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepName {
    /// Symplectic action of `M(S_{g-1})` on `H_1(S_{g-1})`.
    Phi,
    /// `Φ ∘ θ` on the twist generators of `N_g`.
    PhiTheta,
    Psi1,
    Psi2,
    Psi1Prime,
    Psi2Prime,
    Custom,
}

impl RepName {
    pub fn tag(self) -> &'static str {
        match self {
            RepName::Phi => "phi",
            RepName::PhiTheta => "phi-theta",
            RepName::Psi1 => "psi1",
            RepName::Psi2 => "psi2",
            RepName::Psi1Prime => "psi1p",
            RepName::Psi2Prime => "psi2p",
            RepName::Custom => "custom",
        }
    }

    /// `1` or `2` for the four `Ψ` variants.
    pub fn psi_index(self) -> Option<usize> {
        match self {
            RepName::Psi1 | RepName::Psi1Prime => Some(1),
            RepName::Psi2 | RepName::Psi2Prime => Some(2),
            _ => None,
        }
    }

    pub fn is_primed(self) -> bool {
        matches!(self, RepName::Psi1Prime | RepName::Psi2Prime)
    }
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for RepName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "phi" => RepName::Phi,
            "phi-theta" => RepName::PhiTheta,
            "psi1" => RepName::Psi1,
            "psi2" => RepName::Psi2,
            "psi1p" => RepName::Psi1Prime,
            "psi2p" => RepName::Psi2Prime,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown representation `{other}`"
                )))
            }
        })
    }
}

/// Images of generators under a representation, with cached inverses.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    pub name: RepName,
    pub genus: usize,
    pub dim: usize,
    pub surface: Surface,
    images: BTreeMap<Generator, (IntMatrix, IntMatrix)>,
}

impl GeneratorTable {
    pub fn new(name: RepName, genus: usize, dim: usize, surface: Surface) -> Self {
        GeneratorTable {
            name,
            genus,
            dim,
            surface,
            images: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, gen: Generator, m: IntMatrix) -> Result<()> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "image of {gen} is {}x{}, table dimension is {}",
                m.rows(),
                m.cols(),
                self.dim
            )));
        }
        self.surface.require(gen)?;
        let inv = m.inverse()?;
        self.images.insert(gen, (m, inv));
        Ok(())
    }

    pub fn image(&self, gen: Generator) -> Option<&IntMatrix> {
        self.images.get(&gen).map(|(m, _)| m)
    }

    pub fn contains(&self, gen: Generator) -> bool {
        self.images.contains_key(&gen)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.images.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Generator, &IntMatrix)> {
        self.images.iter().map(|(g, (m, _))| (*g, m))
    }

    /// Ordered product of the letter images, left to right.
    pub fn eval(&self, w: &Word) -> Result<IntMatrix> {
        if w.surface() != self.surface
            && !matches!(
                (w.surface(), self.surface),
                (Surface::Nonorientable { genus: a, .. }, Surface::Nonorientable { genus: b, .. }) if a == b
            )
        {
            return Err(Error::InvalidArgument(format!(
                "word on {} cannot be evaluated in a table for {}",
                w.surface(),
                self.surface
            )));
        }
        let mut acc: IntMatrix = Matrix::identity(self.dim);
        for l in w.letters() {
            let (m, inv) = self.images.get(&l.generator).ok_or_else(|| {
                Error::InvalidArgument(format!("{} has no image in {}", l.generator, self.name))
            })?;
            let base = if l.exponent < 0 { inv } else { m };
            for _ in 0..l.exponent.unsigned_abs() {
                acc = acc.checked_mul(base)?;
            }
        }
        Ok(acc)
    }

    /// Whether every letter of `w` has an image.
    pub fn covers(&self, w: &Word) -> bool {
        w.letters().iter().all(|l| self.contains(l.generator))
    }

    /// A copy with every `u_i` image negated.
    pub fn sign_twisted(&self, name: RepName) -> GeneratorTable {
        let mut out = self.clone();
        out.name = name;
        for (g, (m, inv)) in out.images.iter_mut() {
            if !g.is_twist() {
                *m = -m.clone();
                *inv = -inv.clone();
            }
        }
        out
    }

    pub fn to_document(&self) -> TableDocument {
        TableDocument {
            rep: self.name.tag().to_string(),
            genus: self.genus,
            dimension: self.dim,
            generators: self
                .entries()
                .map(|(g, m)| GeneratorEntry {
                    generator: g.to_string(),
                    matrix: AnyMatrix::Int(m.clone()).to_document(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable table")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorEntry {
    pub generator: String,
    pub matrix: MatrixDocument,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableDocument {
    pub rep: String,
    pub genus: usize,
    pub dimension: usize,
    pub generators: Vec<GeneratorEntry>,
}

fn int(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_i64_rows(rows).expect("literal matrix")
}

fn pad(block: IntMatrix, n: usize) -> IntMatrix {
    let k = block.rows();
    if k == n {
        block
    } else {
        Matrix::block_diag(&[Matrix::identity(n - k), block]).expect("square blocks")
    }
}

/// The displayed image of `u_{g-1}` under `Ψ_k`.
pub fn psi_u_display(g: usize, k: usize) -> IntMatrix {
    let n = g - 1;
    let block = match (g % 2, k) {
        (1, 1) => int(&[&[1, 0], &[1, -1]]),
        (1, _) => int(&[&[-1, 0], &[-1, 1]]),
        (_, 1) => int(&[&[1, -1, 1], &[0, 1, 0], &[0, 2, -1]]),
        (_, _) => int(&[&[1, 1, -2], &[0, 1, 0], &[0, 1, -1]]),
    };
    pad(block, n)
}

/// The displayed image of `t_{δ_{g-1}}` under `Ψ_k` for even `g`.
pub fn psi_top_delta_display(g: usize, k: usize) -> IntMatrix {
    let block = if k == 1 {
        int(&[&[1, 1, 0], &[0, 1, 0], &[0, -2, 1]])
    } else {
        int(&[&[1, 1, -2], &[0, 1, 0], &[0, 0, 1]])
    };
    pad(block, g - 1)
}

fn phi_table(h: usize, genus: usize) -> Result<GeneratorTable> {
    let surface = Surface::Orientable { genus: h };
    let mut t = GeneratorTable::new(RepName::Phi, genus, 2 * h, surface);
    for i in 1..=h {
        t.insert(
            Generator::TAlpha(i),
            transvection(&HomologyVector::a(i, h))?,
        )?;
        t.insert(Generator::TBeta(i), transvection(&HomologyVector::b(i, h))?)?;
    }
    for j in 1..h {
        let c = &HomologyVector::a(j, h) - &HomologyVector::a(j + 1, h);
        t.insert(Generator::TGamma(j), transvection(&c)?)?;
    }
    Ok(t)
}

/// `Φ ∘ θ` on every liftable twist generator of `N_g`, in the `(a, b)` basis.
pub fn phi_theta_table(g: usize) -> Result<GeneratorTable> {
    let phi = phi_table(g - 1, g)?;
    let mut t = GeneratorTable::new(RepName::PhiTheta, g, 2 * (g - 1), Surface::closed(g));
    for gen in liftable_twists(g) {
        t.insert(gen, phi.eval(&theta_word(gen, g)?)?)?;
    }
    Ok(t)
}

/// `Ψ_k` from the closed forms `A_i`, `B_i`, `C_j` and the displayed matrices.
/// The images of `u_i` for `i < g-1` are forced by
/// `u_{i+1} t_{δ_i} t_{δ_{i+1}} u_i = t_{δ_i} t_{δ_{i+1}}`.
fn psi_table(g: usize, k: usize) -> Result<GeneratorTable> {
    let (r, s) = genus_split(g);
    let n = g - 1;
    let name = if k == 1 { RepName::Psi1 } else { RepName::Psi2 };
    let mut t = GeneratorTable::new(name, g, n, Surface::closed(g));
    for i in 1..=r {
        t.insert(Generator::TEps(i), standard::a(i, n)?)?;
        t.insert(Generator::TDelta(2 * i), standard::b(i, n)?)?;
    }
    t.insert(Generator::TDelta(1), standard::a(1, n)?)?;
    for j in 1..r {
        t.insert(Generator::TDelta(2 * j + 1), standard::c(j, n)?)?;
    }
    if s == 2 {
        t.insert(Generator::TDelta(g - 1), psi_top_delta_display(g, k))?;
    }
    t.insert(Generator::U(g - 1), psi_u_display(g, k))?;
    for i in (1..g - 1).rev() {
        let p = t
            .image(Generator::TDelta(i))
            .expect("twist")
            .checked_mul(t.image(Generator::TDelta(i + 1)).expect("twist"))?;
        let u_next_inv = t.images[&Generator::U(i + 1)].1.clone();
        let u = p.inverse()?.checked_mul(&u_next_inv)?.checked_mul(&p)?;
        t.insert(Generator::U(i), u)?;
    }
    Ok(t)
}

/// Builds a named representation. `Phi` is returned on `S_{g-1}`.
pub fn rep_table(name: RepName, g: usize) -> Result<GeneratorTable> {
    match name {
        RepName::Phi => {
            if g < 3 {
                return Err(Error::genus(g, "Φ needs g >= 3"));
            }
            phi_table(g - 1, g)
        }
        RepName::PhiTheta => {
            if g < 3 {
                return Err(Error::genus(g, "Φ∘θ needs g >= 3"));
            }
            phi_theta_table(g)
        }
        RepName::Custom => Err(Error::InvalidArgument(
            "custom tables are built by the caller".into(),
        )),
        _ => {
            if g < 5 {
                return Err(Error::genus(g, "the Ψ representations need g >= 5"));
            }
            let k = name.psi_index().expect("psi variant");
            let base = psi_table(g, k)?;
            Ok(if name.is_primed() {
                base.sign_twisted(name)
            } else {
                base
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_u_image() {
        let t = rep_table(RepName::Psi1, 5).unwrap();
        let expect = pad(int(&[&[1, 0], &[1, -1]]), 4);
        assert_eq!(t.image(Generator::U(4)).unwrap(), &expect);
    }

    #[test]
    fn displayed_top_delta() {
        let t = rep_table(RepName::Psi2, 6).unwrap();
        let expect = pad(int(&[&[1, 1, -2], &[0, 1, 0], &[0, 0, 1]]), 5);
        assert_eq!(t.image(Generator::TDelta(5)).unwrap(), &expect);
    }

    #[test]
    fn primed_flips_only_u() {
        let t = rep_table(RepName::Psi1, 7).unwrap();
        let p = rep_table(RepName::Psi1Prime, 7).unwrap();
        assert_eq!(p.image(Generator::TDelta(1)), t.image(Generator::TDelta(1)));
        assert_eq!(
            p.image(Generator::U(6)).unwrap(),
            &-t.image(Generator::U(6)).unwrap().clone()
        );
    }

    #[test]
    fn empty_word_is_identity() {
        let t = rep_table(RepName::Psi1, 5).unwrap();
        assert!(t
            .eval(&Word::empty(Surface::closed(5)))
            .unwrap()
            .is_identity());
        assert!(rep_table(RepName::Psi2, 4).is_err());
    }

    #[test]
    fn r12_instance() {
        let t = rep_table(RepName::Psi1, 5).unwrap();
        let w = Word::parse("d4 u4 d4", Surface::closed(5)).unwrap();
        assert_eq!(&t.eval(&w).unwrap(), t.image(Generator::U(4)).unwrap());
    }

    #[test]
    fn export_lists_generators() {
        let t = rep_table(RepName::Psi2, 5).unwrap();
        let doc = t.to_document();
        assert_eq!(doc.dimension, 4);
        assert!(doc.generators.iter().any(|e| e.generator == "u4"));
    }
}
