use std::fmt;

use crate::error::{Error, Result};

use super::generator::{Generator, Surface};
use super::word::Word;

/// Named generators of the abelianization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AbelianGenerator {
    Delta1,
    Eps2,
    U1,
}

impl fmt::Display for AbelianGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbelianGenerator::Delta1 => "[d1]",
            AbelianGenerator::Eps2 => "[e2]",
            AbelianGenerator::U1 => "[u1]",
        })
    }
}

/// A class in the abelianization, an elementary abelian 2-group whose rank
/// depends on the genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianClass {
    pub genus: usize,
    coords: Vec<(AbelianGenerator, bool)>,
}

/// The generators of the abelianization of `M(N_{g,n})`, `n <= 1`.
pub fn abelian_generators(g: usize) -> Result<Vec<AbelianGenerator>> {
    use AbelianGenerator::*;
    Ok(match g {
        0..=2 => return Err(Error::genus(g, "abelianization needs g >= 3")),
        4 => vec![Delta1, Eps2, U1],
        3 | 5 | 6 => vec![Delta1, U1],
        _ => vec![U1],
    })
}

impl AbelianClass {
    pub fn zero(g: usize) -> Result<Self> {
        Ok(AbelianClass {
            genus: g,
            coords: abelian_generators(g)?
                .into_iter()
                .map(|a| (a, false))
                .collect(),
        })
    }

    pub fn coords(&self) -> &[(AbelianGenerator, bool)] {
        &self.coords
    }

    pub fn coordinate(&self, a: AbelianGenerator) -> Option<bool> {
        self.coords.iter().find(|(b, _)| *b == a).map(|(_, x)| *x)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|(_, x)| !x)
    }

    fn flip(&mut self, a: AbelianGenerator) {
        if let Some((_, x)) = self.coords.iter_mut().find(|(b, _)| *b == a) {
            *x = !*x;
        }
    }

    pub fn add(&self, other: &AbelianClass) -> AbelianClass {
        let mut out = self.clone();
        for (a, x) in &other.coords {
            if *x {
                out.flip(*a);
            }
        }
        out
    }
}

impl fmt::Display for AbelianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .filter(|(_, x)| *x)
            .map(|(a, _)| a.to_string())
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Image of a single generator. Twists are all conjugate to `t_{δ_1}` except
/// `t_{ε_2}` at genus 4, which is its own class.
fn class_of(gen: Generator, g: usize) -> Option<AbelianGenerator> {
    use AbelianGenerator::*;
    match gen {
        Generator::U(_) => Some(U1),
        Generator::TEps(2) if g == 4 => Some(Eps2),
        Generator::TDelta(_) | Generator::TEps(_) => Some(Delta1),
        _ => None,
    }
}

/// The image of `w` in the abelianization.
pub fn abelianize(w: &Word) -> Result<AbelianClass> {
    let g = match w.surface() {
        Surface::Nonorientable { genus, .. } => genus,
        other => {
            return Err(Error::InvalidArgument(format!(
                "abelianization is defined for nonorientable surfaces, not {other}"
            )))
        }
    };
    let mut out = AbelianClass::zero(g)?;
    for l in w.letters() {
        if l.exponent % 2 != 0 {
            if let Some(a) = class_of(l.generator, g) {
                out.flip(a);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(text: &str, g: usize) -> AbelianClass {
        abelianize(&Word::parse(text, Surface::closed(g)).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(ab("d1", 7).is_zero());
        assert!(ab("u3 u5", 8).is_zero());
        let c = ab("d2 e2 u1", 5);
        assert_eq!(c.coordinate(AbelianGenerator::Delta1), Some(false));
        assert_eq!(c.coordinate(AbelianGenerator::U1), Some(true));
    }

    #[test]
    fn genus_four_keeps_eps() {
        let c = ab("e2 d1", 4);
        assert_eq!(c.coordinate(AbelianGenerator::Eps2), Some(true));
        assert_eq!(c.coordinate(AbelianGenerator::Delta1), Some(true));
        assert!(ab("e1 d3", 4).is_zero());
    }

    #[test]
    fn rank_by_genus() {
        assert_eq!(abelian_generators(4).unwrap().len(), 3);
        assert_eq!(abelian_generators(6).unwrap().len(), 2);
        assert_eq!(abelian_generators(9).unwrap().len(), 1);
    }
}
