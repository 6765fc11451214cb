use std::fmt;

use crate::error::{Error, Result};

/// A generator symbol: Dehn twists about `δ_i`, `ε_j` on the nonorientable
/// surface, crosscap transpositions `u_i`, and twists about `α_i`, `β_i`,
/// `γ_j` on orientable surfaces. Indices are one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    TDelta(usize),
    TEps(usize),
    U(usize),
    TAlpha(usize),
    TBeta(usize),
    TGamma(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::TDelta(i)
            | Generator::TEps(i)
            | Generator::U(i)
            | Generator::TAlpha(i)
            | Generator::TBeta(i)
            | Generator::TGamma(i) => i,
        }
    }

    pub fn is_twist(self) -> bool {
        !matches!(self, Generator::U(_))
    }

    pub fn letter(self) -> char {
        match self {
            Generator::TDelta(_) => 'd',
            Generator::TEps(_) => 'e',
            Generator::U(_) => 'u',
            Generator::TAlpha(_) => 'a',
            Generator::TBeta(_) => 'b',
            Generator::TGamma(_) => 'g',
        }
    }

    pub fn from_letter(letter: char, index: usize) -> Option<Self> {
        Some(match letter {
            'd' => Generator::TDelta(index),
            'e' => Generator::TEps(index),
            'u' => Generator::U(index),
            'a' => Generator::TAlpha(index),
            'b' => Generator::TBeta(index),
            'g' => Generator::TGamma(index),
            _ => return None,
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.index())
    }
}

/// The surface a word lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    /// `N_{g,n}`: genus `g` nonorientable with `n` boundary components.
    Nonorientable { genus: usize, boundary: usize },
    /// Closed orientable `S_h`.
    Orientable { genus: usize },
    /// The subsurface `S' = S_{r,s}` of the double cover of `N_g`, `g = 2r + s`.
    Piece { genus: usize },
}

impl Surface {
    pub fn closed(genus: usize) -> Self {
        Surface::Nonorientable { genus, boundary: 0 }
    }

    /// Validates the surface parameters themselves.
    pub fn check(self) -> Result<Self> {
        match self {
            Surface::Nonorientable { genus, boundary } => {
                if genus < 3 {
                    return Err(Error::genus(
                        genus,
                        "nonorientable genus must be at least 3",
                    ));
                }
                if boundary > 1 {
                    return Err(Error::InvalidArgument(format!(
                        "at most one boundary component is supported, got {boundary}"
                    )));
                }
            }
            Surface::Orientable { genus } if genus < 1 => {
                return Err(Error::genus(genus, "orientable genus must be positive"));
            }
            Surface::Piece { genus } if genus < 3 => {
                return Err(Error::genus(genus, "subsurface needs g >= 3"));
            }
            _ => {}
        }
        Ok(self)
    }

    /// Whether `gen` names a curve on this surface.
    pub fn admits(self, gen: Generator) -> bool {
        use Generator::*;
        let i = gen.index();
        if i == 0 {
            return false;
        }
        match self {
            Surface::Nonorientable { genus: g, .. } => match gen {
                TDelta(_) | U(_) => i < g,
                TEps(_) => 2 * i <= g,
                _ => false,
            },
            Surface::Orientable { genus: h } => match gen {
                TAlpha(_) | TBeta(_) => i <= h,
                TGamma(_) => i < h,
                _ => false,
            },
            Surface::Piece { genus: g } => match gen {
                TAlpha(_) => 2 * i <= g,
                TBeta(_) => i <= (g - 1) / 2,
                TGamma(_) => 2 * i + 2 <= g,
                _ => false,
            },
        }
    }

    pub fn require(self, gen: Generator) -> Result<()> {
        if self.admits(gen) {
            Ok(())
        } else {
            Err(Error::UnknownGenerator {
                generator: gen.to_string(),
                surface: self.to_string(),
            })
        }
    }

    /// Every generator symbol of this surface, in a fixed order.
    pub fn generators(self) -> Vec<Generator> {
        let bound = match self {
            Surface::Nonorientable { genus, .. } | Surface::Piece { genus } => genus,
            Surface::Orientable { genus } => genus,
        };
        let mut out = Vec::new();
        for make in [
            Generator::TDelta as fn(usize) -> Generator,
            Generator::TEps,
            Generator::U,
            Generator::TAlpha,
            Generator::TBeta,
            Generator::TGamma,
        ] {
            for i in 1..=bound {
                let gen = make(i);
                if self.admits(gen) {
                    out.push(gen);
                }
            }
        }
        out
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Nonorientable { genus, boundary } => write!(f, "N_{{{genus},{boundary}}}"),
            Surface::Orientable { genus } => write!(f, "S_{genus}"),
            Surface::Piece { genus } => write!(f, "S' in the cover of N_{genus}"),
        }
    }
}
