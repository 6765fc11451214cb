use std::fmt;

use crate::error::{Error, Result};

use super::generator::{Generator, Surface};
use super::word::Word;

/// An element `(xy)^translation * y^reflection` of the infinite dihedral
/// group `<x, y | x^2 = y^2 = 1>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DihedralElement {
    pub translation: i64,
    pub reflection: bool,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement {
        translation: 0,
        reflection: false,
    };

    pub fn x() -> Self {
        DihedralElement {
            translation: 1,
            reflection: true,
        }
    }

    pub fn y() -> Self {
        DihedralElement {
            translation: 0,
            reflection: true,
        }
    }

    pub fn xy() -> Self {
        DihedralElement {
            translation: 1,
            reflection: false,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: Self) -> Self {
        // y (xy)^t y = (xy)^{-t}
        let t = if self.reflection {
            -rhs.translation
        } else {
            rhs.translation
        };
        DihedralElement {
            translation: self.translation + t,
            reflection: self.reflection ^ rhs.reflection,
        }
    }

    pub fn inverse(self) -> Self {
        if self.reflection {
            self
        } else {
            DihedralElement {
                translation: -self.translation,
                reflection: false,
            }
        }
    }

    pub fn pow(self, k: i64) -> Self {
        if self.reflection {
            if k % 2 == 0 {
                Self::IDENTITY
            } else {
                self
            }
        } else {
            DihedralElement {
                translation: self.translation * k,
                reflection: false,
            }
        }
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Order of the element, `None` when infinite.
    pub fn order(self) -> Option<u64> {
        if self.is_identity() {
            Some(1)
        } else if self.reflection {
            Some(2)
        } else {
            None
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.translation, self.reflection) {
            (0, false) => f.write_str("1"),
            (0, true) => f.write_str("y"),
            (t, r) => {
                write!(f, "(xy)^{t}")?;
                if r {
                    f.write_str(" y")?;
                }
                Ok(())
            }
        }
    }
}

/// Image of a genus-4 generator: `t_{ε_2} -> xy`, other twists `-> 1`, `u_i -> y`.
pub fn dihedral_image(gen: Generator) -> DihedralElement {
    match gen {
        Generator::TEps(2) => DihedralElement::xy(),
        Generator::U(_) => DihedralElement::y(),
        _ => DihedralElement::IDENTITY,
    }
}

/// Evaluates a word on `N_4` in the infinite dihedral group.
pub fn dihedral_eval(w: &Word) -> Result<DihedralElement> {
    match w.surface() {
        Surface::Nonorientable { genus: 4, .. } => {}
        other => {
            return Err(Error::InvalidArgument(format!(
                "the dihedral quotient is defined on N_4, not {other}"
            )))
        }
    }
    Ok(w.letters()
        .iter()
        .fold(DihedralElement::IDENTITY, |acc, l| {
            acc.mul(dihedral_image(l.generator).pow(l.exponent))
        }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions() {
        let x = DihedralElement::x();
        let y = DihedralElement::y();
        assert!(x.mul(x).is_identity());
        assert!(y.mul(y).is_identity());
        assert_eq!(x.mul(y), DihedralElement::xy());
    }

    #[test]
    fn examples() {
        let n4 = Surface::closed(4);
        let e = dihedral_eval(&Word::parse("e2", n4).unwrap()).unwrap();
        assert_eq!(e, DihedralElement::xy());
        assert_eq!(e.order(), None);
        assert!(dihedral_eval(&Word::empty(n4)).unwrap().is_identity());
        assert!(dihedral_eval(&Word::parse("u1 u2", n4).unwrap())
            .unwrap()
            .is_identity());
        assert!(dihedral_eval(&Word::parse("d1", Surface::closed(5)).unwrap()).is_err());
    }

    #[test]
    fn reflection_conjugates_translation() {
        let y = DihedralElement::y();
        let t = DihedralElement::xy().pow(3);
        assert_eq!(y.mul(t).mul(y), t.inverse());
    }
}
