use crate::error::{Error, Result};

use super::generator::{Generator, Surface};
use super::word::Word;

/// Pushes a word on the subsurface `S'` forward to `N_{g,n}`:
/// `t_{α_i} -> t_{ε_i}`, `t_{β_i} -> t_{δ_{2i}}`, `t_{γ_j} -> t_{δ_{2j+1}}`.
pub fn iota_translate(w: &Word, boundary: usize) -> Result<Word> {
    let g = match w.surface() {
        Surface::Piece { genus } => genus,
        other => {
            return Err(Error::InvalidArgument(format!(
                "expected a word on the subsurface S', got one on {other}"
            )))
        }
    };
    let target = Surface::Nonorientable { genus: g, boundary }.check()?;
    let letters = w.letters().iter().map(|l| {
        let gen = match l.generator {
            Generator::TAlpha(i) => Generator::TEps(i),
            Generator::TBeta(i) => Generator::TDelta(2 * i),
            Generator::TGamma(j) => Generator::TDelta(2 * j + 1),
            other => other,
        };
        (gen, l.exponent)
    });
    Word::from_letters(target, letters)
}

/// `s = t_{δ_1} t_{δ_2} ... t_{δ_{g-1}}`.
pub fn special_word(name: &str, g: usize) -> Result<Word> {
    if name != "s" {
        return Err(Error::InvalidArgument(format!(
            "unknown special word `{name}`"
        )));
    }
    let surface = Surface::closed(g).check()?;
    let gens: Vec<Generator> = (1..g).map(Generator::TDelta).collect();
    Word::product(surface, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::abelianize;

    #[test]
    fn iota_examples() {
        let odd = Surface::Piece { genus: 5 };
        let w = Word::parse("b1", odd).unwrap();
        assert_eq!(iota_translate(&w, 0).unwrap().to_string(), "d2");
        let even = Surface::Piece { genus: 6 };
        let w = Word::parse("g1 a2^-1", even).unwrap();
        assert_eq!(iota_translate(&w, 1).unwrap().to_string(), "d3 e2^-1");
        assert!(iota_translate(&Word::empty(even), 0).unwrap().is_empty());
        assert!(Word::parse("b3", odd).is_err());
    }

    #[test]
    fn special_word_examples() {
        assert_eq!(special_word("s", 5).unwrap().to_string(), "d1 d2 d3 d4");
        assert_eq!(special_word("s", 3).unwrap().to_string(), "d1 d2");
        assert!(abelianize(&special_word("s", 7).unwrap())
            .unwrap()
            .is_zero());
        assert!(special_word("t", 5).is_err());
    }
}
