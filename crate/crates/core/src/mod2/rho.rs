//! The action `ρ` of the mapping class group of `N_{2r+2}` on `V` and the
//! induced epimorphism `ε` onto `Sp(2r, Z_2)`.

use crate::algebra::{Gf2, Matrix};
use crate::error::{Error, Result};
use crate::surface::{dihedral_eval, relations_with_reading, Generator, N4Reading, Surface, Word};

use super::iso::{decompose, BitMatrix, ModTwoVector, SpecialVectors};

fn rank_of(g: usize) -> Result<usize> {
    if g < 4 || g % 2 == 1 {
        return Err(Error::genus(
            g,
            "the mod 2 action needs even genus g = 2r + 2 >= 4",
        ));
    }
    Ok((g - 2) / 2)
}

/// `x ↦ x + <c, x> c`.
pub fn mod2_transvection(c: &ModTwoVector) -> BitMatrix {
    let n = c.len();
    Matrix::from_fn(n, n, |i, j| {
        let id = if i == j { Gf2::ONE } else { Gf2::ZERO };
        id + c.0[i] * c.0[j]
    })
}

/// The mod 2 class of the curve of a twist generator.
pub fn curve_class(g: usize, gen: Generator) -> Result<ModTwoVector> {
    Surface::closed(g).require(gen)?;
    match gen {
        Generator::TDelta(i) => Ok(ModTwoVector::range(i, i + 1, g)),
        Generator::TEps(j) => Ok(ModTwoVector::range(1, 2 * j, g)),
        other => Err(Error::InvalidArgument(format!("{other} is not a twist"))),
    }
}

pub fn rho(g: usize, gen: Generator) -> Result<BitMatrix> {
    rank_of(g)?;
    Surface::closed(g).require(gen)?;
    match gen {
        Generator::U(i) => Ok(Matrix::from_fn(g, g, |a, b| {
            let image = match b + 1 {
                k if k == i => i + 1,
                k if k == i + 1 => i,
                k => k,
            };
            Gf2(a + 1 == image)
        })),
        twist => Ok(mod2_transvection(&curve_class(g, twist)?)),
    }
}

/// `ρ(w)` with letters applied left to right as matrix products.
pub fn rho_word(g: usize, w: &Word) -> Result<BitMatrix> {
    let mut acc: BitMatrix = Matrix::identity(g);
    for letter in w.letters() {
        let m = rho(g, letter.generator)?;
        // Every generator acts as an involution mod 2.
        if letter.exponent.rem_euclid(2) == 1 {
            acc = &acc * &m;
        }
    }
    Ok(acc)
}

pub fn epsilon_word(g: usize, w: &Word) -> Result<BitMatrix> {
    let r = rank_of(g)?;
    if r < 2 {
        return Err(Error::genus(
            g,
            "the epimorphism onto Sp(2r, Z_2) needs r >= 2",
        ));
    }
    let sv = SpecialVectors::new(r)?;
    Ok(decompose(&sv, &rho_word(g, w)?)?.r)
}

/// Readings of the extra genus-4 relation family under which both the
/// dihedral quotient and the mod 2 action kill every relator.
pub fn consistent_n4_readings() -> Result<Vec<N4Reading>> {
    let mut out = Vec::new();
    for reading in [N4Reading::Literal, N4Reading::Corrected] {
        let mut ok = true;
        for rel in relations_with_reading(4, 0, reading)? {
            let w = rel.relator();
            ok &= dihedral_eval(&w)?.is_identity() && rho_word(4, &w)?.is_identity();
        }
        if ok {
            out.push(reading);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mod2::iso::{make_b, special_vectors};
    use crate::surface::relations_for;

    fn word(text: &str) -> Word {
        Word::parse(text, Surface::closed(8)).unwrap()
    }

    #[test]
    fn last_delta_is_a_swap_and_cancels_u() {
        let t = rho(8, Generator::TDelta(7)).unwrap();
        assert_eq!(t, rho(8, Generator::U(7)).unwrap());
        assert!(rho_word(8, &word("d7 u7")).unwrap().is_identity());
    }

    #[test]
    fn last_delta_factors_through_b() {
        let sv = special_vectors(3).unwrap();
        let b = make_b(&sv, Gf2::ONE, &sv.v[2]).unwrap();
        let rhs = &b * &rho(8, Generator::TEps(3)).unwrap();
        assert_eq!(rho(8, Generator::TDelta(7)).unwrap(), rhs);
    }

    #[test]
    fn epsilon_kills_relators() {
        for rel in relations_for(8, 0).unwrap() {
            assert!(
                epsilon_word(8, &rel.relator()).unwrap().is_identity(),
                "{}",
                rel.label
            );
        }
        assert!(epsilon_word(8, &word("d7 e3^-1")).unwrap().is_identity());
        assert!(epsilon_word(4, &word("1")).is_err());
    }

    #[test]
    fn only_the_corrected_reading_survives() {
        assert_eq!(
            consistent_n4_readings().unwrap(),
            vec![N4Reading::Corrected]
        );
    }
}
