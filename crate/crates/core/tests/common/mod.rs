#![allow(dead_code)]

use crosscap_core::homology::liftable_twists;
use crosscap_core::mod2::{w_transvection, BitMatrix, ModTwoVector, SpecialVectors};
use crosscap_core::surface::{Surface, Word};
use crosscap_core::{Gf2, Matrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_bits(rng: &mut TestRng, n: usize) -> ModTwoVector {
    ModTwoVector((0..n).map(|_| Gf2(rng.gen())).collect())
}

/// A random element of `W`, in `x̄` coordinates.
pub fn random_w(rng: &mut TestRng, sv: &SpecialVectors) -> ModTwoVector {
    sv.from_w_coords(&random_bits(rng, 2 * sv.r))
}

/// A random element of `Sp(W)` as a product of transvections.
pub fn random_symplectic(rng: &mut TestRng, sv: &SpecialVectors) -> BitMatrix {
    let m = 2 * sv.r;
    let mut acc: BitMatrix = Matrix::identity(m);
    for _ in 0..3 * m {
        let y = random_bits(rng, m);
        acc = &acc * &w_transvection(sv, &y).expect("length 2r");
    }
    acc
}

/// A random word in the twist generators of `N_g` lifted by `θ`.
pub fn random_twist_word(rng: &mut TestRng, g: usize, len: usize) -> Word {
    let gens = liftable_twists(g);
    let letters = (0..len).map(|_| {
        let e = if rng.gen() { 1 } else { -1 } * rng.gen_range(1..=2);
        (gens[rng.gen_range(0..gens.len())], e)
    });
    Word::from_letters(Surface::closed(g), letters).expect("generators of N_g")
}
